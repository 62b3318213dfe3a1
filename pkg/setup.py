#!/usr/bin/env python
"""
Index computations for matrix Lie algebras and nilpotent index checks
for classical symmetric pairs.

"""
from __future__ import print_function
import sys
import os
import io

from setuptools import find_packages, setup


pyver = sys.version_info[:2]
if pyver < (2, 7) or (3, 0) <= pyver < (3, 4):
    raise RuntimeError("Python version 2.7 or >= 3.4 required")


def read(*filenames, **kwargs):
    encoding = kwargs.get('encoding', 'utf-8')
    sep = kwargs.get('sep', '\n')
    buf = []
    for filename in filenames:
        with io.open(filename, encoding=encoding) as f:
            buf.append(f.read())
    return sep.join(buf)


base_dir = os.path.abspath(os.path.dirname(__file__))
about = {}
with open(os.path.join(base_dir, "indexlab", "__about__.py")) as f:
    exec(f.read(), about)

long_description = read('README.md')

classifiers = """
Intended Audience :: Science/Research
Operating System :: OS Independent
Programming Language :: Python
Programming Language :: Python :: 2
Programming Language :: Python :: 2.7
Programming Language :: Python :: 3
Programming Language :: Python :: 3.4
Programming Language :: Python :: 3.5
Programming Language :: Python :: 3.6
Topic :: Scientific/Engineering :: Mathematics
"""

keywords = """
Lie algebras
index of a representation
symmetric pairs
nilpotent orbits
computer algebra
"""

metadata = {
    'name'             : about["__title__"],
    'version'          : about["__version__"],
    'description'      : about["__summary__"],
    'long_description' : long_description,
    'url'              : about["__uri__"],
    'license'          : about["__license__"],
    'classifiers'      : [c for c in classifiers.split('\n') if c],
    'keywords'         : [k for k in keywords.split('\n') if k],
    'author'           : about["__author__"],
    'author_email'     : about["__email__"],
    'install_requires' : ["numpy>=1.13",
                          "networkx>=2.0",
                          "sympy>=1.1",
                          "pandas>=0.21",
                          "six>=1.11",
                          "tabulate>=0.8"],
    'tests_require'    : ["pytest>=3.1",
                          "hypothesis>=3.27"],
}

metadata['provides'] = ['indexlab']


def run_setup():
    """ Call setup(*args, **kargs) """
    setup_args = metadata.copy()
    setup_args['zip_safe'] = False

    setup(packages=find_packages(),
          package_data={'indexlab': ['data/expected.json']},
          entry_points={
              'console_scripts': ['indexlab = indexlab.cli:main']},
          **setup_args)


def main():
    run_setup()


if __name__ == '__main__':
    main()
