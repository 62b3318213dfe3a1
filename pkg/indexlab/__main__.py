""" Run the command-line front end.

Example usage: python -m indexlab reproduce all

"""
import sys

from indexlab.cli import main

if __name__ == '__main__':
    sys.exit(main())
