""" Named algebras, pairs and representations for the command line.

Representation specs read ``<rep>:<target>``::

    coadjoint:borel-gl4     adjoint:sl3     standard:so5    dual:gl2
    isotropy:gl5/so5        isotropy:gl7/gl3xgl4            irrep:3x1

"""
import re

from indexlab import MalformedInputError, PreconditionError
from indexlab.liealg import (
    Representation, adjoint, coadjoint, dual, sl2_irrep, standard,
    tensor_product)
from indexlab.pairs import (
    borel_gl, classical_algebra, isotropy_rep, make_pair, sl)

_algebra_re = re.compile(r'^(borel-gl|gl|sl|so|sp)(\d+)$')
_pair_re = re.compile(r'^(gl|so|sp)(\d+)/(gl|so|sp)(\d+)(?:x(gl|so|sp)(\d+))?$')

_reps = {
    'adjoint': adjoint,
    'coadjoint': coadjoint,
    'standard': standard,
    'dual': lambda alg: dual(standard(alg)),
}


def named_algebra(name):
    match = _algebra_re.match(name)
    if match is None:
        raise MalformedInputError("Unknown algebra %r." % name)
    kind, n = match.group(1), int(match.group(2))
    if n < 1:
        raise MalformedInputError("Algebra size must be positive in %r." % name)
    if kind == 'borel-gl':
        return borel_gl(n)
    if kind == 'sl':
        return sl(n)
    if kind == 'sp' and n % 2:
        raise MalformedInputError("sp needs an even size, got %r." % name)
    return classical_algebra(kind, n)


def pair_params(name):
    """ Family tag and parameters for names such as "gl7/gl3xgl4" or "sp6/gl3". """
    match = _pair_re.match(name)
    if match is None:
        raise MalformedInputError("Unknown symmetric pair %r." % name)
    g, n, h, m, k, l = match.groups()
    n, m = int(n), int(m)

    if k is None:
        if (g, h) == ('gl', 'so') and m == n:
            return 'gl/so', {'n': n}
        if (g, h) == ('gl', 'sp') and m == n and n % 2 == 0:
            return 'gl/sp', {'n': n // 2}
        if (g, h) in (('sp', 'gl'), ('so', 'gl')) and n == 2 * m:
            return '%s/gln' % g, {'n': m}
    elif h == k == g:
        l = int(l)
        if g == 'gl' and m + l == n:
            return 'gl/glpq', {'p': m, 'q': l}
        if g == 'so' and m + l == n:
            return 'so/sopq', {'p': m, 'q': l}
        if g == 'sp' and m + l == n and m % 2 == 0 and l % 2 == 0:
            return 'sp/sppq', {'p': m // 2, 'q': l // 2}
    raise MalformedInputError("%r is not a supported symmetric pair." % name)


def named_pair(name, check=True):
    family, params = pair_params(name)
    try:
        return make_pair(family, check=check, **params)
    except PreconditionError as e:
        raise MalformedInputError("Cannot build %r: %s" % (name, e))


def _binary_forms(text):
    try:
        degrees = [int(d) for d in text.split('x')]
    except ValueError:
        raise MalformedInputError("Cannot read sl2 degrees %r." % text)
    if not degrees or len(degrees) > 2 or any(d < 0 for d in degrees):
        raise MalformedInputError("Expected one or two sl2 degrees, got %r." % text)
    if len(degrees) == 1:
        return sl2_irrep(degrees[0])
    return tensor_product(sl2_irrep(degrees[0]), sl2_irrep(degrees[1]))


def named_rep(spec):
    """ Build a representation from a ``<rep>:<target>`` spec. """
    if ':' not in spec:
        raise MalformedInputError("Representation spec %r lacks a ':'." % spec)
    kind, target = spec.split(':', 1)
    if kind == 'isotropy':
        return isotropy_rep(named_pair(target))
    if kind == 'irrep':
        return _binary_forms(target)
    if kind not in _reps:
        raise MalformedInputError("Unknown representation %r; expected one of %s."
                                  % (kind, ', '.join(sorted(_reps) + ['irrep', 'isotropy'])))
    return _reps[kind](named_algebra(target))


def rep_from_dict(d):
    try:
        return Representation.from_dict(d)
    except (KeyError, TypeError, ValueError) as e:
        raise MalformedInputError("Malformed representation: %s" % e)
