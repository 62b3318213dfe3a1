""" Nilpotent orbits for the outer pairs and nilpotents of gl, so and sp. """
import logging

from indexlab import PreconditionError, UnsupportedFamilyError
from indexlab.orbits.adapted import (
    AdaptedBasis, OrbitRep, Partition, PERMUTATION, SINGLE, group_choices,
    paired, partitions, self_paired)
from indexlab.pairs import skew_form, symmetric_form

logger = logging.getLogger(__name__)


def gl_so_orbits(pair):
    """ (gl_n, so_n): one orbit per partition of n, every chain self-paired.

    e is self-adjoint, with (e^a.w_i, e^b.w_i) nonzero only for a + b = d_i.

    """
    n = pair.params['n']
    for partition in partitions(n):
        for groups in group_choices(partition, self_paired):
            basis = AdaptedBasis(groups, pair.form, adjoint_sign=1, layout=SINGLE)
            yield OrbitRep.from_basis(pair.family, pair.params, partition, basis)


def gl_sp_orbits(pair):
    """ (gl_2n, sp_2n): partitions of 2n with even multiplicities, chains in pairs. """
    n = pair.params['n']
    for partition in partitions(2 * n):
        for groups in group_choices(partition, paired):
            basis = AdaptedBasis(groups, pair.form, adjoint_sign=1, layout=SINGLE)
            yield OrbitRep.from_basis(pair.family, pair.params, partition, basis)


def _so_options(length, mult):
    if length % 2:
        return self_paired(length, mult)
    return paired(length, mult)


def _sp_options(length, mult):
    if length % 2:
        return paired(length, mult)
    return self_paired(length, mult)


def nilpotent_in_classical(kind, partition):
    """ A nilpotent of Jordan type ``partition`` in gl_n, so_n or sp_n.

    so and sp use the standard antidiagonal forms of ``indexlab.pairs``.

    Returns
    -------
    e: RationalMatrix
    form: BilinearForm or None

    """
    partition = Partition(partition)
    n = partition.total

    if kind == 'gl':
        groups = group_choices(partition, self_paired)[0]
        return AdaptedBasis(groups, layout=PERMUTATION).e, None

    if kind == 'so':
        form = symmetric_form(n)
        options = _so_options
    elif kind == 'sp':
        if n % 2:
            raise PreconditionError("sp needs an even total, got %d." % n)
        form = skew_form(n)
        options = _sp_options
    else:
        raise UnsupportedFamilyError("Unknown classical type %r." % (kind,))

    choices = group_choices(partition, options)
    if not choices:
        raise PreconditionError("Partition %s is not a Jordan type in %s_%d."
                                % (partition, kind, n))
    basis = AdaptedBasis(choices[0], form, adjoint_sign=-1, layout=SINGLE)
    return basis.e, form


def admissible(kind, partition):
    """ Whether ``partition`` is the Jordan type of a nilpotent in gl, so or sp.

    In so_n even parts have even multiplicity; in sp_n odd parts do.

    """
    if kind == 'gl':
        return True
    if kind == 'so':
        options = _so_options
    elif kind == 'sp':
        if Partition(partition).total % 2:
            return False
        options = _sp_options
    else:
        raise UnsupportedFamilyError("Unknown classical type %r." % (kind,))
    return bool(group_choices(Partition(partition), options))


def jordan_types(kind, n):
    """ The admissible partitions of ``n`` for ``kind``, largest first. """
    return [p for p in partitions(n) if admissible(kind, p)]
