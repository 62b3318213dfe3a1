""" Nilpotent orbits for (sp_2n, gl_n) and (so_2n, gl_n).

Here V = V+ + V- is a Lagrangian decomposition and e swaps V+ and V-. The
cyclic vectors are eigenvectors of the involution, so every chain carries a
starting sign, and a chain is paired under the form with itself or with a
partner chain of the same length:

    (sp_2n, gl_n): a chain is self-paired exactly when its length is even;
        self-paired chains take either sign, paired (odd) chains have
        opposite starting signs.
    (so_2n, gl_n): no chain is self-paired; partners of odd length have
        opposite starting signs, partners of even length equal ones.

"""
import logging

from indexlab.orbits.adapted import (
    AdaptedBasis, LAGRANGIAN, OrbitRep, group_choices, paired, partitions,
    plus_dimension, self_paired)

logger = logging.getLogger(__name__)


def _sp_gln_options(length, mult):
    if length % 2:
        return paired(length, mult, 'opposite')
    return self_paired(length, mult, signed=True)


def _so_gln_options(length, mult):
    if length % 2:
        return paired(length, mult, 'opposite')
    return paired(length, mult, 'equal')


def _lagrangian_orbits(pair, options):
    n = pair.params['n']
    for partition in partitions(2 * n):
        for groups in group_choices(partition, options):
            if plus_dimension(groups) != n:
                continue
            basis = AdaptedBasis(groups, pair.form, adjoint_sign=-1,
                                 layout=LAGRANGIAN, plus_dim=n)
            yield OrbitRep.from_basis(pair.family, pair.params, partition, basis)


def sp_gln_orbits(pair):
    return _lagrangian_orbits(pair, _sp_gln_options)


def so_gln_orbits(pair):
    return _lagrangian_orbits(pair, _so_gln_options)
