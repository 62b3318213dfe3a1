""" Signed partitions for (so_n, so_p x so_q) and (sp_2n, sp_2p x sp_2q).

The +1-eigenspace of the involution is orthogonal to the -1-eigenspace, so
the form pairs vectors of equal sign only.

    (so_n, so_p x so_q): odd rows may be self-paired with either starting
        sign; even rows come in partner pairs with opposite starting signs.
    (sp_2n, sp_2p x sp_2q): no self-paired rows; even rows pair with
        opposite starting signs, odd rows with equal ones.

Orbits are those of O_p x O_q (resp. Sp_2p x Sp_2q), up to the sign
choices; nothing is de-duplicated.

"""
import logging

from indexlab.orbits.adapted import (
    AdaptedBasis, OrbitRep, SPLIT, group_choices, paired, partitions,
    plus_dimension, self_paired)

logger = logging.getLogger(__name__)


def _so_sopq_options(length, mult):
    if length % 2:
        return self_paired(length, mult, signed=True)
    return paired(length, mult, 'opposite')


def _sp_sppq_options(length, mult):
    if length % 2:
        return paired(length, mult, 'equal')
    return paired(length, mult, 'opposite')


def _split_orbits(pair, options, plus_dim):
    for partition in partitions(pair.ambient):
        for groups in group_choices(partition, options):
            if plus_dimension(groups) != plus_dim:
                continue
            basis = AdaptedBasis(groups, pair.form, adjoint_sign=-1,
                                 layout=SPLIT, plus_dim=plus_dim)
            yield OrbitRep.from_basis(pair.family, pair.params, partition, basis)


def so_sopq_orbits(pair):
    return _split_orbits(pair, _so_sopq_options, pair.params['p'])


def sp_sppq_orbits(pair):
    return _split_orbits(pair, _sp_sppq_options, 2 * pair.params['p'])
