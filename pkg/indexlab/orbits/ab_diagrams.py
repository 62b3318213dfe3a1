""" ab-diagrams and the nilpotent orbits of (gl_p+q, gl_p x gl_q).

A row of length L is a word alternating between 'a' and 'b'; the letter says
which block (a: the first, b: the second) the corresponding chain vector
lies in. Rows of equal length and equal first letter are interchangeable,
so a diagram is determined by its multiset of rows.

"""
import logging

from indexlab import PreconditionError
from indexlab.orbits.adapted import (
    AdaptedBasis, FREE, Group, OrbitRep, PERMUTATION, Partition, chain_word,
    free, group_choices, partitions, plus_dimension)

logger = logging.getLogger(__name__)

LETTERS = 'ab'


class ABDiagram(object):
    """ Rows of alternating a/b words, longest first, 'a'-rows before 'b'-rows. """

    def __init__(self, rows):
        rows = [str(r) for r in rows]
        for r in rows:
            if not r or set(r) - set(LETTERS):
                raise PreconditionError("Row %r is not a word in a and b." % r)
            if any(x == y for x, y in zip(r, r[1:])):
                raise PreconditionError("Row %r does not alternate." % r)
        self.rows = sorted(rows, key=lambda r: (-len(r), r))

    @classmethod
    def from_groups(cls, groups):
        return cls(chain_word(g.length, g.signs[0], LETTERS) for g in groups)

    @property
    def partition(self):
        return Partition(len(r) for r in self.rows)

    def counts(self):
        """ (number of a's, number of b's). """
        text = ''.join(self.rows)
        return text.count('a'), text.count('b')

    def groups(self):
        return [Group(FREE, len(r), (1 if r[0] == 'a' else -1,)) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, ABDiagram) and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self.rows))

    def __str__(self):
        return ' '.join(self.rows)

    def __repr__(self):
        return "ABDiagram(%r)" % self.rows


def ab_diagrams(p, q):
    """ All ab-diagrams with ``p`` a's and ``q`` b's. """
    for partition in partitions(p + q):
        for groups in group_choices(partition, free):
            if plus_dimension(groups) == p:
                yield ABDiagram.from_groups(groups)


def gl_glpq_orbits(pair):
    p, q = pair.params['p'], pair.params['q']
    for diagram in ab_diagrams(p, q):
        basis = AdaptedBasis(diagram.groups(), layout=PERMUTATION, plus_dim=p)
        yield OrbitRep(pair.family, diagram.partition, str(diagram), basis.e,
                       basis=basis, params=pair.params)
