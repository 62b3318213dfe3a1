""" Partitions, decorated chains and adapted cyclic bases.

A nilpotent element is described by its Jordan chains: chain ``i`` has
length ``L_i = d_i + 1`` and spans w_i, e.w_i, ..., e^d_i.w_i. The form is
prescribed on the chains by a monomial Gram matrix: a chain is paired either
with itself or with one partner chain of the same length. Each chain may
also carry a starting sign, the eigenvalue of the involution on w_i; the
signs then alternate along the chain.

``AdaptedBasis`` maps this abstract model into the coordinates of a pair by
an explicit rational isometry P, so that e = P N P^-1 where N shifts every
chain by one step.

"""
from collections import namedtuple
from fractions import Fraction
import itertools
import logging

from indexlab import PreconditionError, SelfCheckError
from indexlab.exactlinalg import RationalMatrix, as_rational, inverse
from indexlab.pairs import BilinearForm

logger = logging.getLogger(__name__)

SELF = 'self'
PAIR = 'pair'
FREE = 'free'

SINGLE = 'single'
LAGRANGIAN = 'lagrangian'
SPLIT = 'split'
PERMUTATION = 'permutation'
LAYOUTS = (SINGLE, LAGRANGIAN, SPLIT, PERMUTATION)


class Partition(tuple):
    """ A weakly decreasing tuple of positive parts. """

    def __new__(cls, parts=(), total=None):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise PreconditionError("Partition parts must be positive: %s." % (parts,))
        if list(parts) != sorted(parts, reverse=True):
            raise PreconditionError("Partition parts must be weakly decreasing: %s."
                                    % (parts,))
        if total is not None and sum(parts) != total:
            raise PreconditionError("Parts %s do not sum to %d." % (parts, total))
        return super(Partition, cls).__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        """ Read "3,3,1" or the exponent form "3^2,1". """
        parts = []
        for token in text.replace(' ', '').split(','):
            if not token:
                continue
            try:
                if '^' in token:
                    part, times = token.split('^')
                    parts.extend([int(part)] * int(times))
                else:
                    parts.append(int(token))
            except ValueError:
                raise PreconditionError("Cannot read partition %r." % text)
        return cls(sorted(parts, reverse=True))

    @property
    def total(self):
        return sum(self)

    def multiplicities(self):
        """ (part, multiplicity) pairs, largest part first. """
        return [(part, len(list(group)))
                for part, group in itertools.groupby(self)]

    def __str__(self):
        return ','.join(str(p) for p in self)

    def __repr__(self):
        return "Partition(%s)" % self


def partitions(total, max_part=None):
    """ All partitions of ``total`` in decreasing lexicographic order. """
    if total < 0:
        raise PreconditionError("Cannot partition %d." % total)
    max_part = total if max_part is None else min(max_part, total)
    if total == 0:
        yield Partition()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(total - first, first):
            yield Partition((first,) + rest)


Chain = namedtuple('Chain', ['length', 'sign'])

Group = namedtuple('Group', ['kind', 'length', 'signs'])
Group.__doc__ = """ One self-paired chain, a pair of partner chains, or a free chain. """


def plus_count(length, sign):
    """ Number of vectors with eigenvalue +1 on a chain starting with ``sign``. """
    return (length + 1) // 2 if sign > 0 else length // 2


def chain_word(length, sign, letters='+-'):
    first, second = letters if sign > 0 else letters[::-1]
    return ''.join(first if a % 2 == 0 else second for a in range(length))


def plus_dimension(groups):
    return sum(plus_count(g.length, s) for g in groups for s in g.signs)


def decoration(groups, letters='+-'):
    """ Sign words per group, e.g. "+-+ +-/-+". Empty for unsigned groups. """
    words = []
    for g in groups:
        if any(s is None for s in g.signs):
            continue
        words.append('/'.join(chain_word(g.length, s, letters) for s in g.signs))
    return ' '.join(words)


def self_paired(length, mult, signed=False):
    if not signed:
        return [[Group(SELF, length, (None,))] * mult]
    return [[Group(SELF, length, (1,))] * k + [Group(SELF, length, (-1,))] * (mult - k)
            for k in range(mult, -1, -1)]


def paired(length, mult, signs=None):
    """ ``mult`` chains in partner pairs; no choices when ``mult`` is odd.

    ``signs`` is None (unsigned), 'opposite' or 'equal'.

    """
    if mult % 2:
        return []
    half = mult // 2
    if signs is None:
        return [[Group(PAIR, length, (None, None))] * half]
    if signs == 'opposite':
        return [[Group(PAIR, length, (1, -1))] * half]
    return [[Group(PAIR, length, (1, 1))] * k + [Group(PAIR, length, (-1, -1))] * (half - k)
            for k in range(half, -1, -1)]


def free(length, mult):
    return [[Group(FREE, length, (1,))] * k + [Group(FREE, length, (-1,))] * (mult - k)
            for k in range(mult, -1, -1)]


def group_choices(partition, options):
    """ Every decoration of ``partition``.

    ``options(length, mult)`` lists the admissible group lists for the
    ``mult`` parts of one length; the choices for distinct lengths are
    independent.

    """
    per_part = []
    for length, mult in partition.multiplicities():
        choices = options(length, mult)
        if not choices:
            return []
        per_part.append(choices)
    return [list(itertools.chain.from_iterable(c)) for c in itertools.product(*per_part)]


def _expand(groups):
    chains = []
    partner = []
    for g in groups:
        i = len(chains)
        if g.kind == PAIR:
            chains.extend([Chain(g.length, g.signs[0]), Chain(g.length, g.signs[1])])
            partner.extend([i + 1, i])
        else:
            chains.append(Chain(g.length, g.signs[0]))
            partner.append(i if g.kind == SELF else None)
    return chains, partner


class AdaptedBasis(object):
    """ A nilpotent element built from chain data.

    Parameters
    ----------
    groups: sequence of Group
    form: BilinearForm (optional)
        The target form; None for the permutation layout.
    adjoint_sign: int
        +1 if e is self-adjoint for the form, -1 if skew-adjoint.
    layout: str
        'single': one block on all coordinates. 'lagrangian': one block whose
        first half is the +1-eigenspace of the involution. 'split': the
        +1-eigenspace is the first ``plus_dim`` coordinates and is orthogonal
        to the rest. 'permutation': no form, +1 vectors go to the first
        ``plus_dim`` coordinates.
    plus_dim: int (optional)
        Dimension of the +1-eigenspace, for signed layouts.

    """

    def __init__(self, groups, form=None, adjoint_sign=1, layout=SINGLE,
                 plus_dim=None):
        if layout not in LAYOUTS:
            raise ValueError("Unknown layout %r." % layout)
        self.groups = list(groups)
        self.chains, self.partner = _expand(self.groups)
        self.form = form
        self.adjoint_sign = adjoint_sign
        self.layout = layout
        self.plus_dim = plus_dim

        self.offsets = []
        offset = 0
        for chain in self.chains:
            self.offsets.append(offset)
            offset += chain.length
        self.dim = offset

        self._signs = [None if c.sign is None else c.sign * (-1) ** a
                       for c in self.chains for a in range(c.length)]

        self.nilpotent = self._shift()
        self.gram = None if layout == PERMUTATION else self._gram()
        self.transform = self._transform()
        self.transform_inverse = inverse(self.transform)

        if self.gram is not None:
            image = self.transform.T.dot(form.matrix).dot(self.transform)
            if image != self.gram:
                raise SelfCheckError("Adapted basis is not an isometry onto the form.")

        self.e = self.transform.dot(self.nilpotent).dot(self.transform_inverse)

    def index(self, i, a):
        """ Position of e^a.w_i in the chain basis. """
        return self.offsets[i] + a

    def vector_sign(self, i, a):
        return self._signs[self.index(i, a)]

    def chain_coordinates(self, phi):
        """ P^-1 phi P, the matrix of ``phi`` in the chain basis. """
        return self.transform_inverse.dot(phi).dot(self.transform)

    def _shift(self):
        n = self.dim
        entries = [[0] * n for _ in range(n)]
        for i, chain in enumerate(self.chains):
            for a in range(chain.length - 1):
                entries[self.index(i, a + 1)][self.index(i, a)] = 1
        return RationalMatrix(entries, rows=n, cols=n)

    def _middle_key(self, i, a):
        return self.vector_sign(i, a) if self.layout == SPLIT else None

    def _gram(self):
        if self.form is None:
            raise PreconditionError("Layout %r needs a form." % self.layout)
        eps = self.form.sign
        adj = self.adjoint_sign
        n = self.dim
        entries = [[0] * n for _ in range(n)]
        middles = {}

        for i, chain in enumerate(self.chains):
            j = self.partner[i]
            if j is None:
                raise PreconditionError("Chain %d has no partner under the form." % i)
            if j < i:
                continue
            d = chain.length - 1

            if j != i:
                if self.chains[j].length != chain.length:
                    raise PreconditionError("Partner chains %d and %d differ in length."
                                            % (i, j))
                for a in range(d + 1):
                    value = adj ** a
                    entries[self.index(i, a)][self.index(j, d - a)] = value
                    entries[self.index(j, d - a)][self.index(i, a)] = eps * value
                continue

            scale = 1
            if d % 2 == 0:
                # middle values alternate +1, -1 per block
                key = self._middle_key(i, d // 2)
                count = middles.get(key, 0)
                middles[key] = count + 1
                scale = (1 if count % 2 == 0 else -1) * adj ** (d // 2)
            for a in range(d + 1):
                entries[self.index(i, a)][self.index(i, d - a)] = scale * adj ** a

        gram = RationalMatrix(entries, rows=n, cols=n)
        if gram.T != gram * eps:
            raise PreconditionError("Chains %s do not carry a %s form."
                                    % (self.chains, self.form.kind))
        return gram

    def _blocks(self):
        n = self.dim
        if self.layout in (SINGLE, LAGRANGIAN):
            if self.layout == LAGRANGIAN and 2 * self.plus_count() != n:
                raise PreconditionError("Signs give a %d-dimensional +1-eigenspace "
                                        "in dimension %d." % (self.plus_count(), n))
            return [(list(range(n)), list(range(n)))]

        p = self.plus_dim
        if self.plus_count() != p:
            raise PreconditionError("Signs give a %d-dimensional +1-eigenspace, "
                                    "expected %d." % (self.plus_count(), p))
        plus = [u for u in range(n) if self._signs[u] > 0]
        minus = [u for u in range(n) if self._signs[u] < 0]
        return [(plus, list(range(p))), (minus, list(range(p, n)))]

    def plus_count(self):
        return sum(1 for s in self._signs if s is not None and s > 0)

    def _transform(self):
        n = self.dim
        columns = [None] * n

        if self.layout == PERMUTATION:
            if self.plus_dim is None:
                order = list(range(n))
            else:
                (plus, _), (minus, _) = self._blocks()
                order = plus + minus
            for k, u in enumerate(order):
                columns[u] = {k: 1}
        else:
            for members, coords in self._blocks():
                self._place(members, coords, columns)

        dense = []
        for column in columns:
            v = [0] * n
            for k, x in column.items():
                v[k] = x
            dense.append(v)
        return RationalMatrix.from_columns(dense, rows=n)

    def _place(self, members, coords, columns):
        """ Send a block of chain vectors isometrically onto ``coords``. """
        J = self.form.matrix
        m = len(coords)
        rows = self.gram.sparse_rows()
        hyperbolic, positive, negative = [], [], []
        seen = set()

        for u in members:
            if u in seen:
                continue
            (v, value), = rows[u].items()
            seen.update((u, v))
            if u == v:
                (positive if value > 0 else negative).append(u)
                continue
            if self.layout == LAGRANGIAN and self._signs[u] < 0:
                u, v = v, u
                value = rows[u][v]
            if self.layout == LAGRANGIAN and self._signs[v] > 0:
                raise PreconditionError("Paired vectors share a sign in a Lagrangian layout.")
            hyperbolic.append((u, v, value))

        slot = 0
        for u, v, value in hyperbolic:
            if slot >= m - 1 - slot:
                raise PreconditionError("Block of size %d overflows." % m)
            k, far = coords[slot], coords[m - 1 - slot]
            columns[u] = {k: 1}
            columns[v] = {far: as_rational(Fraction(value) / J[k, far])}
            slot += 1

        for u, v in zip(positive, negative):
            if slot >= m - 1 - slot:
                raise PreconditionError("Block of size %d overflows." % m)
            k, far = coords[slot], coords[m - 1 - slot]
            half = Fraction(J[k, far]) / 2
            columns[u] = {k: 1, far: as_rational(half)}
            columns[v] = {k: 1, far: as_rational(-half)}
            slot += 1

        rest = positive[len(negative):] + negative[len(positive):]
        if rest:
            center = coords[(m - 1) // 2]
            u = rest[0]
            if (len(rest) == 1 and m % 2 == 1 and slot == (m - 1) // 2
                    and J[center, center] == rows[u][u]):
                columns[u] = {center: 1}
            else:
                raise PreconditionError("Form on the chains is not split over the "
                                        "rationals (%d anisotropic vectors left)."
                                        % len(rest))


class OrbitRep(object):
    """ A representative of a nilpotent orbit in g1.

    Parameters
    ----------
    family: str
        Family tag of the owning pair.
    partition: Partition
        Jordan type of ``e``.
    decoration: str
        Sign words or ab-rows distinguishing orbits with the same Jordan type.
    e: RationalMatrix
    form: BilinearForm (optional)
    basis: AdaptedBasis (optional)
        The chain data ``e`` was built from, when known.

    """

    def __init__(self, family, partition, decoration, e, form=None, basis=None,
                 params=None):
        self.family = family
        self.partition = Partition(partition)
        self.decoration = decoration
        self.e = e
        self.form = form
        self.basis = basis
        self.params = dict(params or {})

    @classmethod
    def from_basis(cls, family, params, partition, basis, letters='+-'):
        return cls(family, partition, decoration(basis.groups, letters), basis.e,
                   form=basis.form, basis=basis, params=params)

    @property
    def orbit_id(self):
        if self.decoration:
            return '%s:%s' % (self.partition, self.decoration)
        return str(self.partition)

    @property
    def sort_key(self):
        return (tuple(-p for p in self.partition), self.decoration)

    def __repr__(self):
        return "OrbitRep(%s, %s)" % (self.family, self.orbit_id)

    def to_dict(self):
        return {'family': self.family, 'params': self.params,
                'partition': list(self.partition), 'decoration': self.decoration,
                'e': self.e.to_dict(),
                'form': None if self.form is None else self.form.to_dict()}

    @classmethod
    def from_dict(cls, d):
        form = d.get('form')
        return cls(d['family'], d['partition'], d.get('decoration', ''),
                   RationalMatrix.from_dict(d['e']),
                   form=None if form is None else BilinearForm.from_dict(form),
                   params=d.get('params'))
