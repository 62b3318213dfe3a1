""" Exact linear algebra over the rationals and over polynomial rings.

Entries are Python ``int`` (when integral) or ``fractions.Fraction``, held in
numpy object arrays. Polynomial matrices hold elements of a sympy
``PolyRing`` over ``QQ``. Nothing in this module uses floating point.

"""
from fractions import Fraction
from functools import reduce
import logging

try:
    from math import gcd
except ImportError:
    from fractions import gcd

import networkx as nx
import numpy as np
import six
from sympy import QQ
from sympy.polys.rings import ring as poly_ring

from indexlab import ClosureError, PreconditionError, SizeGuardError

logger = logging.getLogger(__name__)

SYMBOLIC = 'symbolic'
MONTECARLO = 'montecarlo'
RANK_MODES = (SYMBOLIC, MONTECARLO)

DEFAULT_TRIALS = 3
DEFAULT_BOX = 10 ** 9
MIN_BOX = 10 ** 6
MAX_BOX = 2 ** 62
MAX_SYMBOLIC_DIM = 64
MAX_SYMBOLIC_VARS = 8


def as_rational(value):
    """ Convert ``value`` to an exact rational.

    Integral values come back as ``int``, everything else as ``Fraction``.
    Strings of the form "p/q" or "p" are parsed. Floats are refused.

    """
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, six.integer_types + (np.integer,)):
        return int(value)
    if isinstance(value, six.string_types):
        return as_rational(Fraction(value.strip()))
    if isinstance(value, (float, np.floating)):
        raise TypeError("Floating point value %r is not exact." % (value,))

    # sympy and gmpy rationals
    return as_rational(Fraction(int(value.numerator), int(value.denominator)))


def format_rational(value):
    """ Render a rational as "p/q", or "p" when the denominator is 1. """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


_normalize = np.frompyfunc(as_rational, 1, 1)


def vector(values):
    """ An exact column vector, stored as a tuple. """
    return tuple(as_rational(v) for v in values)


def zero_vector(n):
    return (0,) * n


def unit_vector(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _lcm(a, b):
    return a * b // gcd(a, b)


def _denominator(x):
    return x.denominator if isinstance(x, Fraction) else 1


def _integer_rows(rows):
    """ Scale each row by the lcm of its denominators. """
    scaled = []
    for row in rows:
        scale = reduce(_lcm, (_denominator(x) for x in row), 1)
        scaled.append([int(x * scale) for x in row])
    return scaled


class RationalMatrix(object):
    """ An immutable dense matrix of exact rationals.

    Parameters
    ----------
    entries: sequence of sequences, or numpy array
        Row-major entries. Anything accepted by ``as_rational`` is allowed.
    rows, cols: int (optional)
        Shape, required only when ``entries`` is empty.

    """

    __slots__ = ('_array', '_sparse_rows', '_hash')

    def __init__(self, entries, rows=None, cols=None):
        if isinstance(entries, RationalMatrix):
            array = entries._array
        else:
            array = np.array(entries, dtype=object)
            if array.size == 0:
                rows = rows if rows is not None else (
                    array.shape[0] if array.ndim == 2 else 0)
                cols = cols if cols is not None else (
                    array.shape[1] if array.ndim == 2 else 0)
                array = np.empty((rows, cols), dtype=object)
            elif array.ndim != 2:
                raise ValueError(
                    "Matrix entries must be two-dimensional, got shape %s."
                    % (array.shape,))
            else:
                array = _normalize(array).astype(object)

        if rows is not None and array.shape[0] != rows:
            raise ValueError("Expected %d rows, got %d." % (rows, array.shape[0]))
        if cols is not None and array.shape[1] != cols:
            raise ValueError("Expected %d cols, got %d." % (cols, array.shape[1]))

        array.flags.writeable = False
        self._array = array
        self._sparse_rows = None
        self._hash = None

    @classmethod
    def _wrap(cls, array):
        """ Wrap an object array whose entries are already normalized. """
        m = cls.__new__(cls)
        array.flags.writeable = False
        m._array = array
        m._sparse_rows = None
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        return cls._wrap(array)

    @classmethod
    def identity(cls, n):
        array = np.empty((n, n), dtype=object)
        array.fill(0)
        for i in range(n):
            array[i, i] = 1
        return cls._wrap(array)

    @classmethod
    def unit(cls, n, i, j, value=1):
        """ The elementary n x n matrix with ``value`` at (i, j). """
        array = np.empty((n, n), dtype=object)
        array.fill(0)
        array[i, j] = as_rational(value)
        return cls._wrap(array)

    @classmethod
    def diag(cls, values):
        values = [as_rational(v) for v in values]
        n = len(values)
        array = np.empty((n, n), dtype=object)
        array.fill(0)
        for i, v in enumerate(values):
            array[i, i] = v
        return cls._wrap(array)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [vector(c) for c in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls([list(r) for r in zip(*columns)], cols=len(columns))

    @classmethod
    def from_flat(cls, values, rows, cols):
        values = list(values)
        assert len(values) == rows * cols
        return cls([values[r * cols:(r + 1) * cols] for r in range(rows)],
                   rows=rows, cols=cols)

    @classmethod
    def block_diag(cls, *blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        array = np.empty((rows, cols), dtype=object)
        array.fill(0)
        r = c = 0
        for b in blocks:
            array[r:r + b.rows, c:c + b.cols] = b._array
            r += b.rows
            c += b.cols
        return cls._wrap(array)

    @classmethod
    def from_dict(cls, d):
        return cls([[as_rational(x) for x in row] for row in d['entries']],
                   rows=d['rows'], cols=d['cols'])

    def to_dict(self):
        return {'rows': self.rows, 'cols': self.cols,
                'entries': [[format_rational(x) for x in row]
                            for row in self._array]}

    @property
    def rows(self):
        return self._array.shape[0]

    @property
    def cols(self):
        return self._array.shape[1]

    @property
    def shape(self):
        return self._array.shape

    @property
    def array(self):
        """ Read-only object array of entries. """
        return self._array

    @property
    def T(self):
        return RationalMatrix._wrap(self._array.T.copy())

    def transpose(self):
        return self.T

    def __getitem__(self, index):
        return self._array[index]

    def tolist(self):
        return [list(row) for row in self._array]

    def flat(self):
        """ Entries in row-major order, as a tuple. """
        return tuple(self._array.ravel())

    def row(self, i):
        return tuple(self._array[i])

    def col(self, j):
        return tuple(self._array[:, j])

    def sparse_rows(self):
        """ Per-row dicts mapping column index to nonzero entry. """
        if self._sparse_rows is None:
            self._sparse_rows = [
                {j: x for j, x in enumerate(row) if x != 0}
                for row in self._array]
        return self._sparse_rows

    def nonzeros(self):
        for i, row in enumerate(self.sparse_rows()):
            for j, x in row.items():
                yield i, j, x

    def is_zero(self):
        return not any(self.sparse_rows())

    def is_square(self):
        return self.rows == self.cols

    def trace(self):
        assert self.is_square()
        return as_rational(sum(self._array[i, i] for i in range(self.rows)))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and bool(np.all(self._array == other._array)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.flat()))
        return self._hash

    def __repr__(self):
        return "RationalMatrix(%s)" % ([
            [format_rational(x) for x in row] for row in self._array],)

    def __add__(self, other):
        assert self.shape == other.shape
        return RationalMatrix._wrap(_normalize(self._array + other._array))

    def __sub__(self, other):
        assert self.shape == other.shape
        return RationalMatrix._wrap(_normalize(self._array - other._array))

    def __neg__(self):
        return RationalMatrix._wrap(_normalize(-self._array))

    def __mul__(self, scalar):
        if isinstance(scalar, RationalMatrix):
            raise TypeError("Use '@' or dot() for matrix products.")
        scalar = as_rational(scalar)
        return RationalMatrix._wrap(_normalize(self._array * scalar))

    __rmul__ = __mul__

    def dot(self, other):
        """ Matrix product, exploiting sparsity of both factors. """
        if not isinstance(other, RationalMatrix):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValueError("Shape mismatch: %s @ %s." % (self.shape, other.shape))
        other_rows = other.sparse_rows()
        array = np.empty((self.rows, other.cols), dtype=object)
        array.fill(0)
        for i, row in enumerate(self.sparse_rows()):
            acc = {}
            for k, x in row.items():
                for j, y in other_rows[k].items():
                    acc[j] = acc.get(j, 0) + x * y
            for j, v in acc.items():
                array[i, j] = as_rational(v)
        return RationalMatrix._wrap(array)

    __matmul__ = dot

    def apply(self, v):
        """ Matrix times column vector, returning a tuple. """
        if len(v) != self.cols:
            raise ValueError("Vector of length %d for %d columns." % (len(v), self.cols))
        out = []
        for row in self.sparse_rows():
            out.append(as_rational(sum(x * v[j] for j, x in row.items())))
        return tuple(out)

    def commutator(self, other):
        return self.dot(other) - other.dot(self)

    def power(self, k):
        assert self.is_square()
        result = RationalMatrix.identity(self.rows)
        for _ in range(k):
            result = result.dot(self)
        return result


def as_matrix(m):
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _bareiss(a, ncols, exquo, pick=None):
    """ Fraction-free elimination of the row list ``a`` in place.

    The division by the previous pivot is exact at every step (Sylvester's
    identity), for any choice of pivot rows.

    Parameters
    ----------
    a: list of lists
        Rows with entries from an integral domain.
    ncols: int
        Number of columns.
    exquo: callable
        Exact division ``exquo(numerator, denominator)``.
    pick: callable (optional)
        Cost of using an entry as a pivot. The cheapest candidate in the
        current column is used; by default the first nonzero one.

    Returns
    -------
    pivots: list of int
        Pivot columns, one per unit of rank.

    """
    nrows = len(a)
    r = 0
    prev = None
    pivots = []

    for c in range(ncols):
        if r == nrows:
            break

        candidates = [i for i in range(r, nrows) if a[i][c]]
        if not candidates:
            continue

        if pick is None:
            p = candidates[0]
        else:
            p = min(candidates, key=lambda i: pick(a[i][c]))

        a[r], a[p] = a[p], a[r]
        pivot_row = a[r]
        piv = pivot_row[c]

        for i in range(r + 1, nrows):
            row = a[i]
            lead = row[c]
            for j in range(c + 1, ncols):
                t = piv * row[j] - lead * pivot_row[j]
                row[j] = t if prev is None else exquo(t, prev)
            row[c] = lead - lead

        prev = piv
        pivots.append(c)
        r += 1

    return pivots


def _int_exquo(t, d):
    q, rem = divmod(t, d)
    assert rem == 0, "Inexact division in fraction-free elimination."
    return q


def _poly_exquo(t, d):
    return t.exquo(d)


def _int_rank(rows, ncols):
    return len(_bareiss([list(r) for r in rows], ncols, _int_exquo))


def rank(m):
    """ Exact rank, by fraction-free (Bareiss) elimination. """
    m = as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    return _int_rank(_integer_rows(m.array), m.cols)


def _rref_rows(rows, ncols):
    """ Gauss-Jordan elimination with exact fractions.

    Returns the nonzero rows of the reduced row echelon form, and the
    pivot columns.

    """
    a = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue

        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        pivot_row = a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], pivot_row)]

        pivots.append(c)
        r += 1

    reduced = [[as_rational(x) for x in row] for row in a[:r]]
    return reduced, pivots


def rref(m):
    """ Reduced row echelon form.

    Returns
    -------
    reduced: RationalMatrix
        The nonzero rows of the reduced form.
    pivots: tuple of int
        Pivot columns.

    """
    m = as_matrix(m)
    reduced, pivots = _rref_rows(m.array, m.cols)
    return RationalMatrix(reduced, rows=len(reduced), cols=m.cols), tuple(pivots)


def kernel_basis(m):
    """ A basis of {v : m v = 0}, one vector per free column of the RREF. """
    m = as_matrix(m)
    reduced, pivots = _rref_rows(m.array, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = 1
        for k, p in enumerate(pivots):
            v[p] = as_rational(-reduced[k][f])
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """ Some solution x of a x = b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.

    """
    a = as_matrix(a)
    b = vector(b)
    if len(b) != a.rows:
        raise ValueError("Right-hand side of length %d for %d rows." % (len(b), a.rows))

    augmented = [list(row) + [b[i]] for i, row in enumerate(a.array)]
    reduced, pivots = _rref_rows(augmented, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None

    x = [0] * a.cols
    for k, p in enumerate(pivots):
        x[p] = reduced[k][a.cols]
    return tuple(x)


def inverse(m):
    m = as_matrix(m)
    if not m.is_square():
        raise PreconditionError("Cannot invert a %dx%d matrix." % m.shape)
    n = m.rows
    augmented = [list(row) + [1 if j == i else 0 for j in range(n)]
                 for i, row in enumerate(m.array)]
    reduced, pivots = _rref_rows(augmented, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise PreconditionError("Matrix is singular.")
    return RationalMatrix([row[n:] for row in reduced], rows=n, cols=n)


def kron(a, b):
    """ Kronecker product. """
    array = np.empty((a.rows * b.rows, a.cols * b.cols), dtype=object)
    array.fill(0)
    for i, j, x in a.nonzeros():
        array[i * b.rows:(i + 1) * b.rows, j * b.cols:(j + 1) * b.cols] = \
            _normalize(b.array * x)
    return RationalMatrix._wrap(array)


class SpanCoordinates(object):
    """ Coordinates of vectors with respect to a fixed independent family.

    The family is reduced once; afterwards a coordinate lookup reads the
    vector at the pivot positions and applies a precomputed transform, then
    confirms membership.

    Parameters
    ----------
    vectors: sequence of sequences
        Linearly independent vectors of a common length.
    length: int (optional)
        The common length, needed when ``vectors`` is empty.

    """

    def __init__(self, vectors, length=None):
        self.vectors = [vector(v) for v in vectors]
        self.dim = len(self.vectors)
        if self.vectors:
            length = len(self.vectors[0])
        self.length = length or 0

        if any(len(v) != self.length for v in self.vectors):
            raise ValueError("Vectors must share a common length.")

        _, pivots = _rref_rows(self.vectors, self.length)
        if len(pivots) < self.dim:
            raise PreconditionError(
                "Family of %d vectors is linearly dependent (rank %d)."
                % (self.dim, len(pivots)))
        self.pivots = tuple(pivots)

        if self.dim:
            square = RationalMatrix(
                [[v[p] for p in self.pivots] for v in self.vectors])
            self._transform = inverse(square).tolist()
        else:
            self._transform = []

        self._sparse = [{j: x for j, x in enumerate(v) if x != 0}
                        for v in self.vectors]

    def combine(self, coords):
        """ The vector with the given coordinates. """
        out = [0] * self.length
        for c, v in zip(coords, self._sparse):
            if c:
                for j, x in v.items():
                    out[j] += c * x
        return tuple(as_rational(x) for x in out)

    def coordinates(self, x):
        """ Coordinates of ``x``; raises ClosureError if ``x`` is outside. """
        if len(x) != self.length:
            raise ValueError("Vector of length %d, expected %d." % (len(x), self.length))
        xp = [x[p] for p in self.pivots]
        coords = []
        for k in range(self.dim):
            coords.append(as_rational(sum(
                xp[i] * self._transform[i][k] for i in range(self.dim) if xp[i])))
        coords = tuple(coords)

        if self.combine(coords) != tuple(as_rational(v) for v in x):
            raise ClosureError("Vector is not in the span of the given family.")
        return coords

    def __contains__(self, x):
        try:
            self.coordinates(x)
        except ClosureError:
            return False
        return True


def _fraction_from_domain(c):
    return Fraction(int(c.numerator), int(c.denominator))


class PolyMatrix(object):
    """ A matrix with multivariate polynomial entries over QQ.

    Parameters
    ----------
    names: sequence of str
        The indeterminates. At least one is required.
    entries: sequence of sequences
        Entries, as elements of the polynomial ring or anything the ring
        accepts (integers, QQ elements, dicts of monomials).
    rows, cols: int (optional)
        Shape, required only when ``entries`` is empty.

    """

    def __init__(self, names, entries, rows=None, cols=None, ring=None):
        self.names = tuple(names)
        if not self.names:
            raise ValueError("A polynomial matrix needs at least one indeterminate.")
        if ring is None:
            ring = poly_ring(",".join(self.names), QQ)[0]
        self.ring = ring

        entries = [list(row) for row in entries]
        self.rows = len(entries) if rows is None else rows
        self.cols = (len(entries[0]) if entries else 0) if cols is None else cols

        array = np.empty((self.rows, self.cols), dtype=object)
        array.fill(ring.zero)
        for i, row in enumerate(entries):
            if len(row) != self.cols:
                raise ValueError("Ragged polynomial matrix.")
            for j, x in enumerate(row):
                array[i, j] = self._convert(x)
        array.flags.writeable = False
        self.array = array

    def _convert(self, x):
        if isinstance(x, six.integer_types + (Fraction, np.integer)):
            x = Fraction(x)
            return self.ring(QQ(x.numerator, x.denominator))
        if hasattr(x, 'ring') and x.ring != self.ring:
            raise ValueError("Entry %s uses indeterminates outside %s." % (x, self.names))
        return self.ring(x)

    @classmethod
    def from_linear_forms(cls, names, forms, rows, cols):
        """ Build a matrix whose entries are linear forms.

        Parameters
        ----------
        names: sequence of str
            Indeterminates.
        forms: dict
            Maps (row, col) to a dict {variable index: coefficient}.
            Missing entries are zero.

        """
        names = tuple(names)
        ring = poly_ring(",".join(names), QQ)[0]
        nvars = len(names)
        monomials = [tuple(1 if t == k else 0 for t in range(nvars))
                     for k in range(nvars)]

        m = cls.__new__(cls)
        m.names = names
        m.ring = ring
        m.rows = rows
        m.cols = cols
        array = np.empty((rows, cols), dtype=object)
        array.fill(ring.zero)
        for (i, j), form in forms.items():
            terms = {}
            for k, c in form.items():
                c = Fraction(c)
                if c:
                    terms[monomials[k]] = QQ(c.numerator, c.denominator)
            if terms:
                array[i, j] = ring.from_dict(terms)
        array.flags.writeable = False
        m.array = array
        return m

    @property
    def nvars(self):
        return len(self.names)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def max_degree(self):
        degree = 0
        for p in self.array.ravel():
            for monom in p.keys():
                degree = max(degree, sum(monom))
        return degree

    def evaluate(self, point):
        """ Substitute integer or rational values for every indeterminate. """
        point = [as_rational(v) for v in point]
        if len(point) != self.nvars:
            raise ValueError("Need %d values, got %d." % (self.nvars, len(point)))
        return RationalMatrix(
            [[_evaluate_poly(p, point) for p in row] for row in self.array],
            rows=self.rows, cols=self.cols)


def _evaluate_poly(p, point):
    total = 0
    for monom, coeff in p.items():
        term = _fraction_from_domain(coeff)
        for value, e in zip(point, monom):
            if e:
                term *= value ** e
        total += term
    return as_rational(total)


class RankCertificate(object):
    """ A generic rank together with how it was obtained.

    In symbolic mode ``value`` is the exact rank over the rational function
    field and ``bound`` is 0. In Monte-Carlo mode ``value`` is a lower bound
    on the generic rank, wrong with probability at most ``bound``.

    """

    def __init__(self, value, mode, trials=0, box=0, bound=0):
        bound = as_rational(bound)
        if mode not in RANK_MODES:
            raise ValueError("Unknown rank mode %r." % mode)
        if bound >= 1 or bound < 0:
            raise ValueError("Failure bound %s is not in [0, 1)." % format_rational(bound))
        if mode == SYMBOLIC and bound != 0:
            raise ValueError("Symbolic ranks carry no failure probability.")

        self.value = value
        self.mode = mode
        self.trials = trials
        self.box = box
        self.bound = bound

    @property
    def exact(self):
        return self.mode == SYMBOLIC or self.bound == 0

    def to_dict(self):
        return {'value': self.value, 'mode': self.mode, 'trials': self.trials,
                'box': self.box, 'bound': format_rational(self.bound)}

    def __repr__(self):
        return "RankCertificate(value=%d, mode=%r, bound=%s)" % (
            self.value, self.mode, format_rational(self.bound))


def _drop(rows, cols, i, j):
    """ Remove row ``i`` and column ``j`` from the sparse structure. """
    for jj in rows.pop(i, {}):
        cols[jj].discard(i)
        if not cols[jj]:
            del cols[jj]
    for ii in cols.pop(j, set()):
        del rows[ii][j]
        if not rows[ii]:
            del rows[ii]


def _decompose(array):
    """ Reduce a matrix before elimination.

    Rows or columns with exactly one nonzero entry each contribute one to the
    rank and are peeled away together with the crossing column or row. What
    remains is split into the connected components of its bipartite
    row/column sparsity graph; the rank is additive over those blocks.

    Returns
    -------
    peeled: int
        Rank contributed by peeling.
    blocks: list of (row indices, column indices)

    """
    rows = {}
    cols = {}
    for i, row in enumerate(array):
        for j, x in enumerate(row):
            if x:
                rows.setdefault(i, {})[j] = x
                cols.setdefault(j, set()).add(i)

    peeled = 0
    changed = True
    while changed:
        changed = False
        for i in sorted(rows):
            if i in rows and len(rows[i]) == 1:
                (j,) = rows[i]
                _drop(rows, cols, i, j)
                peeled += 1
                changed = True
        for j in sorted(cols):
            if j in cols and len(cols[j]) == 1:
                (i,) = cols[j]
                _drop(rows, cols, i, j)
                peeled += 1
                changed = True

    graph = nx.Graph()
    for i, row in rows.items():
        for j in row:
            graph.add_edge(('r', i), ('c', j))

    blocks = []
    for component in nx.connected_components(graph):
        block_rows = sorted(n[1] for n in component if n[0] == 'r')
        block_cols = sorted(n[1] for n in component if n[0] == 'c')
        blocks.append((block_rows, block_cols))
    blocks.sort()

    return peeled, blocks


def _variables_used(entries):
    used = set()
    for row in entries:
        for p in row:
            for monom in p.keys():
                used.update(k for k, e in enumerate(monom) if e)
    return used


def generic_rank(m, mode=MONTECARLO, seed=None, trials=DEFAULT_TRIALS,
                 box=DEFAULT_BOX, force=False, max_dim=MAX_SYMBOLIC_DIM,
                 max_vars=MAX_SYMBOLIC_VARS):
    """ The rank of a polynomial matrix at a generic point.

    Parameters
    ----------
    m: PolyMatrix
        The matrix.
    mode: str
        'symbolic' eliminates over the rational function field with
        polynomial pivots. 'montecarlo' substitutes random integers from
        [-box, box] ``trials`` times and keeps the best rank, which is a lower
        bound on the generic rank.
    seed: int
        Seed for the random number generator (Monte-Carlo only).
    trials: int
        Number of substitutions.
    box: int
        Sampling radius, at least 10**6.
    force: bool
        Run symbolic elimination even on blocks above the size guard.
    max_dim, max_vars: int
        The size guard: a block with more than ``max_dim`` rows or columns
        that involves more than ``max_vars`` indeterminates is refused.

    Returns
    -------
    certificate: RankCertificate

    """
    if mode not in RANK_MODES:
        raise PreconditionError("Unknown rank mode %r." % (mode,))
    if trials < 1:
        raise PreconditionError("Need at least one trial, got %d." % trials)
    if mode == MONTECARLO and not MIN_BOX <= box <= MAX_BOX:
        raise PreconditionError(
            "Sample box %d is outside [%d, 2**62]." % (box, MIN_BOX))

    peeled, blocks = _decompose(m.array)
    logger.debug(
        "generic_rank: %dx%d matrix, %d peeled, %d blocks %s",
        m.rows, m.cols, peeled, len(blocks),
        [(len(r), len(c)) for r, c in blocks])

    if mode == SYMBOLIC:
        value = peeled
        for block_rows, block_cols in blocks:
            entries = [[m.array[i, j] for j in block_cols] for i in block_rows]
            nvars = len(_variables_used(entries))
            if (max(len(block_rows), len(block_cols)) > max_dim
                    and nvars > max_vars and not force):
                raise SizeGuardError(
                    "Refusing symbolic elimination of a %dx%d block in %d "
                    "indeterminates (limits %d and %d)."
                    % (len(block_rows), len(block_cols), nvars, max_dim, max_vars))
            value += len(_bareiss(entries, len(block_cols), _poly_exquo, pick=len))
        return RankCertificate(value, SYMBOLIC)

    degree = m.max_degree()
    size = min(m.rows, m.cols)
    if size * degree == 0:
        bound = 0
    else:
        per_trial = Fraction(size * degree, 2 * box + 1)
        if per_trial >= 1:
            raise PreconditionError(
                "Sample box %d is too small for degree %d at size %d."
                % (box, degree, size))
        bound = per_trial ** trials

    rng = np.random.RandomState(seed)
    best = [0] * len(blocks)
    for _ in range(trials):
        point = [int(x) for x in rng.randint(-box, box + 1, size=m.nvars, dtype=np.int64)]
        for b, (block_rows, block_cols) in enumerate(blocks):
            evaluated = [[_evaluate_poly(m.array[i, j], point) for j in block_cols]
                         for i in block_rows]
            best[b] = max(best[b], _int_rank(_integer_rows(evaluated), len(block_cols)))

    return RankCertificate(peeled + sum(best), MONTECARLO, trials, box, bound)
