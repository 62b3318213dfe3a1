""" Classical Lie algebras, involutions and symmetric pairs.

Families are named by tags:

    gl/so    (gl_n, so_n)                  params n
    gl/sp    (gl_2n, sp_2n)                params n
    sp/gln   (sp_2n, gl_n)                 params n
    so/gln   (so_2n, gl_n)                 params n
    gl/glpq  (gl_p+q, gl_p x gl_q)         params p, q
    so/sopq  (so_p+q, so_p x so_q)         params p, q
    sp/sppq  (sp_2p+2q, sp_2p x sp_2q)     params p, q

The first two are outer pairs (sigma(A) = -J^-1 A^t J), the rest are inner
(sigma(A) = D A D for a diagonal D with entries +-1).

"""
import logging

from indexlab import (
    ClosureError, PreconditionError, SelfCheckError, UnsupportedFamilyError)
from indexlab.exactlinalg import (
    MONTECARLO, RationalMatrix, SpanCoordinates, inverse, kernel_basis, rank)
from indexlab.liealg import (
    MatrixLieAlgebra, Representation, index, is_nilpotent)

logger = logging.getLogger(__name__)

SYMMETRIC = 'symmetric'
SKEW = 'skew'

OUTER_FAMILIES = ('gl/so', 'gl/sp')
INNER_FAMILIES = ('sp/gln', 'so/gln', 'gl/glpq', 'so/sopq', 'sp/sppq')
FAMILIES = OUTER_FAMILIES + INNER_FAMILIES

_aliases = {
    'gl_n/so_n': 'gl/so', 'gl_2n/sp_2n': 'gl/sp', 'sp_2n/gl_n': 'sp/gln',
    'so_2n/gl_n': 'so/gln', 'sp/gl': 'sp/gln', 'so/gl': 'so/gln',
    'gl/gl': 'gl/glpq', 'so/so': 'so/sopq', 'sp/sp': 'sp/sppq',
}


def canonical_family(family):
    family = _aliases.get(family, family)
    if family not in FAMILIES:
        raise UnsupportedFamilyError("Unsupported family %r; expected one of %s."
                                     % (family, ', '.join(FAMILIES)))
    return family


class BilinearForm(object):
    """ A nondegenerate symmetric or skew form (v, w) = v^t J w. """

    def __init__(self, matrix, kind):
        matrix = matrix if isinstance(matrix, RationalMatrix) else RationalMatrix(matrix)
        if kind not in (SYMMETRIC, SKEW):
            raise PreconditionError("Form kind must be 'symmetric' or 'skew'.")
        if not matrix.is_square() or rank(matrix) != matrix.rows:
            raise PreconditionError("Form matrix is singular.")
        if kind == SYMMETRIC and matrix.T != matrix:
            raise PreconditionError("Form matrix is not symmetric.")
        if kind == SKEW and matrix.T != -matrix:
            raise PreconditionError("Form matrix is not skew-symmetric.")
        self.matrix = matrix
        self.kind = kind
        self._inverse = None

    @property
    def size(self):
        return self.matrix.rows

    @property
    def sign(self):
        """ +1 for symmetric forms, -1 for skew ones. """
        return 1 if self.kind == SYMMETRIC else -1

    @property
    def inverse(self):
        if self._inverse is None:
            self._inverse = inverse(self.matrix)
        return self._inverse

    def adjoint(self, a):
        """ The matrix a* with (a v, w) = (v, a* w). """
        return self.inverse.dot(a.T).dot(self.matrix)

    def to_dict(self):
        return {'kind': self.kind, 'matrix': self.matrix.to_dict()}

    @classmethod
    def from_dict(cls, d):
        return cls(RationalMatrix.from_dict(d['matrix']), d['kind'])


def symmetric_form(n):
    """ The antidiagonal identity. """
    return BilinearForm(RationalMatrix(
        [[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)],
        rows=n, cols=n), SYMMETRIC)


def skew_form(size):
    """ The antidiagonal matrix with +1 above the center and -1 below. """
    if size % 2:
        raise PreconditionError("A skew form needs even size, got %d." % size)
    n = size // 2
    return BilinearForm(RationalMatrix(
        [[(1 if i < n else -1) if i + j == size - 1 else 0 for j in range(size)]
         for i in range(size)], rows=size, cols=size), SKEW)


def block_form(*forms):
    kinds = set(f.kind for f in forms)
    if len(kinds) != 1:
        raise PreconditionError("Cannot mix symmetric and skew blocks.")
    return BilinearForm(RationalMatrix.block_diag(*[f.matrix for f in forms]),
                        kinds.pop())


def _units(n, pairs):
    return [RationalMatrix.unit(n, i, j) for i, j in pairs]


def gl(n, check=False):
    """ gl_n with the elementary basis E_ij in row-major order. """
    return MatrixLieAlgebra(
        _units(n, [(i, j) for i in range(n) for j in range(n)]),
        label='gl_%d' % n, ambient=n, check=check)


def sl(n, check=False):
    """ sl_n: off-diagonal E_ij row-major, then E_ii - E_i+1,i+1. """
    basis = _units(n, [(i, j) for i in range(n) for j in range(n) if i != j])
    basis += [RationalMatrix.unit(n, i, i) - RationalMatrix.unit(n, i + 1, i + 1)
              for i in range(n - 1)]
    return MatrixLieAlgebra(basis, label='sl_%d' % n, ambient=n, check=check)


def borel_gl(n, check=True):
    """ Upper triangular matrices in gl_n. """
    return MatrixLieAlgebra(
        _units(n, [(i, j) for i in range(n) for j in range(i, n)]),
        label='b_%d' % n, ambient=n, check=check)


def _skew_basis(n):
    return [RationalMatrix.unit(n, i, j) - RationalMatrix.unit(n, j, i)
            for i in range(n) for j in range(i + 1, n)]


def _symmetric_basis(n):
    basis = []
    for i in range(n):
        for j in range(i, n):
            if i == j:
                basis.append(RationalMatrix.unit(n, i, i))
            else:
                basis.append(RationalMatrix.unit(n, i, j) + RationalMatrix.unit(n, j, i))
    return basis


def so(form, check=False):
    """ {A : A^t J + J A = 0} for a symmetric J, as J^-1 times skew matrices. """
    if form.kind != SYMMETRIC:
        raise PreconditionError("so needs a symmetric form.")
    n = form.size
    basis = [form.inverse.dot(s) for s in _skew_basis(n)]
    return MatrixLieAlgebra(basis, label='so_%d' % n, ambient=n, form=form,
                            check=check)


def sp(form, check=False):
    """ {A : A^t J + J A = 0} for a skew J, as J^-1 times symmetric matrices. """
    if form.kind != SKEW:
        raise PreconditionError("sp needs a skew form.")
    n = form.size
    basis = [form.inverse.dot(s) for s in _symmetric_basis(n)]
    return MatrixLieAlgebra(basis, label='sp_%d' % n, ambient=n, form=form,
                            check=check)


def classical_algebra(kind, n, check=False):
    """ gl_n, so_n or sp_n on the standard antidiagonal forms. """
    if kind == 'gl':
        return gl(n, check=check)
    if kind == 'so':
        return so(symmetric_form(n), check=check)
    if kind == 'sp':
        return sp(skew_form(n), check=check)
    raise UnsupportedFamilyError("Unknown classical type %r." % (kind,))


def rank_of_algebra(kind, n):
    """ Rank of gl_n, so_n or sp_n (n the matrix size). """
    if kind == 'gl':
        return n
    if kind == 'so':
        return n // 2
    if kind == 'sp':
        return n // 2
    raise UnsupportedFamilyError("Unknown classical type %r." % (kind,))


class Involution(object):
    """ An involution of a matrix algebra.

    kind 'outer': sigma(A) = -J^-1 A^t J for a BilinearForm J.
    kind 'inner': sigma(A) = D A D^-1 for an invertible D with D^2 scalar.

    """

    def __init__(self, kind, data):
        if kind not in ('outer', 'inner'):
            raise ValueError("Unknown involution kind %r." % kind)
        self.kind = kind
        self.data = data
        if kind == 'inner':
            self._d_inverse = inverse(data)

    def apply(self, a):
        if self.kind == 'outer':
            return -self.data.adjoint(a)
        return self.data.dot(a).dot(self._d_inverse)

    def to_dict(self):
        if self.kind == 'outer':
            return {'kind': 'outer', 'data': self.data.to_dict()}
        return {'kind': 'inner', 'data': self.data.to_dict()}


def eigenspaces(basis, sigma, ambient):
    """ Split a basis into sigma-eigenbases.

    Basis elements that are eigenvectors are used as they are; otherwise the
    eigenspaces are computed as kernels over the whole span.

    """
    plus, minus = [], []
    for b in basis:
        s = sigma.apply(b)
        if s == b:
            plus.append(b)
        elif s == -b:
            minus.append(b)
        else:
            break
    else:
        return plus, minus

    span = SpanCoordinates([b.flat() for b in basis], length=ambient * ambient)
    images = [span.coordinates(sigma.apply(b).flat()) for b in basis]
    dim = len(basis)
    result = []
    for eps in (1, -1):
        m = RationalMatrix([[images[j][i] - (eps if i == j else 0)
                             for j in range(dim)] for i in range(dim)],
                           rows=dim, cols=dim)
        result.append([RationalMatrix.from_flat(span.combine(c), ambient, ambient)
                       for c in kernel_basis(m)])
    return result[0], result[1]


class SymmetricPair(object):
    """ A Lie algebra with an involution and its eigenspace split.

    Parameters
    ----------
    g0: MatrixLieAlgebra
        The fixed-point subalgebra.
    g1: sequence of RationalMatrix
        A basis of the (-1)-eigenspace.
    sigma: Involution
    family: str
        Family tag, authoritative for the rank table.
    params: dict
    form: BilinearForm or None
        The form defining g, if any.
    check: bool
        Certify the grading on all pairs of basis elements.

    """

    def __init__(self, g0, g1, sigma, family, params, form=None, kind='gl',
                 label=None, check=True):
        self.g0 = g0
        self.g1 = list(g1)
        self.sigma = sigma
        self.family = family
        self.params = dict(params)
        self.form = form
        self.kind = kind
        self.ambient = g0.ambient
        self.label = label or describe_family(family, self.params)

        self.g = MatrixLieAlgebra(
            list(g0.basis) + self.g1, label='%s_%d' % (kind, self.ambient),
            ambient=self.ambient, form=form, check=False)
        self._g1_span = SpanCoordinates(
            [y.flat() for y in self.g1], length=self.ambient ** 2)
        self._isotropy = None

        if check:
            self.certify()

    @property
    def dim0(self):
        return self.g0.dim

    @property
    def dim1(self):
        return len(self.g1)

    def __repr__(self):
        return "SymmetricPair(%s)" % self.label

    def in_g1(self, x):
        return x.flat() in self._g1_span

    def parity(self, i):
        """ 0 for basis elements of g0, 1 for those of g1. """
        return 0 if i < self.dim0 else 1

    def certify(self):
        """ Certify sigma on the basis and the three grading inclusions. """
        for i, b in enumerate(self.g.basis):
            eps = 1 if self.parity(i) == 0 else -1
            if self.sigma.apply(b) != b * eps:
                raise SelfCheckError("Basis element %d of %s is not a "
                                     "sigma-eigenvector." % (i, self.label))
        for i in range(self.g.dim):
            for j in range(i + 1, self.g.dim):
                coords = self.g.structure(i, j)
                parity = (self.parity(i) + self.parity(j)) % 2
                for k, c in enumerate(coords):
                    if c and self.parity(k) != parity:
                        raise ClosureError(
                            "[b_%d, b_%d] breaks the grading of %s."
                            % (i, j, self.label))
        self.g.certified = True
        return self

    def to_dict(self):
        return {'family': self.family, 'params': self.params,
                'g0': self.g0.to_dict(), 'g1': [y.to_dict() for y in self.g1],
                'sigma': self.sigma.to_dict()}


def describe_family(family, params):
    p = params
    if family == 'gl/so':
        return '(gl_%d, so_%d)' % (p['n'], p['n'])
    if family == 'gl/sp':
        return '(gl_%d, sp_%d)' % (2 * p['n'], 2 * p['n'])
    if family == 'sp/gln':
        return '(sp_%d, gl_%d)' % (2 * p['n'], p['n'])
    if family == 'so/gln':
        return '(so_%d, gl_%d)' % (2 * p['n'], p['n'])
    if family == 'gl/glpq':
        return '(gl_%d, gl_%d x gl_%d)' % (p['p'] + p['q'], p['p'], p['q'])
    if family == 'so/sopq':
        return '(so_%d, so_%d x so_%d)' % (p['p'] + p['q'], p['p'], p['q'])
    if family == 'sp/sppq':
        return '(sp_%d, sp_%d x sp_%d)' % (
            2 * (p['p'] + p['q']), 2 * p['p'], 2 * p['q'])
    return '(%s, %s)' % (family, p)


def _expected_g0_dim(family, p):
    if family == 'gl/so':
        return p['n'] * (p['n'] - 1) // 2
    if family == 'gl/sp':
        return p['n'] * (2 * p['n'] + 1)
    if family in ('sp/gln', 'so/gln'):
        return p['n'] ** 2
    if family == 'gl/glpq':
        return p['p'] ** 2 + p['q'] ** 2
    if family == 'so/sopq':
        return p['p'] * (p['p'] - 1) // 2 + p['q'] * (p['q'] - 1) // 2
    if family == 'sp/sppq':
        return p['p'] * (2 * p['p'] + 1) + p['q'] * (2 * p['q'] + 1)


def outer_pair(n, kind, check=True):
    """ (gl_n, so_n) for a symmetric form, (gl_n, sp_n) for a skew one.

    g0 is so(J) or sp(J); g1 is J^-1 times the symmetric (resp. skew)
    matrices, which contains the identity.

    """
    if kind == SYMMETRIC:
        form = symmetric_form(n)
        g0 = so(form)
        g1 = [form.inverse.dot(s) for s in _symmetric_basis(n)]
        family, params = 'gl/so', {'n': n}
    elif kind == SKEW:
        if n % 2:
            raise PreconditionError("(gl_n, sp_n) needs even n, got %d." % n)
        form = skew_form(n)
        g0 = sp(form)
        g1 = [form.inverse.dot(s) for s in _skew_basis(n)]
        family, params = 'gl/sp', {'n': n // 2}
    else:
        raise PreconditionError("Form kind must be 'symmetric' or 'skew'.")

    g0.label = '%s_%d' % ('so' if kind == SYMMETRIC else 'sp', n)
    pair = SymmetricPair(g0, g1, Involution('outer', form), family, params,
                         form=form, kind='gl', check=check)
    check_dimensions(pair)
    return pair


def _signs(p, q):
    return RationalMatrix.diag([1] * p + [-1] * q)


def inner_pair(family, params, check=True):
    """ An inner symmetric pair, sigma = conjugation by D = diag(1^p, -1^q).

    For (sp_2n, gl_n) and (so_2n, gl_n) the form is antidiagonal, so the
    +1-eigenspace of D (the first n coordinates) is Lagrangian. For
    (so_n, so_p x so_q) and (sp_2n, sp_2p x sp_2q) the form is J_p + J_q
    and the two eigenspaces are orthogonal.

    """
    family = canonical_family(family)
    p = dict(params)

    if family in ('sp/gln', 'so/gln'):
        n = p['n']
        if n < 1:
            raise PreconditionError("Need n >= 1, got %d." % n)
        form = skew_form(2 * n) if family == 'sp/gln' else symmetric_form(2 * n)
        d = _signs(n, n)
    elif family in ('gl/glpq', 'so/sopq', 'sp/sppq'):
        if p['p'] < 1 or p['q'] < 1:
            raise PreconditionError("Need p, q >= 1, got %d, %d." % (p['p'], p['q']))
        if family == 'gl/glpq':
            form = None
            d = _signs(p['p'], p['q'])
        elif family == 'so/sopq':
            form = block_form(symmetric_form(p['p']), symmetric_form(p['q']))
            d = _signs(p['p'], p['q'])
        else:
            form = block_form(skew_form(2 * p['p']), skew_form(2 * p['q']))
            d = _signs(2 * p['p'], 2 * p['q'])
    else:
        raise UnsupportedFamilyError("%r is not an inner family." % family)

    if form is None:
        kind = 'gl'
        g = gl(d.rows)
    elif form.kind == SYMMETRIC:
        kind = 'so'
        g = so(form)
    else:
        kind = 'sp'
        g = sp(form)

    sigma = Involution('inner', d)
    plus, minus = eigenspaces(g.basis, sigma, g.ambient)
    g0 = MatrixLieAlgebra(plus, label='%s0' % family, ambient=g.ambient,
                          check=False)
    pair = SymmetricPair(g0, minus, sigma, family, p, form=form, kind=kind,
                         check=check)
    check_dimensions(pair)
    return pair


def make_pair(family, check=True, **params):
    """ Build any supported pair from its family tag and parameters. """
    family = canonical_family(family)
    if family == 'gl/so':
        return outer_pair(params['n'], SYMMETRIC, check=check)
    if family == 'gl/sp':
        return outer_pair(2 * params['n'], SKEW, check=check)
    return inner_pair(family, params, check=check)


def check_dimensions(pair):
    expected = _expected_g0_dim(pair.family, pair.params)
    if pair.dim0 != expected:
        raise SelfCheckError("dim g0 of %s is %d, expected %d."
                             % (pair.label, pair.dim0, expected))
    if pair.dim0 + pair.dim1 != pair.g.dim:
        raise SelfCheckError("Eigenspaces of %s do not span g." % pair.label)


def isotropy_rep(pair, check=True):
    """ g0 acting on g1 by the bracket, in g1 coordinates. """
    if pair._isotropy is None:
        pair._isotropy = bracket_rep(pair.g0, pair.g1, label='isotropy',
                                     check=check)
    return pair._isotropy


def rank_table(family, params):
    """ The rank of G/G0, from the classification. """
    family = canonical_family(family)
    p = params
    if family in ('gl/so', 'gl/sp', 'sp/gln'):
        return p['n']
    if family == 'so/gln':
        return p['n'] // 2
    return min(p['p'], p['q'])


def symmetric_rank(pair, check=True, mode=MONTECARLO, seed=None, **kwargs):
    """ rk(G/G0), taken from the table and checked against ind(g0, g1). """
    expected = rank_table(pair.family, pair.params)
    if not check:
        return expected

    report = index(isotropy_rep(pair), mode=mode, seed=seed, **kwargs)
    if report.upper != expected or (not report.exact and report.lower > expected):
        raise SelfCheckError("Computed ind(g0, g1) = %d for %s, the rank table "
                             "says %d." % (report.index, pair.label, expected))
    return expected


class GradedCentralizer(object):
    """ g_e = g_e0 + g_e1 and the bracket action of g_e0 on g_e1. """

    def __init__(self, e, g_e0, g_e1, rep):
        self.e = e
        self.g_e0 = g_e0
        self.g_e1 = list(g_e1)
        self.rep = rep

    @property
    def dim0(self):
        return self.g_e0.dim

    @property
    def dim1(self):
        return len(self.g_e1)

    @property
    def dim(self):
        return self.dim0 + self.dim1

    @property
    def basis(self):
        return list(self.g_e0.basis) + self.g_e1


def centralizer_basis(basis, e, ambient):
    """ A basis of {x in span(basis) : [x, e] = 0}. """
    if not basis:
        return []
    columns = [b.commutator(e).flat() for b in basis]
    m = RationalMatrix.from_columns(columns, rows=ambient * ambient)
    result = []
    for c in kernel_basis(m):
        x = RationalMatrix.zeros(ambient)
        for coeff, b in zip(c, basis):
            if coeff:
                x = x + b * coeff
        result.append(x)
    return result


def bracket_rep(algebra, module, label='', check=True):
    """ ``algebra`` acting by commutators on the span of the matrices ``module``. """
    n = algebra.ambient
    span = SpanCoordinates([y.flat() for y in module], length=n * n)
    action = []
    for b in algebra.basis:
        columns = [span.coordinates(b.commutator(y).flat()) for y in module]
        action.append(RationalMatrix.from_columns(columns, rows=len(module)))
    return Representation(algebra, action, dim=len(module), label=label,
                          check=check)


def graded_centralizer(pair, e, check=True):
    """ The centralizer of a nilpotent e in g1, split by sigma. """
    if not pair.in_g1(e):
        raise PreconditionError("Element does not lie in g1 of %s." % pair.label)
    if not is_nilpotent(e):
        raise PreconditionError("Element is not nilpotent.")

    n = pair.ambient
    plus = centralizer_basis(pair.g0.basis, e, n)
    minus = centralizer_basis(pair.g1, e, n)
    g_e0 = MatrixLieAlgebra(plus, label='g_e0', ambient=n, check=check)
    rep = bracket_rep(g_e0, minus, label='g_e1', check=check)
    logger.debug("graded centralizer in %s: dims %d + %d",
                 pair.label, len(plus), len(minus))
    return GradedCentralizer(e, g_e0, minus, rep)


def coadjoint_stabilizer_split(pair, xi):
    """ dim g_xi0 and dim g_xi1 for a covector on g (coordinates over g's basis).

    g_xi = {s : xi([s, y]) = 0 for all y}.

    """
    g = pair.g
    xi = tuple(xi)
    dims = []
    for indices in (range(pair.dim0), range(pair.dim0, g.dim)):
        rows = []
        for i in indices:
            rows.append([sum(c * xi[k] for k, c in enumerate(g.structure(i, j)) if c)
                         for j in range(g.dim)])
        if rows:
            dims.append(len(rows) - rank(RationalMatrix(rows)))
        else:
            dims.append(0)
    return tuple(dims)
