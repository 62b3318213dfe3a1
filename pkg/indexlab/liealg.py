""" Matrix Lie algebras, their representations, and the index engine.

Algebra elements are handled either as matrices or as coordinate tuples
over the algebra's ordered basis. Representations carry one action matrix
per basis element.

"""
import logging

import numpy as np

from indexlab import (
    ClosureError, PreconditionError, RepresentationError, SelfCheckError)
from indexlab.exactlinalg import (
    DEFAULT_BOX, DEFAULT_TRIALS, MAX_SYMBOLIC_DIM, MAX_SYMBOLIC_VARS,
    MONTECARLO, SYMBOLIC, PolyMatrix, RankCertificate, RationalMatrix,
    SpanCoordinates, as_rational, generic_rank, kernel_basis, kron,
    rref, solve, vector, zero_vector)

logger = logging.getLogger(__name__)

EQUAL = 'equal'
UNEQUAL = 'unequal'
INCONCLUSIVE = 'inconclusive'


class MatrixLieAlgebra(object):
    """ A Lie algebra of square matrices, given by an ordered basis.

    Parameters
    ----------
    basis: sequence of RationalMatrix
        Linearly independent ``ambient`` x ``ambient`` matrices whose span is
        closed under the commutator.
    label: str
        Human readable name, e.g. 'gl_4' or 'so_7'. The prefix before the
        underscore names the classical type when there is one.
    ambient: int (optional)
        Matrix size; required when the basis is empty.
    form: BilinearForm (optional)
        The form preserved by the algebra, for so and sp.
    check: bool
        Certify closure on every pair of basis elements right away.

    """

    def __init__(self, basis, label='', ambient=None, form=None, check=True):
        self.basis = [b if isinstance(b, RationalMatrix) else RationalMatrix(b)
                      for b in basis]
        if self.basis:
            ambient = self.basis[0].rows
        if ambient is None:
            raise ValueError("Empty algebra needs an explicit ambient size.")
        self.ambient = ambient
        self.label = label
        self.form = form

        for b in self.basis:
            if b.shape != (ambient, ambient):
                raise ValueError("Basis element of shape %s in a %d-dimensional"
                                 " matrix algebra." % (b.shape, ambient))

        self._span = SpanCoordinates(
            [b.flat() for b in self.basis], length=ambient * ambient)
        self._structure = {}
        self.certified = False

        if check:
            self.certify()

    @property
    def dim(self):
        return len(self.basis)

    @property
    def kind(self):
        """ Classical type read off the label ('gl', 'so', 'sp', ...). """
        return self.label.split('_')[0] if '_' in self.label else None

    def __repr__(self):
        return "MatrixLieAlgebra(%r, dim=%d, ambient=%d)" % (
            self.label, self.dim, self.ambient)

    def coordinates(self, x):
        """ Coordinates of the matrix ``x`` over the basis. """
        return self._span.coordinates(x.flat())

    def contains(self, x):
        return x.flat() in self._span

    def element(self, coords):
        """ The matrix with the given coordinates. """
        coords = vector(coords)
        if len(coords) != self.dim:
            raise ValueError("Expected %d coordinates, got %d." % (self.dim, len(coords)))
        return RationalMatrix.from_flat(
            self._span.combine(coords), self.ambient, self.ambient)

    def as_element(self, x):
        """ Accept either a matrix or a coordinate tuple; return both. """
        if isinstance(x, RationalMatrix):
            return x, self.coordinates(x)
        coords = vector(x)
        return self.element(coords), coords

    def structure(self, i, j):
        """ Coordinates of [b_i, b_j], computed once and cached. """
        key = (i, j)
        if key not in self._structure:
            if i == j:
                coords = zero_vector(self.dim)
            elif (j, i) in self._structure:
                coords = tuple(-c for c in self._structure[(j, i)])
            else:
                c = self.basis[i].commutator(self.basis[j])
                try:
                    coords = self.coordinates(c)
                except ClosureError:
                    raise ClosureError(
                        "[b_%d, b_%d] leaves the span of %s." % (i, j, self.label))
            self._structure[key] = coords
        return self._structure[key]

    def bracket(self, x, y):
        """ Coordinates of the commutator of two elements.

        Parameters
        ----------
        x, y: coordinate tuples or RationalMatrix

        """
        xm, _ = self.as_element(x)
        ym, _ = self.as_element(y)
        try:
            return self.coordinates(xm.commutator(ym))
        except ClosureError:
            raise ClosureError("Commutator leaves the span of %s." % self.label)

    def certify(self):
        """ Check closure on all pairs of basis elements. """
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                self.structure(i, j)
        self.certified = True
        return self

    def ad(self, x):
        """ Matrix of ad x acting on coordinates. """
        xm, _ = self.as_element(x)
        columns = [self.coordinates(xm.commutator(b)) for b in self.basis]
        return RationalMatrix.from_columns(columns, rows=self.dim)

    def is_abelian(self):
        return all(not any(self.structure(i, j))
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    def to_dict(self):
        return {'label': self.label, 'ambient': self.ambient,
                'basis': [b.to_dict() for b in self.basis]}

    @classmethod
    def from_dict(cls, d, check=True):
        return cls([RationalMatrix.from_dict(b) for b in d['basis']],
                   label=d.get('label', ''), ambient=d['ambient'], check=check)


class Representation(object):
    """ A finite-dimensional representation of a matrix Lie algebra.

    Parameters
    ----------
    algebra: MatrixLieAlgebra
    action: sequence of RationalMatrix
        One ``dim`` x ``dim`` matrix per basis element of ``algebra``.
    dim: int (optional)
        Module dimension; required when the algebra is zero.
    label: str
    check: bool
        Certify that the action respects brackets of basis elements.

    """

    def __init__(self, algebra, action, dim=None, label='', check=True):
        self.algebra = algebra
        self.action = [a if isinstance(a, RationalMatrix) else RationalMatrix(a)
                       for a in action]
        if self.action:
            dim = self.action[0].rows
        if dim is None:
            raise ValueError("Representation of a zero algebra needs a dimension.")
        self.dim = dim
        self.label = label
        self.certified = False

        if len(self.action) != algebra.dim:
            raise ValueError("Got %d action matrices for an algebra of dimension %d."
                             % (len(self.action), algebra.dim))
        for a in self.action:
            if a.shape != (dim, dim):
                raise ValueError("Action matrix of shape %s on a module of "
                                 "dimension %d." % (a.shape, dim))
        if check:
            self.certify()

    def __repr__(self):
        return "Representation(%r of %s, dim=%d)" % (
            self.label, self.algebra.label, self.dim)

    def rho(self, x):
        """ The action matrix of an algebra element (coordinates or matrix). """
        _, coords = self.algebra.as_element(x)
        return self._combine(coords)

    def _combine(self, coords):
        out = RationalMatrix.zeros(self.dim)
        for c, a in zip(coords, self.action):
            if c:
                out = out + a * c
        return out

    def certify(self):
        alg = self.algebra
        for i in range(alg.dim):
            for j in range(i + 1, alg.dim):
                lhs = self._combine(alg.structure(i, j))
                rhs = self.action[i].commutator(self.action[j])
                if lhs != rhs:
                    raise RepresentationError(
                        "Action does not respect the bracket of basis "
                        "elements %d and %d of %s." % (i, j, alg.label))
        self.certified = True
        return self

    def action_on(self, v):
        """ The dim x alg.dim matrix whose k-th column is b_k . v """
        v = vector(v)
        return RationalMatrix.from_columns(
            [a.apply(v) for a in self.action], rows=self.dim)

    def to_dict(self):
        return {'algebra': self.algebra.to_dict(), 'dim': self.dim,
                'action': [a.to_dict() for a in self.action]}

    @classmethod
    def from_dict(cls, d, check=True):
        algebra = MatrixLieAlgebra.from_dict(d['algebra'], check=check)
        return cls(algebra, [RationalMatrix.from_dict(a) for a in d['action']],
                   dim=d['dim'], check=check)


def adjoint(alg, check=False):
    """ The adjoint representation; columns are structure constants. """
    action = []
    for i in range(alg.dim):
        action.append(RationalMatrix.from_columns(
            [alg.structure(i, j) for j in range(alg.dim)], rows=alg.dim))
    return Representation(alg, action, dim=alg.dim, label='ad', check=check)


def coadjoint(alg, check=False):
    return dual(adjoint(alg, check=check))


def standard(alg, check=False):
    """ The algebra acting on column vectors of its ambient space. """
    return Representation(alg, alg.basis, dim=alg.ambient, label='std', check=check)


def trivial(alg, dim=1):
    return Representation(alg, [RationalMatrix.zeros(dim)] * alg.dim, dim=dim,
                          label='trivial', check=False)


def dual(rep):
    """ The dual representation, s -> -transpose(rho(s)). """
    return Representation(rep.algebra, [-a.T for a in rep.action], dim=rep.dim,
                          label='dual(%s)' % rep.label, check=False)


def _stabilizer_coefficients(rep, v):
    return kernel_basis(rep.action_on(v))


def _subalgebra(alg, coefficients, label, check=True):
    basis = [alg.element(c) for c in coefficients]
    return MatrixLieAlgebra(basis, label=label, ambient=alg.ambient, check=check)


def stabilizer(rep, v):
    """ The stationary subalgebra {s : s . v = 0}, closure re-certified. """
    coefficients = _stabilizer_coefficients(rep, v)
    return _subalgebra(rep.algebra, coefficients,
                       'stab(%s)' % rep.algebra.label)


def tangent_space(rep, v):
    """ A basis of q . v, the column span of the stacked action. """
    reduced, _ = rref(rep.action_on(v).T)
    return [reduced.row(i) for i in range(reduced.rows)]


def quotient_module(rep, v):
    """ The stabilizer of ``v`` acting on V / q.v

    The complement of q.v is spanned by the unit vectors at the non-pivot
    positions of the reduced basis of q.v, taken in coordinate order.

    """
    coefficients = _stabilizer_coefficients(rep, v)
    stab = _subalgebra(rep.algebra, coefficients, 'stab(%s)' % rep.algebra.label)

    tangent = tangent_space(rep, v)
    _, pivots = rref(RationalMatrix(tangent, rows=len(tangent), cols=rep.dim))
    pivot_set = set(pivots)
    complement = [j for j in range(rep.dim) if j not in pivot_set]

    def project(x):
        # x = sum_k x[p_k] R_k + sum_{j in complement} y_j e_j
        return tuple(as_rational(x[j] - sum(x[p] * tangent[k][j]
                                            for k, p in enumerate(pivots) if x[p]))
                     for j in complement)

    action = []
    for c in coefficients:
        a = rep._combine(c)
        columns = [project(a.col(j)) for j in complement]
        action.append(RationalMatrix.from_columns(columns, rows=len(complement)))

    return Representation(stab, action, dim=len(complement),
                          label='quotient(%s)' % rep.label)


class IndexReport(object):
    """ The index of a representation and its certificate.

    ``index`` is exact when the certificate is, otherwise it is an upper
    bound; ``lower`` is a lower bound that always holds.

    """

    def __init__(self, module_dim, algebra_dim, orbit_dim, certificate):
        self.module_dim = module_dim
        self.algebra_dim = algebra_dim
        self.orbit_dim = orbit_dim
        self.certificate = certificate
        self.index = module_dim - orbit_dim
        assert self.index >= 0

    @property
    def exact(self):
        return self.certificate.exact

    @property
    def upper(self):
        return self.index

    @property
    def lower(self):
        if self.exact:
            return self.index
        return self.module_dim - min(self.module_dim, self.algebra_dim)

    def to_dict(self):
        return {'module_dim': self.module_dim, 'algebra_dim': self.algebra_dim,
                'orbit_dim': self.orbit_dim, 'index': self.index,
                'exact': self.exact, 'lower': self.lower, 'upper': self.upper,
                'certificate': self.certificate.to_dict()}

    def __repr__(self):
        return "IndexReport(index=%d, %s)" % (self.index, self.certificate)


def action_matrix(rep):
    """ The matrix M(xi) of the dual action at a symbolic covector.

    Column k holds b_k . xi, so M[i][k] = -sum_j rho(b_k)[j][i] x_j.

    """
    forms = {}
    for k, a in enumerate(rep.action):
        for j, i, c in a.nonzeros():
            forms.setdefault((i, k), {})[j] = -c
    names = ['x%d' % j for j in range(rep.dim)]
    return PolyMatrix.from_linear_forms(names, forms, rep.dim, rep.algebra.dim)


def index(rep, mode=MONTECARLO, seed=None, trials=DEFAULT_TRIALS,
          box=DEFAULT_BOX, force=False, max_dim=MAX_SYMBOLIC_DIM,
          max_vars=MAX_SYMBOLIC_VARS):
    """ dim V minus the maximal dimension of an orbit in the dual module.

    Monte-Carlo mode gives an upper bound on the index; symbolic mode gives
    its exact value.

    Returns
    -------
    report: IndexReport

    """
    if rep.dim == 0 or rep.algebra.dim == 0:
        certificate = RankCertificate(0, SYMBOLIC)
    else:
        certificate = generic_rank(
            action_matrix(rep), mode=mode, seed=seed, trials=trials, box=box,
            force=force, max_dim=max_dim, max_vars=max_vars)
    report = IndexReport(rep.dim, rep.algebra.dim, certificate.value, certificate)
    logger.debug("index of %r: %r", rep, report)
    return report


def index_of_algebra(alg, **kwargs):
    """ The index of ``alg``, computed over its coadjoint orbits. """
    return index(adjoint(alg), **kwargs)


class VinbergCheck(object):
    """ Both sides of ind(q, V*) <= ind(q_v, (V/q.v)*) and a verdict. """

    def __init__(self, lhs, rhs, status, quotient_dim):
        self.lhs = lhs
        self.rhs = rhs
        self.status = status
        self.quotient_dim = quotient_dim

    @property
    def equal(self):
        if self.status == INCONCLUSIVE:
            return None
        return self.status == EQUAL

    def to_dict(self):
        return {'lhs': self.lhs.to_dict(), 'rhs': self.rhs.to_dict(),
                'status': self.status, 'quotient_dim': self.quotient_dim}


def _vinberg_status(lhs, rhs):
    if lhs.exact and rhs.exact:
        if rhs.index < lhs.index:
            raise SelfCheckError(
                "Vinberg inequality violated: %d > %d." % (lhs.index, rhs.index))
        return EQUAL if lhs.index == rhs.index else UNEQUAL

    if lhs.exact:
        if rhs.upper < lhs.index:
            raise SelfCheckError(
                "Index upper bound %d is below the Vinberg bound %d."
                % (rhs.upper, lhs.index))
        return EQUAL if rhs.upper == lhs.index else INCONCLUSIVE

    if rhs.exact:
        return UNEQUAL if lhs.upper < rhs.index else INCONCLUSIVE

    return EQUAL if rhs.upper == lhs.lower else INCONCLUSIVE


def check_vinberg(rep, v, lhs=None, **kwargs):
    """ Compare ind(q, V*) with ind(q_v, (V/q.v)*) at ``v``.

    Parameters
    ----------
    rep: Representation
    v: sequence
        A point of the module.
    lhs: IndexReport (optional)
        A previously computed left-hand side, reused across many points.
    kwargs:
        Passed to ``index``.

    """
    if lhs is None:
        lhs = index(dual(rep), **kwargs)

    if not tangent_space(rep, v):
        # q.v = 0: the quotient is V itself, with the whole algebra acting
        return VinbergCheck(lhs, lhs, EQUAL, rep.dim)

    quotient = quotient_module(rep, v)
    rhs = index(dual(quotient), **kwargs)
    return VinbergCheck(lhs, rhs, _vinberg_status(lhs, rhs), quotient.dim)


class GibEvidence(object):
    def __init__(self, samples, counts, lhs):
        self.samples = samples
        self.counts = counts
        self.lhs = lhs

    @property
    def all_equal(self):
        return self.counts[EQUAL] == self.samples

    def to_dict(self):
        return {'samples': self.samples, 'counts': dict(self.counts),
                'lhs': self.lhs.to_dict()}


def gib_evidence(rep, samples=100, sample_box=100, seed=None, lhs=None, **kwargs):
    """ Run check_vinberg at ``samples`` random points of the module.

    This is evidence on finitely many points, never a proof of GIB.

    """
    if lhs is None:
        lhs = index(dual(rep), mode=SYMBOLIC)
    rng = np.random.RandomState(seed)
    counts = {EQUAL: 0, UNEQUAL: 0, INCONCLUSIVE: 0}
    for n in range(samples):
        v = [int(x) for x in rng.randint(-sample_box, sample_box + 1, size=rep.dim)]
        check = check_vinberg(rep, v, lhs=lhs, seed=rng.randint(2 ** 31), **kwargs)
        counts[check.status] += 1
    logger.info("GIB evidence for %r on %d samples: %s", rep, samples, counts)
    return GibEvidence(samples, counts, lhs)


def m_copies(rep, m):
    """ The direct sum of ``m`` copies of ``rep``. """
    assert m >= 1
    action = [RationalMatrix.block_diag(*([a] * m)) for a in rep.action]
    return Representation(rep.algebra, action, dim=rep.dim * m,
                          label='%d%s' % (m, rep.label), check=False)


def direct_sum(rep1, rep2):
    if rep1.algebra is not rep2.algebra:
        raise PreconditionError("Direct sums need the same algebra on both sides.")
    action = [RationalMatrix.block_diag(a, b)
              for a, b in zip(rep1.action, rep2.action)]
    return Representation(rep1.algebra, action, dim=rep1.dim + rep2.dim,
                          label='%s+%s' % (rep1.label, rep2.label), check=False)


def is_nilpotent(x):
    """ Whether the square matrix ``x`` satisfies x^n = 0. """
    assert x.is_square()
    power = x
    for _ in range(1, x.rows):
        if power.is_zero():
            return True
        power = power.dot(x)
    return power.is_zero()


class Sl2Triple(object):
    """ Coordinates of e, h, f with [h,e] = 2e, [h,f] = -2f and [e,f] = h. """

    def __init__(self, algebra, e, h, f):
        self.algebra = algebra
        self.e = e
        self.h = h
        self.f = f

    def matrices(self):
        return tuple(self.algebra.element(x) for x in (self.e, self.h, self.f))

    def certify(self):
        alg = self.algebra
        two = lambda x: tuple(2 * c for c in x)
        if (alg.bracket(self.h, self.e) != two(self.e)
                or alg.bracket(self.h, self.f) != tuple(-c for c in two(self.f))
                or alg.bracket(self.e, self.f) != tuple(self.h)):
            raise SelfCheckError("sl2-triple bracket identities fail.")
        return self


def sl2_complete(alg, e):
    """ Complete a nilpotent ``e`` to an sl2-triple inside ``alg``.

    Solves (ad e)^2 x = -2e and sets h = [e, x], then solves [e, f] = h
    together with [h, f] = -2f.

    """
    em, ec = alg.as_element(e)
    if em.is_zero():
        raise PreconditionError("Cannot complete e = 0 to an sl2-triple.")
    if not is_nilpotent(em):
        raise PreconditionError("Element is not nilpotent.")

    ad_e = alg.ad(ec)
    x = solve(ad_e.dot(ad_e), tuple(-2 * c for c in ec))
    if x is None:
        raise PreconditionError("No h with [h, e] = 2e in %s." % alg.label)
    h = ad_e.apply(x)

    ad_h = alg.ad(h)
    shifted = ad_h + RationalMatrix.identity(alg.dim) * 2
    stacked = RationalMatrix(ad_e.tolist() + shifted.tolist(),
                             rows=2 * alg.dim, cols=alg.dim)
    f = solve(stacked, tuple(h) + zero_vector(alg.dim))
    if f is None:
        raise PreconditionError("No sl2-triple in %s contains e." % alg.label)

    return Sl2Triple(alg, ec, tuple(h), tuple(f)).certify()


def sl2_algebra():
    """ sl_2 with basis (E12, E21, H). """
    return MatrixLieAlgebra(
        [RationalMatrix.unit(2, 0, 1), RationalMatrix.unit(2, 1, 0),
         RationalMatrix.diag([1, -1])], label='sl_2')


def sl2_irrep(d, algebra=None):
    """ The simple sl_2-module of binary forms of degree ``d``.

    The basis is x^(d-k) y^k for k = 0..d; E12 acts as x d/dy, E21 as
    y d/dx and H as x d/dx - y d/dy.

    """
    if d < 0:
        raise PreconditionError("Degree must be non-negative, got %d." % d)
    algebra = algebra or sl2_algebra()
    n = d + 1
    e = np.zeros((n, n), dtype=object)
    f = np.zeros((n, n), dtype=object)
    h = np.zeros((n, n), dtype=object)
    for k in range(n):
        if k > 0:
            e[k - 1, k] = k
        if k < d:
            f[k + 1, k] = d - k
        h[k, k] = d - 2 * k
    return Representation(
        algebra, [RationalMatrix(e), RationalMatrix(f), RationalMatrix(h)],
        dim=n, label='R_%d' % d)


def casimir(rep):
    """ h^2/2 + ef + fe for a representation of sl_2 in (E12, E21, H) order. """
    e, f, h = rep.action
    return h.dot(h) * as_rational('1/2') + e.dot(f) + f.dot(e)


def direct_product(alg_a, alg_b):
    """ The block-diagonal product of two matrix algebras. """
    za = RationalMatrix.zeros(alg_a.ambient)
    zb = RationalMatrix.zeros(alg_b.ambient)
    basis = ([RationalMatrix.block_diag(x, zb) for x in alg_a.basis]
             + [RationalMatrix.block_diag(za, y) for y in alg_b.basis])
    return MatrixLieAlgebra(basis, label='%s x %s' % (alg_a.label, alg_b.label),
                            ambient=alg_a.ambient + alg_b.ambient)


def tensor_product(rep_a, rep_b, algebra=None):
    """ rep_a (x) rep_b over the direct product algebra (Leibniz rule). """
    algebra = algebra or direct_product(rep_a.algebra, rep_b.algebra)
    ia = RationalMatrix.identity(rep_a.dim)
    ib = RationalMatrix.identity(rep_b.dim)
    action = ([kron(a, ib) for a in rep_a.action]
              + [kron(ia, b) for b in rep_b.action])
    return Representation(algebra, action, dim=rep_a.dim * rep_b.dim,
                          label='%s(x)%s' % (rep_a.label, rep_b.label))


def check_nilpotent_certificate(rep, v, h):
    """ Whether ``h`` witnesses that ``v`` lies in the nullcone.

    ``h`` must act diagonally with a positive weight on every coordinate
    where ``v`` is nonzero; then exp(-t h) . v tends to 0.

    """
    weights = rep.rho(h)
    diagonal = RationalMatrix.diag([weights[i, i] for i in range(rep.dim)])
    if weights != diagonal:
        return False
    return all(weights[i, i] > 0 for i, x in enumerate(vector(v)) if x != 0)


def coadjoint_parity(alg, xi, **kwargs):
    """ ind q_xi - ind q for a covector ``xi`` of the coadjoint module. """
    rep = coadjoint(alg)
    stab_index = index_of_algebra(stabilizer(rep, xi), **kwargs)
    alg_index = index_of_algebra(alg, **kwargs)
    return stab_index.index - alg_index.index
