""" ad h gradings, heights, mod-4 gluing and the delta count.

For an even nilpotent e of height 4 with sl2-triple (e, h, f), gluing the
ad h grading modulo 4 gives a symmetric pair with g0 = g(-4) + g(0) + g(4)
and g1 = g(-2) + g(2), and e in g1. Then

    delta = dim g(4) + dim S^e - dim S

where S is a generic stabilizer of (G0 : g1) and S^e one of
(G(0)_e : g(2)_e*). delta equals ind(g_e0, g_e1) - ind(g0, g1), so a
positive value shows that the glued pair does not have GNIB.

"""
from fractions import Fraction
import logging

from sympy import Matrix, Rational

from indexlab import PreconditionError, SelfCheckError, UnsupportedFamilyError
from indexlab.exactlinalg import (
    MONTECARLO, SYMBOLIC, RationalMatrix, SpanCoordinates, format_rational,
    inverse, kernel_basis)
from indexlab.liealg import MatrixLieAlgebra, index, sl2_complete
from indexlab.orbits.adapted import Partition
from indexlab.orbits.classical import nilpotent_in_classical
from indexlab.pairs import (
    Involution, SymmetricPair, bracket_rep, centralizer_basis, check_dimensions,
    classical_algebra, eigenspaces, graded_centralizer, isotropy_rep)

logger = logging.getLogger(__name__)


def _eigenvalues(m):
    """ Integer eigenvalues of a rational matrix, sorted. """
    sym = Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator)
                   for x in row] for row in m.tolist()])
    values = []
    for value in sym.eigenvals():
        if not value.is_integer:
            raise PreconditionError("Eigenvalue %s is not an integer." % value)
        values.append(int(value))
    return sorted(values)


class AdGrading(object):
    """ The eigenspace decomposition g = sum g(i) of ad h.

    ``levels`` maps each eigenvalue to a basis of g(i), in coordinates over
    the algebra's basis.

    """

    def __init__(self, algebra, h, levels):
        self.algebra = algebra
        self.h = h
        self.levels = dict(levels)

    def dim(self, level):
        return len(self.levels.get(level, []))

    @property
    def dims(self):
        return dict((k, len(v)) for k, v in sorted(self.levels.items()))

    @property
    def is_even(self):
        return all(k % 2 == 0 for k in self.levels)

    def elements(self, level):
        return [self.algebra.element(c) for c in self.levels.get(level, [])]

    def certify(self):
        """ Spot-check [g(i), g(j)] in g(i+j) on the first basis element of each level. """
        alg = self.algebra
        for i, xs in self.levels.items():
            for j, ys in self.levels.items():
                bracket = alg.bracket(xs[0], ys[0])
                if not any(bracket):
                    continue
                target = SpanCoordinates(self.levels.get(i + j, []), length=alg.dim)
                if bracket not in target:
                    raise SelfCheckError("[g(%d), g(%d)] is not inside g(%d)."
                                         % (i, j, i + j))
        return self

    def to_dict(self):
        return {"h": [format_rational(x) for x in self.h],
                "dims": dict((str(k), v) for k, v in self.dims.items())}


def ad_grading(alg, h):
    """ Decompose ``alg`` under ad h for a semisimple ``h`` with integer spectrum. """
    hm, hc = alg.as_element(h)
    values = _eigenvalues(hm)
    candidates = sorted(set(a - b for a in values for b in values))

    ad_h = alg.ad(hc)
    identity = RationalMatrix.identity(alg.dim)
    levels = {}
    for k in candidates:
        basis = kernel_basis(ad_h - identity * k)
        if basis:
            levels[k] = basis

    total = sum(len(v) for v in levels.values())
    if total != alg.dim:
        raise PreconditionError("ad h is not diagonalizable on %s (%d of %d)."
                                % (alg.label, total, alg.dim))
    grading = AdGrading(alg, hc, levels)
    logger.debug("ad h grading of %s: %s", alg.label, grading.dims)
    return grading


def height(alg, e):
    """ The least N with (ad e)^(N+1) = 0. """
    ad_e = alg.ad(e)
    power = ad_e
    for n in range(alg.dim + 1):
        if power.is_zero():
            return n
        power = power.dot(ad_e)
    raise PreconditionError("Element is not nilpotent in %s." % alg.label)


def glue_mod4(alg, h, e, check=True, grading=None):
    """ The symmetric pair g0 = sum g(4i), g1 = sum g(4i+2).

    sigma is conjugation by D = sum (-1)^((lambda - lambda_min)/2) P_lambda
    over the h-eigenspaces of the natural module. The family and its
    parameters are read off the dimensions of the D-eigenspaces.

    Parameters
    ----------
    alg: MatrixLieAlgebra
        gl, so or sp on the standard forms.
    h, e: RationalMatrix or coordinates
        An sl2-triple's h, and an even nilpotent e of height 4.

    """
    grading = grading or ad_grading(alg, h)
    if not grading.is_even:
        raise PreconditionError("Grading has odd levels %s."
                                % sorted(k for k in grading.levels if k % 2))
    em, _ = alg.as_element(e)
    found = height(alg, em)
    if found != 4:
        raise PreconditionError("Element has height %d, not 4." % found)

    hm, _ = alg.as_element(h)
    values = sorted(set(_eigenvalues(hm)))
    lowest = values[0]
    n = alg.ambient
    columns, signs = [], []
    for value in values:
        for v in kernel_basis(hm - RationalMatrix.identity(n) * value):
            columns.append(v)
            signs.append((-1) ** ((value - lowest) // 2))
    q = RationalMatrix.from_columns(columns, rows=n)
    d = q.dot(RationalMatrix.diag(signs)).dot(inverse(q))

    if alg.form is not None:
        J = alg.form.matrix
        if d.T.dot(J).dot(d) != J:
            raise UnsupportedFamilyError("Gluing of %s does not preserve the form."
                                         % alg.label)

    plus = signs.count(1)
    minus = signs.count(-1)
    kind = alg.kind
    if kind == 'gl':
        family, params = 'gl/glpq', {'p': plus, 'q': minus}
    elif kind == 'so':
        family, params = 'so/sopq', {'p': plus, 'q': minus}
    elif kind == 'sp':
        family, params = 'sp/sppq', {'p': plus // 2, 'q': minus // 2}
    else:
        raise UnsupportedFamilyError("Cannot glue a grading of %r." % alg.label)

    sigma = Involution('inner', d)
    g0_basis, g1_basis = eigenspaces(alg.basis, sigma, n)
    g0 = MatrixLieAlgebra(g0_basis, label='%s0' % family, ambient=n, check=False)
    pair = SymmetricPair(g0, g1_basis, sigma, family, params, form=alg.form,
                         kind=kind, check=check)
    check_dimensions(pair)
    if not pair.in_g1(em):
        raise SelfCheckError("e does not lie in g1 of the glued pair.")
    logger.info("glued %s into %s", alg.label, pair.label)
    return pair


def height_four_partition(kind, k, l):
    """ (3^k, 1^l) in gl and so, (3^2k, 1^2l) in sp.

    (3, 3, 1^l) is the case k = 2 in so.

    """
    if kind == 'sp':
        return Partition([3] * (2 * k) + [1] * (2 * l))
    if kind in ('gl', 'so'):
        if kind == 'so' and k < 2:
            raise PreconditionError("(3, 1^l) has height 2 in so.")
        return Partition([3] * k + [1] * l)
    raise UnsupportedFamilyError("Unknown classical type %r." % (kind,))


def height_four_element(kind, k, l):
    """ The algebra and the nilpotent of type ``height_four_partition(kind, k, l)``. """
    partition = height_four_partition(kind, k, l)
    e, _ = nilpotent_in_classical(kind, partition)
    return classical_algebra(kind, partition.total), e


class DeltaRecord(object):
    """ delta and the index reports it was computed from.

    ``reports`` holds the ``isotropy``, ``reductive`` and ``centralizer``
    index reports.

    """

    def __init__(self, pair, grading, dim_g4, dim_s, dim_s_e, delta, direct,
                 reports):
        self.pair = pair
        self.grading = grading
        self.dim_g4 = dim_g4
        self.dim_s = dim_s
        self.dim_s_e = dim_s_e
        self.delta = delta
        self.direct = direct
        self.reports = reports

    @property
    def isotropy(self):
        return self.reports['isotropy']

    @property
    def centralizer(self):
        return self.reports['centralizer']

    @property
    def exact(self):
        return all(report.exact for report in self.reports.values())

    def to_dict(self):
        return {'family': self.pair.family, 'params': self.pair.params,
                'pair': self.pair.label, 'grading': self.grading.to_dict()['dims'],
                'dim_g4': self.dim_g4, 'dim_S': self.dim_s,
                'dim_S_e': self.dim_s_e, 'delta': self.delta,
                'direct': self.direct, 'exact': self.exact}


def _delta_terms(grading, pair, level0, g2_e, reports):
    dim_s = pair.dim0 - (pair.dim1 - reports['isotropy'].index)
    dim_s_e = level0.dim - (len(g2_e) - reports['reductive'].index)
    value = grading.dim(4) + dim_s_e - dim_s
    direct = reports['centralizer'].index - reports['isotropy'].index
    return dim_s, dim_s_e, value, direct


def delta(alg, e, mode=MONTECARLO, seed=None, symbolic=(), **kwargs):
    """ delta for an even nilpotent ``e`` of height 4, with a direct cross-check.

    The formula and ind(g_e0, g_e1) - ind(g0, g1) must agree. When they do
    not, or delta comes out negative, sampled indices are recomputed
    symbolically one at a time until they do; only a disagreement left
    after that is a self-check failure.

    Parameters
    ----------
    alg: MatrixLieAlgebra
    e: RationalMatrix or coordinates
    mode, seed, kwargs:
        Passed to ``index``.
    symbolic: sequence of str
        Reports among ``isotropy``, ``reductive`` and ``centralizer`` that
        are computed symbolically whatever ``mode`` is.

    Returns
    -------
    record: DeltaRecord

    """
    em, ec = alg.as_element(e)
    triple = sl2_complete(alg, ec)
    grading = ad_grading(alg, triple.h)
    pair = glue_mod4(alg, triple.h, em, grading=grading)
    options = dict(kwargs, seed=seed)

    n = alg.ambient
    g0_e = centralizer_basis(grading.elements(0), em, n)
    g2_e = centralizer_basis(grading.elements(2), em, n)
    level0 = MatrixLieAlgebra(g0_e, label='g(0)_e', ambient=n)
    reps = [('isotropy', isotropy_rep(pair)),
            ('reductive', bracket_rep(level0, g2_e, label='g(2)_e')),
            ('centralizer', graded_centralizer(pair, em).rep)]
    reports = dict((name, index(rep, mode=SYMBOLIC if name in symbolic else mode,
                                **options))
                   for name, rep in reps)
    dim_s, dim_s_e, value, direct = _delta_terms(grading, pair, level0, g2_e, reports)

    # smallest action matrices first
    sampled = sorted((rep.dim * rep.algebra.dim, name, rep) for name, rep in reps
                     if not reports[name].exact)
    for _, name, rep in sampled:
        if value == direct and value >= 0:
            break
        logger.info("delta = %d against %d directly for %s from sampled ranks; "
                    "recomputing %s symbolically", value, direct, pair.label, name)
        reports[name] = index(rep, mode=SYMBOLIC, **options)
        dim_s, dim_s_e, value, direct = _delta_terms(grading, pair, level0, g2_e,
                                                     reports)

    if value != direct:
        raise SelfCheckError("delta = %d by the formula but %d directly for %s."
                             % (value, direct, pair.label))
    if value < 0:
        raise SelfCheckError("delta = %d is negative for %s." % (value, pair.label))

    logger.info("delta for %s: dim g(4) = %d, dim S = %d, dim S^e = %d, delta = %d",
                pair.label, grading.dim(4), dim_s, dim_s_e, value)
    return DeltaRecord(pair, grading, grading.dim(4), dim_s, dim_s_e, value,
                       direct, reports)
