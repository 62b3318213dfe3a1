from fractions import Fraction

import pytest

from indexlab import ClosureError, PreconditionError, SizeGuardError
from indexlab.exactlinalg import (
    MONTECARLO, SYMBOLIC, PolyMatrix, RankCertificate, RationalMatrix,
    SpanCoordinates, as_rational, format_rational, generic_rank, inverse,
    kernel_basis, kron, rank, rref, solve)


def linear(rows, cols, forms):
    names = ['x%d' % k for k in range(2)]
    return PolyMatrix.from_linear_forms(names, forms, rows, cols)


@pytest.fixture
def symmetric_2x2():
    ''' [[x0, x1], [x1, x0]], generic rank 2. '''
    return linear(2, 2, {(0, 0): {0: 1}, (0, 1): {1: 1},
                         (1, 0): {1: 1}, (1, 1): {0: 1}})


@pytest.fixture
def proportional_2x2():
    ''' [[x0, x1], [2 x0, 2 x1]], generic rank 1. '''
    return linear(2, 2, {(0, 0): {0: 1}, (0, 1): {1: 1},
                         (1, 0): {0: 2}, (1, 1): {1: 2}})


def pytest_generate_tests(metafunc):
    if "mode" in metafunc.fixturenames:
        metafunc.parametrize("mode", [SYMBOLIC, MONTECARLO])


def test_as_rational():
    assert as_rational(Fraction(4, 2)) == 2
    assert isinstance(as_rational(Fraction(4, 2)), int)
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(" -2 ") == -2

    with pytest.raises(TypeError):
        as_rational(0.5)


def test_format_rational():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(3) == "3"


def test_matrix_arithmetic():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert a.dot(RationalMatrix.identity(2)) == a
    assert (a - a).is_zero()
    assert a.trace() == 5
    assert a.commutator(a).is_zero()
    assert (a * "1/2")[0, 0] == Fraction(1, 2)

    with pytest.raises(TypeError):
        a * a

    with pytest.raises(ValueError):
        a.dot(RationalMatrix.zeros(3))


def test_matrix_is_immutable():
    a = RationalMatrix([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        a.array[0, 0] = 5


def test_rank():
    assert rank(RationalMatrix([[1, 2], [2, 4]])) == 1
    assert rank(RationalMatrix.identity(3)) == 3
    assert rank(RationalMatrix.zeros(3, 2)) == 0
    assert rank(RationalMatrix([["1/2", "1/3"], ["1/4", "1/6"]])) == 1


def test_rref():
    reduced, pivots = rref(RationalMatrix([[2, 4], [1, 3]]))
    assert reduced == RationalMatrix.identity(2)
    assert pivots == (0, 1)


def test_kernel_basis():
    m = RationalMatrix([[1, 1, 0], [0, 0, 1]])
    assert kernel_basis(m) == [(-1, 1, 0)]
    assert kernel_basis(RationalMatrix.identity(2)) == []


def test_solve():
    assert solve(RationalMatrix([[2, 0], [0, 4]]), [1, 1]) == (
        Fraction(1, 2), Fraction(1, 4))
    assert solve(RationalMatrix([[1, 1], [1, 1]]), [1, 2]) is None


def test_inverse():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert inverse(a) == RationalMatrix([[-2, 1], ["3/2", "-1/2"]])
    assert a.dot(inverse(a)) == RationalMatrix.identity(2)

    with pytest.raises(PreconditionError):
        inverse(RationalMatrix([[1, 2], [2, 4]]))


def test_kron():
    e = RationalMatrix([[0, 1], [0, 0]])
    k = kron(RationalMatrix.identity(2), e)
    assert k.shape == (4, 4)
    assert rank(k) == 2
    assert k[2, 3] == 1


def test_span_coordinates():
    span = SpanCoordinates([(1, 0, 1), (0, 1, 1)])
    assert span.coordinates((2, 3, 5)) == (2, 3)
    assert (1, 0, 0) not in span

    with pytest.raises(ClosureError):
        span.coordinates((1, 0, 0))

    with pytest.raises(PreconditionError):
        SpanCoordinates([(1, 2), (2, 4)])


def test_poly_evaluate(symmetric_2x2):
    assert symmetric_2x2.evaluate([1, 2]) == RationalMatrix([[1, 2], [2, 1]])
    assert symmetric_2x2.max_degree() == 1


def test_generic_rank(symmetric_2x2, proportional_2x2, mode):
    assert generic_rank(symmetric_2x2, mode=mode, seed=0).value == 2
    assert generic_rank(proportional_2x2, mode=mode, seed=0).value == 1


def test_certificates(symmetric_2x2):
    exact = generic_rank(symmetric_2x2, mode=SYMBOLIC)
    assert exact.exact
    assert exact.bound == 0

    sampled = generic_rank(symmetric_2x2, mode=MONTECARLO, seed=0, trials=3)
    assert not sampled.exact
    assert sampled.bound == Fraction(2, 2 * 10 ** 9 + 1) ** 3
    assert sampled.to_dict()['mode'] == MONTECARLO


def test_montecarlo_is_seeded(symmetric_2x2):
    a = generic_rank(symmetric_2x2, mode=MONTECARLO, seed=3)
    b = generic_rank(symmetric_2x2, mode=MONTECARLO, seed=3)
    assert a.to_dict() == b.to_dict()


def test_size_guard(symmetric_2x2):
    with pytest.raises(SizeGuardError):
        generic_rank(symmetric_2x2, mode=SYMBOLIC, max_dim=1, max_vars=1)

    forced = generic_rank(symmetric_2x2, mode=SYMBOLIC, max_dim=1, max_vars=1,
                          force=True)
    assert forced.value == 2


def test_peeling_avoids_the_size_guard():
    diagonal = linear(2, 2, {(0, 0): {0: 1}, (1, 1): {1: 1}})
    # every row has a single entry, so nothing is left to eliminate
    assert generic_rank(diagonal, mode=SYMBOLIC, max_dim=1, max_vars=1).value == 2


def test_bad_settings(symmetric_2x2):
    with pytest.raises(PreconditionError):
        generic_rank(symmetric_2x2, mode='fast')
    with pytest.raises(PreconditionError):
        generic_rank(symmetric_2x2, mode=MONTECARLO, box=10)
    with pytest.raises(PreconditionError):
        generic_rank(symmetric_2x2, mode=MONTECARLO, trials=0)

    with pytest.raises(ValueError):
        RankCertificate(1, SYMBOLIC, bound="1/2")
