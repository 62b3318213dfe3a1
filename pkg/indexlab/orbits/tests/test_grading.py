import pytest

from indexlab import PreconditionError
from indexlab.exactlinalg import MONTECARLO, RationalMatrix
from indexlab.liealg import IndexReport, index
from indexlab.orbits import grading
from indexlab.orbits import (
    ad_grading, delta, enumerate_orbit_reps, glue_mod4, height,
    height_four_element, height_four_partition)
from indexlab.pairs import gl, graded_centralizer, make_pair


@pytest.fixture
def principal_gl3():
    e = RationalMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    h = RationalMatrix.diag([2, 0, -2])
    return gl(3), h, e


def test_ad_grading(principal_gl3):
    alg, h, _ = principal_gl3
    grading = ad_grading(alg, h).certify()
    assert grading.dims == {-4: 1, -2: 2, 0: 3, 2: 2, 4: 1}
    assert grading.is_even


def test_non_integer_spectrum():
    with pytest.raises(PreconditionError):
        ad_grading(gl(2), RationalMatrix.diag(["1/2", 0]))


def test_height(principal_gl3):
    alg, _, e = principal_gl3
    assert height(alg, e) == 4
    assert height(alg, RationalMatrix.unit(3, 0, 2)) == 2


def test_glue_mod4(principal_gl3):
    alg, h, e = principal_gl3
    pair = glue_mod4(alg, h, e)
    assert pair.family == 'gl/glpq'
    assert pair.label == '(gl_3, gl_2 x gl_1)'
    assert pair.in_g1(e)


def test_glue_needs_height_four():
    alg = gl(3)
    with pytest.raises(PreconditionError):
        glue_mod4(alg, RationalMatrix.diag([1, 0, -1]), RationalMatrix.unit(3, 0, 1))


def test_height_four_partition():
    assert height_four_partition('gl', 2, 1) == (3, 3, 1)
    assert height_four_partition('sp', 2, 1) == (3, 3, 3, 3, 1, 1)

    with pytest.raises(PreconditionError):
        height_four_partition('so', 1, 2)


def test_delta_vanishes_for_the_principal_nilpotent(principal_gl3):
    alg, _, e = principal_gl3
    record = delta(alg, e, seed=0)
    assert record.delta == 0
    assert record.direct == 0


def test_delta_gl():
    alg, e = height_four_element('gl', 2, 1)
    record = delta(alg, e, seed=0)
    assert record.delta == 1
    assert record.dim_g4 == 4
    assert record.pair.label == '(gl_7, gl_4 x gl_3)'
    assert record.to_dict()['delta'] == 1


def overshooting(label):
    """ ``index`` with sampled results on ``label`` one too high. """
    def sampled(rep, mode=MONTECARLO, **kwargs):
        report = index(rep, mode=mode, **kwargs)
        if mode == MONTECARLO and rep.label == label:
            return IndexReport(report.module_dim, report.algebra_dim,
                               report.orbit_dim - 1, report.certificate)
        return report
    return sampled


def test_delta_recomputes_a_disagreeing_sample(monkeypatch):
    alg, e = height_four_element('gl', 2, 1)
    monkeypatch.setattr(grading, 'index', overshooting('g_e1'))
    record = delta(alg, e, seed=0)
    assert record.delta == 1
    assert record.direct == 1
    assert record.centralizer.exact
    assert not record.isotropy.exact
    assert not record.exact


def test_delta_recomputes_only_what_disagrees(monkeypatch):
    alg, e = height_four_element('gl', 2, 1)
    monkeypatch.setattr(grading, 'index', overshooting('g(2)_e'))
    record = delta(alg, e, seed=0)
    assert record.delta == 1
    assert record.reports['reductive'].exact
    assert not record.centralizer.exact


def test_delta_symbolic_reports():
    alg, e = height_four_element('gl', 2, 1)
    record = delta(alg, e, seed=0, symbolic=('centralizer',))
    assert record.centralizer.exact
    assert record.centralizer.index == 4
    assert record.isotropy.index == 3


@pytest.mark.parametrize("q,orbit_id,dims", [
    (4, "3,3,1:bab bab a", (9, 8)),
    (5, "3,3,1,1:bab bab a b", (14, 10)),
])
def test_rank_three_centralizer(q, orbit_id, dims):
    pair = make_pair('gl/glpq', p=3, q=q)
    rep = next(r for r in enumerate_orbit_reps(pair) if r.orbit_id == orbit_id)
    centralizer = graded_centralizer(pair, rep.e)
    assert (centralizer.dim0, centralizer.dim1) == dims
    n = 3 + q
    assert centralizer.dim0 == (n - 5) ** 2 + 5
