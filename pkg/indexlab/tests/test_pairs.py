import pytest

from indexlab import PreconditionError, UnsupportedFamilyError
from indexlab.exactlinalg import RationalMatrix
from indexlab.pairs import (
    BilinearForm, SKEW, SYMMETRIC, block_form, borel_gl, canonical_family,
    classical_algebra, coadjoint_stabilizer_split, graded_centralizer,
    inner_pair, isotropy_rep, make_pair, outer_pair, rank_of_algebra,
    rank_table, skew_form, symmetric_form, symmetric_rank)

# family, params, dim g0, dim g1, rank
small_pairs = [
    ('gl/so', {'n': 3}, 3, 6, 3),
    ('gl/sp', {'n': 2}, 10, 6, 2),
    ('sp/gln', {'n': 2}, 4, 6, 2),
    ('so/gln', {'n': 2}, 4, 2, 1),
    ('gl/glpq', {'p': 2, 'q': 2}, 8, 8, 2),
    ('so/sopq', {'p': 2, 'q': 3}, 4, 6, 2),
    ('sp/sppq', {'p': 1, 'q': 1}, 6, 4, 1),
]


def pytest_generate_tests(metafunc):
    if "case" in metafunc.fixturenames:
        metafunc.parametrize("case", small_pairs, ids=[c[0] for c in small_pairs])


def test_dimensions(case):
    family, params, dim0, dim1, _ = case
    pair = make_pair(family, **params)
    assert pair.dim0 == dim0
    assert pair.dim1 == dim1
    assert pair.g.dim == dim0 + dim1


def test_grading_is_certified(case):
    family, params, _, _, _ = case
    pair = make_pair(family, check=False, **params)
    pair.certify()
    assert pair.g.certified


def test_rank_matches_isotropy_index(case):
    family, params, _, _, rank = case
    pair = make_pair(family, **params)
    assert rank_table(family, params) == rank
    assert symmetric_rank(pair, seed=0) == rank


def test_isotropy_is_a_representation(case):
    family, params, _, dim1, _ = case
    rep = isotropy_rep(make_pair(family, **params))
    assert rep.dim == dim1
    assert rep.certified


def test_family_aliases():
    assert canonical_family('so/gl') == 'so/gln'
    assert canonical_family('gl_n/so_n') == 'gl/so'

    with pytest.raises(UnsupportedFamilyError):
        canonical_family('e6/f4')


def test_labels():
    assert make_pair('gl/glpq', p=3, q=4).label == '(gl_7, gl_3 x gl_4)'
    assert make_pair('sp/sppq', p=1, q=2).label == '(sp_6, sp_2 x sp_4)'


def test_bad_parameters():
    with pytest.raises(PreconditionError):
        make_pair('gl/glpq', p=0, q=2)
    with pytest.raises(PreconditionError):
        make_pair('so/gln', n=0)


def test_forms():
    assert symmetric_form(3).sign == 1
    assert skew_form(4).sign == -1

    with pytest.raises(PreconditionError):
        skew_form(3)
    with pytest.raises(PreconditionError):
        BilinearForm(RationalMatrix([[1, 1], [1, 1]]), SYMMETRIC)
    with pytest.raises(PreconditionError):
        BilinearForm(RationalMatrix([[0, 1], [-1, 0]]), SYMMETRIC)


def test_block_form():
    form = block_form(symmetric_form(1), symmetric_form(2))
    assert form.kind == SYMMETRIC
    assert form.matrix.rows == 3

    with pytest.raises(PreconditionError):
        block_form(symmetric_form(2), skew_form(2))


def test_outer_and_inner_pairs():
    assert outer_pair(4, SKEW).label == '(gl_4, sp_4)'
    pair = inner_pair('so/sopq', {'p': 1, 'q': 2})
    assert (pair.dim0, pair.dim1) == (1, 2)

    with pytest.raises(PreconditionError):
        outer_pair(3, SKEW)
    with pytest.raises(UnsupportedFamilyError):
        inner_pair('gl/so', {'n': 3})


def test_classical_algebras():
    assert classical_algebra('so', 5).dim == 10
    assert classical_algebra('sp', 4).dim == 10
    assert classical_algebra('gl', 3).dim == 9
    assert borel_gl(4).dim == 10
    assert rank_of_algebra('so', 7) == 3
    assert rank_of_algebra('sp', 6) == 3

    with pytest.raises(UnsupportedFamilyError):
        classical_algebra('e', 8)


def test_form_is_preserved():
    alg = classical_algebra('sp', 4)
    J = alg.form.matrix
    for b in alg.basis:
        assert (b.T.dot(J) + J.dot(b)).is_zero()


def test_graded_centralizer():
    pair = make_pair('gl/glpq', p=1, q=1)
    e = RationalMatrix.unit(2, 0, 1)
    centralizer = graded_centralizer(pair, e)
    assert (centralizer.dim0, centralizer.dim1) == (1, 1)

    with pytest.raises(PreconditionError):
        graded_centralizer(pair, RationalMatrix.unit(2, 0, 0))


def test_coadjoint_stabilizer_parity(gl_glpq_2_2):
    # for covectors vanishing on g0 the split stabilizer keeps dim g0 - dim g1
    pair = gl_glpq_2_2
    xi = [0] * pair.dim0 + list(range(1, pair.dim1 + 1))
    dim0, dim1 = coadjoint_stabilizer_split(pair, xi)
    assert dim0 - dim1 == pair.dim0 - pair.dim1
