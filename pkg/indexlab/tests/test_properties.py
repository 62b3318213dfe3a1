from hypothesis import given, strategies as st
from sympy import Matrix

from indexlab.exactlinalg import (
    MONTECARLO, SYMBOLIC, PolyMatrix, RationalMatrix, generic_rank,
    kernel_basis, rank, solve)
from indexlab.gnib import IndexOptions
from indexlab.liealg import (
    check_vinberg, coadjoint, coadjoint_parity, direct_sum, dual,
    index, m_copies, sl2_algebra, sl2_irrep, standard, tensor_product)
from indexlab.orbits import jordan_type, nilpotent_in_classical, partitions
from indexlab.pairs import (
    borel_gl, coadjoint_stabilizer_split, gl, isotropy_rep, make_pair, sl)

small = st.integers(min_value=-3, max_value=3)

# one small pair per family
graded_pairs = [
    ('gl/so', {'n': 3}),
    ('gl/sp', {'n': 2}),
    ('sp/gln', {'n': 2}),
    ('so/gln', {'n': 3}),
    ('gl/glpq', {'p': 2, 'q': 2}),
    ('so/sopq', {'p': 2, 'q': 3}),
    ('sp/sppq', {'p': 1, 'q': 1}),
]


def _sl2_sum():
    alg = sl2_algebra()
    return direct_sum(sl2_irrep(1, alg), sl2_irrep(2, alg))


representations = {
    'R_1': lambda: sl2_irrep(1),
    'R_2': lambda: sl2_irrep(2),
    'R_3': lambda: sl2_irrep(3),
    'R_4': lambda: sl2_irrep(4),
    'R_1+R_2': _sl2_sum,
    'R_3(x)R_1': lambda: tensor_product(sl2_irrep(3), sl2_irrep(1)),
    'gl3': lambda: standard(gl(3)),
    'sl3': lambda: standard(sl(3)),
    '2 gl2*': lambda: m_copies(dual(standard(gl(2))), 2),
    'coad b3': lambda: coadjoint(borel_gl(3)),
    'gl3/so3': lambda: isotropy_rep(make_pair('gl/so', n=3)),
    'so5/so2xso3': lambda: isotropy_rep(make_pair('so/sopq', p=2, q=3)),
}

_built = {}


def built(key, make):
    if key not in _built:
        _built[key] = make()
    return _built[key]


def representation(name):
    return built(name, representations[name])


def exact_index(name):
    return built(('index', name), lambda: index(representation(name), mode=SYMBOLIC))


def dual_index(name):
    return built(('dual', name),
                 lambda: index(dual(representation(name)), mode=SYMBOLIC))


def graded_pair(i):
    family, params = graded_pairs[i]
    return built(family, lambda: make_pair(family, **params))


def pytest_generate_tests(metafunc):
    if "pair_index" in metafunc.fixturenames:
        metafunc.parametrize("pair_index", range(len(graded_pairs)),
                             ids=[family for family, _ in graded_pairs])


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entries = draw(st.lists(st.lists(small, min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return RationalMatrix(entries)


@st.composite
def linear_forms(draw, nvars=3, max_size=8):
    ''' A matrix of linear forms with small coefficients, up to max_size square. '''
    rows = draw(st.integers(min_value=1, max_value=max_size))
    cols = draw(st.integers(min_value=1, max_value=max_size))
    forms = {}
    for i in range(rows):
        for j in range(cols):
            forms[(i, j)] = dict((k, draw(small)) for k in range(nvars))
    names = ['x%d' % k for k in range(nvars)]
    return PolyMatrix.from_linear_forms(names, forms, rows, cols)


def partitions_up_to(n):
    return st.integers(min_value=1, max_value=n).flatmap(
        lambda total: st.sampled_from(list(partitions(total))))


seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)
names = st.sampled_from(sorted(representations))


@given(matrices())
def test_rank_agrees_with_sympy(m):
    assert rank(m) == Matrix(m.tolist()).rank()
    assert rank(m) == rank(m.T)


@given(matrices())
def test_kernel_basis(m):
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert not any(m.apply(v))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve(m, values):
    b = values[:m.rows]
    x = solve(m, b)
    augmented = RationalMatrix([list(row) + [v] for row, v in zip(m.tolist(), b)])
    if x is None:
        assert rank(augmented) > rank(m)
    else:
        assert m.apply(x) == tuple(b)


@given(linear_forms())
def test_montecarlo_agrees_with_symbolic(m):
    exact = generic_rank(m, mode=SYMBOLIC)
    sampled = generic_rank(m, mode=MONTECARLO, seed=0)
    assert exact.exact
    assert sampled.value == exact.value


@given(partitions_up_to(7))
def test_gl_nilpotent_has_its_jordan_type(partition):
    e, _ = nilpotent_in_classical('gl', partition)
    assert jordan_type(e) == partition


@given(st.data())
def test_grading_of_coadjoint_stabilizers(pair_index, data):
    # covectors vanishing on g0 keep dim g_xi0 - dim g_xi1 = dim g0 - dim g1
    pair = graded_pair(pair_index)
    values = data.draw(st.lists(small, min_size=pair.dim1, max_size=pair.dim1))
    dim0, dim1 = coadjoint_stabilizer_split(pair, [0] * pair.dim0 + values)
    assert dim0 - dim1 == pair.dim0 - pair.dim1


@given(names, st.data())
def test_vinberg_inequality(name, data):
    rep = representation(name)
    v = data.draw(st.lists(small, min_size=rep.dim, max_size=rep.dim))
    check = check_vinberg(rep, v, lhs=dual_index(name), mode=SYMBOLIC)
    assert check.rhs.index >= check.lhs.index


@given(names, seeds)
def test_exact_index_lies_in_sampled_bounds(name, seed):
    rep = representation(name)
    sampled = index(rep, mode=MONTECARLO, seed=seed)
    exact = exact_index(name)
    assert exact.lower == exact.index == exact.upper
    assert sampled.lower <= exact.index <= sampled.upper


@given(names, seeds)
def test_auto_mode_narrows_sampled_bounds(name, seed):
    rep = representation(name)
    sampled = index(rep, mode=MONTECARLO, seed=seed)
    auto = IndexOptions(seed=seed).index(rep)
    assert auto.exact
    assert sampled.lower <= auto.lower <= auto.upper <= sampled.upper


@given(st.lists(small, min_size=3, max_size=3))
def test_standard_module_has_good_index_behaviour(values):
    rep = standard(gl(3))
    check = check_vinberg(rep, values, mode=SYMBOLIC)
    assert check.equal


@given(st.lists(small, min_size=6, max_size=6))
def test_coadjoint_parity(xi):
    assert coadjoint_parity(borel_gl(3), xi, mode=SYMBOLIC) % 2 == 0
