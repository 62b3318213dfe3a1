import pytest

from indexlab import OrbitValidationError, PreconditionError
from indexlab.exactlinalg import RationalMatrix
from indexlab.orbits import (
    ABDiagram, OrbitRep, Partition, ab_diagrams, admissible,
    enumerate_orbit_reps, jordan_type, jordan_types, nilpotent_in_classical,
    orbit_families, partitions, validate_rep)
from indexlab.pairs import make_pair

families = [
    ('gl/so', {'n': 4}),
    ('gl/sp', {'n': 2}),
    ('sp/gln', {'n': 3}),
    ('so/gln', {'n': 3}),
    ('gl/glpq', {'p': 2, 'q': 3}),
    ('so/sopq', {'p': 2, 'q': 3}),
    ('sp/sppq', {'p': 2, 'q': 1}),
]


def pytest_generate_tests(metafunc):
    if "family" in metafunc.fixturenames:
        metafunc.parametrize("family,params", families, ids=[f[0] for f in families])
    if "kind" in metafunc.fixturenames:
        metafunc.parametrize("kind", ['gl', 'so', 'sp'])


def test_orbit_families():
    assert orbit_families() == sorted(f for f, _ in families)


def test_partition_parse():
    assert Partition.parse("3^2,1") == (3, 3, 1)
    assert Partition.parse("1, 3, 3") == (3, 3, 1)
    assert str(Partition((2, 1, 1))) == "2,1,1"
    assert Partition((3, 1)).multiplicities() == [(3, 1), (1, 1)]

    with pytest.raises(PreconditionError):
        Partition.parse("3,x")
    with pytest.raises(PreconditionError):
        Partition((1, 2))
    with pytest.raises(PreconditionError):
        Partition((2, 1), total=4)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions(0)) == [()]


def test_ab_diagrams():
    assert sorted(str(d) for d in ab_diagrams(1, 1)) == ['a b', 'ab', 'ba']
    assert all(d.counts() == (2, 1) for d in ab_diagrams(2, 1))

    with pytest.raises(PreconditionError):
        ABDiagram(['aa'])


def test_representatives_validate(family, params):
    pair = make_pair(family, **params)
    reps = enumerate_orbit_reps(pair, validate=True)
    assert reps[-1].partition == Partition([1] * pair.ambient)
    assert reps[-1].e.is_zero()
    assert len(set(r.orbit_id for r in reps)) == len(reps)


def test_orbit_counts():
    assert len(enumerate_orbit_reps(make_pair('gl/so', n=3))) == 3
    assert len(enumerate_orbit_reps(make_pair('gl/sp', n=2))) == 2
    # rank one: zero orbit plus the nonzero ones
    assert len(enumerate_orbit_reps(make_pair('gl/glpq', p=2, q=1))) == 4
    assert len(enumerate_orbit_reps(make_pair('sp/sppq', p=2, q=1))) == 3
    assert len(enumerate_orbit_reps(make_pair('so/sopq', p=2, q=1))) == 2


def test_rank_three_orbits_are_enumerated():
    ids = [r.orbit_id for r in enumerate_orbit_reps(make_pair('gl/glpq', p=3, q=4))]
    assert "3,3,1:bab bab a" in ids
    ids = [r.orbit_id for r in enumerate_orbit_reps(make_pair('so/sopq', p=3, q=4))]
    assert "3,3,1:-+- -+- +" in ids


def test_jordan_type():
    e = RationalMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert jordan_type(e) == (3,)
    assert jordan_type(RationalMatrix.zeros(2)) == (1, 1)
    assert jordan_type(RationalMatrix.identity(2)) is None


def test_validation_reports_violations(gl_so_3):
    rep = OrbitRep('gl/so', (3,), '', RationalMatrix.identity(3), form=gl_so_3.form)
    with pytest.raises(OrbitValidationError) as info:
        validate_rep(rep, gl_so_3)
    assert info.value.violations == ['jordan-type', 'nilpotent']


def test_admissible():
    assert not admissible('so', (2, 1))
    assert admissible('so', (2, 2))
    assert not admissible('sp', (3, 1))
    assert admissible('sp', (2,))
    assert not admissible('sp', (1,))
    assert jordan_types('sp', 4) == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert jordan_types('so', 4) == [(3, 1), (2, 2), (1, 1, 1, 1)]


def test_nilpotent_in_classical(kind):
    partition = Partition((3, 3, 1, 1)) if kind != 'so' else Partition((3, 3, 1))
    e, form = nilpotent_in_classical(kind, partition)
    assert jordan_type(e) == partition
    if form is not None:
        J = form.matrix
        assert (e.T.dot(J) + J.dot(e)).is_zero()


def test_inadmissible_nilpotent():
    with pytest.raises(PreconditionError):
        nilpotent_in_classical('so', (2, 1))


def test_orbit_rep_round_trip(gl_so_3):
    rep = enumerate_orbit_reps(gl_so_3)[0]
    assert rep.partition == (3,)
    again = OrbitRep.from_dict(rep.to_dict())
    assert again.orbit_id == rep.orbit_id
    assert again.e == rep.e
    validate_rep(again, gl_so_3)
