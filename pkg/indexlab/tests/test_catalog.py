import pytest

from indexlab import MalformedInputError
from indexlab.catalog import named_algebra, named_pair, named_rep, pair_params, rep_from_dict


def pytest_generate_tests(metafunc):
    if "bad_spec" in metafunc.fixturenames:
        metafunc.parametrize("bad_spec", [
            'gl2', 'bogus:gl2', 'standard:gl0', 'dual:sp3', 'irrep:a',
            'irrep:1x2x3', 'isotropy:gl5/so4', 'isotropy:so5/gl2'])


@pytest.mark.parametrize("name,dim", [
    ('gl3', 9), ('sl3', 8), ('so5', 10), ('sp4', 10), ('borel-gl4', 10),
])
def test_named_algebra(name, dim):
    assert named_algebra(name).dim == dim


@pytest.mark.parametrize("name,family,params", [
    ('gl5/so5', 'gl/so', {'n': 5}),
    ('gl6/sp6', 'gl/sp', {'n': 3}),
    ('sp6/gl3', 'sp/gln', {'n': 3}),
    ('so8/gl4', 'so/gln', {'n': 4}),
    ('gl7/gl3xgl4', 'gl/glpq', {'p': 3, 'q': 4}),
    ('so7/so3xso4', 'so/sopq', {'p': 3, 'q': 4}),
    ('sp14/sp6xsp8', 'sp/sppq', {'p': 3, 'q': 4}),
])
def test_pair_params(name, family, params):
    assert pair_params(name) == (family, params)


def test_named_pair():
    assert named_pair('gl4/gl2xgl2').label == '(gl_4, gl_2 x gl_2)'


@pytest.mark.parametrize("spec,dim", [
    ('coadjoint:gl2', 4),
    ('adjoint:sl3', 8),
    ('standard:so5', 5),
    ('dual:gl2', 2),
    ('isotropy:gl3/so3', 6),
    ('irrep:3', 4),
    ('irrep:3x1', 8),
])
def test_named_rep(spec, dim):
    assert named_rep(spec).dim == dim


def test_bad_specs(bad_spec):
    with pytest.raises(MalformedInputError):
        named_rep(bad_spec)


def test_rep_from_dict():
    rep = named_rep('standard:sl2')
    again = rep_from_dict(rep.to_dict())
    assert again.action == rep.action

    with pytest.raises(MalformedInputError):
        rep_from_dict({'dim': 2})
