import pytest
from hypothesis import settings

from indexlab.gnib import IndexOptions
from indexlab.pairs import make_pair

settings.register_profile('indexlab', derandomize=True, deadline=None,
                          max_examples=100)
settings.load_profile('indexlab')


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help="Also run tests marked slow.")


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip = pytest.mark.skip(reason="Needs --runslow.")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def options():
    '''Auto mode with a fixed seed.'''
    return IndexOptions(seed=0)


@pytest.fixture
def symbolic():
    return IndexOptions(mode='symbolic', seed=0)


@pytest.fixture(scope='module')
def gl_so_3():
    return make_pair('gl/so', n=3)


@pytest.fixture(scope='module')
def gl_glpq_2_2():
    return make_pair('gl/glpq', p=2, q=2)
