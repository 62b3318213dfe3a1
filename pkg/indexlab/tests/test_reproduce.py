import json

import pytest

from indexlab import SelfCheckError, UnknownExampleError
from indexlab.gnib import PairReport, gnib_check
from indexlab.pairs import make_pair
from indexlab.reproduce import (
    MISMATCH, PASS, _reproducers, example_ids, load_expected, matches,
    nonzero_orbits, reproduce, summary_table)

slow_ids = ['delta-sp', 'remark-sp66', 'rk3-sp']


def pytest_generate_tests(metafunc):
    if "example_id" in metafunc.fixturenames:
        expected = load_expected()
        metafunc.parametrize("example_id", [
            pytest.param(k, marks=pytest.mark.slow) if expected[k]['slow'] else k
            for k in sorted(expected)])


def test_every_example_has_a_reproducer():
    assert set(load_expected()) == set(_reproducers)


def test_example_ids():
    fast = example_ids(include_slow=False)
    assert not set(slow_ids) & set(fast)
    assert set(example_ids()) - set(fast) == set(slow_ids)
    assert fast == sorted(fast)


def test_entries_are_complete():
    for key, entry in load_expected().items():
        assert set(entry) == {'claim', 'slow', 'params', 'expected'}, key
        assert entry['claim']


def test_unknown_example():
    with pytest.raises(UnknownExampleError):
        reproduce('no-such-example')


def test_version_is_checked(tmpdir):
    path = tmpdir.join('expected.json')
    path.write(json.dumps({'version': 99, 'examples': {}}))
    with pytest.raises(SelfCheckError):
        load_expected(str(path))


def test_matches():
    assert matches({'a': 1, 'b': 2}, {'a': 1})
    assert matches({'a': {'x': 1, 'y': 2}}, {'a': {'x': 1}})
    assert not matches({'a': {'x': 1}}, {'a': {'x': 2}})
    assert not matches({'b': 1}, {'a': 1})
    assert not matches(3, {'a': 1})


def test_mismatch_is_reported():
    expected = load_expected()
    entry = dict(expected['borel-gl4'])
    entry['expected'] = {'index': 3}
    result = reproduce('borel-gl4', expected={'borel-gl4': entry}, seed=0)
    assert result.status == MISMATCH
    assert result.observed['index'] == 2
    assert not result.passed


@pytest.mark.example
def test_examples(example_id):
    result = reproduce(example_id, seed=0, samples=20)
    assert result.status == PASS, result.to_dict()


def test_max_n_trims_the_table():
    result = reproduce('sl-n-table', seed=0, max_n=3)
    assert result.passed
    assert set(result.expected) == {'(gl_2, so_2)', '(gl_2, sp_2)',
                                    '(gl_2, gl_1 x gl_1)', '(gl_3, so_3)',
                                    '(gl_3, gl_1 x gl_2)'}


def test_output_is_reproducible():
    first = reproduce('sl2xsl2', seed=1)
    second = reproduce('sl2xsl2', seed=1)
    assert first.to_dict() == second.to_dict()
    assert 'ms' not in first.to_dict()
    assert 'sl2xsl2' in summary_table([first], 'md')


def test_nonzero_orbits_are_counted_once():
    pair = make_pair('gl/glpq', p=2, q=1)
    report = gnib_check(pair, seed=0)
    doubled = PairReport(pair, report.rank, report.verdicts * 2)
    assert len(nonzero_orbits(doubled)) == len(nonzero_orbits(report)) == 3
