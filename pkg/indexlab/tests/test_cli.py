import json

import pytest
from six import StringIO

from indexlab.catalog import named_rep
from indexlab.cli import (
    EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_MISMATCH, EXIT_PASS, main)


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_index():
    code, text = run('index', 'coadjoint:borel-gl4', '--mode', 'symbolic')
    assert code == EXIT_PASS
    data = json.loads(text)
    assert data['index'] == 2
    assert data['exact']
    assert data['rep'] == 'coadjoint:borel-gl4'


def test_index_from_file(tmpdir):
    path = tmpdir.join('rep.json')
    path.write(json.dumps(named_rep('standard:gl2').to_dict()))
    code, text = run('index', '--file', str(path), '--format', 'csv')
    assert code == EXIT_PASS
    assert text.startswith('rep,index,lower,upper,exact,ms')


def test_index_needs_a_representation():
    assert run('index')[0] == EXIT_INPUT
    assert run('index', 'bogus:gl2')[0] == EXIT_INPUT


def test_size_guard_is_inconclusive(tmpdir):
    path = tmpdir.join('tight.cfg')
    path.write("[run]\nmax_symbolic_dim = 1\nmax_symbolic_vars = 1\n")
    code, _ = run('index', 'irrep:4', '--mode', 'symbolic', '--config', str(path))
    assert code == EXIT_INCONCLUSIVE


def test_pair_check():
    code, text = run('pair-check', 'gl/glpq', '--p', '2', '--q', '2',
                     '--expect', 'GNIB')
    assert code == EXIT_PASS
    assert json.loads(text)['overall'] == 'GNIB'

    code, _ = run('pair-check', 'gl/glpq', '--p', '2', '--q', '2',
                  '--expect', 'no-GNIB')
    assert code == EXIT_MISMATCH


def test_pair_check_table():
    code, text = run('pair-check', 'gl/so', '--n', '2', '--format', 'md',
                     '--witness')
    assert code == EXIT_PASS
    assert '| orbit' in text


@pytest.mark.parametrize("argv", [
    ['pair-check', 'gl/glpq', '--p', '2'],
    ['pair-check', 'e6/f4', '--n', '2'],
    ['pair-check', 'gl/glpq', '--p', '0', '--q', '2'],
    ['reproduce', 'no-such-example'],
    ['delta', 'gl', '--partition', '3,x'],
    ['index', 'standard:gl2', '--trials', '0'],
])
def test_input_errors(argv):
    assert run(*argv)[0] == EXIT_INPUT


def test_reproduce():
    code, text = run('reproduce', 'borel-gl4', '--seed', '1')
    assert code == EXIT_PASS
    (result,) = json.loads(text)
    assert result['status'] == 'pass'
    assert result['example'] == 'borel-gl4'


def test_delta():
    code, text = run('delta', 'gl', '--partition', '3,3,1')
    assert code == EXIT_PASS
    data = json.loads(text)
    assert data['delta'] == 1
    assert data['verdict'] == 'no-GNIB'
    assert (data['rank'], data['index']) == (3, 4)
    assert data['certified']


def test_bad_mode_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        main(['index', 'standard:gl2', '--mode', 'fast'], out=StringIO())
