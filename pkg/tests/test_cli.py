import json
import logging

import pytest
from click.testing import CliRunner

from invar import errors
from invar.cli import cli, emit_report, ingest_sequence, parse_bfile, run
from invar.config import RunConfig
from invar.poly_core import parse_poly
from invar.transforms import InvarianceReport, Sequence
from stdlib.instream import InStream


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def _quiet_logs():
    yield
    logger = logging.getLogger('invar')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


def _invoke(runner, *args, **kwargs):
    return runner.invoke(cli, list(args), **kwargs)


# Sequence ingestion

def test_inline_sequences():
    assert ingest_sequence('1,1,2,5,14') == Sequence([1, 1, 2, 5, 14])
    assert list(ingest_sequence(' 1 -2, 3/2 ')) == [1, -2, 1.5]


def test_inline_errors():
    with pytest.raises(errors.SequenceFormatError, match='empty input'):
        ingest_sequence('  ')
    with pytest.raises(errors.SequenceFormatError, match='malformed term'):
        ingest_sequence('1, two')


def _bfile(text):
    return parse_bfile(InStream(text=text))


def test_bfile():
    assert _bfile('0 1\n1 1\n2 2\n') == Sequence([1, 1, 2])
    assert _bfile('# A000108\n\n5 1\n6 1\n7 2') == Sequence([1, 1, 2])


def test_bfile_errors():
    with pytest.raises(errors.SequenceFormatError,
                       match='non-contiguous index at line 2'):
        _bfile('0 1\n2 2')
    with pytest.raises(errors.SequenceFormatError,
                       match='malformed entry .* at line 3'):
        _bfile('# comment\n0 1\n1\n')
    with pytest.raises(errors.SequenceFormatError, match='empty input'):
        _bfile('# nothing here\n')


def test_missing_bfile(tmp_path):
    with pytest.raises(errors.SequenceFormatError):
        ingest_sequence(str(tmp_path / 'absent.txt'), 'bfile')


# Reports

def test_invariant_text_report():
    report = InvarianceReport('symbolic', 'invariant', 4)
    assert emit_report('invariance', report) == \
        'INVARIANT (symbolic, n ≤ 4)'


def test_log_sum_json_report():
    outcome = run(RunConfig(command='log', name='sum', terms=3))
    obj = json.loads(emit_report('log', outcome.report, 'json'))
    assert obj['derivation']['images'] == {
        'x0': '0', 'x1': 'x0', 'x2': 'x1 - 1/2*x0',
        'x3': 'x2 - 1/2*x1 + 1/3*x0'}


def test_run_validates_first():
    with pytest.raises(errors.ConfigError, match='needs --name'):
        run(RunConfig(command='problem1'))
    with pytest.raises(errors.ConfigError):
        run(RunConfig(command='transform', name='psum'))
    with pytest.raises(errors.ConfigError):
        run(RunConfig(command='invariance', target='psum'))


# The command line

def test_transform_hankel(runner):
    result = _invoke(runner, 'transform', '--name', 'hankel', '--seq',
                     '1,1,2,5,14', '--terms', '3')
    assert result.exit_code == 0
    assert result.stdout.strip() == '1, 1, 1'


def test_transform_two_sequences(runner):
    result = _invoke(runner, 'transform', '--name', 'transvectant',
                     '--seq', '1,2', '--seq2', '3,5', '--terms', '2')
    assert result.exit_code == 0
    assert result.stdout.strip() == '3, -1'


def test_transform_json(runner):
    result = _invoke(runner, 'transform', '--name', 'binomial:mu=1/2',
                     '--seq', '1,1,1', '--terms', '3', '--format', 'json')
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {
        'transform': 'binomial:mu=1/2', 'start': 0,
        'terms': ['1', '3/2', '9/4']}


def test_transform_from_bfile(runner, tmp_path):
    path = tmp_path / 'b000108.txt'
    path.write_text('# Catalan numbers\n0 1\n1 1\n2 2\n3 5\n4 14\n')
    result = _invoke(runner, 'transform', '--name', 'hankel', '--file',
                     str(path), '--terms', '3')
    assert result.exit_code == 0
    assert result.stdout.strip() == '1, 1, 1'


def test_transform_from_stdin(runner):
    result = _invoke(runner, 'transform', '--name', 'psum', '--file', '-',
                     '--terms', '3', input='0 1\n1 2\n2 3\n')
    assert result.exit_code == 0
    assert result.stdout.strip() == '1, 3, 6'


def test_bad_bfile_exits_2(runner, tmp_path):
    path = tmp_path / 'gap.txt'
    path.write_text('0 1\n2 2\n')
    result = _invoke(runner, 'transform', '--name', 'psum', '--file',
                     str(path), '--terms', '1')
    assert result.exit_code == 2
    assert 'non-contiguous index at line 2' in result.stderr


def test_unknown_transform(runner):
    result = _invoke(runner, 'transform', '--name', 'nosuch', '--seq', '1')
    assert result.exit_code == 2
    assert "unknown transform name: 'nosuch'" in result.stderr


def test_insufficient_prefix(runner):
    result = _invoke(runner, 'transform', '--name', 'hankel', '--seq',
                     '1,1,2', '--terms', '3')
    assert result.exit_code == 2
    assert 'prefix of length 5, got 3' in result.stderr


def test_missing_name(runner):
    result = _invoke(runner, 'problem1', '--terms', '2')
    assert result.exit_code == 2
    assert 'problem1 needs --name' in result.stderr


def test_symbolic_invariance(runner):
    result = _invoke(runner, 'invariance', '--target', 'binomial:mu=1',
                     '--candidate', 'hankel', '--mode', 'symbolic',
                     '--terms', '4')
    assert result.exit_code == 0
    assert result.stdout.strip() == 'INVARIANT (symbolic, n ≤ 4)'


def test_symbolic_non_invariance(runner):
    result = _invoke(runner, 'invariance', '--target', 'binomial:mu=1',
                     '--candidate', 'psum', '--terms', '2')
    assert result.exit_code == 1
    lines = result.stdout.splitlines()
    assert lines[0] == 'NOT INVARIANT (symbolic, n ≤ 2)'
    assert lines[1] == '  n = 1: residual x0'


def test_numeric_invariance(runner):
    result = _invoke(runner, 'invariance', '--target', 'binomial',
                     '--candidate', 'hankel', '--mode', 'numeric',
                     '--terms', '3', '--samples', '8', '--seed', '4')
    assert result.exit_code == 0
    assert result.stdout.strip() == 'INVARIANT (numeric, n ≤ 3, 8 samples)'


def test_numeric_non_invariance_json(runner):
    result = _invoke(runner, 'invariance', '--target', 'binomial:mu=1',
                     '--candidate', 'psum', '--mode', 'numeric',
                     '--terms', '3', '--samples', '4', '--format', 'json')
    assert result.exit_code == 1
    obj = json.loads(result.stdout)
    assert obj['verdict'] == 'not-invariant'
    assert obj['samples'] == 4
    assert obj['witnesses']


def test_seed_from_environment_is_reproducible(runner):
    args = ['invariance', '--target', 'binomial:mu=2', '--candidate',
            'psum', '--mode', 'numeric', '--terms', '2', '--samples', '3',
            '--format', 'json']
    first = _invoke(runner, *args, env={'INVAR_SEED': '99'})
    second = _invoke(runner, *args, env={'INVAR_SEED': '99'})
    assert first.exit_code == second.exit_code == 1
    assert first.stdout == second.stdout


def test_log_command(runner):
    result = _invoke(runner, 'log', '--name', 'weitzenbock', '--terms', '2')
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ['x0 -> 0', 'x1 -> x0',
                                          'x2 -> 2*x1']


def test_kernel_of_symbolic_binomial(runner):
    result = _invoke(runner, 'kernel', '--name', 'binomial', '--terms', '3')
    assert result.exit_code == 2
    assert 'needs numeric coefficients' in result.stderr
    assert 'not in triangular form' not in result.stderr


def test_intertwine_psum(runner):
    result = _invoke(runner, 'intertwine', '--name', 'psum', '--terms', '3',
                     '--format', 'json')
    assert result.exit_code == 0
    obj = json.loads(result.stdout)
    assert obj['psi']['rows'] == [['1'], ['0', '1'], ['0', '-1', '2'],
                                  ['0', '1', '-6', '6']]


def test_kernel_command(runner):
    result = _invoke(runner, 'kernel', '--name', 'weitzenbock', '--terms',
                     '3')
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        'psi_x0 = x0', 'psi_z2 = x0*x2 - x1^2',
        'psi_z3 = x0^2*x3 - 3*x0*x1*x2 + 2*x1^3', 'localized at psi_x0']


def test_problem1_json(runner):
    result = _invoke(runner, 'problem1', '--transform', 'psum', '--terms',
                     '2', '--format', 'json')
    assert result.exit_code == 0
    obj = json.loads(result.stdout)
    assert obj['derivation']['images']['x2'] == 'x1 + 1/2*x0'
    assert obj['psi']['rows'][3] == ['0', '1', '-6', '6']
    hankel = obj['families'][2]
    assert parse_poly(hankel['terms'][1]) == \
        parse_poly('-a1^2 - a1*a0 + 2*a2*a0')
    for family in obj['families']:
        for text in family['terms']:
            parse_poly(text)


def test_problem2_finds_nothing(runner):
    result = _invoke(runner, 'problem2', '--name', 'identity', '--terms',
                     '2')
    assert result.exit_code == 0
    assert result.stdout.strip() == 'only the zero derivation found'


def test_problem2_json(runner):
    result = _invoke(runner, 'problem2', '--name', 'altconv', '--terms',
                     '1', '--ansatz-bound', '2', '--format', 'json')
    assert result.exit_code == 0
    obj = json.loads(result.stdout)
    assert obj['ansatz_bound'] == 2
    assert len(obj['basis']) == 1


# Configuration and logging

def test_config_file(runner, tmp_path):
    path = tmp_path / 'invar.yaml'
    path.write_text('samples: 3\nsymbolic_terms: 2\n')
    result = _invoke(runner, '--config', str(path), 'invariance',
                     '--target', 'binomial', '--candidate', 'hankel',
                     '--mode', 'numeric', '--terms', '2')
    assert result.exit_code == 0
    assert result.stdout.strip() == 'INVARIANT (numeric, n ≤ 2, 3 samples)'


def test_bad_config_file(runner, tmp_path):
    path = tmp_path / 'invar.yaml'
    path.write_text('sample: 3\n')
    result = _invoke(runner, '--config', str(path), 'log', '--name',
                     'psum')
    assert result.exit_code == 2
    assert 'unknown config keys: sample' in result.stderr


def test_nilpotency_cap_from_config(runner, tmp_path):
    path = tmp_path / 'invar.yaml'
    path.write_text('nilpotency_cap: 1\n')
    args = ('problem2', '--name', 'altconv', '--terms', '3',
            '--ansatz-bound', '6')
    result = _invoke(runner, '--config', str(path), *args)
    assert result.exit_code == 2
    assert 'nilpotency cap exceeded (cap=1)' in result.stderr
    assert result.stdout == ''
    assert _invoke(runner, *args).exit_code == 0


def test_json_logging(runner):
    result = _invoke(runner, '--log-level', 'INFO', '--log-json',
                     'transform', '--name', 'psum', '--seq', '1,2',
                     '--terms', '2')
    assert result.exit_code == 0
    records = [json.loads(line) for line in result.stderr.splitlines()]
    running = [r for r in records if r['message'] == 'running']
    assert running and running[0]['command'] == 'transform'
