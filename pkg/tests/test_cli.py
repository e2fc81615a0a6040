# coding: utf-8
# Standard Python libraries
from pathlib import Path
import importlib
import json

# https://pandas.pydata.org/
import pandas as pd

# https://docs.pytest.org/
import pytest

# naipm imports
from naipm import Settings
from naipm.cli import main, RunConfig, run_bench, exit_codes, numeric_failure_code
from naipm.errors import BanOverflowError, NewtonSystemError
from naipm.fixtures import load_expectations

class TestRunConfig():

    def test_defaults_from_settings(self, tmp_path):
        settings = Settings(tmp_path)
        settings.set('max_it', 7)
        cfg = RunConfig('exp1', eps=1e-6, settings=settings)
        assert cfg.max_it == 7
        assert cfg.eps == 1e-6
        assert cfg.ban_length == 5
        assert cfg.trace is None

    @pytest.mark.parametrize('kwargs', [{'trace_format': 'xml'}, {'embed': 'always'},
                                        {'eps': 2.0}, {'ban_length': 0}])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig('exp1', **kwargs)

    @pytest.mark.parametrize('mode', ['auto', 'on', 'off'])
    def test_embed_modes(self, mode):
        assert RunConfig('exp1', embed=mode).embed == mode

class TestSolveCommand():

    def test_exit_codes(self):
        assert exit_codes == {'Optimal': 0, 'OriginalInfeasible': 2,
                              'OriginalUnbounded': 3, 'IterationLimit': 4}
        assert numeric_failure_code == 5
        assert numeric_failure_code not in exit_codes.values()

    def test_exp1_csv(self, tmp_path, capsys):
        trace = Path(tmp_path, 'trace.csv')
        assert main(['solve', 'exp1', '--trace', str(trace), '--format', 'csv']) == 0
        out = capsys.readouterr().out
        assert 'status: Optimal' in out
        frame = pd.read_csv(trace)
        assert list(frame.columns[:4]) == ['iter', 'mu', 'x1', 'x2']
        assert frame['iter'].iloc[0] == 0

    def test_json_trace_is_deterministic(self, tmp_path):
        first = Path(tmp_path, 'first.json')
        second = Path(tmp_path, 'second.json')
        assert main(['solve', 'exp3', '--trace', str(first), '--format', 'json']) == 0
        assert main(['solve', 'exp3', '--trace', str(second), '--format', 'json']) == 0
        assert first.read_text() == second.read_text()
        content = json.loads(first.read_text())['solve-result']
        assert content['status'] == 'Optimal'
        assert isinstance(content['trace'], list)

    def test_table_trace_printed(self, capsys):
        assert main(['solve', 'exp1']) == 0
        out = capsys.readouterr().out
        assert 'f_level_1' in out
        assert 'objective levels:' in out

    def test_infeasible(self, capsys):
        assert main(['solve', 'exp2_infeasible']) == 2
        out = capsys.readouterr().out
        assert 'status: OriginalInfeasible' in out
        assert 'artificial =' in out

    def test_unbounded(self, capsys):
        assert main(['solve', 'exp2_unbounded']) == 3
        assert 'status: OriginalUnbounded' in capsys.readouterr().out

    def test_iteration_limit(self):
        with pytest.warns(RuntimeWarning):
            assert main(['solve', 'exp1', '--max-it', '1']) == 4

    @pytest.mark.parametrize('error', [BanOverflowError('Ban coefficients must be finite'),
                                       NewtonSystemError('Newton system singular', step=3,
                                                         iteration=7)])
    def test_numeric_breakdown(self, monkeypatch, capsys, error):
        def failing_solve(*args, **kwargs):
            raise error
        monkeypatch.setattr(importlib.import_module('naipm.cli.run_solve'), 'solve',
                            failing_solve)
        assert main(['solve', 'exp3']) == numeric_failure_code
        err = capsys.readouterr().err
        assert 'solver failure' in err
        assert type(error).__name__ in err

    def test_missing_file(self, capsys):
        assert main(['solve', 'no_such_problem.json']) == 1
        assert 'no problem file or fixture' in capsys.readouterr().err

    def test_empty_objectives(self, tmp_path, capsys):
        problem = Path(tmp_path, 'empty.json')
        problem.write_text(json.dumps({'problem': {
            'objectives': [],
            'constraints': [{'a': [1], 'rel': '<=', 'b': 1}]}}))
        assert main(['solve', str(problem)]) == 1
        assert 'objective' in capsys.readouterr().err

    def test_usage_error(self):
        assert main(['solve']) == 1
        assert main(['solve', 'exp1', '--format', 'xml']) == 1
        assert main([]) == 1

    def test_finite_problem_without_embedding(self, tmp_path, capsys):
        problem = Path(tmp_path, 'finite.json')
        problem.write_text(json.dumps({'problem': {
            'sense': 'maximize',
            'objectives': [{'c': [1, 2]}],
            'constraints': [{'a': [1, 1], 'rel': '<=', 'b': 4},
                            {'a': [1, 3], 'rel': '<=', 'b': 6}]}}))
        assert main(['solve', str(problem), '--embed', 'off', '--ban-len', '1']) == 0
        assert 'status: Optimal' in capsys.readouterr().out

class TestEmbedCommand():

    def test_exp1(self, capsys):
        assert main(['embed', 'exp1']) == 0
        content = json.loads(capsys.readouterr().out)
        assert 'standard-problem' in json.dumps(content)

    def test_missing_file(self):
        assert main(['embed', 'no_such_problem.json']) == 1

class TestBench():

    def test_exp3(self, capsys):
        assert main(['bench', '--only', 'exp3']) == 0
        assert 'exp3' in capsys.readouterr().out

    def test_report(self):
        report, passed = run_bench(only='exp1')
        assert passed
        assert list(report.columns) == ['fixture', 'check', 'expected', 'actual',
                                        'delta', 'passed']
        assert set(report['fixture']) == {'exp1'}
        assert 'staircase' in set(report['check'])

    def test_tampered_expectations(self):
        expectations = load_expectations()
        for entry in expectations['expectations'].aslist('fixture'):
            if entry['name'] == 'exp3':
                entry['check'][0]['values'] = [9.0, 9.0, 9.0]
        report, passed = run_bench(only='exp3', expectations=expectations)
        assert not passed
        failed = report[~report['passed']]
        assert list(failed['check']) == ['x@0']

    def test_unknown_name(self, capsys):
        with pytest.raises(KeyError):
            run_bench(only='exp9')
        assert main(['bench', '--only', 'exp9']) == 1

    def test_inversion(self):
        report, passed = run_bench(only='inversion')
        assert passed
        assert len(report) == 4
        assert set(report['fixture']) == {'inversion[L=3]', 'inversion[L=5]'}

    def test_numeric_breakdown_is_one_row(self, monkeypatch):
        def failing_solve(*args, **kwargs):
            raise BanOverflowError('Ban coefficients must be finite')
        monkeypatch.setattr(importlib.import_module('naipm.cli.run_bench'), 'solve',
                            failing_solve)
        report, passed = run_bench(only=['exp1', 'exp3', 'inversion'])
        assert not passed
        failed = report[~report['passed']]
        assert list(failed['fixture']) == ['exp1', 'exp3']
        assert set(failed['check']) == {'solve'}
        assert failed['actual'].str.contains('BanOverflowError').all()
        assert report[report['fixture'].str.startswith('inversion')]['passed'].all()
