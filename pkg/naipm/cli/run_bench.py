# coding: utf-8
# Standard Python libraries
from math import inf

# https://numpy.org/
import numpy as np
from numpy.linalg import LinAlgError

# https://pandas.pydata.org/
import pandas as pd

# naipm imports
from ..ban import Ban, using_length
from ..linalg import BanMatrix, lu_solve
from ..model import prepare
from ..solver import SolverConfig, solve
from ..tools import aslist
from ..fixtures import load_fixture, load_expectations

__all__ = ['run_bench', 'bench_length']

# Ban length and iteration limit every fixture is solved with
bench_length = 5
bench_max_it = 50

def _row(fixture, check, expected, actual, delta, passed):
    return {'fixture': fixture, 'check': check, 'expected': expected,
            'actual': actual, 'delta': delta, 'passed': bool(passed)}

def _quantity(result, name):
    """The Ban values a check refers to."""
    problem = result.problem
    if name == 'x':
        return list(result.x)
    if name == 'objective':
        return [result.objective]
    if name == 'artificial':
        return [result.x_embedded[problem.artificial_index]]
    if name == 'bound-dual':
        return [result.lam[problem.bound_row]]
    if name == 'lam':
        return list(result.lam[:problem.source.m])
    raise ValueError(f'unknown bench quantity {name!r}')

def _staircase(powers, expected):
    """True if powers never increase and visit every expected power in order."""
    if any(after > before for before, after in zip(powers, powers[1:])):
        return False
    remaining = list(expected)
    for power in powers:
        if len(remaining) > 0 and power == remaining[0]:
            remaining.pop(0)
    return len(remaining) == 0

def _fixture_rows(entry, verbose=False):
    """Solves one fixture and compares it with its expectations."""
    name = entry['name']
    config = SolverConfig(ban_length=bench_length, max_it=bench_max_it)
    try:
        with using_length(bench_length):
            problem = load_fixture(name, length=bench_length)
            result = solve(prepare(problem), config, verbose=verbose)
    except (LinAlgError, ArithmeticError, ValueError) as err:
        return [_row(name, 'solve', 'success', f'{type(err).__name__}: {err}', None, False)]

    rows = []
    rows.append(_row(name, 'status', entry['status'], result.status, None,
                     result.status == entry['status']))

    limit = entry.get('max-iterations', bench_max_it)
    rows.append(_row(name, 'iterations', f'<= {limit}', result.iterations, None,
                     result.iterations <= limit))

    if 'staircase' in entry:
        expected = [int(p) for p in aslist(entry['staircase'])]
        powers = [record.mu.power for record in result.trace]
        rows.append(_row(name, 'staircase', expected, sorted(set(powers), reverse=True),
                         None, _staircase(powers, expected)))

    for check in entry.iteraslist('check'):
        power = int(check['power'])
        expected = np.array(aslist(check['values']), dtype=float)
        actual = np.array([v.coefficient(power) for v in _quantity(result, check['quantity'])])
        close = np.isclose(actual, expected, rtol=check.get('rtol', 0.0),
                           atol=check.get('atol', 0.0))
        rows.append(_row(name, f"{check['quantity']}@{power}", expected.tolist(),
                         actual.tolist(), float(np.max(np.abs(actual - expected))),
                         np.all(close)))
    return rows

def _widen(matrix, length):
    """Copies a BanMatrix into a longer Ban length without changing its values."""
    rows = [[Ban(e.coeffs, power=e.power, length=length) for e in row]
            for row in matrix.entries]
    return BanMatrix(rows, length=length)

def _inversion_rows(entry):
    """Inverts the bundled matrix and measures the residual of A A^-1 - I."""
    length = int(entry['length'])
    label = f"{entry['name']}[L={length}]"
    with using_length(length):
        matrix = load_fixture('inversion', length=length)
        inverse = lu_solve(matrix, BanMatrix.identity(matrix.rows, length))

    # The residual is evaluated with spare slots so truncation does not hide it
    wide = length + 4
    with using_length(wide):
        residual = (_widen(matrix, wide) @ _widen(inverse, wide)
                    - BanMatrix.identity(matrix.rows, wide))
    powers = [e.power for e in residual.entries.flat if not e.is_zero()]
    top = max(powers, default=-inf)
    limit = int(entry['max-residual-power'])

    rows = [_row(label, 'residual-power', f'<= {limit}', top, None, top <= limit)]

    expected = Ban.parse(entry['inverse-00'], length=length)
    actual = inverse[0, 0]
    deltas = [abs(actual.coefficient(p) - c) for p, c in expected.monosemia()]
    rows.append(_row(label, 'inverse[0,0]', expected.format(), actual.format(4),
                     max(deltas), max(deltas) <= entry.get('atol', 1e-6)))
    return rows

def run_bench(only=None, verbose=False, expectations=None):
    """
    Solves the bundled fixtures and checks the inversion accuracy example
    against stored expectations.

    Parameters
    ----------
    only : str or list of str, optional
        Names of the fixtures to run.  'inversion' selects the inversion
        check.  Default runs everything.
    verbose : bool, optional
        If True, solver progress is printed.
    expectations : DataModelDict, optional
        Expectations to compare with.  Default loads the bundled ones.

    Returns
    -------
    report : pandas.DataFrame
        One row per check with columns fixture, check, expected, actual,
        delta and passed.
    passed : bool
        True if every check passed.

    Raises
    ------
    KeyError
        If only names a fixture without expectations.
    """
    if expectations is None:
        expectations = load_expectations()
    content = expectations['expectations']
    fixtures = content.aslist('fixture')
    inversions = content.aslist('inversion')

    if only is not None:
        only = aslist(only)
        known = {entry['name'] for entry in fixtures + inversions}
        for name in only:
            if name not in known:
                raise KeyError(f'no bench expectations for {name!r}')
        fixtures = [entry for entry in fixtures if entry['name'] in only]
        inversions = [entry for entry in inversions if entry['name'] in only]

    rows = []
    for entry in fixtures:
        rows.extend(_fixture_rows(entry, verbose=verbose))
    for entry in inversions:
        rows.extend(_inversion_rows(entry))

    report = pd.DataFrame(rows, columns=['fixture', 'check', 'expected', 'actual',
                                         'delta', 'passed'])
    return report, bool(report['passed'].all())
