# coding: utf-8
# Standard Python libraries
import sys

# https://numpy.org/
from numpy.linalg import LinAlgError

# naipm imports
from ..ban import using_length
from ..model import prepare
from ..solver import (solve, OPTIMAL, ORIGINAL_INFEASIBLE, ORIGINAL_UNBOUNDED,
                      ITERATION_LIMIT)
from .load_problem import load_problem

# Process exit code of every status, 1 is kept for usage and input errors
exit_codes = {
    OPTIMAL: 0,
    ORIGINAL_INFEASIBLE: 2,
    ORIGINAL_UNBOUNDED: 3,
    ITERATION_LIMIT: 4,
}

# Exit code of a singular Newton system or an overflowing iterate
numeric_failure_code = 5

def format_trace(result, trace_format):
    """
    Renders the iteration trace of a result.

    Parameters
    ----------
    result : naipm.solver.SolveResult
        The solve outcome.
    trace_format : str
        'table', 'csv' or 'json'.

    Returns
    -------
    str
    """
    if trace_format == 'json':
        return result.asmodel().json(indent=4)
    frame = result.trace_frame()
    if trace_format == 'csv':
        return frame.to_csv(index=False)
    return result.trace_frame(precision=4).to_string(index=False)

def run_solve(cfg):
    """
    Loads a problem, converts it to standard form, embeds it following the
    embedding mode, solves it and reports the outcome.

    Parameters
    ----------
    cfg : RunConfig
        The run settings.

    Returns
    -------
    int
        The exit code: 0 Optimal, 2 OriginalInfeasible, 3 OriginalUnbounded,
        4 IterationLimit, 1 for input errors and 5 when the solver breaks
        down numerically.
    """
    with using_length(cfg.ban_length):
        try:
            problem = load_problem(cfg.input, length=cfg.ban_length)
            target = prepare(problem, cfg.embed)
        except (OSError, ValueError) as err:
            print(f'error: {err}', file=sys.stderr)
            return 1

        try:
            result = solve(target, cfg.solver, verbose=cfg.verbose)
        except (LinAlgError, ArithmeticError) as err:
            print(f'solver failure: {type(err).__name__}: {err}', file=sys.stderr)
            return numeric_failure_code

    trace = format_trace(result, cfg.trace_format)
    if cfg.trace is None:
        print(trace)
    else:
        with open(cfg.trace, 'w') as f:
            f.write(trace)

    print(f'status: {result.status}')
    print(f'iterations: {result.iterations}')
    print(f'x = {result.x}')
    levels = ', '.join(f'{value:.6g}' for value in result.objective_levels)
    print(f'objective levels: {levels}')
    if result.status != OPTIMAL:
        for name, value in result.diagnostics().items():
            print(f'{name} = {value}')

    return exit_codes[result.status]
