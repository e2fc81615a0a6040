# coding: utf-8
# Standard Python libraries
from math import inf
import warnings

# naipm imports
from ..ban import using_length
from ..linalg import BanVector, hadamard
from ..errors import SingularMatrixError, NewtonSystemError
from ..model import EmbeddedNAQP
from .SolverConfig import SolverConfig
from .IterateState import IterateState
from .IterationRecord import IterationRecord
from .SolveResult import SolveResult
from .starting_point import starting_point
from .measures import (residuals_and_mu, convergence_measures, measure_denominators,
                       convergence_levels, check_convergence)
from .newton_solve import newton_solve
from .steps import step_length, mehrotra_sigma
from .update_zero_entries import update_zero_entries
from .classify_result import classify_result

__all__ = ['solve', 'IterationLimitWarning']

# Residual monosemia below this fraction of eps are dropped from the rhs
residual_drop_factor = 0.1

class IterationLimitWarning(RuntimeWarning):
    """Issued when a solve stops at max_it without converging."""

def _display_iter(iteration, mu, rho, step, objective, header=False):
    """
    Prints one line of solver progress.

    Parameters
    ----------
    iteration : int
        The iteration index.
    mu : Ban
        The centrality.
    rho : tuple of Ban
        The convergence measures.
    step : tuple of Ban or None
        The primal and dual step lengths, None for the starting point.
    objective : Ban
        The objective of the original problem.
    header : bool
        True if a header is to be printed.
    """
    if header:
        print('Iter  ',
              'Path Parameter     ',
              'Primal Feasibility ',
              'Dual Feasibility   ',
              'Centrality         ',
              'Step             ',
              'Objective')

    if step is None:
        step = '-'
    else:
        step = step[0].format(3)
    fmt = '{0:<7}{1:<20}{2:<20}{3:<20}{4:<20}{5:<18}{6}'
    print(fmt.format(iteration, mu.format(3), rho[0].format(3), rho[1].format(3),
                     rho[2].format(3), step, objective.format(4)))

def _source_view(problem, x):
    """The original-variable point and the source objective at x."""
    if isinstance(problem, EmbeddedNAQP):
        source = problem.source
        x_source = x[:source.n]
        return source.restore(x_source), source.objective(x_source)
    return problem.restore(x), problem.objective(x)

def _evaluate(state, problem):
    """Fills residuals, centrality and convergence measures."""
    state = residuals_and_mu(state, problem.A, problem.b, problem.c, problem.Q)
    rho = convergence_measures(state, problem.b, problem.c, problem.Q)
    return state.copy(rho=rho)

def _direction(problem, state, rhs, iteration):
    """
    Solves the Newton system, tagging singularity with the iteration.  The
    matrix is assembled from the leading monosemia of x and s.
    """
    try:
        return newton_solve(problem.A, problem.Q, state.x.lead_mon(), state.s.lead_mon(), rhs)
    except SingularMatrixError as err:
        raise NewtonSystemError(f'Newton system singular at iteration {iteration}: {err}',
                                step=err.step, iteration=iteration) from err

def _truncate(direction, iterate, eps):
    """Drops monosemia negligible against the iterate, then keeps the leading one."""
    return direction.drop_negligible(iterate, eps).lead_mon()

def _window(v, reference, length):
    """Drops the monosemia of v more than length - 1 powers below reference."""
    if reference.is_zero():
        return v
    return v.drop_below(reference.magnitude().power - length + 1)

def _rhs_residuals(state, b, c, objective, eps, length):
    """
    The primal and dual residuals entering the predictor, without the
    monosemia that are negligible or lie outside the window of the data.
    """
    d1, d2, _ = measure_denominators(b, c, objective)
    r_b = _window(state.r_b, b, length).drop_negligible([d1], residual_drop_factor * eps)
    r_c = _window(state.r_c, c, length).drop_negligible([d2], residual_drop_factor * eps)
    return r_b, r_c

def _step(state, dx, ds, damping):
    """The common primal and dual step length."""
    return min(step_length(state.x, dx, damping), step_length(state.s, ds, damping))

def _recenter_ready(state, problem, levels, eps):
    """
    True when the current objective level is optimized: rho3 has a leading
    coefficient below eps at a level above the last one, and the primal and
    dual residuals are eps-small at every power at or above the level of mu.
    """
    rho1, rho2, rho3 = state.rho
    if rho3.is_zero() or abs(rho3.coeffs[0]) > eps:
        return False
    if rho3.power <= 1 - levels[2]:
        return False

    objective = problem.objective(state.x)
    denominators = measure_denominators(problem.b, problem.c, objective)
    mu_power = state.mu.power
    for rho, denominator in zip((rho1, rho2), denominators):
        top = mu_power - denominator.power
        for power, coef in rho.monosemia():
            if power >= top and abs(coef) > eps:
                return False
    return True

def _smallest(state):
    """The smallest entry of x and s."""
    return min(min(state.x), min(state.s))

def _badness(rho):
    """Sort key of an iterate: highest measure level, then its coefficients."""
    nonzero = [value for value in rho if not value.is_zero()]
    if len(nonzero) == 0:
        return (-inf, 0.0)
    top = max(value.power for value in nonzero)
    return (top, sum(abs(value.coefficient(top)) for value in nonzero))

def solve(problem, config=None, verbose=False):
    """
    Solves a non-Archimedean quadratic program in standard form with the
    predictor-corrector infeasible primal-dual interior point method.

    Every pass evaluates residuals and convergence measures, computes a
    predictor and a corrector direction from the Newton system, keeps the
    leading monosemium of each direction entry, takes a common damped step
    and re-sets the close-to-zero entries once a priority level is
    optimized so that the next level starts.

    Parameters
    ----------
    problem : NAQP or EmbeddedNAQP
        The problem.  An EmbeddedNAQP is classified against the problem it
        embeds, a plain NAQP is assumed feasible and bounded.
    config : SolverConfig, optional
        Tolerances and limits.  Default is SolverConfig().
    verbose : bool, optional
        If True, one progress line is printed per iteration.

    Returns
    -------
    SolveResult

    Raises
    ------
    ValueError
        If the problem was built with a Ban length other than the
        configured one.
    naipm.errors.SingularMatrixError
        If A is rank deficient.
    naipm.errors.NewtonSystemError
        If a Newton system is singular.
    naipm.errors.BanOverflowError
        If an iterate leaves the floating point range.
    """
    if config is None:
        config = SolverConfig()
    if problem.length != config.ban_length:
        raise ValueError(f'problem uses Ban length {problem.length}, '
                         f'config asks for {config.ban_length}')

    eps = config.eps
    damping = config.step_damping
    A, b, c, Q = problem.A, problem.b, problem.c, problem.Q
    n, m, length = problem.n, problem.m, problem.length
    levels = convergence_levels(b, c, Q, problem.priority_levels)

    with using_length(length):
        x, lam, s = starting_point(A, b, c, Q)
        state = _evaluate(IterateState(x, lam, s), problem)

        x_view, f_view = _source_view(problem, state.x)
        trace = [IterationRecord(0, state.mu, x_view, f_view, state.rho, None,
                                 _smallest(state))]
        if verbose:
            _display_iter(0, state.mu, state.rho, None, f_view, header=True)

        best = state
        converged = False
        iteration = 0
        while True:
            if check_convergence(*state.rho, *levels, eps):
                converged = True
                break
            if iteration >= config.max_it:
                break
            iteration += 1

            # Predictor
            objective = problem.objective(state.x)
            r_b, r_c = _rhs_residuals(state, b, c, objective, eps, length)
            dx_p, dlam_p, ds_p = _direction(problem, state, (-r_c, -r_b, -state.r_mu), iteration)
            dx_p = _truncate(dx_p, state.x, eps)
            dlam_p = _truncate(dlam_p, state.lam, eps)
            ds_p = _truncate(ds_p, state.s, eps)

            step = _step(state, dx_p, ds_p, damping)
            mu_new = (state.x + dx_p * step).dot(state.s + ds_p * step) / float(n)
            sigma = mehrotra_sigma(state.mu, mu_new)

            # Corrector
            target = BanVector.ones(n, length) * (sigma * state.mu) - hadamard(dx_p, ds_p)
            rhs = (BanVector.zeros(n, length), BanVector.zeros(m, length), target)
            dx_c, dlam_c, ds_c = _direction(problem, state, rhs, iteration)
            dx = _truncate(dx_p + dx_c, state.x, eps)
            dlam = _truncate(dlam_p + dlam_c, state.lam, eps)
            ds = _truncate(ds_p + ds_c, state.s, eps)

            # Update, keeping every vector within L powers of its largest entry
            step = _step(state, dx, ds, damping)
            x = state.x + dx * step
            lam = state.lam + dlam * step
            s = state.s + ds * step
            state = _evaluate(IterateState(_window(x, x, length), _window(lam, lam, length),
                                           _window(s, s, length)), problem)

            if _recenter_ready(state, problem, levels, eps):
                x, s = update_zero_entries(state.x, state.s, state.mu, eps,
                                           config.recenter_coefficient)
                state = _evaluate(IterateState(x, state.lam, s), problem)

            x_view, f_view = _source_view(problem, state.x)
            trace.append(IterationRecord(iteration, state.mu, x_view, f_view,
                                         state.rho, (step, step), _smallest(state)))
            if verbose:
                _display_iter(iteration, state.mu, state.rho, (step, step), f_view)

            if _badness(state.rho) < _badness(best.rho):
                best = state

        if not converged:
            warnings.warn(f'no convergence after {config.max_it} iterations, '
                          'returning the best iterate', IterationLimitWarning)
            state = best
        status = classify_result(state, problem, eps, converged)

    return SolveResult(status, problem, state, trace, converged, iteration)
