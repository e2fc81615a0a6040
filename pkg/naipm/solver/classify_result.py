# coding: utf-8
# Standard Python libraries
from math import sqrt

# naipm imports
from ..ban import Ban
from ..model import EmbeddedNAQP

__all__ = ['classify_result', 'OPTIMAL', 'ORIGINAL_INFEASIBLE',
           'ORIGINAL_UNBOUNDED', 'ITERATION_LIMIT', 'statuses']

OPTIMAL = 'Optimal'
ORIGINAL_INFEASIBLE = 'OriginalInfeasible'
ORIGINAL_UNBOUNDED = 'OriginalUnbounded'
ITERATION_LIMIT = 'IterationLimit'
statuses = (OPTIMAL, ORIGINAL_INFEASIBLE, ORIGINAL_UNBOUNDED, ITERATION_LIMIT)

def classify_result(state, problem, eps, converged=True):
    """
    Reads the status of the original problem off a solution of its
    embedding.

    Parameters
    ----------
    state : IterateState
        The final iterate, in the coordinates of problem.
    problem : NAQP or EmbeddedNAQP
        The solved problem.  Plain NAQPs carry no embedding to inspect and
        are reported Optimal once converged.
    eps : float
        The convergence tolerance.  Values are negligible below sqrt(eps).
    converged : bool, optional
        Whether the solver met its convergence test.  Default value is True.

    Returns
    -------
    str
        'IterationLimit' if not converged.  Otherwise 'OriginalInfeasible' if
        the artificial variable exceeds sqrt(eps) times the smallest order
        of the source right-hand sides (1 if they are all zero),
        'OriginalUnbounded' if the dual of the bounding row exceeds
        sqrt(eps) in absolute value or if an all-finite source problem has
        an infinite original variable, and 'Optimal' else.
    """
    if not converged:
        return ITERATION_LIMIT
    if not isinstance(problem, EmbeddedNAQP):
        return OPTIMAL

    length = problem.length
    threshold = sqrt(eps)
    source = problem.source

    # Infeasibility: the artificial column still carries weight
    if source.b.is_zero():
        scale = 0
    else:
        scale = source.b.smallest_order().power
    artificial = state.x[problem.artificial_index]
    if artificial.compare(Ban.monosemium(threshold, scale, length)) > 0:
        return ORIGINAL_INFEASIBLE

    # Unboundedness: the bounding row is active
    bound_dual = abs(state.lam[problem.bound_row])
    if bound_dual.compare(Ban(threshold, length=length)) > 0:
        return ORIGINAL_UNBOUNDED
    if source.is_standard():
        if any(value.power > 0 for value in problem.restore(state.x) if not value.is_zero()):
            return ORIGINAL_UNBOUNDED

    return OPTIMAL
