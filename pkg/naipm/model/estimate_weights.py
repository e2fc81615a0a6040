# coding: utf-8
# naipm imports
from ..ban import Ban
from ..linalg import BanVector

def _highest(values):
    """Highest leading power over the nonzero values, None if all are zero."""
    powers = [v.power for v in values if not v.is_zero()]
    return max(powers) if len(powers) > 0 else None

def _lowest(values):
    """Lowest represented power over the nonzero values, None if all are zero."""
    powers = [v.lowest_power() for v in values if not v.is_zero()]
    return min(powers) if len(powers) > 0 else None

def user_cost(problem):
    """
    Returns the linear and quadratic costs in the orientation the user wrote
    them, undoing the negation applied to maximization problems.

    Parameters
    ----------
    problem : NAQP
        The standard-form problem.

    Returns
    -------
    tuple of (BanVector, BanMatrix)
    """
    if problem.negated:
        return -problem.c, -problem.Q
    return problem.c, problem.Q

def estimate_weights(problem):
    """
    Estimates infinite penalty weights large enough for the embedding of
    problem to have the same optimum as problem whenever it has one.

    The weight on the bounding row scales as alpha times the largest cost
    magnitude over the smallest order of the matching constraint column;
    the artificial cost scales as alpha times the largest right-hand side
    over the smallest order of its row.  Both are pure monosemia with
    coefficient 1; an empty index set gives alpha.

    Parameters
    ----------
    problem : NAQP
        The standard-form problem to embed.

    Returns
    -------
    tuple of (Ban, Ban)
        The bounding-row weight and the artificial-variable cost.
    """
    length = problem.length
    ones = BanVector.ones(problem.n, length=length)
    shift = problem.b - problem.A @ ones

    # Artificial cost, from the rows with nonzero right-hand side
    candidates = []
    for j, bj in enumerate(problem.b):
        if bj.is_zero():
            continue
        low = _lowest(list(problem.A.row(j)) + [shift[j]])
        candidates.append(bj.power - low)
    artificial_power = 1 + min(candidates) if len(candidates) > 0 else 1

    # Bounding-row weight, from the columns with nonzero cost
    c_user, Q_user = user_cost(problem)
    bound_row = c_user - ones + Q_user.T @ ones
    scale = Ban.alpha(artificial_power - 1, length=length)
    candidates = []
    for i in range(problem.n):
        q_column = problem.Q.column(i)
        if problem.c[i].is_zero() and q_column.is_zero():
            continue
        high = _highest([problem.c[i]] + list(q_column * scale))
        low = _lowest(list(problem.A.column(i)) + [bound_row[i], Ban.one(length)])
        candidates.append(high - low)
    bound_power = 1 + min(candidates) if len(candidates) > 0 else 1

    return Ban.alpha(bound_power, length=length), Ban.alpha(artificial_power, length=length)
