# coding: utf-8
# https://numpy.org/
import numpy as np

# naipm imports
from ..ban import Ban
from ..linalg import BanVector, BanMatrix
from .NAQP import NAQP, Column
from .EmbeddedNAQP import EmbeddedNAQP
from .estimate_weights import estimate_weights, user_cost

__all__ = ['embed', 'unembed']

def embed(problem, bound_weight=None, artificial_cost=None):
    """
    Enlarges a standard-form problem so that it is strictly feasible and
    bounded:

        A~ = [[A,                b - A 1, 0],
              [c^T - 1^T + 1^T Q, 0,      -1]]
        b~ = [b; -bound_weight]
        c~ = [c; artificial_cost; 0]

    with Q padded by zeros.  The bounding row uses the cost in the
    orientation the user wrote it.  x = 1 with the artificial at 1 and the
    slack chosen to satisfy the bounding row is strictly feasible.

    Parameters
    ----------
    problem : NAQP
        The problem to embed.
    bound_weight : Ban, optional
        The bounding row weight.  Estimated if not given.
    artificial_cost : Ban, optional
        The artificial column cost.  Estimated if not given.

    Returns
    -------
    EmbeddedNAQP
    """
    if bound_weight is None or artificial_cost is None:
        estimates = estimate_weights(problem)
        if bound_weight is None:
            bound_weight = estimates[0]
        if artificial_cost is None:
            artificial_cost = estimates[1]

    length = problem.length
    zero = Ban.zero(length)
    n = problem.n
    m = problem.m
    bound_weight = Ban.coerce(bound_weight, length)
    artificial_cost = Ban.coerce(artificial_cost, length)

    ones = BanVector.ones(n, length=length)
    shift = problem.b - problem.A @ ones
    c_user, Q_user = user_cost(problem)
    bound_row = c_user - ones + Q_user.T @ ones

    A = np.full((m + 1, n + 2), zero, dtype=object)
    A[:m, :n] = problem.A.entries
    A[:m, n] = shift.entries
    A[m, :n] = bound_row.entries
    A[m, n + 1] = Ban(-1.0, length=length)

    Q = np.full((n + 2, n + 2), zero, dtype=object)
    Q[:n, :n] = problem.Q.entries

    b = BanVector.concat(problem.b, BanVector([-bound_weight], length=length))
    c = BanVector.concat(problem.c, BanVector([artificial_cost, zero], length=length))

    columns = list(problem.columns) + [Column('artificial', m, 1), Column('bound', m, 1)]
    return EmbeddedNAQP(BanMatrix(Q, length=length), c,
                        BanMatrix(A, length=length), b,
                        source=problem, bound_weight=bound_weight,
                        artificial_cost=artificial_cost, columns=columns,
                        n_original=problem.n_original, negated=problem.negated,
                        levels=problem.levels, name=problem.name)

def unembed(problem):
    """
    Strips the bounding row and the artificial and slack columns added by
    embed.

    Parameters
    ----------
    problem : EmbeddedNAQP
        An embedded problem.

    Returns
    -------
    NAQP
        Equal in data and column map to the problem that was embedded.
    """
    n = problem.n - 2
    m = problem.m - 1
    return NAQP(problem.Q[:n, :n], problem.c[:n], problem.A[:m, :n], problem.b[:m],
                columns=problem.columns[:n], n_original=problem.n_original,
                negated=problem.negated, levels=problem.levels, name=problem.name)
