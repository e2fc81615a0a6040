# coding: utf-8
# naipm imports
from ..ban import Ban
from ..linalg import BanVector, euclidean_norm, hadamard

__all__ = ['order_or_one', 'residuals_and_mu', 'convergence_measures',
           'measure_denominators', 'convergence_levels', 'check_convergence']

def order_or_one(values, length):
    """
    Order of magnitude of a collection of Ban values, with the convention
    that the order of magnitude of zero is 1.

    Parameters
    ----------
    values : Ban or iterable of Ban
        The values.
    length : int
        The Ban length of the result.

    Returns
    -------
    Ban
    """
    if isinstance(values, Ban):
        values = [values]
    powers = [v.power for v in values if not v.is_zero()]
    if len(powers) == 0:
        return Ban.one(length)
    return Ban.alpha(max(powers), length)

def residuals_and_mu(state, A, b, c, Q):
    """
    Fills the residuals and the centrality of an iterate.

    Parameters
    ----------
    state : IterateState
        The iterate.
    A, Q : BanMatrix
        The constraint matrix and the quadratic costs.
    b, c : BanVector
        The right-hand sides and the linear costs.

    Returns
    -------
    IterateState
        A copy with r_b = A x - b, r_c = A^T lam + s - Q x - c,
        r_mu = x * s and mu = sum(r_mu) / n.
    """
    x, lam, s = state.x, state.lam, state.s
    r_b = A @ x - b
    r_c = A.T @ lam + s - Q @ x - c
    r_mu = hadamard(x, s)
    mu = r_mu.sum() / float(x.size)
    return state.copy(r_b=r_b, r_c=r_c, r_mu=r_mu, mu=mu)

def measure_denominators(b, c, objective):
    """
    The denominators 1 O(v) + |v| of the three convergence measures.

    Parameters
    ----------
    b, c : BanVector
        The right-hand sides and the linear costs.
    objective : Ban
        The objective value at the current iterate.

    Returns
    -------
    tuple of Ban
    """
    length = b.length
    return (order_or_one(b, length) + euclidean_norm(b),
            order_or_one(c, length) + euclidean_norm(c),
            order_or_one(objective, length) + abs(objective))

def convergence_measures(state, b, c, Q):
    """
    Scale-aware primal feasibility, dual feasibility and centrality of an
    iterate whose residuals are filled:

        rho1 = |r_b| / (1 O(b) + |b|)
        rho2 = |r_c| / (1 O(c) + |c|)
        rho3 = mu / (1 O(f) + |f|),  f = 1/2 x^T Q x + c^T x

    with the order of magnitude of zero taken as 1.

    Parameters
    ----------
    state : IterateState
        The iterate, after residuals_and_mu.
    b, c : BanVector
        The right-hand sides and the linear costs.
    Q : BanMatrix
        The quadratic costs.

    Returns
    -------
    tuple of Ban
        (rho1, rho2, rho3)
    """
    x = state.x
    objective = c.dot(x) + (Q @ x).dot(x) * 0.5
    d1, d2, d3 = measure_denominators(b, c, objective)
    return (euclidean_norm(state.r_b) / d1,
            euclidean_norm(state.r_c) / d2,
            state.mu / d3)

def _span(values, length):
    """Number of powers from the highest leading power to the lowest stored one."""
    values = [v for v in values if not v.is_zero()]
    if len(values) == 0:
        return 1
    high = max(v.power for v in values)
    low = min(v.lowest_power() for v in values)
    return min(max(high - low + 1, 1), length)

def convergence_levels(b, c, Q, levels):
    """
    Number of leading monosemia of each convergence measure that must be
    below the tolerance.

    The primal count spans the powers present in b, the dual count the
    powers present in c and Q, and the centrality count is the number of
    priority levels of the objective.  All counts lie between 1 and the
    Ban length.

    Parameters
    ----------
    b, c : BanVector
        The right-hand sides and the linear costs.
    Q : BanMatrix
        The quadratic costs.
    levels : int
        The number of priority levels, see NAQP.priority_levels.

    Returns
    -------
    tuple of int
        (l1, l2, l3)
    """
    length = b.length
    costs = list(c) + list(Q.entries.flat)
    l1 = _span(b, length)
    l2 = _span(costs, length)
    l3 = min(max(int(levels), 1), length)
    return l1, l2, l3

def check_convergence(rho1, rho2, rho3, l1, l2, l3, eps):
    """
    Tests whether each convergence measure is eps-small on its meaningful
    monosemia: rho = sum_i rho^i alpha^(1-i) passes if its leading power is
    at most 0 and |rho^i| <= eps for i = 1 ... l.

    Parameters
    ----------
    rho1, rho2, rho3 : Ban
        The convergence measures.
    l1, l2, l3 : int
        The number of monosemia checked for each measure.
    eps : float
        The tolerance.

    Returns
    -------
    bool
    """
    for rho, levels in ((rho1, l1), (rho2, l2), (rho3, l3)):
        if rho.is_zero():
            continue
        if rho.power > 0:
            return False
        for i in range(levels):
            if abs(rho.coefficient(-i)) > eps:
                return False
    return True
