# coding: utf-8
# naipm imports
from ..ban import Ban
from ..linalg import BanVector, lu_solve
from ..errors import SingularMatrixError

def _shift_positive(v):
    """Shifts v by max(-1.5 min v, 0), or by 1 if that leaves an entry <= 0."""
    length = v.length
    low = min(v)
    delta = max(low * -1.5, Ban.zero(length))
    shifted = v + BanVector.ones(v.size, length=length) * delta
    if min(shifted).sign() <= 0:
        shifted = v + BanVector.ones(v.size, length=length) * (delta + 1.0)
    return shifted

def starting_point(A, b, c, Q):
    """
    Computes a well centered strictly positive starting point from the
    least-norm primal solution of A x = b and the least-norm dual slack.
    Every entry is finally cut to its leading monosemium.

    Parameters
    ----------
    A : BanMatrix
        The m by n constraint matrix, full row rank.
    b : BanVector
        The right-hand sides.
    c : BanVector
        The linear costs.
    Q : BanMatrix
        The quadratic costs.

    Returns
    -------
    tuple of BanVector
        x, lam and s, with x > 0 and s > 0.

    Raises
    ------
    naipm.errors.SingularMatrixError
        If A A^T is singular, i.e. A is rank deficient.
    """
    AT = A.T
    AAT = A @ AT
    try:
        x = AT @ lu_solve(AAT, b)
        cost = c + Q @ x
        lam = lu_solve(AAT, A @ cost)
    except SingularMatrixError as err:
        raise SingularMatrixError(f'A is rank deficient: A A^T has no pivot at '
                                  f'elimination step {err.step}', step=err.step) from err
    s = cost - AT @ lam

    # Positivity
    x = _shift_positive(x)
    s = _shift_positive(s)

    # Centrality and balance
    xs = x.dot(s)
    delta_x = xs * 0.5 / s.sum()
    delta_s = xs * 0.5 / x.sum()
    x = x + BanVector.ones(x.size, length=x.length) * delta_x
    s = s + BanVector.ones(s.size, length=s.length) * delta_s

    return x.lead_mon(), lam.lead_mon(), s.lead_mon()
