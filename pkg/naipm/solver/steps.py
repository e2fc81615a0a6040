# coding: utf-8
# naipm imports
from ..ban import Ban

__all__ = ['step_length', 'mehrotra_sigma', 'sigma_floor']

# Smallest centering parameter, keeps the corrector target away from zero
sigma_floor = 1e-8

def step_length(v, dv, damping=0.99):
    """
    Damped ratio test: the largest step keeping v + nu dv >= 0, cut to its
    leading monosemium, capped at 1 and multiplied by damping.

    Parameters
    ----------
    v : BanVector
        A strictly positive vector.
    dv : BanVector
        The direction.
    damping : float, optional
        The damping factor.  Default value is 0.99.

    Returns
    -------
    Ban
        damping * min(lead_mon(nu*), 1), or damping if no entry of dv is
        negative.
    """
    length = v.length
    ratio = None
    for value, delta in zip(v, dv):
        if delta.sign() < 0:
            candidate = -value / delta
            if ratio is None or candidate < ratio:
                ratio = candidate
    one = Ban.one(length)
    if ratio is None:
        return one * damping
    return min(ratio.lead_mon(), one) * damping

def mehrotra_sigma(mu, mu_new):
    """
    Adaptive centering parameter lead_mon((mu_new / mu)^3), floored at
    sigma_floor.

    Parameters
    ----------
    mu : Ban
        The current centrality, positive.
    mu_new : Ban
        The centrality reached by the predictor step.

    Returns
    -------
    Ban
    """
    sigma = ((mu_new / mu) ** 3).lead_mon()
    floor = Ban(sigma_floor, length=sigma.length)
    return max(sigma, floor)
