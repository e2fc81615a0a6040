# coding: utf-8
# Standard Python libraries
from math import sqrt

# naipm imports
from ..ban import Ban
from ..linalg import BanVector

def update_zero_entries(x, s, mu, eps, recenter_coefficient=1.0):
    """
    Re-sets the close-to-zero entries of a converged level so the next
    level starts with centrality one order of magnitude smaller.

    Entry i is close to zero when O(x_i s_i) <= O(mu) and the leading
    coefficient of min(x_i, s_i) is below sqrt(n eps).  For every flagged
    entry the smaller of x_i, s_i is replaced by the shared monosemium

        xi = lead_mon(n mu' / sum(z_i)),  z_i = max(x_i, s_i)

    with mu' = recenter_coefficient O(mu) eta.  mu' takes its coefficient
    from the order of magnitude of mu, not from lead_mon(mu): a finite
    mu = 2.82e-6 gives mu' = eta, and the next centrality is of order eta
    (12.82 eta in the two-level production example) rather than 1e-6 eta.

    Parameters
    ----------
    x, s : BanVector
        The positive primal point and dual slacks.
    mu : Ban
        The current centrality, positive.
    eps : float
        The convergence tolerance.
    recenter_coefficient : float, optional
        The coefficient of mu'.  Default value is 1.0.

    Returns
    -------
    tuple of BanVector
        The updated x and s, unchanged if nothing is flagged.
    """
    n = x.size
    length = x.length
    threshold = sqrt(n * eps)
    scale = mu.magnitude()

    flagged = []
    for i, (xi, si) in enumerate(zip(x, s)):
        if (xi * si).power > scale.power:
            continue
        small = min(xi, si)
        if abs(small.coeffs[0]) < threshold:
            flagged.append(i)
    if len(flagged) == 0:
        return x, s

    target = scale * Ban.eta(1, length) * recenter_coefficient
    total = Ban.zero(length)
    for i in flagged:
        total = total + max(x[i], s[i])
    xi = (target * float(n) / total).lead_mon()

    x_new = list(x)
    s_new = list(s)
    for i in flagged:
        if x[i] <= s[i]:
            x_new[i] = xi
        else:
            s_new[i] = xi
    return BanVector(x_new, length=length), BanVector(s_new, length=length)
