# coding: utf-8
# naipm imports
from ..ban import Ban

def euclidean_norm(v):
    """
    Euclidean norm of a Ban vector.

    Parameters
    ----------
    v : BanVector
        The vector.

    Returns
    -------
    Ban
        sqrt_even of the sum of squared entries, zero for the zero vector.
    """
    total = Ban.zero(v.length)
    for entry in v:
        total = total + entry * entry
    return total.sqrt_even()
