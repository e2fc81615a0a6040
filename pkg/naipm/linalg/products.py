# coding: utf-8
# https://numpy.org/
import numpy as np

# naipm imports
from ..ban import Ban
from .BanVector import BanVector
from .BanMatrix import BanMatrix

__all__ = ['mat_mul', 'transpose', 'hadamard', 'diag']

def mat_mul(a, b):
    """
    Dense product with Ban arithmetic.

    Parameters
    ----------
    a : BanMatrix
        The left factor.
    b : BanMatrix or BanVector
        The right factor.

    Returns
    -------
    BanMatrix or BanVector
        Matches the type of b.

    Raises
    ------
    ValueError
        If the inner dimensions disagree.
    """
    if not isinstance(a, BanMatrix):
        raise TypeError('left factor must be a BanMatrix')

    if isinstance(b, BanVector):
        if a.cols != b.size:
            raise ValueError(f'cannot multiply {a.shape} matrix by vector of size {b.size}')
        if a.cols == 0:
            return BanVector.zeros(a.rows, length=a.length)
        return BanVector(np.dot(a.entries, b.entries), length=a.length)

    elif isinstance(b, BanMatrix):
        if a.cols != b.rows:
            raise ValueError(f'cannot multiply {a.shape} matrix by {b.shape} matrix')
        if a.cols == 0:
            return BanMatrix.zeros(a.rows, b.cols, length=a.length)
        product = np.dot(a.entries, b.entries)
        return BanMatrix(product, length=a.length, shape=product.shape)

    else:
        raise TypeError('right factor must be a BanMatrix or BanVector')

def transpose(a):
    """BanMatrix : The transpose of a."""
    return a.T

def hadamard(u, v):
    """
    Entrywise product of two equally sized vectors.

    Parameters
    ----------
    u, v : BanVector
        The factors.

    Returns
    -------
    BanVector
    """
    if u.size != v.size:
        raise ValueError(f'vector size mismatch: {u.size} != {v.size}')
    return BanVector([x * y for x, y in zip(u, v)], length=u.length)

def diag(v):
    """
    Square matrix with v on the diagonal.

    Parameters
    ----------
    v : BanVector
        The diagonal entries.

    Returns
    -------
    BanMatrix
    """
    n = v.size
    array = np.full((n, n), Ban.zero(v.length), dtype=object)
    for i, entry in enumerate(v):
        array[i, i] = entry
    return BanMatrix(array, length=v.length, shape=(n, n))
