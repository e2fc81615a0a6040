# coding: utf-8
# https://numpy.org/
import numpy as np

# naipm imports
from .BanVector import BanVector
from .BanMatrix import BanMatrix
from ..errors import SingularMatrixError

def lu_solve(m, d):
    """
    Solves m x = d by Gaussian elimination with partial pivoting.

    Pivots are chosen as the candidate of largest Ban absolute value, so an
    infinite entry always beats a finite one and a finite one beats an
    infinitesimal one.

    Parameters
    ----------
    m : BanMatrix
        The square system matrix.
    d : BanVector or BanMatrix
        The right-hand side.  Each column of a BanMatrix is solved for, so
        passing the identity returns the inverse of m.

    Returns
    -------
    BanVector or BanMatrix
        The solution, of the same type as d.

    Raises
    ------
    ValueError
        If the dimensions disagree.
    naipm.errors.SingularMatrixError
        If an elimination column has no nonzero pivot candidate.  The step
        attribute names the column.
    """
    if m.rows != m.cols:
        raise ValueError(f'lu_solve needs a square matrix, got {m.shape}')
    n = m.rows

    if isinstance(d, BanVector):
        rhs = np.array(d.entries, dtype=object).reshape(-1, 1)
    elif isinstance(d, BanMatrix):
        rhs = np.array(d.entries, dtype=object)
    else:
        raise TypeError('right-hand side must be a BanVector or BanMatrix')
    if rhs.shape[0] != n:
        raise ValueError(f'right-hand side has {rhs.shape[0]} rows, expected {n}')

    # Working copies: a is reduced in place to the upper factor
    a = np.array(m.entries, dtype=object)
    k = rhs.shape[1]

    for j in range(n):

        # Partial pivoting on the full Ban absolute value
        p = max(range(j, n), key=lambda i: abs(a[i, j]))
        if a[p, j].is_zero():
            raise SingularMatrixError(f'no nonzero pivot in column {j}', step=j)
        if p != j:
            a[[j, p], :] = a[[p, j], :]
            rhs[[j, p], :] = rhs[[p, j], :]

        pivot_inverse = a[j, j].reciprocal()
        for i in range(j + 1, n):
            if a[i, j].is_zero():
                continue
            factor = a[i, j] * pivot_inverse
            for col in range(j + 1, n):
                a[i, col] = a[i, col] - factor * a[j, col]
            for col in range(k):
                rhs[i, col] = rhs[i, col] - factor * rhs[j, col]

    # Back substitution
    x = np.empty((n, k), dtype=object)
    for col in range(k):
        for i in range(n - 1, -1, -1):
            total = rhs[i, col]
            for jj in range(i + 1, n):
                total = total - a[i, jj] * x[jj, col]
            x[i, col] = total / a[i, i]

    if isinstance(d, BanVector):
        return BanVector(x[:, 0], length=m.length)
    return BanMatrix(x, length=m.length, shape=x.shape)
