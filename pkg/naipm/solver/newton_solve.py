# coding: utf-8
# naipm imports
from ..linalg import BanVector, BanMatrix, diag, lu_solve

def newton_matrix(A, Q, x, s):
    """
    Assembles the Newton block matrix

        [[-Q, A^T, I],
         [ A,  0,  0],
         [ S,  0,  X]]

    with X = diag(x) and S = diag(s).

    Returns
    -------
    BanMatrix
        Of size 2n + m.
    """
    m, n = A.shape
    length = A.length
    return BanMatrix.block([
        [-Q, A.T, BanMatrix.identity(n, length)],
        [A, BanMatrix.zeros(m, m, length), BanMatrix.zeros(m, n, length)],
        [diag(s), BanMatrix.zeros(n, m, length), diag(x)]])

def newton_solve(A, Q, x, s, rhs):
    """
    Solves the Newton system of the perturbed KKT conditions for a search
    direction.

    Parameters
    ----------
    A : BanMatrix
        The m by n constraint matrix.
    Q : BanMatrix
        The quadratic costs.
    x, s : BanVector
        The current primal point and dual slacks, both positive.
    rhs : tuple of BanVector
        (d_c, d_b, d_mu), the right-hand side blocks of sizes n, m and n.
        The predictor uses (-r_c, -r_b, -x*s) and the corrector
        (0, 0, sigma mu 1 - dx_p * ds_p).

    Returns
    -------
    tuple of BanVector
        (dx, dlam, ds).

    Raises
    ------
    naipm.errors.SingularMatrixError
        If the block matrix is singular.
    """
    m, n = A.shape
    d_c, d_b, d_mu = rhs
    matrix = newton_matrix(A, Q, x, s)
    solution = lu_solve(matrix, BanVector.concat(d_c, d_b, d_mu))
    return solution[:n], solution[n:n + m], solution[n + m:]
