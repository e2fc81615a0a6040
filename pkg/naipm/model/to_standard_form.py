# coding: utf-8
# Standard Python libraries
import warnings

# https://numpy.org/
import numpy as np

# naipm imports
from ..ban import Ban
from ..linalg import BanVector, BanMatrix
from .NAQP import NAQP, Column
from .scalarize_lex import scalarize_lex

def to_standard_form(problem):
    """
    Rewrites a problem as minimize 1/2 x^T Q x + c^T x, A x = b, x >= 0.

    '<=' rows gain a +1 slack column and '>=' rows a -1 surplus column, both
    with zero cost.  Free variables are split into a positive and a negative
    part.  Exact duplicate rows are dropped with a warning.  Problems with
    several objectives or a maximize sense are scalarized first.

    Parameters
    ----------
    problem : LexProblem
        The problem to rewrite.

    Returns
    -------
    NAQP

    Raises
    ------
    ValueError
        If there are no constraints or a constraint row is all zero.
    """
    if len(problem.objectives) > 1 or problem.sense != 'minimize':
        problem = scalarize_lex(problem)
    if problem.m == 0:
        raise ValueError('problem has no constraints')

    length = problem.length
    zero = Ban.zero(length)
    Q, c = problem.objectives[0]

    # Original variables, with free ones split
    columns = []
    for i, kind in enumerate(problem.bounds):
        columns.append(Column('original', i, 1))
        if kind == 'free':
            columns.append(Column('original', i, -1))

    # Drop exact duplicates, reject zero rows
    rows = []
    for i, constraint in enumerate(problem.constraints):
        if constraint.a.is_zero():
            raise ValueError(f'constraint {i} has an all-zero row')
        if any(constraint.a == kept.a and constraint.rel == kept.rel and constraint.b == kept.b
               for _, kept in rows):
            warnings.warn(f'constraint {i} duplicates an earlier row and was dropped', UserWarning)
            continue
        rows.append((i, constraint))

    for i, constraint in rows:
        if constraint.rel == '<=':
            columns.append(Column('slack', i, 1))
        elif constraint.rel == '>=':
            columns.append(Column('surplus', i, -1))

    n = len(columns)
    A = np.full((len(rows), n), zero, dtype=object)
    for r, (i, constraint) in enumerate(rows):
        for j, column in enumerate(columns):
            if column.kind == 'original':
                value = constraint.a[column.index]
                A[r, j] = value if column.sign > 0 else -value
            elif column.index == i:
                A[r, j] = Ban(float(column.sign), length=length)
    b = BanVector([constraint.b for i, constraint in rows], length=length)

    c_std = []
    for column in columns:
        if column.kind == 'original':
            value = c[column.index]
            c_std.append(value if column.sign > 0 else -value)
        else:
            c_std.append(zero)

    Q_std = None
    if Q is not None:
        Q_std = np.full((n, n), zero, dtype=object)
        for j, cj in enumerate(columns):
            for k, ck in enumerate(columns):
                if cj.kind == 'original' and ck.kind == 'original':
                    value = Q.entries[cj.index, ck.index]
                    Q_std[j, k] = value if cj.sign * ck.sign > 0 else -value
        Q_std = BanMatrix(Q_std, length=length, shape=(n, n))

    return NAQP(Q_std, BanVector(c_std, length=length),
                BanMatrix(A, length=length, shape=(len(rows), n)), b,
                columns=columns, n_original=problem.n, negated=problem.negated,
                levels=problem.levels, name=problem.name)
