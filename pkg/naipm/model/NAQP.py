# coding: utf-8
# Standard Python libraries
from collections import namedtuple

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# naipm imports
from ..ban import Ban
from ..linalg import BanVector, BanMatrix

Column = namedtuple('Column', ['kind', 'index', 'sign'])
Column.__doc__ = """
Origin of a standard-form column: kind is 'original', 'slack', 'surplus',
'artificial' or 'bound'; index is the original variable or constraint row;
sign is +1 or -1 (-1 for the negative half of a split free variable).
"""

class NAQP():
    """
    Non-Archimedean quadratic program in standard form:
    minimize 1/2 x^T Q x + c^T x subject to A x = b, x >= 0.
    """
    def __init__(self, Q, c, A, b, columns=None, n_original=None,
                 negated=False, levels=1, name=None):
        """
        Initializes an NAQP.

        Parameters
        ----------
        Q : BanMatrix or None
            The n by n symmetric quadratic cost.  None is the zero matrix.
        c : BanVector
            The n linear costs.
        A : BanMatrix
            The m by n constraint matrix.
        b : BanVector
            The m right-hand sides.
        columns : list of Column, optional
            The origin of every column.  Default treats every column as an
            original nonnegative variable.
        n_original : int, optional
            The number of variables of the problem the columns map back to.
            Default value is n.
        negated : bool, optional
            True if the objective is the negation of a maximized one.
        levels : int, optional
            The number of priority levels the objective encodes.
        name : str, optional
            A label used in reports.
        """
        self.__c = BanVector(c)
        n = self.__c.size
        length = self.__c.length
        if Q is None:
            Q = BanMatrix.zeros(n, n, length=length)
        self.__Q = BanMatrix(Q, length=length, shape=(n, n))
        self.__A = BanMatrix(A, length=length, shape=(len(b), n))
        self.__b = BanVector(b, length=length)

        if self.__Q.shape != (n, n):
            raise ValueError(f'Q has shape {self.__Q.shape}, expected {(n, n)}')
        if not self.__Q.is_symmetric():
            raise ValueError('Q is not symmetric')
        if self.__A.shape != (self.__b.size, n):
            raise ValueError(f'A has shape {self.__A.shape}, expected {(self.__b.size, n)}')

        if columns is None:
            columns = [Column('original', j, 1) for j in range(n)]
        if len(columns) != n:
            raise ValueError(f'{len(columns)} column descriptions for {n} columns')
        self.__columns = [Column(*column) for column in columns]
        if n_original is None:
            n_original = n
        self.__n_original = int(n_original)

        self.negated = bool(negated)
        self.levels = int(levels)
        self.name = name

    @property
    def Q(self):
        """BanMatrix : The quadratic cost."""
        return self.__Q

    @property
    def c(self):
        """BanVector : The linear cost."""
        return self.__c

    @property
    def A(self):
        """BanMatrix : The equality constraint matrix."""
        return self.__A

    @property
    def b(self):
        """BanVector : The right-hand sides."""
        return self.__b

    @property
    def columns(self):
        """list of Column : The origin of every column."""
        return self.__columns

    @property
    def n(self):
        """int : The number of columns."""
        return self.__c.size

    @property
    def m(self):
        """int : The number of rows."""
        return self.__b.size

    @property
    def n_original(self):
        """int : The number of variables reported by restore."""
        return self.__n_original

    @property
    def priority_levels(self):
        """int : The number of objective levels the solver optimizes in turn."""
        return self.levels

    @property
    def length(self):
        """int : The Ban length of the problem data."""
        return self.__c.length

    @property
    def is_lp(self):
        """bool : True if Q is zero."""
        return self.__Q.is_zero()

    def is_standard(self):
        """
        bool : True if every data value is a plain real number, i.e. has no
        infinite or infinitesimal part.
        """
        values = list(self.__c) + list(self.__b)
        values += list(self.__A.entries.flat) + list(self.__Q.entries.flat)
        for value in values:
            for power, coef in value.monosemia():
                if power != 0:
                    return False
        return True

    def objective(self, x):
        """
        Evaluates 1/2 x^T Q x + c^T x.

        Parameters
        ----------
        x : BanVector
            A point with n entries.

        Returns
        -------
        Ban
        """
        value = self.__c.dot(x)
        if not self.is_lp:
            value = value + (self.__Q @ x).dot(x) * 0.5
        return value

    def restore(self, x):
        """
        Maps a standard-form point back to the original variables.

        Parameters
        ----------
        x : BanVector
            A point with n entries.

        Returns
        -------
        BanVector
            The n_original original variables.  Slack, surplus and
            artificial columns are ignored and split variables recombined.
        """
        values = [Ban.zero(self.length)] * self.__n_original
        for column, value in zip(self.__columns, x):
            if column.kind == 'original':
                if column.sign > 0:
                    values[column.index] = values[column.index] + value
                else:
                    values[column.index] = values[column.index] - value
        return BanVector(values, length=self.length)

    def asmodel(self):
        """
        Returns the problem as data model content.

        Returns
        -------
        DataModelDict
            Values are written as BAN literals.
        """
        model = DM()
        model['standard-problem'] = problem = DM()
        if self.name is not None:
            problem['name'] = self.name
        problem['negated'] = self.negated
        problem['levels'] = self.levels
        problem['Q'] = self.__Q.format()
        problem['c'] = self.__c.format()
        problem['A'] = self.__A.format()
        problem['b'] = self.__b.format()
        problem['columns'] = []
        for column in self.__columns:
            entry = DM()
            entry['kind'] = column.kind
            entry['index'] = column.index
            entry['sign'] = column.sign
            problem['columns'].append(entry)
        return model
