# coding: utf-8
# https://numpy.org/
import numpy as np

# naipm imports
from ..ban import Ban, get_length
from .BanVector import BanVector

class BanMatrix():
    """
    Dense row-major matrix of Ban values sharing one Ban length.
    """
    def __init__(self, rows=(), length=None, shape=None):
        """
        Initializes a BanMatrix.

        Parameters
        ----------
        rows : nested sequence, numpy.ndarray or BanMatrix, optional
            The entries given row by row.  Each entry may be a Ban, a real
            number or a BAN literal str.
        length : int, optional
            The Ban length of the entries.  Default value is the length of a
            Ban entry if one is given, else the process-wide length.
        shape : tuple of int, optional
            The (rows, cols) shape.  Only needed to build matrices with no
            entries, e.g. (0, 3).
        """
        if isinstance(rows, BanMatrix):
            rows = rows.entries
        array = np.array(rows, dtype=object)
        if array.size == 0:
            if shape is None:
                shape = (0, 0)
            array = np.empty(shape, dtype=object)
        if array.ndim != 2:
            raise ValueError('BanMatrix entries must form a 2D table')
        if length is None:
            length = next((e.length for e in array.flat if isinstance(e, Ban)), get_length())

        self.__length = int(length)
        self.__entries = np.empty(array.shape, dtype=object)
        for index, entry in np.ndenumerate(array):
            self.__entries[index] = Ban.coerce(entry, self.__length)
        self.__entries.flags.writeable = False

    @classmethod
    def zeros(cls, rows, cols, length=None):
        """BanMatrix : A rows by cols matrix of zeros."""
        return cls(np.zeros((rows, cols)).tolist(), length=length, shape=(rows, cols))

    @classmethod
    def identity(cls, n, length=None):
        """BanMatrix : The n by n identity."""
        return cls(np.identity(n).tolist(), length=length, shape=(n, n))

    @classmethod
    def block(cls, blocks):
        """
        Assembles a matrix from a nested list of BanMatrix blocks.

        Parameters
        ----------
        blocks : list of list of BanMatrix
            Blocks in each row must share their row count and blocks in
            each column their column count.

        Returns
        -------
        BanMatrix
        """
        length = blocks[0][0].length
        array = np.block([[b.entries for b in row] for row in blocks])
        return cls(array, length=length, shape=array.shape)

    @classmethod
    def from_columns(cls, columns, length=None):
        """BanMatrix : Matrix whose columns are the given BanVectors."""
        columns = list(columns)
        if length is None and len(columns) > 0:
            length = columns[0].length
        rows = len(columns[0]) if len(columns) > 0 else 0
        array = np.empty((rows, len(columns)), dtype=object)
        for j, column in enumerate(columns):
            array[:, j] = column.entries
        return cls(array, length=length, shape=array.shape)

    @property
    def entries(self):
        """numpy.ndarray : The read-only 2D object array of Ban entries."""
        return self.__entries

    @property
    def length(self):
        """int : The Ban length L shared by the entries."""
        return self.__length

    @property
    def shape(self):
        """tuple of int : The (rows, cols) shape."""
        return self.__entries.shape

    @property
    def rows(self):
        """int : The number of rows."""
        return self.__entries.shape[0]

    @property
    def cols(self):
        """int : The number of columns."""
        return self.__entries.shape[1]

    @property
    def T(self):
        """BanMatrix : The transpose."""
        return BanMatrix(self.__entries.T, length=self.__length,
                         shape=(self.cols, self.rows))

    def __getitem__(self, key):
        result = self.__entries[key]
        if isinstance(result, Ban):
            return result
        if result.ndim == 1:
            return BanVector(result, length=self.__length)
        return BanMatrix(result, length=self.__length, shape=result.shape)

    def row(self, i):
        """BanVector : Row i."""
        return BanVector(self.__entries[i, :], length=self.__length)

    def column(self, j):
        """BanVector : Column j."""
        return BanVector(self.__entries[:, j], length=self.__length)

    def _other(self, other):
        if not isinstance(other, BanMatrix):
            return None
        if other.shape != self.shape:
            raise ValueError(f'matrix shape mismatch: {self.shape} != {other.shape}')
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BanMatrix(self.__entries + other.entries, length=self.__length,
                         shape=self.shape)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BanMatrix(self.__entries - other.entries, length=self.__length,
                         shape=self.shape)

    def __neg__(self):
        return self * -1.0

    def __mul__(self, scalar):
        """Scales every entry by a Ban or real scalar."""
        if isinstance(scalar, (BanMatrix, BanVector, np.ndarray)):
            return NotImplemented
        scalar = Ban.coerce(scalar, self.__length)
        array = np.empty(self.shape, dtype=object)
        for index, entry in np.ndenumerate(self.__entries):
            array[index] = entry * scalar
        return BanMatrix(array, length=self.__length, shape=self.shape)

    __rmul__ = __mul__

    def __matmul__(self, other):
        from .products import mat_mul
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, BanMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and all(a == b for a, b in zip(self.__entries.flat, other.entries.flat)))

    __hash__ = None

    def is_zero(self):
        """bool : True if every entry is zero."""
        return all(e.is_zero() for e in self.__entries.flat)

    def is_symmetric(self):
        """bool : True for a square matrix equal to its transpose entry by entry."""
        if self.rows != self.cols:
            return False
        n = self.rows
        return all(self.__entries[i, j] == self.__entries[j, i]
                   for i in range(n) for j in range(i + 1, n))

    def magnitude(self):
        """
        Ban : The largest order of magnitude over the nonzero entries.

        Raises
        ------
        ValueError
            If every entry is zero.
        """
        return BanVector(self.__entries.ravel(), length=self.__length).magnitude()

    def smallest_order(self):
        """
        Ban : The smallest order of magnitude over the nonzero entries.

        Raises
        ------
        ValueError
            If every entry is zero.
        """
        return BanVector(self.__entries.ravel(), length=self.__length).smallest_order()

    def to_float(self):
        """numpy.ndarray : The float value of every entry."""
        return np.array([[float(e) for e in row] for row in self.__entries],
                        dtype=float).reshape(self.shape)

    def format(self, precision=None):
        """list of list of str : The BAN literal of every entry."""
        return [[e.format(precision) for e in row] for row in self.__entries]

    def __str__(self):
        return '\n'.join('[' + ', '.join(row) + ']' for row in self.format(4))

    def __repr__(self):
        return f'BanMatrix({self.format()})'
