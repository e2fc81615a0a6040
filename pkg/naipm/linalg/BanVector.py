# coding: utf-8
# https://numpy.org/
import numpy as np

# naipm imports
from ..ban import Ban, get_length

class BanVector():
    """
    Dense vector of Ban values sharing one Ban length.
    """
    def __init__(self, entries=(), length=None):
        """
        Initializes a BanVector.

        Parameters
        ----------
        entries : iterable or BanVector, optional
            The entries.  Each may be a Ban, a real number or a BAN literal
            str.
        length : int, optional
            The Ban length of the entries.  Default value is the length of a
            Ban entry if one is given, else the process-wide length.
        """
        if isinstance(entries, BanVector):
            entries = entries.entries
        entries = list(entries)
        if length is None:
            length = next((e.length for e in entries if isinstance(e, Ban)), get_length())

        self.__length = int(length)
        self.__entries = np.empty(len(entries), dtype=object)
        for i, entry in enumerate(entries):
            self.__entries[i] = Ban.coerce(entry, self.__length)
        self.__entries.flags.writeable = False

    @classmethod
    def zeros(cls, n, length=None):
        """BanVector : n zero entries."""
        return cls([0.0] * n, length=length)

    @classmethod
    def ones(cls, n, length=None):
        """BanVector : n unit entries."""
        return cls([1.0] * n, length=length)

    @classmethod
    def concat(cls, *vectors):
        """BanVector : The given vectors joined end to end."""
        entries = [e for v in vectors for e in v]
        length = vectors[0].length if len(vectors) > 0 else None
        return cls(entries, length=length)

    @property
    def entries(self):
        """numpy.ndarray : The read-only object array of Ban entries."""
        return self.__entries

    @property
    def length(self):
        """int : The Ban length L shared by the entries."""
        return self.__length

    @property
    def size(self):
        """int : The number of entries."""
        return self.__entries.size

    def __len__(self):
        return self.__entries.size

    def __iter__(self):
        return iter(self.__entries)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return BanVector(self.__entries[key], length=self.__length)
        return self.__entries[key]

    def replace(self, index, value):
        """
        Returns a copy with one entry changed.

        Parameters
        ----------
        index : int
            The entry to change.
        value : Ban, float or str
            The new value.

        Returns
        -------
        BanVector
        """
        entries = list(self.__entries)
        entries[index] = value
        return BanVector(entries, length=self.__length)

    def _other(self, other):
        if not isinstance(other, BanVector):
            return None
        if other.size != self.size:
            raise ValueError(f'vector size mismatch: {self.size} != {other.size}')
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BanVector(self.__entries + other.entries, length=self.__length)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return BanVector(self.__entries - other.entries, length=self.__length)

    def __neg__(self):
        return BanVector([-e for e in self.__entries], length=self.__length)

    def __mul__(self, scalar):
        """Scales every entry by a Ban or real scalar."""
        if isinstance(scalar, (BanVector, np.ndarray)):
            return NotImplemented
        scalar = Ban.coerce(scalar, self.__length)
        return BanVector([e * scalar for e in self.__entries], length=self.__length)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Ban.coerce(scalar, self.__length)
        return self * scalar.reciprocal()

    def __eq__(self, other):
        if not isinstance(other, BanVector):
            return NotImplemented
        return (self.size == other.size
                and all(a == b for a, b in zip(self.__entries, other.entries)))

    __hash__ = None

    def dot(self, other):
        """Ban : The inner product with another vector."""
        other = self._other(other)
        total = Ban.zero(self.__length)
        for a, b in zip(self.__entries, other.entries):
            total = total + a * b
        return total

    def sum(self):
        """Ban : The sum of the entries."""
        total = Ban.zero(self.__length)
        for entry in self.__entries:
            total = total + entry
        return total

    def lead_mon(self):
        """BanVector : Every entry replaced by its leading monosemium."""
        return BanVector([e.lead_mon() for e in self.__entries], length=self.__length)

    def drop_negligible(self, reference, tol):
        """
        Applies Ban.drop_negligible entrywise.

        Parameters
        ----------
        reference : BanVector or iterable of Ban
            Entries defining the scale per power.  The whole collection is
            used for every entry.
        tol : float
            The relative tolerance.

        Returns
        -------
        BanVector
        """
        reference = list(reference)
        return BanVector([e.drop_negligible(reference, tol) for e in self.__entries],
                         length=self.__length)

    def drop_below(self, power):
        """BanVector : Every entry without its monosemia below alpha^power."""
        return BanVector([e.drop_below(power) for e in self.__entries],
                         length=self.__length)

    def is_zero(self):
        """bool : True if every entry is zero."""
        return all(e.is_zero() for e in self.__entries)

    def magnitude(self):
        """
        Ban : The largest order of magnitude over the nonzero entries.

        Raises
        ------
        ValueError
            If every entry is zero.
        """
        powers = [e.power for e in self.__entries if not e.is_zero()]
        if len(powers) == 0:
            raise ValueError('magnitude of a zero vector is undefined')
        return Ban.alpha(max(powers), self.__length)

    def smallest_order(self):
        """
        Ban : The smallest order of magnitude over the nonzero entries.

        Raises
        ------
        ValueError
            If every entry is zero.
        """
        powers = [e.lowest_power() for e in self.__entries if not e.is_zero()]
        if len(powers) == 0:
            raise ValueError('smallest order of a zero vector is undefined')
        return Ban.alpha(min(powers), self.__length)

    def to_float(self):
        """numpy.ndarray : The float value of every entry."""
        return np.array([float(e) for e in self.__entries])

    def format(self, precision=None):
        """list of str : The BAN literal of every entry."""
        return [e.format(precision) for e in self.__entries]

    def __str__(self):
        return '[' + ', '.join(self.format(4)) + ']'

    def __repr__(self):
        return f'BanVector({self.format()})'
