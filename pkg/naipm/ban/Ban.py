# coding: utf-8
# Standard Python libraries
from math import sqrt, inf, copysign
from numbers import Real

# https://numpy.org/
import numpy as np

# naipm imports
from ._length import get_length
from ._literal import parse_terms, format_terms
from ..errors import BanSyntaxError, BanOverflowError

# Coefficients smaller than this relative to their scale are exact zeros
flush_tol = 1e-15

def _normalize(power, coeffs, length, scale=None):
    """
    Brings a raw coefficient sequence into canonical form: flushes
    cancellation noise, shifts out leading zeros and truncates to length.
    """
    coeffs = np.array(coeffs, dtype=float).ravel()
    if not np.all(np.isfinite(coeffs)):
        raise BanOverflowError('Ban coefficients must be finite')
    if scale is not None:
        coeffs[np.abs(coeffs) <= flush_tol * scale] = 0.0

    nonzero = np.flatnonzero(coeffs)
    normal = np.zeros(length)
    if nonzero.size == 0:
        return 0, normal

    shift = nonzero[0]
    kept = coeffs[shift:shift + length]
    kept[np.abs(kept) < flush_tol * abs(kept[0])] = 0.0
    normal[:kept.size] = kept
    return int(power) - int(shift), normal

class Ban():
    """
    Bounded Algorithmic Number: the fixed-length value
    alpha^power * (c_0 + c_1 eta + ... + c_{L-1} eta^{L-1})
    where alpha is infinite and eta = 1/alpha.  Values are immutable.
    """
    def __init__(self, coeffs=0.0, power=0, length=None):
        """
        Initializes a Ban.

        Parameters
        ----------
        coeffs : float, sequence of float, str or Ban, optional
            The coefficients c_0, c_1, ... of decreasing powers starting at
            power.  A str is parsed as a BAN literal and a Ban is copied
            (power is then ignored).  Default value is 0.
        power : int, optional
            The alpha power of the first coefficient.  Default value is 0.
        length : int, optional
            The number of stored coefficients L.  Default value is the
            process-wide length, see naipm.ban.set_length.
        """
        if length is None:
            length = get_length()
        length = int(length)
        if length < 1:
            raise ValueError('Ban length must be at least 1')

        if isinstance(coeffs, Ban):
            if coeffs.length != length:
                raise ValueError('Ban length mismatch')
            power, coeffs = coeffs.power, coeffs.coeffs
        elif isinstance(coeffs, str):
            power, coeffs = self.__literal(coeffs, length)

        self.__length = length
        self.__power, self.__coeffs = _normalize(power, coeffs, length)
        self.__coeffs.flags.writeable = False

    @staticmethod
    def __literal(text, length):
        terms = {p: c for p, c in parse_terms(text).items() if c != 0.0}
        if len(terms) == 0:
            return 0, [0.0]
        top = max(terms)
        if top - min(terms) >= length:
            raise BanSyntaxError(f'literal needs more than {length} coefficient slots',
                                 text, len(text))
        coeffs = np.zeros(length)
        for power, coef in terms.items():
            coeffs[top - power] = coef
        return top, coeffs

    @classmethod
    def _new(cls, power, coeffs, length, scale=None):
        """Builds a Ban from raw pieces without coercion."""
        obj = cls.__new__(cls)
        obj.__length = length
        obj.__power, obj.__coeffs = _normalize(power, coeffs, length, scale)
        obj.__coeffs.flags.writeable = False
        return obj

    @classmethod
    def zero(cls, length=None):
        """Ban : The canonical zero."""
        return cls(0.0, length=length)

    @classmethod
    def one(cls, length=None):
        """Ban : The unit."""
        return cls(1.0, length=length)

    @classmethod
    def monosemium(cls, coef=1.0, power=0, length=None):
        """
        Builds the single-term value coef * alpha^power.

        Parameters
        ----------
        coef : float, optional
            The coefficient.  Default value is 1.
        power : int, optional
            The alpha power, negative for infinitesimals.  Default value is 0.
        length : int, optional
            The Ban length.

        Returns
        -------
        Ban
        """
        return cls([float(coef)], power=power, length=length)

    @classmethod
    def alpha(cls, power=1, length=None):
        """Ban : The infinite unit alpha raised to power."""
        return cls.monosemium(1.0, power, length)

    @classmethod
    def eta(cls, power=1, length=None):
        """Ban : The infinitesimal unit eta raised to power."""
        return cls.monosemium(1.0, -power, length)

    @classmethod
    def parse(cls, text, length=None):
        """
        Parses a BAN literal such as '8+14n' or '2.5a^2-3a+1'.

        Raises
        ------
        naipm.errors.BanSyntaxError
            For malformed text or when the terms span more than L powers.
        """
        return cls(str(text), length=length)

    @classmethod
    def coerce(cls, value, length=None):
        """
        Converts value to a Ban of the given length.

        Parameters
        ----------
        value : Ban, float, int or str
            The value to convert.  Strings are parsed as BAN literals.
        length : int, optional
            The required Ban length.  Default is the process-wide length.

        Returns
        -------
        Ban
        """
        if isinstance(value, Ban):
            if length is not None and value.length != length:
                raise ValueError(f'Ban length mismatch: {value.length} != {length}')
            return value
        if isinstance(value, str):
            return cls.parse(value, length=length)
        if isinstance(value, Real):
            return cls(float(value), length=length)
        raise TypeError(f'cannot convert {type(value).__name__} to Ban')

    @property
    def power(self):
        """int : The alpha power of the leading coefficient."""
        return self.__power

    @property
    def coeffs(self):
        """numpy.ndarray : The L read-only coefficients c_0 ... c_{L-1}."""
        return self.__coeffs

    @property
    def length(self):
        """int : The number of stored coefficients L."""
        return self.__length

    def is_zero(self):
        """bool : True for the canonical zero."""
        return self.__coeffs[0] == 0.0

    def sign(self):
        """int : -1, 0 or 1 following the leading coefficient."""
        if self.is_zero():
            return 0
        return 1 if self.__coeffs[0] > 0 else -1

    def coefficient(self, power):
        """
        Returns the coefficient multiplying alpha^power.

        Parameters
        ----------
        power : int
            The alpha power to query.

        Returns
        -------
        float
            0.0 if power lies outside the stored window.
        """
        index = self.__power - int(power)
        if self.is_zero() or index < 0 or index >= self.__length:
            return 0.0
        return float(self.__coeffs[index])

    def monosemia(self):
        """
        Iterates over the nonzero terms.

        Yields
        ------
        tuple of (int, float)
            The (power, coefficient) pairs, highest power first.
        """
        for index in np.flatnonzero(self.__coeffs):
            yield self.__power - int(index), float(self.__coeffs[index])

    def lowest_power(self):
        """int : The power of the last nonzero stored coefficient."""
        if self.is_zero():
            raise ValueError('zero has no order of magnitude')
        return self.__power - int(np.flatnonzero(self.__coeffs)[-1])

    def _check(self, other):
        """Coerces an operand and checks that it shares L."""
        other = Ban.coerce(other, self.__length)
        return other

    def __add__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other

        length = self.__length
        top = max(self.__power, other.power)
        total = np.zeros(length)
        scale = np.zeros(length)
        for term in (self, other):
            shift = top - term.power

            # Operands more than L powers below the other are absorbed
            if shift < length:
                total[shift:] += term.coeffs[:length - shift]
                scale[shift:] += np.abs(term.coeffs[:length - shift])

        return Ban._new(top, total, length, scale)

    __radd__ = __add__

    def __neg__(self):
        return Ban._new(self.__power, -self.__coeffs, self.__length)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Ban.zero(self.__length)

        length = self.__length
        product = np.convolve(self.__coeffs, other.coeffs)[:length]
        scale = np.convolve(np.abs(self.__coeffs), np.abs(other.coeffs))[:length]
        return Ban._new(self.__power + other.power, product, length, scale)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        try:
            other = self._check(other)
        except TypeError:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent):
        if int(exponent) != exponent:
            raise ValueError('Ban powers must be integers')
        exponent = int(exponent)
        if exponent < 0:
            return self.reciprocal() ** -exponent
        result = Ban.one(self.__length)
        for i in range(exponent):
            result = result * self
        return result

    def __abs__(self):
        if self.sign() < 0:
            return -self
        return self

    def reciprocal(self):
        """
        Returns 1/self by inverting the truncated series
        c_0 alpha^p (1 + t) with t infinitesimal.

        Raises
        ------
        ZeroDivisionError
            For the zero value.
        """
        if self.is_zero():
            raise ZeroDivisionError('reciprocal of a zero Ban')

        c0 = self.__coeffs[0]
        u = self.__coeffs / c0
        inverse = np.zeros(self.__length)
        inverse[0] = 1.0
        for k in range(1, self.__length):
            inverse[k] = -np.dot(u[1:k + 1], inverse[k - 1::-1])

        return Ban._new(-self.__power, inverse / c0, self.__length)

    def sqrt_even(self):
        """
        Returns the square root of a positive value with even leading power,
        expanding c_0 alpha^p (1 + t) as a binomial series in t.

        Raises
        ------
        ValueError
            For negative values or an odd leading power.
        """
        if self.is_zero():
            return self
        if self.sign() < 0:
            raise ValueError('square root of a negative Ban')
        if self.__power % 2 != 0:
            raise ValueError(f'square root needs an even leading power, got {self.__power}')

        c0 = self.__coeffs[0]
        u = self.__coeffs / c0
        root = np.zeros(self.__length)
        root[0] = 1.0
        for k in range(1, self.__length):
            root[k] = (u[k] - np.dot(root[1:k], root[k - 1:0:-1])) / 2.0

        return Ban._new(self.__power // 2, sqrt(c0) * root, self.__length)

    def compare(self, other):
        """
        Total order on Ban values.

        Returns
        -------
        int
            -1, 0 or 1 as self is less than, equal to or greater than other.
        """
        return (self - other).sign()

    def __eq__(self, other):
        try:
            other = self._check(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.__power == other.power
                and np.array_equal(self.__coeffs, other.coeffs))

    def __ne__(self, other):
        equal = self.__eq__(other)
        if equal is NotImplemented:
            return equal
        return not equal

    def __lt__(self, other):
        try:
            return self.compare(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self.compare(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self.compare(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self.compare(other) >= 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        # Real values hash like the floats they compare equal to
        if self.__power == 0 and not np.any(self.__coeffs[1:]):
            return hash(float(self.__coeffs[0]))
        return hash((self.__power, tuple(self.__coeffs)))

    def __bool__(self):
        return not self.is_zero()

    def __float__(self):
        """Finite part for finite values, signed infinity for infinite ones."""
        if self.is_zero():
            return 0.0
        if self.__power > 0:
            return copysign(inf, self.__coeffs[0])
        return self.coefficient(0)

    def lead_mon(self):
        """Ban : The leading monosemium c_0 alpha^power."""
        if self.is_zero():
            return self
        return Ban._new(self.__power, self.__coeffs[:1], self.__length)

    def magnitude(self):
        """
        Ban : The order of magnitude alpha^power with coefficient 1.

        Raises
        ------
        ValueError
            For the zero value.
        """
        if self.is_zero():
            raise ValueError('magnitude of zero is undefined')
        return Ban.alpha(self.__power, self.__length)

    def smallest_order(self):
        """
        Ban : alpha raised to the power of the last nonzero stored coefficient.

        Raises
        ------
        ValueError
            For the zero value.
        """
        return Ban.alpha(self.lowest_power(), self.__length)

    def drop_negligible(self, reference, tol):
        """
        Removes monosemia that are noise against a reference scale.

        A term c alpha^P is dropped when |c| is at most tol times the largest
        coefficient the reference carries at power P or above.

        Parameters
        ----------
        reference : Ban or iterable of Ban
            The values defining the scale at each power.
        tol : float
            The relative tolerance.

        Returns
        -------
        Ban
        """
        if isinstance(reference, Ban):
            reference = [reference]
        terms = [t for r in reference for t in r.monosemia()]
        if self.is_zero() or len(terms) == 0:
            return self

        coeffs = self.__coeffs.copy()
        for index, (power, coef) in enumerate(zip(range(self.__power, self.__power - self.__length, -1), coeffs)):
            if coef == 0.0:
                continue
            scale = max([abs(c) for p, c in terms if p >= power], default=0.0)
            if abs(coef) <= tol * scale:
                coeffs[index] = 0.0
        return Ban._new(self.__power, coeffs, self.__length)

    def drop_below(self, power):
        """
        Ban : The value without its monosemia of alpha power below power.
        """
        keep = self.__power - int(power) + 1
        if self.is_zero() or keep >= self.__length:
            return self
        if keep <= 0:
            return Ban.zero(self.__length)
        coeffs = self.__coeffs.copy()
        coeffs[keep:] = 0.0
        return Ban._new(self.__power, coeffs, self.__length)

    def format(self, precision=None):
        """
        Renders the value as a BAN literal.

        Parameters
        ----------
        precision : int, optional
            Significant digits per coefficient.  If not given the literal
            parses back to the identical value.

        Returns
        -------
        str
        """
        return format_terms(self.monosemia(), precision)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Ban('{self.format()}')"
