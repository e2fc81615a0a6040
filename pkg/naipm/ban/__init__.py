# coding: utf-8
from ._length import get_length, set_length, using_length
from .Ban import Ban

def add(a, b):
    """Ban : Truncated sum of two Ban values."""
    return Ban.coerce(a) + b

def mul(a, b):
    """Ban : Truncated product of two Ban values."""
    return Ban.coerce(a) * b

def reciprocal(a):
    """Ban : 1/a, raises ZeroDivisionError for zero."""
    return Ban.coerce(a).reciprocal()

def sqrt_even(a):
    """Ban : Square root of a positive value with even leading power."""
    return Ban.coerce(a).sqrt_even()

def compare(a, b):
    """int : -1, 0 or 1 following the total order of Ban values."""
    return Ban.coerce(a).compare(b)

def lead_mon(a):
    """Ban : The leading monosemium of a."""
    return Ban.coerce(a).lead_mon()

def magnitude(a):
    """Ban : The order of magnitude of a nonzero value."""
    return Ban.coerce(a).magnitude()

def smallest_order(a):
    """Ban : The smallest order of magnitude of a nonzero value."""
    return Ban.coerce(a).smallest_order()

def parse(text, length=None):
    """Ban : Parses a BAN literal."""
    return Ban.parse(text, length=length)

def format_literal(a, precision=None):
    """str : Renders a Ban as a BAN literal."""
    return Ban.coerce(a).format(precision)

__all__ = sorted(['Ban', 'get_length', 'set_length', 'using_length', 'add', 'mul',
                  'reciprocal', 'sqrt_even', 'compare', 'lead_mon', 'magnitude',
                  'smallest_order', 'parse', 'format_literal'])
