# coding: utf-8
# Standard Python libraries
from contextlib import contextmanager

__all__ = ['get_length', 'set_length', 'using_length']

# Number of stored monosemia shared by every Ban built without an explicit length
_length = 5

def get_length():
    """
    Returns the process-wide Ban length L.

    Returns
    -------
    int
        The number of coefficients newly built Ban values carry.
    """
    return _length

def set_length(length):
    """
    Sets the process-wide Ban length L.

    Parameters
    ----------
    length : int
        The number of coefficients, must be at least 1.
    """
    global _length
    length = int(length)
    if length < 1:
        raise ValueError('Ban length must be at least 1')
    _length = length

@contextmanager
def using_length(length):
    """
    Context manager that sets the Ban length and restores the previous value
    on exit.

    Parameters
    ----------
    length : int
        The Ban length to use inside the context.
    """
    previous = get_length()
    set_length(length)
    try:
        yield length
    finally:
        set_length(previous)
