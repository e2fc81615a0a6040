# coding: utf-8
# https://numpy.org/
import numpy as np

__all__ = ['aslist', 'iaslist']

def iaslist(term):
    """
    Iterates over term as if it was a list.  Strings, mappings and scalar
    values (including numpy scalars and Ban values) count as single items,
    and None as no items.

    Parameters
    ----------
    term : any
        Term to iterate over.

    Yields
    ------
    any
        Items in the list representation of term.
    """
    if term is None:
        return
    if isinstance(term, (str, bytes, dict)) or np.isscalar(term):
        yield term
        return
    try:
        items = iter(term)
    except TypeError:
        yield term
    else:
        yield from items

def aslist(term):
    """
    Create list representation of term.

    Parameters
    ----------
    term : any
        Term to convert into a list, if needed.

    Returns
    -------
    list of any
        All items in term as a list.
    """
    return list(iaslist(term))
