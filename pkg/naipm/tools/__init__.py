# coding: utf-8
from .aslist import iaslist, aslist
from .uber_open_rmode import uber_open_rmode

__all__ = sorted(['aslist', 'iaslist', 'uber_open_rmode'])
