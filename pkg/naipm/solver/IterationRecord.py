# coding: utf-8
# Standard Python libraries
from collections import namedtuple

IterationRecord = namedtuple('IterationRecord',
                             ['iteration', 'mu', 'x', 'objective', 'rho', 'step',
                              'smallest'])
IterationRecord.__doc__ = """
Snapshot of one solver pass: the iteration index, the centrality mu, the
point restricted to the original variables, the objective of the original
problem at that point, the convergence measures (rho1, rho2, rho3), the
(primal, dual) step lengths taken to reach it (None for the starting point)
and the smallest entry of the full x and s, positive for interior iterates.
"""
