# coding: utf-8
from .SolverConfig import SolverConfig
from .IterateState import IterateState
from .IterationRecord import IterationRecord
from .starting_point import starting_point
from .measures import (residuals_and_mu, convergence_measures, measure_denominators,
                       convergence_levels, check_convergence, order_or_one)
from .newton_solve import newton_solve, newton_matrix
from .steps import step_length, mehrotra_sigma
from .update_zero_entries import update_zero_entries
from .classify_result import (classify_result, statuses, OPTIMAL, ORIGINAL_INFEASIBLE,
                              ORIGINAL_UNBOUNDED, ITERATION_LIMIT)
from .SolveResult import SolveResult
from .solve import solve, IterationLimitWarning

__all__ = sorted(['SolverConfig', 'IterateState', 'IterationRecord', 'SolveResult',
                  'starting_point', 'residuals_and_mu', 'convergence_measures',
                  'measure_denominators', 'convergence_levels', 'check_convergence',
                  'order_or_one', 'newton_solve', 'newton_matrix', 'step_length',
                  'mehrotra_sigma', 'update_zero_entries', 'classify_result',
                  'solve', 'IterationLimitWarning', 'statuses', 'OPTIMAL',
                  'ORIGINAL_INFEASIBLE', 'ORIGINAL_UNBOUNDED', 'ITERATION_LIMIT'])
