# coding: utf-8
# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

# https://pandas.pydata.org/
import pandas as pd

# naipm imports
from ..model import EmbeddedNAQP
from .classify_result import statuses, OPTIMAL, ORIGINAL_INFEASIBLE, ORIGINAL_UNBOUNDED

class SolveResult():
    """
    Outcome of a solve: the status of the original problem, the final
    iterate in embedded and original coordinates, the objective per
    priority level and the iteration trace.
    """
    def __init__(self, status, problem, state, trace, converged, iterations):
        """
        Initializes a SolveResult.  Built by naipm.solver.solve.

        Parameters
        ----------
        status : str
            One of 'Optimal', 'OriginalInfeasible', 'OriginalUnbounded' or
            'IterationLimit'.
        problem : NAQP or EmbeddedNAQP
            The problem that was solved.
        state : IterateState
            The returned iterate, the last one or the best one when the
            iteration limit was hit.
        trace : list of IterationRecord
            One record for the starting point and one per iteration.
        converged : bool
            True if the convergence test passed.
        iterations : int
            The number of iterations performed.
        """
        if status not in statuses:
            raise ValueError(f'unknown status {status!r}')
        self.__status = status
        self.__problem = problem
        self.__state = state
        self.__trace = list(trace)
        self.__converged = bool(converged)
        self.__iterations = int(iterations)

        if isinstance(problem, EmbeddedNAQP):
            self.__source = problem.source
            self.__x_source = state.x[:problem.source.n]
        else:
            self.__source = problem
            self.__x_source = state.x

    @property
    def status(self):
        """str : The status of the original problem."""
        return self.__status

    @property
    def converged(self):
        """bool : True if the convergence test passed."""
        return self.__converged

    @property
    def iterations(self):
        """int : The number of iterations performed."""
        return self.__iterations

    @property
    def problem(self):
        """NAQP : The problem that was solved."""
        return self.__problem

    @property
    def state(self):
        """IterateState : The returned iterate."""
        return self.__state

    @property
    def x(self):
        """BanVector : The point in the original variables."""
        return self.__problem.restore(self.__state.x)

    @property
    def x_embedded(self):
        """BanVector : The full primal point of the solved problem."""
        return self.__state.x

    @property
    def lam(self):
        """BanVector : The equality multipliers of the solved problem."""
        return self.__state.lam

    @property
    def s(self):
        """BanVector : The dual slacks of the solved problem."""
        return self.__state.s

    @property
    def objective(self):
        """
        Ban : The objective of the embedded problem's source at x, in
        minimized sign.
        """
        return self.__source.objective(self.__x_source)

    @property
    def levels(self):
        """int : The number of priority levels of the objective."""
        return self.__source.levels

    @property
    def objective_levels(self):
        """list of float : The objective coefficients of alpha^0, eta, eta^2, ..."""
        objective = self.objective
        return [objective.coefficient(-k) for k in range(self.levels)]

    @property
    def trace(self):
        """list of IterationRecord : The iteration trace."""
        return list(self.__trace)

    def trace_frame(self, precision=None):
        """
        Tabulates the iteration trace.

        Parameters
        ----------
        precision : int, optional
            Significant digits of the BAN literals.  If not given the
            literals parse back to the identical values.

        Returns
        -------
        pandas.DataFrame
            Columns iter, mu, x1 ... xn as BAN literals and f_level_0 ...
            f_level_{levels-1} as floats.
        """
        rows = []
        for record in self.__trace:
            row = {}
            row['iter'] = record.iteration
            row['mu'] = record.mu.format(precision)
            for j, value in enumerate(record.x):
                row[f'x{j+1}'] = value.format(precision)
            for k in range(self.levels):
                row[f'f_level_{k}'] = record.objective.coefficient(-k)
            rows.append(row)
        return pd.DataFrame(rows)

    def diagnostics(self):
        """
        The variables that explain a non-optimal status.

        Returns
        -------
        dict
            For an embedded problem the artificial variable and the dual of
            the bounding row as BAN literals.  Empty otherwise.
        """
        info = {}
        if isinstance(self.__problem, EmbeddedNAQP):
            problem = self.__problem
            info['artificial'] = self.__state.x[problem.artificial_index].format()
            info['bound-dual'] = self.__state.lam[problem.bound_row].format()
            if self.__status == ORIGINAL_INFEASIBLE:
                info['lam'] = self.__state.lam[:problem.source.m].format()
            elif self.__status == ORIGINAL_UNBOUNDED:
                info['x'] = self.x.format()
        return info

    def asmodel(self):
        """
        Returns the result as data model content.

        Returns
        -------
        DataModelDict
            Values are written as BAN literals, per-level objective
            coefficients as floats.
        """
        model = DM()
        model['solve-result'] = result = DM()
        if self.__source.name is not None:
            result['name'] = self.__source.name
        result['status'] = self.__status
        result['converged'] = self.__converged
        result['iterations'] = self.__iterations
        result['x'] = self.x.format()
        result['x-embedded'] = self.x_embedded.format()
        result['lam'] = self.lam.format()
        result['s'] = self.s.format()
        result['objective'] = self.objective.format()
        result['objective-levels'] = self.objective_levels
        if self.__status != OPTIMAL:
            diagnostics = self.diagnostics()
            if len(diagnostics) > 0:
                result['diagnostics'] = DM(diagnostics)

        result['trace'] = []
        for record in self.__trace:
            entry = DM()
            entry['iter'] = record.iteration
            entry['mu'] = record.mu.format()
            entry['x'] = record.x.format()
            entry['objective'] = record.objective.format()
            entry['objective-levels'] = [record.objective.coefficient(-k)
                                         for k in range(self.levels)]
            result['trace'].append(entry)
        return model

    def __str__(self):
        return (f'{self.__status} after {self.__iterations} iterations: '
                f'x = {self.x}, f = {self.objective.format(4)}')
