# coding: utf-8
# Standard Python libraries
from pathlib import Path

# naipm imports
from ..solver import SolverConfig
from ..model import embed_modes

trace_formats = ('table', 'csv', 'json')

class RunConfig():
    """
    Settings of one command-line run.  Solver values left as None fall back
    to the saved user settings.
    """
    def __init__(self, input, eps=None, max_it=None, ban_length=None,
                 trace=None, trace_format='table', embed='auto', verbose=False,
                 settings=None):
        """
        Initializes a RunConfig.

        Parameters
        ----------
        input : str or Path
            The problem file, or the name of a bundled fixture.
        eps : float, optional
            Convergence tolerance.
        max_it : int, optional
            Maximum number of iterations.
        ban_length : int, optional
            Ban length L.
        trace : str or Path, optional
            File the iteration trace is written to.  If not given the trace
            is printed.
        trace_format : str, optional
            'table' (default), 'csv' or 'json'.
        embed : str, optional
            'auto' (default) embeds the problem unless its file declares it
            feasible and bounded, 'on' always embeds and 'off' solves the
            standard form directly.
        verbose : bool, optional
            If True, solver progress is printed.
        settings : naipm.Settings, optional
            The saved defaults to fall back on.  Default loads the user's
            settings file.
        """
        self.input = input
        self.trace = None if trace is None else Path(trace)
        self.trace_format = trace_format
        self.embed = embed
        self.verbose = bool(verbose)

        # Builds and validates the solver settings up front
        self.__solver = SolverConfig.from_settings(settings, eps=eps, max_it=max_it,
                                                   ban_length=ban_length)

    @property
    def trace_format(self):
        """str : The trace output format."""
        return self.__trace_format

    @trace_format.setter
    def trace_format(self, value):
        if value not in trace_formats:
            raise ValueError(f'trace format must be one of {trace_formats}')
        self.__trace_format = value

    @property
    def embed(self):
        """str : The embedding mode."""
        return self.__embed

    @embed.setter
    def embed(self, value):
        if value not in embed_modes:
            raise ValueError(f'embed must be one of {embed_modes}')
        self.__embed = value

    @property
    def solver(self):
        """naipm.solver.SolverConfig : The solver settings of the run."""
        return self.__solver

    @property
    def eps(self):
        """float : Convergence tolerance."""
        return self.__solver.eps

    @property
    def max_it(self):
        """int : Maximum number of iterations."""
        return self.__solver.max_it

    @property
    def ban_length(self):
        """int : Ban length L."""
        return self.__solver.ban_length
