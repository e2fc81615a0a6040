# coding: utf-8
# naipm imports
from ..ban import get_length

class SolverConfig():
    """
    Tolerances and limits of one solve.
    """
    def __init__(self, eps=1e-8, max_it=50, ban_length=None, step_damping=0.99,
                 recenter_coefficient=1.0):
        """
        Initializes a SolverConfig.

        Parameters
        ----------
        eps : float, optional
            Convergence tolerance, 0 < eps < 1.  Default value is 1e-8.
        max_it : int, optional
            Maximum number of iterations, at least 1.  Default value is 50.
        ban_length : int, optional
            Ban length L.  Default value is the process-wide length.
        step_damping : float, optional
            Fraction of the step to the boundary that is taken,
            0 < step_damping < 1.  Default value is 0.99.
        recenter_coefficient : float, optional
            Scale of the centrality target used when close-to-zero entries
            are re-set.  Default value is 1.0.
        """
        self.eps = eps
        self.max_it = max_it
        self.ban_length = get_length() if ban_length is None else ban_length
        self.step_damping = step_damping
        self.recenter_coefficient = recenter_coefficient

    @classmethod
    def from_settings(cls, settings=None, **kwargs):
        """
        Builds a SolverConfig from saved user settings.  Keyword arguments
        that are not None override the saved values.

        Parameters
        ----------
        settings : naipm.Settings, optional
            The settings to read.  Default loads the user's settings file.
        **kwargs : any, optional
            Overrides for eps, max_it, ban_length, step_damping and
            recenter_coefficient.

        Returns
        -------
        SolverConfig
        """
        if settings is None:
            from ..Settings import Settings
            settings = Settings()
        values = {
            'eps': settings.eps,
            'max_it': settings.max_it,
            'ban_length': settings.ban_length,
            'step_damping': settings.step_damping,
            'recenter_coefficient': settings.recenter_coefficient,
        }
        for key, value in kwargs.items():
            if key not in values:
                raise TypeError(f'unknown solver setting {key!r}')
            if value is not None:
                values[key] = value
        return cls(**values)

    @property
    def eps(self):
        """float : Convergence tolerance."""
        return self.__eps

    @eps.setter
    def eps(self, value):
        value = float(value)
        if not 0.0 < value < 1.0:
            raise ValueError('eps must be between 0 and 1')
        self.__eps = value

    @property
    def max_it(self):
        """int : Maximum number of iterations."""
        return self.__max_it

    @max_it.setter
    def max_it(self, value):
        value = int(value)
        if value < 1:
            raise ValueError('max_it must be at least 1')
        self.__max_it = value

    @property
    def ban_length(self):
        """int : Ban length L."""
        return self.__ban_length

    @ban_length.setter
    def ban_length(self, value):
        value = int(value)
        if value < 1:
            raise ValueError('ban_length must be at least 1')
        self.__ban_length = value

    @property
    def step_damping(self):
        """float : Fraction of the step to the boundary that is taken."""
        return self.__step_damping

    @step_damping.setter
    def step_damping(self, value):
        value = float(value)
        if not 0.0 < value < 1.0:
            raise ValueError('step_damping must be between 0 and 1')
        self.__step_damping = value

    @property
    def recenter_coefficient(self):
        """float : Scale of the re-centering target."""
        return self.__recenter_coefficient

    @recenter_coefficient.setter
    def recenter_coefficient(self, value):
        value = float(value)
        if not value > 0.0:
            raise ValueError('recenter_coefficient must be positive')
        self.__recenter_coefficient = value

    def __repr__(self):
        return (f'SolverConfig(eps={self.eps!r}, max_it={self.max_it!r}, '
                f'ban_length={self.ban_length!r}, step_damping={self.step_damping!r}, '
                f'recenter_coefficient={self.recenter_coefficient!r})')
