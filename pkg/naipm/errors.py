# coding: utf-8
# https://numpy.org/
from numpy.linalg import LinAlgError

__all__ = ['BanSyntaxError', 'BanOverflowError', 'ConfigurationError',
           'SingularMatrixError', 'NewtonSystemError']

class BanSyntaxError(ValueError):
    """
    Raised when a BAN literal cannot be parsed.  The position attribute gives
    the character offset in the original text where parsing failed.
    """
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f'{message} at position {position}'
            if text is not None:
                message += f' in {text!r}'
        super().__init__(message)

class BanOverflowError(FloatingPointError, ValueError):
    """Raised when a Ban would hold an infinite or NaN coefficient."""

class ConfigurationError(ValueError):
    """Raised when run settings cannot represent the requested problem."""

class SingularMatrixError(LinAlgError):
    """
    Raised when Gaussian elimination finds a pivot column with no nonzero
    candidates.  The step attribute is the elimination column.
    """
    def __init__(self, message, step=None):
        self.step = step
        super().__init__(message)

class NewtonSystemError(SingularMatrixError):
    """Raised when the Newton block system of an iteration is singular."""
    def __init__(self, message, step=None, iteration=None):
        self.iteration = iteration
        super().__init__(message, step=step)
