# coding: utf-8
from . import tools
from . import errors
from .Settings import Settings
from . import ban
from .ban import Ban
from . import linalg
from . import model
from . import solver
from .solver import solve
from . import fixtures
from . import cli

__version__ = '0.1.0'

__all__ = sorted(['tools', 'errors', 'Settings', 'ban', 'Ban', 'linalg', 'model',
                  'solver', 'solve', 'fixtures', 'cli'])
