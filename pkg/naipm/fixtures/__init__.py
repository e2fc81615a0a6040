# coding: utf-8
# Standard Python libraries
from pathlib import Path

# https://github.com/usnistgov/DataModelDict
from DataModelDict import DataModelDict as DM

__all__ = ['directory', 'problem_names', 'fixture_path', 'load_fixture',
           'load_expectations']

directory = Path(__file__).parent

# Problem fixtures bundled with the package, in bench order
problem_names = ('exp1', 'exp2_unbounded', 'exp2_infeasible', 'exp3', 'exp4')

def fixture_path(name):
    """
    pathlib.Path : The file of a bundled fixture.

    Raises
    ------
    KeyError
        If no fixture has the given name.
    """
    path = Path(directory, f'{name}.json')
    if name not in problem_names + ('inversion',) or not path.is_file():
        raise KeyError(f'no bundled fixture named {name!r}')
    return path

def load_fixture(name, length=None):
    """
    Loads a bundled fixture.

    Parameters
    ----------
    name : str
        One of exp1, exp2_unbounded, exp2_infeasible, exp3, exp4 or
        inversion.
    length : int, optional
        The Ban length of the values.  Default is the process-wide length.

    Returns
    -------
    naipm.model.LexProblem or naipm.linalg.BanMatrix
        The problem, or the matrix of the inversion fixture.

    Raises
    ------
    KeyError
        If no fixture has the given name.
    """
    path = fixture_path(name)
    if name == 'inversion':
        from ..linalg import BanMatrix
        model = DM(path.read_text())
        return BanMatrix(model['inversion']['matrix'], length=length)

    from ..model import LexProblem
    return LexProblem(path, length=length)

def load_expectations():
    """DataModelDict : The stored bench expectations."""
    return DM(Path(directory, 'expectations.json').read_text())
