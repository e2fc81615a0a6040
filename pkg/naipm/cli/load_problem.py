# coding: utf-8
# Standard Python libraries
from pathlib import Path

# naipm imports
from ..model import LexProblem
from ..fixtures import fixture_path

def load_problem(input, length=None):
    """
    Loads a problem file, or a bundled fixture when input is a fixture name
    rather than an existing path.

    Parameters
    ----------
    input : str or Path
        The problem file or fixture name.
    length : int, optional
        The Ban length of the values.

    Returns
    -------
    naipm.model.LexProblem

    Raises
    ------
    FileNotFoundError
        If input is neither a file nor a fixture name.
    ValueError
        If the file content is not a valid problem.
    """
    path = Path(input)
    if not path.is_file():
        try:
            path = fixture_path(str(input))
        except KeyError:
            raise FileNotFoundError(f'no problem file or fixture named {str(input)!r}') from None
    return LexProblem(path, length=length)
