# coding: utf-8
# Standard Python libraries
import sys

# naipm imports
from ..ban import using_length
from ..model import to_standard_form, embed
from .load_problem import load_problem

def run_embed(cfg):
    """
    Prints the embedded standard form of a problem as JSON.

    Parameters
    ----------
    cfg : RunConfig
        The run settings.  Only input and ban_length are used.

    Returns
    -------
    int
        0 on success, 1 for input errors.
    """
    try:
        with using_length(cfg.ban_length):
            problem = load_problem(cfg.input, length=cfg.ban_length)
            embedded = embed(to_standard_form(problem))
    except (OSError, ValueError) as err:
        print(f'error: {err}', file=sys.stderr)
        return 1

    print(embedded.asmodel().json(indent=4))
    return 0
