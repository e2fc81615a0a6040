# coding: utf-8
# naipm imports
from .to_standard_form import to_standard_form
from .embed import embed

# Embedding modes: auto follows the embedding flag of the problem
embed_modes = ('auto', 'on', 'off')

def prepare(problem, mode='auto'):
    """
    Builds the standard-form program handed to the solver.

    Parameters
    ----------
    problem : LexProblem
        The problem as loaded.
    mode : str, optional
        'on' always embeds, 'off' never does and 'auto' (default) embeds
        unless the problem declares itself feasible and bounded with
        embedding set to False.

    Returns
    -------
    NAQP or EmbeddedNAQP

    Raises
    ------
    ValueError
        For an unknown mode or a problem with no standard form.
    """
    if mode not in embed_modes:
        raise ValueError(f'embed mode must be one of {embed_modes}, got {mode!r}')
    standard = to_standard_form(problem)
    if mode == 'on' or (mode == 'auto' and problem.embedding):
        return embed(standard)
    return standard
