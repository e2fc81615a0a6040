# coding: utf-8
# naipm imports
from ..ban import Ban
from ..errors import ConfigurationError
from .LexProblem import LexProblem, Objective

def scalarize_lex(problem):
    """
    Collapses the prioritized objectives of a LexProblem into one
    non-Archimedean objective weighted by eta^k for the objective of
    priority k (counting from 0), and turns maximization into minimization.

    Parameters
    ----------
    problem : LexProblem
        The problem to scalarize.

    Returns
    -------
    LexProblem
        A single-objective minimization problem with the same constraints
        and bounds.  Its negated attribute records whether the objective
        was negated and its levels attribute the original objective count.

    Raises
    ------
    naipm.errors.ConfigurationError
        If there are more objectives than the Ban length can represent.
    """
    objectives = problem.objectives
    length = problem.length
    if len(objectives) > length:
        raise ConfigurationError(f'{len(objectives)} objectives need a Ban length of at '
                                 f'least {len(objectives)}, got {length}; raise the Ban length')

    Q = None
    c = None
    for k, objective in enumerate(objectives):
        weight = Ban.eta(k, length=length)
        c = objective.c * weight if c is None else c + objective.c * weight
        if objective.Q is not None:
            Q = objective.Q * weight if Q is None else Q + objective.Q * weight

    negated = problem.negated
    if problem.sense == 'maximize':
        c = -c
        if Q is not None:
            Q = -Q
        negated = not negated

    return LexProblem(sense='minimize', objectives=[Objective(Q, c)],
                      constraints=problem.constraints, bounds=problem.bounds,
                      name=problem.name, negated=negated,
                      levels=problem.levels, embedding=problem.embedding,
                      length=length)
