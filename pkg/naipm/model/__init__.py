# coding: utf-8
from .LexProblem import LexProblem, Objective, Constraint
from .NAQP import NAQP, Column
from .EmbeddedNAQP import EmbeddedNAQP
from .scalarize_lex import scalarize_lex
from .to_standard_form import to_standard_form
from .estimate_weights import estimate_weights
from .embed import embed, unembed
from .prepare import prepare, embed_modes

__all__ = sorted(['LexProblem', 'Objective', 'Constraint', 'NAQP', 'Column',
                  'EmbeddedNAQP', 'scalarize_lex', 'to_standard_form',
                  'estimate_weights', 'embed', 'unembed', 'prepare', 'embed_modes'])
