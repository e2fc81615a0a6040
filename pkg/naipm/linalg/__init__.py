# coding: utf-8
from .BanVector import BanVector
from .BanMatrix import BanMatrix
from .products import mat_mul, transpose, hadamard, diag
from .lu_solve import lu_solve
from .euclidean_norm import euclidean_norm

__all__ = sorted(['BanVector', 'BanMatrix', 'mat_mul', 'transpose', 'hadamard',
                  'diag', 'lu_solve', 'euclidean_norm'])
