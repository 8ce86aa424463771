"""Built-in slack matrices of specific polytopes.

"square" and "prism" are numeric; "perles-reduced" is the 12x13 symbolic
support pattern of the Perles projectively unique 8-polytope restricted to
its 13 non-simplicial facets; "sphere1963-reduced" is the 14x6 scaled
symbolic matrix of the non-realizable quasi-simplicial sphere #1963, with
variables renumbered consecutively and its fixed ones recorded.
"""

from __future__ import annotations

from .errors import UnknownNameError
from .rationals import RationalMatrix
from .slack import ScaledSlackMatrix, SlackMatrix, SymbolicSlackMatrix

_SQUARE = [
    [0, 1, 0, 1],
    [1, 0, 0, 1],
    [0, 1, 1, 0],
    [1, 0, 1, 0],
]

_PRISM = [
    [0, 1, 0, 0, 1],
    [1, 0, 0, 0, 1],
    [0, 1, 1, 0, 0],
    [1, 0, 1, 0, 0],
    [0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0],
]

# support columns per row of the 12x13 reduced Perles matrix; variables
# x0..x35 are assigned row-major over the support cells
_PERLES_ROWS = [
    (3, 4, 5),
    (3, 6, 7, 8),
    (6, 9, 10),
    (4, 11, 12),
    (7, 9, 11),
    (0, 10, 12),
    (1, 8),
    (2, 5),
    (0, 3, 7),
    (1, 4, 9),
    (2, 6, 12),
    (5, 8, 10, 11),
]

# the scaling used in the Perles non-realizability certificate
PERLES_ONES = (0, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 16, 17, 20, 21, 25, 26,
               27, 28, 29, 30, 31, 32, 34)

# 14x6 reduced slack matrix of sphere #1963: support columns per row;
# the cells fixed to the value 1 are listed separately below
_SPHERE_ROWS = [
    (1,),
    (1, 4),
    (1, 3),
    (1, 2, 3),
    (1, 2, 4, 5),
    (1, 2, 3, 4, 5),
    (1, 3, 4, 5),
    (0, 2, 4, 5),
    (0, 2, 3, 5),
    (0, 2, 3, 4, 5),
    (0, 3),
    (0, 2, 4, 5),
    (0, 2, 3, 4, 5),
    (0, 2, 3, 4, 5),
]

# (row, col) cells of the sphere matrix whose entries are fixed to 1
_SPHERE_ONES_CELLS = [
    (0, 1), (1, 4), (2, 1), (3, 1), (4, 5), (5, 5),
    (6, 1), (6, 3), (6, 4), (6, 5),
    (7, 5), (8, 5), (9, 5), (10, 3),
    (11, 0), (11, 2), (11, 5), (12, 5), (13, 5),
]


def _pattern_from_rows(row_supports, ncols):
    return [[1 if j in sup else 0 for j in range(ncols)] for sup in row_supports]


def specific_slack_matrix(name: str):
    """Stored slack matrices: "square", "prism", "perles-reduced",
    "sphere1963-reduced"."""
    if name == "square":
        return SlackMatrix(RationalMatrix(_SQUARE), source="polytope")
    if name == "prism":
        return SlackMatrix(RationalMatrix(_PRISM), source="polytope")
    if name == "perles-reduced":
        return SymbolicSlackMatrix(_pattern_from_rows(_PERLES_ROWS, 13))
    if name == "sphere1963-reduced":
        sym = SymbolicSlackMatrix(_pattern_from_rows(_SPHERE_ROWS, 6))
        ones = frozenset(sym.var_at[cell] for cell in _SPHERE_ONES_CELLS)
        return ScaledSlackMatrix(sym, ones)
    raise UnknownNameError(f"no built-in slack matrix named {name!r}")


BUILTIN_NAMES = ("square", "prism", "perles-reduced", "sphere1963-reduced")
