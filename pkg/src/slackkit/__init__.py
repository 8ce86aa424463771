"""Exact-arithmetic toolkit for slack matrices and slack ideals."""

from .rationals import Rational, RationalMatrix, parse_rational, format_rational
from .poly import (
    Polynomial,
    Multigrading,
    Lex,
    GRevLex,
    BlockOrder,
    multidegree,
    is_multihomogeneous,
)
from .groebner import (
    Ideal,
    buchberger,
    normal_form,
    saturate,
    saturate_by_variables,
    eliminate,
    radical_membership,
    reduced_ideal,
    ideal_equals,
)
from .geometry import (
    PointConfiguration,
    AffineHyperplane,
    Circuit,
    GaleTransform,
    facets_from_vertices,
    matroid_hyperplanes,
    gale_transform,
    positive_circuits,
    pluecker,
)
from .slack import (
    SlackMatrix,
    SymbolicSlackMatrix,
    ScaledSlackMatrix,
    slack_matrix,
    symbolic_slack_matrix,
    slack_ideal,
    slack_from_gale_circuits,
    slack_from_gale_plucker,
    graphic_ideal,
    minor_ideal_generators,
    count_minors,
)
from .scaling import (
    NonIncidenceGraph,
    SpanningForest,
    non_incidence_graph,
    set_ones_forest,
    set_ones,
    forest_from_ones,
    dehomogenized_ideal,
    rehomogenize_poly,
    rehomogenize_ideal,
    contains_flag,
    reduced_slack_matrix,
    Certificate,
    rational_roots,
    irrationality_certificate,
)
from .builtins import specific_slack_matrix, BUILTIN_NAMES
from . import errors

__all__ = [
    "Rational",
    "RationalMatrix",
    "parse_rational",
    "format_rational",
    "Polynomial",
    "Multigrading",
    "Lex",
    "GRevLex",
    "BlockOrder",
    "multidegree",
    "is_multihomogeneous",
    "Ideal",
    "buchberger",
    "normal_form",
    "saturate",
    "saturate_by_variables",
    "eliminate",
    "radical_membership",
    "reduced_ideal",
    "ideal_equals",
    "PointConfiguration",
    "AffineHyperplane",
    "Circuit",
    "GaleTransform",
    "facets_from_vertices",
    "matroid_hyperplanes",
    "gale_transform",
    "positive_circuits",
    "pluecker",
    "SlackMatrix",
    "SymbolicSlackMatrix",
    "ScaledSlackMatrix",
    "slack_matrix",
    "symbolic_slack_matrix",
    "slack_ideal",
    "slack_from_gale_circuits",
    "slack_from_gale_plucker",
    "graphic_ideal",
    "minor_ideal_generators",
    "count_minors",
    "NonIncidenceGraph",
    "SpanningForest",
    "non_incidence_graph",
    "set_ones_forest",
    "set_ones",
    "forest_from_ones",
    "dehomogenized_ideal",
    "rehomogenize_poly",
    "rehomogenize_ideal",
    "contains_flag",
    "reduced_slack_matrix",
    "Certificate",
    "rational_roots",
    "irrationality_certificate",
    "specific_slack_matrix",
    "BUILTIN_NAMES",
    "errors",
]
