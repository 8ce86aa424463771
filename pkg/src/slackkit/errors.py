"""Exception hierarchy shared across the package.

Domain errors exit the CLI with code 1, parse errors with code 2.
"""


class SlackkitError(Exception):
    """Base class for all domain errors raised by slackkit."""


class NonSquareError(SlackkitError):
    pass


class UniverseMismatchError(SlackkitError):
    pass


class UngradedVariableError(SlackkitError):
    pass


class ZeroDivisorPolynomialError(SlackkitError):
    pass


class NotFullDimensionalError(SlackkitError):
    pass


class NonVertexPointError(SlackkitError):
    pass


class SizeMismatchError(SlackkitError):
    pass


class DegeneratePatternError(SlackkitError):
    pass


class UnknownNameError(SlackkitError):
    pass


class NotAForestError(SlackkitError):
    pass


class NoCircuitsError(SlackkitError):
    pass


class NotACofacetError(SlackkitError):
    pass


class NeedsNumericDataError(SlackkitError):
    pass


class NoFlagFoundError(SlackkitError):
    pass


class ComplementNotSimplicialError(SlackkitError):
    pass


class ParseError(Exception):
    """Base class for input parsing failures (CLI exit code 2)."""


class RaggedRowsError(ParseError):
    pass


class BadRationalError(ParseError):
    pass
