"""Shared fixtures: small vertex sets and a tiny polynomial builder."""

from fractions import Fraction

import pytest

from slackkit import Polynomial

SQUARE_VERTICES = [(0, 0), (1, 0), (1, 1), (0, 1)]
PRISM_VERTICES = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 0)]
PERLES_ONES = (0, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 16, 17, 20, 21,
               25, 26, 27, 28, 29, 30, 31, 32, 34)


def poly(nvars, *terms):
    """Build a polynomial from (coeff, {var: exp}) pairs."""
    p = Polynomial.zero(nvars)
    for coeff, exps in terms:
        mono = tuple(exps.get(i, 0) for i in range(nvars))
        p = p + Polynomial.monomial(mono, nvars, Fraction(coeff))
    return p


@pytest.fixture
def square_vertices():
    return SQUARE_VERTICES


@pytest.fixture
def prism_vertices():
    return PRISM_VERTICES


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance criteria pass/fail lines after the run."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
