"""Forest scaling, dehomogenization, rehomogenization, reduction,
certificates."""

import random
from fractions import Fraction

from slackkit import (Ideal, Polynomial, contains_flag, dehomogenized_ideal,
                      forest_from_ones, ideal_equals, irrationality_certificate,
                      is_multihomogeneous, non_incidence_graph, rational_roots,
                      reduced_slack_matrix, rehomogenize_ideal,
                      rehomogenize_poly, set_ones, set_ones_forest,
                      slack_ideal, slack_matrix, specific_slack_matrix,
                      symbolic_slack_matrix)
from slackkit.errors import (ComplementNotSimplicialError,
                             NeedsNumericDataError, NotAForestError)
from conftest import PERLES_ONES, PRISM_VERTICES, SQUARE_VERTICES, poly
from test_geometry import unit_simplex

import pytest

# spanning forest of the prism's non-incidence graph used throughout:
# every variable except x7 and x11
PRISM_FOREST_ONES = (0, 1, 2, 3, 4, 5, 6, 8, 9, 10)


def prism_sym():
    return symbolic_slack_matrix(specific_slack_matrix("prism"))


def test_non_incidence_graph_square_is_cycle():
    g = non_incidence_graph(symbolic_slack_matrix(slack_matrix(SQUARE_VERTICES)))
    assert len(g.nodes) == 8
    assert len(g.edges) == 8
    assert all(len(g.adjacency[n]) == 2 for n in g.nodes)


def test_non_incidence_graph_prism():
    g = non_incidence_graph(prism_sym())
    assert len(g.nodes) == 11
    assert len(g.edges) == 12


def test_set_ones_forest_survivor_counts():
    for name, expected in ((prism_sym(), 2),
                           (symbolic_slack_matrix(slack_matrix(SQUARE_VERTICES)), 1)):
        scaled, forest = set_ones_forest(name)
        assert len(scaled.surviving_variables()) == expected
        assert len(forest.edges) == name.nvars - expected


def test_set_ones_forest_single_cell():
    scaled, forest = set_ones_forest(symbolic_slack_matrix([[1]]))
    assert scaled.surviving_variables() == []
    assert len(forest.edges) == 1


def test_forest_size_matches_components():
    for sym in (prism_sym(), specific_slack_matrix("perles-reduced")):
        g = non_incidence_graph(sym)
        _, forest = set_ones_forest(sym)
        components = len(forest.roots)
        assert len(forest.edges) == len(g.nodes) - components


def test_set_ones_accepts_spanning_tree():
    scaled = set_ones(specific_slack_matrix("perles-reduced"), PERLES_ONES)
    assert len(scaled.ones_at) == 24  # 25 graph nodes - 1
    assert len(scaled.surviving_variables()) == 12


def test_set_ones_rejects_cycle():
    sym = symbolic_slack_matrix(slack_matrix(SQUARE_VERTICES))
    with pytest.raises(NotAForestError):
        set_ones(sym, range(8))  # the whole 8-cycle


def test_set_ones_empty_set():
    sym = prism_sym()
    scaled = set_ones(sym, ())
    assert scaled.surviving_variables() == list(range(12))


def test_prism_dehomogenized_ideal():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    I = dehomogenized_ideal(3, Y)
    assert {g.to_string() for g in I.groebner_basis()} == {"x7 - 1", "x11 - 1"}


def test_simplex_dehomogenized_ideal_is_zero():
    sym = symbolic_slack_matrix(slack_matrix(unit_simplex(3)))
    Y, _ = set_ones_forest(sym)
    assert dehomogenized_ideal(3, Y).is_zero()


PERLES_DEHOMOGENIZED = {
    "x35^2 + x35 - 1",
    "x33 - x35 - 1",
    "x24 - x35",
    "x23 - x35",
    "x22 - 1",
    "x19 - x35",
    "x18 - x35",
    "x13 - x35 - 1",
    "x11 - x35",
    "x10 - 1",
    "x2 - 1",
    "x1 - x35 - 1",
}


def test_perles_dehomogenized_ideal():
    Y = set_ones(specific_slack_matrix("perles-reduced"), PERLES_ONES)
    I = dehomogenized_ideal(8, Y)
    assert {g.to_string() for g in I.groebner_basis()} == PERLES_DEHOMOGENIZED


def test_rehomogenize_leaf_trace():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    F = forest_from_ones(Y)
    p = poly(12, (1, {7: 1}), (-1, {11: 1}))  # x7 - x11
    assert rehomogenize_poly(p, Y, F).to_string() == \
        "x4*x7*x9*x10 - x5*x6*x8*x11"


def test_rehomogenize_constant_term():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    F = forest_from_ones(Y)
    p = poly(12, (1, {7: 1}), (-1, {}))  # x7 - 1
    expected = poly(12, (1, {1: 1, 2: 1, 4: 1, 7: 1}),
                    (-1, {0: 1, 3: 1, 5: 1, 6: 1}))
    assert rehomogenize_poly(p, Y, F) == expected


def test_rehomogenize_fixes_multihomogeneous_input():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    F = forest_from_ones(Y)
    p = poly(12, (1, {0: 1, 3: 1, 5: 1, 6: 1}), (-1, {1: 1, 2: 1, 4: 1, 7: 1}))
    assert rehomogenize_poly(p, Y, F) == p


def test_rehomogenized_polys_multihomogeneous():
    sym = prism_sym()
    grading = sym.multigrading()
    Y = set_ones(sym, PRISM_FOREST_ONES)
    F = forest_from_ones(Y)
    for g in dehomogenized_ideal(3, Y).groebner_basis():
        assert is_multihomogeneous(rehomogenize_poly(g, Y, F), grading)


PRISM_SLACK_BINOMIALS = {
    "x4*x7*x9*x10 - x5*x6*x8*x11",
    "x0*x3*x9*x10 - x1*x2*x8*x11",
    "x0*x3*x5*x6 - x1*x2*x4*x7",
}


def test_prism_rehomogenized_ideal():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    H = rehomogenize_ideal(3, Y)
    assert {g.to_string() for g in H.groebner_basis()} == PRISM_SLACK_BINOMIALS


def test_prism_rehomogenized_equals_slack_ideal():
    Y = set_ones(prism_sym(), PRISM_FOREST_ONES)
    assert ideal_equals(rehomogenize_ideal(3, Y),
                        slack_ideal(3, specific_slack_matrix("prism")))


def test_square_rehomogenized_equals_slack_ideal():
    sym = symbolic_slack_matrix(slack_matrix(SQUARE_VERTICES))
    Y, _ = set_ones_forest(sym)
    assert ideal_equals(rehomogenize_ideal(2, Y), slack_ideal(2, sym))


def test_simplex_rehomogenized_ideal_is_zero():
    sym = symbolic_slack_matrix(slack_matrix(unit_simplex(3)))
    Y, _ = set_ones_forest(sym)
    assert rehomogenize_ideal(3, Y).is_zero()


def divide_by_common_forest_factor(p, forest_vars, order=None):
    """Divide p by the product of forest variables dividing every term."""
    common = None
    for mono in p.terms:
        masked = tuple(e if i in forest_vars else 0
                       for i, e in enumerate(mono))
        if common is None:
            common = masked
        else:
            common = tuple(min(a, b) for a, b in zip(common, masked))
    from slackkit.poly import mono_div
    return Polynomial(p.nvars,
                      {mono_div(m, common): c for m, c in p.terms.items()})


def test_rehomogenize_inverts_dehomogenize_on_prism_minors():
    # every 5x5 minor of the prism: H(p^F) = p / common forest factor
    import itertools
    from slackkit.slack import _entry_grid, pattern_minor
    sym = prism_sym()
    Y = set_ones(sym, PRISM_FOREST_ONES)
    F = forest_from_ones(Y)
    grid, _ = _entry_grid(sym)
    forest_vars = set(PRISM_FOREST_ONES)
    for rows in itertools.combinations(range(6), 5):
        p = pattern_minor(grid, rows, range(5), sym.nvars)
        if p.is_zero():
            continue
        dehom = p.substitute_ones(forest_vars)
        assert rehomogenize_poly(dehom, Y, F) == \
            divide_by_common_forest_factor(p, forest_vars)


def test_prism_contains_flag():
    S = slack_matrix(PRISM_VERTICES)
    assert contains_flag([0, 1, 2], S)
    assert not contains_flag([2, 3], S)


def test_square_opposite_edges_contain_no_flag():
    S = slack_matrix(SQUARE_VERTICES)
    disjoint = [j for j in range(4) if not (S.incidence[0] & S.incidence[j])]
    assert not contains_flag([0, disjoint[0]], S)


def test_simplex_contains_flag():
    S = slack_matrix(unit_simplex(3))
    assert contains_flag(range(4), S)


def test_contains_flag_needs_numeric_data():
    with pytest.raises(NeedsNumericDataError):
        contains_flag([0, 1], specific_slack_matrix("perles-reduced"))


def test_reduced_slack_matrix_of_square():
    # all square facets are simplicial; greedy search keeps a 2-column flag
    S = slack_matrix(SQUARE_VERTICES)
    R = reduced_slack_matrix(2, S)
    assert R.ncols == 2


def test_reduced_slack_matrix_of_simplex():
    S = slack_matrix(unit_simplex(3))
    R = reduced_slack_matrix(3, S)
    assert R.ncols == 3


def test_reduced_slack_matrix_keeps_non_simplicial():
    S = slack_matrix(PRISM_VERTICES)
    R = reduced_slack_matrix(3, S)
    # the prism's two triangle facets are simplicial, the three squares not
    non_simplicial = sum(1 for inc in S.incidence if len(inc) != 3)
    assert R.ncols >= non_simplicial


def test_reduced_slack_matrix_rejects_flagless_columns():
    from slackkit.errors import NoFlagFoundError
    S = slack_matrix(SQUARE_VERTICES)
    disjoint = [j for j in range(4) if not (S.incidence[0] & S.incidence[j])]
    with pytest.raises(NoFlagFoundError):
        reduced_slack_matrix(2, S, flag_indices=[0, disjoint[0]])


def test_rational_roots_quadratic():
    assert rational_roots(poly(1, (1, {0: 2}), (-1, {})), 0) == \
        [Fraction(-1), Fraction(1)]
    assert rational_roots(poly(1, (1, {0: 2}), (-2, {})), 0) == []


def test_certificate_rational_root_is_inconclusive():
    I = Ideal([poly(1, (1, {0: 1}), (-1, {}))])  # x0 - 1
    cert = irrationality_certificate(I, 0)
    assert cert.kind == "inconclusive"
    assert cert.rational_roots == (Fraction(1),)


def test_certificate_sqrt2_is_irrational():
    I = Ideal([poly(1, (1, {0: 2}), (-2, {}))])  # x0^2 - 2
    cert = irrationality_certificate(I, 0)
    assert cert.kind == "irrational"
    assert cert.rational_roots == ()


def test_perles_certificate():
    Y = set_ones(specific_slack_matrix("perles-reduced"), PERLES_ONES)
    I = dehomogenized_ideal(8, Y)
    cert = irrationality_certificate(I, 35)
    assert cert.kind == "irrational"
    assert cert.minimal_polynomial.to_string() == "x35^2 + x35 - 1"
    assert cert.rational_roots == ()
