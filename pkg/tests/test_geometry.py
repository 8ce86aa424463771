"""Facet enumeration, matroid hyperplanes, Gale transforms, circuits."""

import itertools
from fractions import Fraction

from slackkit import (GaleTransform, PointConfiguration, RationalMatrix,
                      facets_from_vertices, gale_transform, matroid_hyperplanes,
                      pluecker, positive_circuits, slack_matrix)
from slackkit.errors import (NonVertexPointError, NotFullDimensionalError,
                             SizeMismatchError)
from conftest import PRISM_VERTICES, SQUARE_VERTICES

import pytest


def unit_simplex(d):
    pts = [tuple(0 for _ in range(d))]
    for i in range(d):
        pts.append(tuple(1 if j == i else 0 for j in range(d)))
    return pts


def test_square_has_four_edges():
    facets = facets_from_vertices(PointConfiguration(SQUARE_VERTICES))
    assert len(facets) == 4
    for f in facets:
        assert len(f.incident) == 2


def test_simplex_facet_count():
    for d in (2, 3, 4):
        facets = facets_from_vertices(PointConfiguration(unit_simplex(d)))
        assert len(facets) == d + 1


def test_prism_has_five_facets():
    facets = facets_from_vertices(PointConfiguration(PRISM_VERTICES))
    assert len(facets) == 5


def test_facet_slacks_nonnegative_and_incidence_exact():
    V = PointConfiguration(PRISM_VERTICES)
    for f in facets_from_vertices(V):
        for i, p in enumerate(V.points):
            s = f.slack(p)
            assert s >= 0
            assert (s == 0) == (i in f.incident)


def test_facet_incident_span():
    V = PointConfiguration(PRISM_VERTICES)
    for f in facets_from_vertices(V):
        assert len(f.incident) >= 3
        rows = [[Fraction(1)] + list(V.points[i]) for i in f.incident]
        assert RationalMatrix(rows).rank() == 3


def test_not_full_dimensional_rejected():
    with pytest.raises(NotFullDimensionalError):
        facets_from_vertices(PointConfiguration([(0, 0), (1, 1), (2, 2)]))


def test_interior_point_rejected():
    pts = SQUARE_VERTICES + [(Fraction(1, 2), Fraction(1, 2))]
    with pytest.raises(NonVertexPointError):
        facets_from_vertices(PointConfiguration(pts))


def test_matroid_hyperplanes_of_square():
    hyps = matroid_hyperplanes(PointConfiguration(SQUARE_VERTICES))
    assert len(hyps) == 6
    assert sorted(tuple(sorted(h.incident)) for h in hyps) == \
        sorted(itertools.combinations(range(4), 2))


def test_matroid_hyperplanes_three_collinear_points():
    hyps = matroid_hyperplanes(PointConfiguration([(0,), (1,), (2,)]))
    assert sorted(tuple(sorted(h.incident)) for h in hyps) == [(0,), (1,), (2,)]


def test_matroid_hyperplanes_with_collinear_triple():
    # points (0,0),(1,0),(2,0) collinear plus an apex
    hyps = matroid_hyperplanes(PointConfiguration([(0, 0), (1, 0), (2, 0), (0, 1)]))
    incidences = sorted(tuple(sorted(h.incident)) for h in hyps)
    assert incidences == [(0, 1, 2), (0, 3), (1, 3), (2, 3)]


def test_gale_of_simplex_is_empty():
    G = gale_transform(PointConfiguration(unit_simplex(3)))
    assert G.matrix.nrows == 0
    assert G.n == 4


def test_gale_of_square():
    G = gale_transform(PointConfiguration(SQUARE_VERTICES))
    assert G.matrix.nrows == 1
    row = [G.matrix[0, j] for j in range(4)]
    scale = row[0]
    assert [x / scale for x in row] == [1, -1, 1, -1]


def test_gale_of_prism_shape():
    G = gale_transform(PointConfiguration(PRISM_VERTICES))
    assert (G.matrix.nrows, G.matrix.ncols) == (2, 6)


def test_gale_rows_annihilate_homogenized_points():
    V = PointConfiguration(PRISM_VERTICES)
    G = gale_transform(V)
    H = V.homogenized()
    for i in range(G.matrix.nrows):
        for k in range(H.ncols):
            assert sum(G.matrix[i, j] * H[j, k] for j in range(6)) == 0


def test_no_positive_circuits_in_positive_column():
    G = GaleTransform(RationalMatrix([[1]]))
    assert positive_circuits(G) == []


def test_single_positive_circuit():
    G = GaleTransform(RationalMatrix([[1, -1]]))
    circuits = positive_circuits(G)
    assert len(circuits) == 1
    assert circuits[0].support == (0, 1)
    assert circuits[0].coefficients == (1, 1)


def test_square_gale_circuits():
    G = GaleTransform(RationalMatrix([[1, -1, 1, -1]]))
    circuits = positive_circuits(G)
    assert [c.support for c in circuits] == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert all(c.coefficients == (1, 1) for c in circuits)


def test_facet_complements_support_circuits():
    # Gale duality: each facet's complement supports a positive circuit
    for pts in (SQUARE_VERTICES, PRISM_VERTICES):
        V = PointConfiguration(pts)
        circuits = positive_circuits(gale_transform(V))
        supports = {c.support for c in circuits}
        for f in facets_from_vertices(V):
            comp = tuple(sorted(set(range(len(pts))) - f.incident))
            assert comp in supports


def test_pluecker_identity_and_sign():
    M = RationalMatrix.identity(3)
    assert pluecker(M, [0, 1, 2]) == 1
    assert pluecker(M, [1, 0, 2]) == -1


def test_pluecker_1x1():
    G = RationalMatrix([[1, -1, 1, -1]])
    assert pluecker(G, [1]) == -1


def test_pluecker_size_mismatch():
    with pytest.raises(SizeMismatchError):
        pluecker(RationalMatrix.identity(3), [0, 1])
