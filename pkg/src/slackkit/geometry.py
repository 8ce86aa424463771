"""Desk-scale exact polyhedral and matroid geometry.

Facet enumeration is brute force over point subsets; everything runs over
exact rationals, so results are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import (NonVertexPointError, NotFullDimensionalError,
                     SizeMismatchError)
from .rationals import RationalMatrix


class PointConfiguration:
    """A list of n distinct points in Q^d."""

    def __init__(self, points):
        pts = [[Fraction(x) for x in p] for p in points]
        if not pts:
            raise ValueError("empty point configuration")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise ValueError("points of mixed dimension")
        if len({tuple(p) for p in pts}) != len(pts):
            raise ValueError("duplicate points")
        self.points = pts
        self.dim = d
        self.n = len(pts)

    def homogenized(self) -> RationalMatrix:
        """The n x (d+1) matrix [1 | V]."""
        return RationalMatrix([[Fraction(1)] + p for p in self.points])

    def __repr__(self):
        return f"PointConfiguration(n={self.n}, d={self.dim})"


@dataclass(frozen=True)
class AffineHyperplane:
    """Hyperplane {x : b - a.x = 0} with its incident point indices."""

    offset: Fraction
    normal: tuple
    incident: frozenset

    def slack(self, point) -> Fraction:
        return self.offset - sum(a * x for a, x in zip(self.normal, point))


@dataclass(frozen=True)
class Circuit:
    """Minimal positive dependence among Gale vectors."""

    support: tuple  # sorted point indices
    coefficients: tuple  # Fractions, parallel to support


class GaleTransform:
    """(n-d-1) x n matrix whose rows span the kernel of [1|V]^T."""

    def __init__(self, matrix: RationalMatrix):
        self.matrix = matrix

    @property
    def n(self):
        return self.matrix.ncols

    def __repr__(self):
        return f"GaleTransform({self.matrix.nrows}x{self.matrix.ncols})"


def _hyperplane_from_kernel_vector(vec, points):
    """Build an AffineHyperplane from a kernel vector of homogenized points."""
    b = vec[0]
    alpha = tuple(-x for x in vec[1:])
    incident = frozenset(
        i for i, p in enumerate(points)
        if b - sum(a * x for a, x in zip(alpha, p)) == 0)
    return AffineHyperplane(offset=b, normal=alpha, incident=incident)


def facets_from_vertices(V: PointConfiguration):
    """All facet hyperplanes of conv(V), slack-nonnegative, sorted by their
    incidence sets.  Inputs must be full-dimensional vertex sets."""
    d = V.dim
    hom = V.homogenized()
    if hom.rank() != d + 1:
        raise NotFullDimensionalError(
            f"points span affine dimension {hom.rank() - 1}, expected {d}")
    facets = {}
    for subset in itertools.combinations(range(V.n), d):
        sub = hom.submatrix(subset, range(d + 1))
        kernel = sub.kernel_basis()
        if kernel.nrows != 1:  # points not affinely independent
            continue
        hp = _hyperplane_from_kernel_vector(kernel.rows[0], V.points)
        slacks = [hp.slack(p) for p in V.points]
        if all(s >= 0 for s in slacks):
            pass
        elif all(s <= 0 for s in slacks):
            hp = AffineHyperplane(offset=-hp.offset,
                                  normal=tuple(-a for a in hp.normal),
                                  incident=hp.incident)
        else:
            continue
        facets[hp.incident] = hp
    # every input point must be a vertex: a vertex of a d-polytope lies on
    # at least d facets, interior/edge points on fewer
    counts = [0] * V.n
    for inc in facets:
        for i in inc:
            counts[i] += 1
    bad = [i for i, c in enumerate(counts) if c < d]
    if bad:
        raise NonVertexPointError(f"points {bad} are not vertices of the hull")
    return [facets[inc] for inc in sorted(facets, key=sorted)]


def matroid_hyperplanes(V: PointConfiguration):
    """All hyperplanes (rank r-1 flats) of the matroid of homogenized points.

    Normals come from kernel vectors and carry no canonical sign.
    """
    hom = V.homogenized()
    r = hom.rank()
    n = V.n
    flats = set()
    for subset in itertools.combinations(range(n), r - 1):
        if hom.submatrix(subset, range(hom.ncols)).rank() != r - 1:
            continue
        closure = set(subset)
        for k in range(n):
            if k in closure:
                continue
            if hom.submatrix(sorted(closure | {k}), range(hom.ncols)).rank() == r - 1:
                closure.add(k)
        flats.add(frozenset(closure))
    out = []
    for flat in sorted(flats, key=sorted):
        rows = hom.submatrix(sorted(flat), range(hom.ncols))
        kernel = rows.kernel_basis()
        vec = _pick_separating_kernel_vector(kernel, hom, flat)
        hp = _hyperplane_from_kernel_vector(vec, V.points)
        out.append(AffineHyperplane(offset=hp.offset, normal=hp.normal,
                                    incident=frozenset(flat)))
    return out


def _pick_separating_kernel_vector(kernel, hom, flat):
    """A kernel vector giving nonzero slack on every point off the flat."""
    off = [i for i in range(hom.nrows) if i not in flat]

    def ok(vec):
        return all(sum(v * x for v, x in zip(vec, hom.rows[i])) != 0 for i in off)

    for row in kernel.rows:
        if ok(row):
            return row
    # rank-deficient configuration: try small integer combinations
    for coeffs in itertools.product(range(-3, 4), repeat=kernel.nrows):
        if all(c == 0 for c in coeffs):
            continue
        vec = [sum(c * row[j] for c, row in zip(coeffs, kernel.rows))
               for j in range(kernel.ncols)]
        if ok(vec):
            return vec
    raise NonVertexPointError("no separating hyperplane normal found for flat")


def gale_transform(V: PointConfiguration) -> GaleTransform:
    """Kernel basis of [1|V]^T with columns indexed by the points."""
    if V.n < V.dim + 1:
        raise NotFullDimensionalError("need at least d+1 points")
    homT = V.homogenized().transpose()
    return GaleTransform(homT.kernel_basis())


def positive_circuits(G: GaleTransform):
    """All circuits of the Gale columns with strictly positive coefficients,
    normalized so the smallest support index has coefficient 1.

    A 0-row transform (simplex) yields all singleton circuits.
    """
    M = G.matrix
    n = M.ncols
    if M.nrows == 0:
        return [Circuit(support=(i,), coefficients=(Fraction(1),)) for i in range(n)]
    r = M.rank()
    circuits = []
    for size in range(1, r + 2):
        for subset in itertools.combinations(range(n), size):
            sub = M.submatrix(range(M.nrows), subset)
            kernel = sub.kernel_basis()
            if kernel.nrows != 1:
                continue
            vec = kernel.rows[0]
            if any(x == 0 for x in vec):
                continue  # dependence not supported on the whole subset
            if all(x > 0 for x in vec) or all(x < 0 for x in vec):
                scale = Fraction(1) / vec[0]
                circuits.append(Circuit(
                    support=tuple(subset),
                    coefficients=tuple(x * scale for x in vec)))
    circuits.sort(key=lambda c: c.support)
    return circuits


def pluecker(M: RationalMatrix, col_subset) -> Fraction:
    """Determinant of the column submatrix in the given column order."""
    col_subset = list(col_subset)
    if len(col_subset) != M.nrows:
        raise SizeMismatchError(
            f"need {M.nrows} columns, got {len(col_subset)}")
    return M.submatrix(range(M.nrows), col_subset).det()
