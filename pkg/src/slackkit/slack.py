"""Slack matrices (numeric and symbolic), slack ideals, Gale-based slack
constructions, graphic ideals and minor counting."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from math import gcd

from .errors import (DegeneratePatternError, NoCircuitsError,
                     NotACofacetError, SizeMismatchError)
from .geometry import (GaleTransform, PointConfiguration,
                       facets_from_vertices, matroid_hyperplanes, pluecker,
                       positive_circuits)
from .groebner import (Ideal, _autoreduce_int, _from_ipoly, _ireduce,
                       _to_ipoly, saturate_by_variables)
from .poly import GRevLex, Multigrading, Polynomial
from .rationals import RationalMatrix


class SlackMatrix:
    """Numeric slack matrix: entry (i, j) is the slack of point i in
    hyperplane j.  Column incidences are the per-column zero index sets."""

    def __init__(self, entries: RationalMatrix, source="pattern"):
        self.entries = entries
        self.source = source
        self.incidence = [
            frozenset(i for i in range(entries.nrows) if entries[i, j] == 0)
            for j in range(entries.ncols)]

    @property
    def nrows(self):
        return self.entries.nrows

    @property
    def ncols(self):
        return self.entries.ncols

    def support(self):
        return [[self.entries[i, j] != 0 for j in range(self.ncols)]
                for i in range(self.nrows)]

    def rank(self):
        return self.entries.rank()

    def __repr__(self):
        return f"SlackMatrix({self.nrows}x{self.ncols}, {self.source})"


class SymbolicSlackMatrix:
    """A 0/1 support pattern with variables assigned row-major over the
    support cells (x0, x1, ... reading left to right, top to bottom)."""

    def __init__(self, support):
        support = [[bool(x) for x in row] for row in support]
        if not support or not support[0]:
            raise DegeneratePatternError("empty pattern")
        self.support = support
        self.nrows = len(support)
        self.ncols = len(support[0])
        if any(len(r) != self.ncols for r in support):
            raise DegeneratePatternError("ragged support pattern")
        self.var_at = {}
        k = 0
        for i in range(self.nrows):
            for j in range(self.ncols):
                if support[i][j]:
                    self.var_at[(i, j)] = k
                    k += 1
        self.nvars = k
        self.cell_of = {v: cell for cell, v in self.var_at.items()}

    def multigrading(self) -> Multigrading:
        return Multigrading(
            row_of={v: ij[0] for ij, v in self.var_at.items()},
            col_of={v: ij[1] for ij, v in self.var_at.items()})

    def entry_string(self, i, j):
        return f"x{self.var_at[(i, j)]}" if self.support[i][j] else "0"

    def __repr__(self):
        return f"SymbolicSlackMatrix({self.nrows}x{self.ncols}, {self.nvars} vars)"


class ScaledSlackMatrix:
    """A symbolic slack matrix with a set of variables scaled to one."""

    def __init__(self, base: SymbolicSlackMatrix, ones_at):
        self.base = base
        self.ones_at = frozenset(ones_at)
        for v in self.ones_at:
            if v not in base.cell_of:
                raise SizeMismatchError(f"no variable x{v} in the pattern")

    @property
    def nrows(self):
        return self.base.nrows

    @property
    def ncols(self):
        return self.base.ncols

    @property
    def nvars(self):
        return self.base.nvars

    def surviving_variables(self):
        return sorted(set(range(self.base.nvars)) - self.ones_at)

    def entry_string(self, i, j):
        if not self.base.support[i][j]:
            return "0"
        v = self.base.var_at[(i, j)]
        return "1" if v in self.ones_at else f"x{v}"

    def __repr__(self):
        return (f"ScaledSlackMatrix({self.nrows}x{self.ncols}, "
                f"{len(self.surviving_variables())} vars left)")


# -- constructions -----------------------------------------------------------


def slack_matrix(V, object="polytope") -> SlackMatrix:
    """Slack matrix of conv(V) (object="polytope") or of the matroid of the
    homogenized points (object="matroid"); columns in canonical incidence
    order."""
    if not isinstance(V, PointConfiguration):
        V = PointConfiguration(V)
    if object == "polytope":
        hyperplanes = facets_from_vertices(V)
    elif object == "matroid":
        hyperplanes = matroid_hyperplanes(V)
    else:
        raise ValueError(f"unknown object {object!r}")
    cols = [[hp.slack(p) for p in V.points] for hp in hyperplanes]
    entries = RationalMatrix([[cols[j][i] for j in range(len(cols))]
                              for i in range(V.n)])
    return SlackMatrix(entries, source=object)


def symbolic_slack_matrix(S) -> SymbolicSlackMatrix:
    """Replace nonzero entries by distinct variables, row-major.  Rejects
    patterns with an all-zero row or column (no slack matrix looks like
    that); reduced matrices built internally may still carry zero rows."""
    if isinstance(S, SymbolicSlackMatrix):
        return S
    if isinstance(S, SlackMatrix):
        support = S.support()
    elif isinstance(S, RationalMatrix):
        support = [[S[i, j] != 0 for j in range(S.ncols)]
                   for i in range(S.nrows)]
    else:
        support = [[bool(x) for x in row] for row in S]
    sym = SymbolicSlackMatrix(support)
    for i, row in enumerate(sym.support):
        if not any(row):
            raise DegeneratePatternError(f"all-zero row {i}")
    for j in range(sym.ncols):
        if not any(sym.support[i][j] for i in range(sym.nrows)):
            raise DegeneratePatternError(f"all-zero column {j}")
    return sym


ONE = -1  # grid sentinel for a scaled-to-one cell (variable indices are >= 0)


def _entry_grid(S):
    """Uniform cell view: None for zero, ONE for a scaled one, int for x_k."""
    if isinstance(S, ScaledSlackMatrix):
        base, ones = S.base, S.ones_at
    else:
        base, ones = S, frozenset()
    grid = []
    for i in range(base.nrows):
        row = []
        for j in range(base.ncols):
            if not base.support[i][j]:
                row.append(None)
            else:
                v = base.var_at[(i, j)]
                row.append(ONE if v in ones else v)
        grid.append(row)
    return grid, base.nvars


def pattern_minor(grid, rows, cols, nvars) -> Polynomial:
    """Exact determinant of the given submatrix of a symbolic grid.

    Every cell is 0, 1 or a single variable, so the determinant is a signed
    sum of monomials (one per permutation matching of the support)."""
    terms = {}
    zero = (0,) * nvars

    def rec(rows_left, cols_left, sign, mono):
        if not rows_left:
            terms[mono] = terms.get(mono, 0) + sign
            return
        # expand along the row with fewest nonzero cells
        best, best_cells = None, None
        for ri, r in enumerate(rows_left):
            cells = [(ci, grid[r][c]) for ci, c in enumerate(cols_left)
                     if grid[r][c] is not None]
            if best_cells is None or len(cells) < len(best_cells):
                best, best_cells = ri, cells
                if len(cells) <= 1:
                    break
        if not best_cells:
            return
        sub_rows = rows_left[:best] + rows_left[best + 1:]
        row_sign = sign if best % 2 == 0 else -sign
        for ci, cell in best_cells:
            s = row_sign if ci % 2 == 0 else -row_sign
            sub_cols = cols_left[:ci] + cols_left[ci + 1:]
            if cell == ONE:
                rec(sub_rows, sub_cols, s, mono)
            else:
                m = list(mono)
                m[cell] += 1
                rec(sub_rows, sub_cols, s, tuple(m))
        return

    rec(tuple(rows), tuple(cols), 1, zero)
    return Polynomial(nvars, {m: Fraction(c) for m, c in terms.items() if c})


def minor_ideal_generators(d, S, interreduce=True):
    """All (d+2)-minors of a symbolic/scaled slack matrix, enumerated in
    lexicographic (row set, column set) order.

    With interreduce=True each nonzero minor is replaced by its normal form
    against the minors collected so far (same ideal, far smaller list)."""
    grid, nvars = _entry_grid(S)
    nrows, ncols = len(grid), len(grid[0])
    k = d + 2
    order = GRevLex()
    if k > nrows or k > ncols:
        return []
    seen = set()
    minors = []
    for rows in itertools.combinations(range(nrows), k):
        for cols in itertools.combinations(range(ncols), k):
            p = pattern_minor(grid, rows, cols, nvars)
            if p.is_zero():
                continue
            fp = frozenset(p.terms.items())
            if fp in seen:
                continue
            seen.add(fp)
            minors.append(p)
    if not interreduce:
        return minors
    # interreduce incrementally in the integer engine, simplest minors first,
    # compacting the partial basis as it grows
    ipolys = sorted((_to_ipoly(p, order) for p in minors),
                    key=lambda t: (len(t), max(map(sum, t))))
    basis = []
    next_compact = 24
    for f in ipolys:
        r = _ireduce(f, basis, order)
        if not r:
            continue
        lt = order.max_mono(r)
        basis.append((lt, r[lt], r))
        if len(basis) >= next_compact:
            compacted = _autoreduce_int([b[2] for b in basis], order)
            basis = [(order.max_mono(t), t[order.max_mono(t)], t)
                     for t in compacted]
            next_compact = max(24, int(len(basis) * 1.5))
        else:
            basis.sort(key=lambda b: order.key(b[0]))
    return [_from_ipoly(b[2], nvars, order) for b in basis]


def slack_ideal(d, S, object="polytope") -> Ideal:
    """The slack ideal: all (d+2)-minors of the symbolic slack matrix,
    saturated by the product of all variables.  For matroids pass the rank
    minus one in place of d."""
    if isinstance(S, (list, PointConfiguration)):
        S = slack_matrix(S, object=object)
    sym = symbolic_slack_matrix(S) if not isinstance(S, (SymbolicSlackMatrix,
                                                         ScaledSlackMatrix)) else S
    gens = minor_ideal_generators(d, sym)
    nvars = sym.nvars if not isinstance(sym, ScaledSlackMatrix) else sym.base.nvars
    if not gens:
        return Ideal([], nvars=nvars)
    I = Ideal(gens, nvars=nvars)
    return saturate_by_variables(I, range(nvars))


def slack_from_gale_circuits(G: GaleTransform) -> SlackMatrix:
    """One column per minimal positive circuit of G, entries the circuit
    coefficients; columns ordered by their zero (incidence) sets so the
    result aligns with slack_matrix on the same point order."""
    circuits = positive_circuits(G)
    if not circuits:
        raise NoCircuitsError("no positive circuit: not a polytope Gale transform")
    n = G.n
    cols = []
    for c in circuits:
        col = [Fraction(0)] * n
        for i, lam in zip(c.support, c.coefficients):
            col[i] = lam
        cols.append(col)
    cols.sort(key=lambda col: sorted(i for i, x in enumerate(col) if x == 0))
    entries = RationalMatrix([[cols[j][i] for j in range(len(cols))]
                              for i in range(n)])
    return SlackMatrix(entries, source="polytope")


def slack_from_gale_plucker(G: GaleTransform, cofacets) -> SlackMatrix:
    """Fill a slack matrix with Pluecker coordinates of G: entry (i, j) for i
    in cofacet C_j is +-pluecker(G, C_j minus i), signs fixed per column to
    make all entries positive."""
    M = G.matrix
    n = G.n
    cols = []
    for cofacet in cofacets:
        cofacet = sorted(cofacet)
        if M.nrows == 0:
            if len(cofacet) != 1:
                raise NotACofacetError(f"{cofacet} is not a cofacet of a 0-row Gale")
            col = [Fraction(0)] * n
            col[cofacet[0]] = Fraction(1)
            cols.append(col)
            continue
        k = len(cofacet)
        if k > M.nrows + 1:
            raise NotACofacetError(
                f"cofacet {cofacet} has size {k}, expected at most {M.nrows + 1}")
        sub = M.submatrix(range(M.nrows), cofacet)
        if sub.rank() != k - 1:
            raise NotACofacetError(f"{cofacet} does not support a circuit")
        # k-1 rows of full rank turn Cramer's rule into signed minors;
        # with k = rank+1 these are the Pluecker coordinates of G
        row_idx = next(r for r in itertools.combinations(range(M.nrows), k - 1)
                       if sub.submatrix(r, range(k)).rank() == k - 1)
        col = [Fraction(0)] * n
        for pos, i in enumerate(cofacet):
            rest = [c for c in range(k) if c != pos]
            val = sub.submatrix(row_idx, rest).det()
            col[i] = -val if pos % 2 else val
        nonzero = [x for x in col if x != 0]
        if len(nonzero) != len(cofacet):
            raise NotACofacetError(f"{cofacet} does not support a circuit")
        if not (all(x > 0 for x in nonzero) or all(x < 0 for x in nonzero)):
            raise NotACofacetError(f"{cofacet} has no positive dependence")
        if nonzero[0] < 0:
            col = [-x for x in col]
        cols.append(col)
    cols.sort(key=lambda col: sorted(i for i, x in enumerate(col) if x == 0))
    entries = RationalMatrix([[cols[j][i] for j in range(len(cols))]
                              for i in range(n)])
    return SlackMatrix(entries, source="polytope")


def graphic_ideal(S) -> Ideal:
    """Toric ideal of the edge set of the non-incidence graph: binomials
    x^(u+) - x^(u-) for a lattice basis u of the kernel of the vertex-edge
    incidence matrix, saturated by all variables."""
    sym = symbolic_slack_matrix(S)
    nodes = sym.nrows + sym.ncols
    rows = [[Fraction(0)] * sym.nvars for _ in range(nodes)]
    for (i, j), v in sym.var_at.items():
        rows[i][v] = Fraction(1)
        rows[sym.nrows + j][v] = Fraction(1)
    kernel = RationalMatrix(rows).kernel_basis()
    gens = []
    for vec in kernel.rows:
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        ints = [int(x * lcm) for x in vec]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints] if g else ints
        plus = tuple(max(c, 0) for c in ints)
        minus = tuple(max(-c, 0) for c in ints)
        gens.append(Polynomial.monomial(plus, sym.nvars)
                    - Polynomial.monomial(minus, sym.nvars))
    if not gens:
        return Ideal([], nvars=sym.nvars)
    return saturate_by_variables(Ideal(gens, nvars=sym.nvars), range(sym.nvars))


def count_minors(d, S=None, nrows=None, ncols=None) -> int:
    """Number of (d+2)-minors of an nrows x ncols matrix."""
    if S is not None:
        nrows = S.nrows
        ncols = S.ncols
    k = d + 2
    if k < 0 or k > nrows or k > ncols:
        return 0
    return math.comb(nrows, k) * math.comb(ncols, k)
