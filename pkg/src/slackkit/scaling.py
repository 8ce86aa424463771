"""Spanning-forest scaling of symbolic slack matrices, dehomogenized ideals,
rehomogenization, flag checks, reduced slack matrices and irrationality
certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _gcd

from .errors import (ComplementNotSimplicialError, NeedsNumericDataError,
                     NoFlagFoundError, NotAForestError)
from .groebner import Ideal, eliminate, saturate_by_variables
from .poly import GRevLex, Polynomial
from .slack import (ScaledSlackMatrix, SlackMatrix, SymbolicSlackMatrix,
                    minor_ideal_generators, symbolic_slack_matrix)

# graph nodes: ("r", i) for rows, ("c", j) for columns


@dataclass(frozen=True)
class ForestEdge:
    variable: int
    source: tuple
    destination: tuple


class NonIncidenceGraph:
    """Bipartite graph on row and column nodes with one edge per support
    cell, labeled by the cell's variable index."""

    def __init__(self, sym: SymbolicSlackMatrix):
        self.sym = sym
        self.nodes = ([("r", i) for i in range(sym.nrows)]
                      + [("c", j) for j in range(sym.ncols)])
        self.edges = []  # (variable, row node, col node), by variable index
        adj = {node: [] for node in self.nodes}
        for v in range(sym.nvars):
            i, j = sym.cell_of[v]
            r, c = ("r", i), ("c", j)
            self.edges.append((v, r, c))
            adj[r].append((v, c))
            adj[c].append((v, r))
        self.adjacency = adj

    def node_of_cell(self, v):
        i, j = self.sym.cell_of[v]
        return ("r", i), ("c", j)


@dataclass(frozen=True)
class SpanningForest:
    """Oriented forest edges in BFS (root-to-leaf) order plus the roots."""

    edges: tuple  # ForestEdge, ordered
    roots: tuple

    @property
    def variables(self):
        return frozenset(e.variable for e in self.edges)


def non_incidence_graph(S) -> NonIncidenceGraph:
    return NonIncidenceGraph(symbolic_slack_matrix(S))


def _bfs_forest(graph: NonIncidenceGraph, allowed=None):
    """Deterministic spanning forest: BFS from the lowest-index column node
    of each component, edges explored in variable-index order.  With
    `allowed`, only edges with those variables are used."""
    visited = set()
    edges = []
    roots = []
    # column nodes first so each component is rooted at its lowest column
    ordering = ([("c", j) for j in range(graph.sym.ncols)]
                + [("r", i) for i in range(graph.sym.nrows)])
    for start in ordering:
        if start in visited:
            continue
        if allowed is not None and not any(
                v in allowed for v, _ in graph.adjacency[start]):
            if start not in visited:
                # isolated w.r.t. the allowed edges: own trivial component
                visited.add(start)
                roots.append(start)
            continue
        roots.append(start)
        visited.add(start)
        queue = [start]
        while queue:
            node = queue.pop(0)
            for v, nbr in sorted(graph.adjacency[node]):
                if allowed is not None and v not in allowed:
                    continue
                if nbr in visited:
                    continue
                visited.add(nbr)
                edges.append(ForestEdge(variable=v, source=node, destination=nbr))
                queue.append(nbr)
    return SpanningForest(edges=tuple(edges), roots=tuple(roots))


def set_ones_forest(S):
    """Scale a maximal spanning forest of the non-incidence graph to ones.

    Returns (ScaledSlackMatrix, SpanningForest) with the deterministic BFS
    forest."""
    sym = symbolic_slack_matrix(S)
    graph = NonIncidenceGraph(sym)
    forest = _bfs_forest(graph)
    return ScaledSlackMatrix(sym, forest.variables), forest


def set_ones(S, var_indices) -> ScaledSlackMatrix:
    """Set the chosen variables to one; they must form a forest in the
    non-incidence graph (otherwise the scaling is invalid)."""
    sym = symbolic_slack_matrix(S)
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for v in sorted(var_indices):
        i, j = sym.cell_of[v]
        a, b = find(("r", i)), find(("c", j))
        if a == b:
            raise NotAForestError(f"variable x{v} closes a cycle")
        parent[a] = b
    return ScaledSlackMatrix(sym, frozenset(var_indices))


def forest_from_ones(Y: ScaledSlackMatrix) -> SpanningForest:
    """The oriented forest corresponding to a scaled matrix's ones, rooted at
    the lowest-index column node of each component."""
    graph = NonIncidenceGraph(Y.base)
    return _bfs_forest(graph, allowed=Y.ones_at)


def dehomogenized_ideal(d, Y: ScaledSlackMatrix) -> Ideal:
    """Slack ideal of the scaled matrix: (d+2)-minors saturated by the
    product of the surviving variables."""
    gens = minor_ideal_generators(d, Y)
    nvars = Y.base.nvars
    if not gens:
        return Ideal([], nvars=nvars)
    return saturate_by_variables(Ideal(gens, nvars=nvars), Y.surviving_variables())


def rehomogenize_poly(p: Polynomial, Y: ScaledSlackMatrix,
                      F: SpanningForest) -> Polynomial:
    """Reintroduce forest variables leaf-to-root until p is homogeneous in
    every row and column touched by the forest."""
    sym = Y.base
    grading = sym.multigrading()
    for edge in reversed(F.edges):
        kind, idx = edge.destination
        axis_of = grading.row_of if kind == "r" else grading.col_of
        if p.is_zero():
            break
        degs = {}
        for m in p.terms:
            degs[m] = sum(e for i, e in enumerate(m) if e and axis_of.get(i) == idx)
        D = max(degs.values())
        if all(v == D for v in degs.values()):
            continue
        terms = {}
        ev = edge.variable
        for m, c in p.terms.items():
            gap = D - degs[m]
            if gap:
                m = tuple(e + gap if i == ev else e for i, e in enumerate(m))
            terms[m] = terms.get(m, 0) + c
        p = Polynomial(p.nvars, terms)
    return p


def rehomogenize_ideal(d, Y: ScaledSlackMatrix, F: SpanningForest = None) -> Ideal:
    """H(I_P^F): rehomogenize the reduced basis of the dehomogenized ideal
    and saturate by the forest variables."""
    if F is None:
        F = forest_from_ones(Y)
    deh = dehomogenized_ideal(d, Y)
    gens = [rehomogenize_poly(g, Y, F) for g in deh.groebner_basis()]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return Ideal([], nvars=Y.base.nvars)
    return saturate_by_variables(Ideal(gens, nvars=Y.base.nvars),
                                 sorted(F.variables))


# -- flags and reduced matrices ----------------------------------------------


def _affine_dim(entries, vertex_indices):
    """Affine dimension of a vertex subset, from homogenized coordinate-free
    rank data: we only have the slack matrix, so use the rank of the rows of
    the full matrix restricted to those vertices.

    For a genuine slack matrix S = [1 V][b; a]^T the row space of the
    selected rows has rank (affine dim + 1) as long as the hyperplanes span,
    which holds for facet sets of a polytope.
    """
    if not vertex_indices:
        return -1
    sub = entries.submatrix(sorted(vertex_indices), range(entries.ncols))
    return sub.rank() - 1


def contains_flag(col_indices, S) -> bool:
    """True iff some sequence of columns from col_indices has zero-set
    intersections of strictly decreasing affine dimension d-1, ..., 0."""
    if isinstance(S, (SymbolicSlackMatrix, ScaledSlackMatrix)):
        raise NeedsNumericDataError(
            "flag containment needs a numeric slack matrix")
    entries = S.entries if isinstance(S, SlackMatrix) else S
    S = S if isinstance(S, SlackMatrix) else SlackMatrix(entries)
    d = entries.rank() - 1
    col_indices = list(col_indices)

    def extend(current_set, dim, used):
        if dim == 0:
            return True
        for j in col_indices:
            if j in used:
                continue
            nxt = current_set & S.incidence[j]
            if not nxt:
                continue
            if _affine_dim(entries, nxt) == dim - 1:
                if extend(nxt, dim - 1, used | {j}):
                    return True
        return False

    all_vertices = frozenset(range(entries.nrows))
    return extend(all_vertices, d, frozenset())


def _find_flag(entries, S, d, candidates):
    """A list of d column indices forming a flag, greedily via DFS."""

    def extend(current_set, dim, used, chosen):
        if dim == 0:
            return chosen
        for j in candidates:
            if j in used:
                continue
            nxt = current_set & S.incidence[j]
            if not nxt:
                continue
            if _affine_dim(entries, nxt) == dim - 1:
                res = extend(nxt, dim - 1, used | {j}, chosen + [j])
                if res is not None:
                    return res
        return None

    return extend(frozenset(range(entries.nrows)), d, frozenset(), [])


def reduced_slack_matrix(d, S, flag_indices=None) -> SymbolicSlackMatrix:
    """Keep the non-simplicial columns plus a flag; the dropped columns must
    all be simplicial (exactly d zeros).  Returns the kept pattern with fresh
    row-major variables."""
    numeric = isinstance(S, SlackMatrix)
    sym = symbolic_slack_matrix(S)
    zero_counts = [sum(1 for i in range(sym.nrows) if not sym.support[i][j])
                   for j in range(sym.ncols)]
    non_simplicial = [j for j in range(sym.ncols) if zero_counts[j] != d]
    if flag_indices is not None:
        flag_cols = list(flag_indices)
        if numeric and not contains_flag(flag_cols, S):
            raise NoFlagFoundError("given columns do not contain a flag")
    else:
        if not numeric:
            raise NeedsNumericDataError(
                "flag search needs a numeric slack matrix")
        flag_cols = _find_flag(S.entries, S, d, range(sym.ncols))
        if flag_cols is None:
            raise NoFlagFoundError("no flag found among the columns")
    keep = sorted(set(non_simplicial) | set(flag_cols))
    for j in range(sym.ncols):
        if j not in keep and zero_counts[j] != d:
            raise ComplementNotSimplicialError(
                f"dropped column {j} has {zero_counts[j]} zeros, expected {d}")
    pattern = [[sym.support[i][j] for j in keep] for i in range(sym.nrows)]
    return SymbolicSlackMatrix(pattern)


# -- irrationality certificates ----------------------------------------------


@dataclass(frozen=True)
class Certificate:
    kind: str  # "irrational" | "inconclusive"
    variable: int
    minimal_polynomial: Polynomial  # univariate in the kept variable; may be zero
    rational_roots: tuple

    def to_dict(self):
        return {
            "kind": self.kind,
            "variable": self.variable,
            "minimal_polynomial": self.minimal_polynomial.to_string(),
            "rational_roots": [str(r) for r in self.rational_roots],
        }


def _divisors(n):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def rational_roots(p: Polynomial, var: int):
    """All rational roots of a univariate polynomial via the rational root
    test on an integer-cleared copy."""
    if p.is_zero() or p.is_constant():
        return []
    lcm = 1
    for c in p.terms.values():
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    coeffs = {m[var]: int(c * lcm) for m, c in p.terms.items()}
    degree = max(coeffs)
    lead = coeffs[degree]
    low = min(e for e in coeffs)  # factor out x^low; x=0 root iff low > 0
    trailing = coeffs[low]
    roots = set()
    if low > 0:
        roots.add(Fraction(0))
    for pnum in _divisors(trailing):
        for qden in _divisors(lead):
            for cand in (Fraction(pnum, qden), Fraction(-pnum, qden)):
                val = sum(c * cand ** e for e, c in coeffs.items())
                if val == 0:
                    roots.add(cand)
    return sorted(roots)


def irrationality_certificate(I: Ideal, keep: int) -> Certificate:
    """Eliminate every variable except `keep`; if a non-constant univariate
    generator remains and has no rational root, the slack variety has no
    rational point with that coordinate, certifying non-rational
    realizability."""
    others = set(range(I.nvars)) - {keep}
    E = eliminate(I, others)
    univariate = [g for g in E.groebner_basis()
                  if not g.is_zero() and g.variables() <= {keep}]
    nonconstant = [g for g in univariate if not g.is_constant()]
    if not nonconstant:
        return Certificate(kind="inconclusive", variable=keep,
                           minimal_polynomial=Polynomial.zero(I.nvars),
                           rational_roots=())
    minimal = min(nonconstant, key=lambda g: g.total_degree())
    minimal = minimal.monic(GRevLex())
    roots = rational_roots(minimal, keep)
    kind = "irrational" if not roots else "inconclusive"
    return Certificate(kind=kind, variable=keep, minimal_polynomial=minimal,
                       rational_roots=tuple(roots))
