"""Sparse multivariate polynomials over Q with pluggable monomial orders.

Monomials are dense exponent tuples (length = number of ring variables);
variables print as x0, x1, ... with the convention x0 > x1 > ... in every
order.  Polynomials are immutable dicts from exponent tuple to nonzero
Fraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UngradedVariableError, UniverseMismatchError


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


# -- monomial orders ---------------------------------------------------------


class MonomialOrder:
    """Total order on monomials, exposed as a sort key. Larger key = larger."""

    def key(self, m):
        raise NotImplementedError

    def compare(self, a, b) -> int:
        """-1, 0 or 1 as a <, =, > b."""
        if a == b:
            return 0
        return 1 if self.key(a) > self.key(b) else -1

    def max_mono(self, monos):
        return max(monos, key=self.key)

    def sorted_desc(self, monos):
        return sorted(monos, key=self.key, reverse=True)


class Lex(MonomialOrder):
    """Lexicographic with x0 > x1 > ..."""

    def key(self, m):
        return m

    def __repr__(self):
        return "lex"


class GRevLex(MonomialOrder):
    """Graded reverse lexicographic with x0 > x1 > ...

    An optional variable priority (a permutation of the indices, most
    significant first) supports saturation tricks that need a chosen
    variable to be the smallest.
    """

    def __init__(self, priority=None):
        self.priority = tuple(priority) if priority is not None else None
        self._memo = {}

    def key(self, m):
        k = self._memo.get(m)
        if k is None:
            if self.priority is None:
                k = (sum(m),) + tuple(-e for e in reversed(m))
            else:
                k = (sum(m),) + tuple(-m[i] for i in reversed(self.priority))
            self._memo[m] = k
        return k

    def __repr__(self):
        return "grevlex" if self.priority is None else f"grevlex{list(self.priority)}"


class BlockOrder(MonomialOrder):
    """Elimination order: grevlex on a front variable block, then grevlex on
    the rest.  Any monomial containing a front variable beats any that does
    not, so the order eliminates the front block."""

    def __init__(self, front):
        self.front = frozenset(front)
        self._front_sorted = tuple(sorted(self.front))
        self._memo = {}

    def key(self, m):
        k = self._memo.get(m)
        if k is None:
            front = tuple(m[i] for i in self._front_sorted)
            rest = tuple(e for i, e in enumerate(m) if i not in self.front)
            k = ((sum(front),) + tuple(-e for e in reversed(front)),
                 (sum(rest),) + tuple(-e for e in reversed(rest)))
            self._memo[m] = k
        return k

    def __repr__(self):
        return f"block(front={sorted(self.front)})"


# -- polynomials -------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial over Q in a ring of `nvars` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    clean[tuple(mono)] = coeff
        self.nvars = nvars
        self.terms = clean

    # constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, i, nvars):
        if not 0 <= i < nvars:
            raise UniverseMismatchError(f"variable x{i} outside universe of {nvars}")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, mono, nvars, coeff=1):
        return cls(nvars, {tuple(mono): Fraction(coeff)})

    # predicates / views -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(m) == 0 for m in self.terms)

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return used

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def leading_term(self, order):
        """(monomial, coefficient) of the largest term; zero poly is an error."""
        m = order.max_mono(self.terms)
        return m, self.terms[m]

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    # arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise UniverseMismatchError(
                f"operands in rings of {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.nvars, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.nvars, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def term_mul(self, mono, coeff=1):
        """Multiply by a single term coeff * x^mono."""
        mono = tuple(mono)
        c = Fraction(coeff)
        return Polynomial(self.nvars,
                          {mono_mul(m, mono): c * v for m, v in self.terms.items()})

    def monic(self, order):
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return self * (Fraction(1) / lc)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # ring moves -------------------------------------------------------------

    def extended(self, new_nvars):
        """Same polynomial viewed in a larger ring (new variables appended)."""
        if new_nvars < self.nvars:
            raise UniverseMismatchError("cannot shrink with extended()")
        pad = (0,) * (new_nvars - self.nvars)
        return Polynomial(new_nvars, {m + pad: c for m, c in self.terms.items()})

    def restricted(self, new_nvars):
        """Drop trailing variables; they must not occur."""
        for m in self.terms:
            if any(m[new_nvars:]):
                raise UniverseMismatchError("polynomial uses a dropped variable")
        return Polynomial(new_nvars, {m[:new_nvars]: c for m, c in self.terms.items()})

    def substitute_ones(self, var_indices):
        """Set the given variables to 1."""
        idx = set(var_indices)
        terms = {}
        for m, c in self.terms.items():
            m2 = tuple(0 if i in idx else e for i, e in enumerate(m))
            s = terms.get(m2, 0) + c
            if s:
                terms[m2] = s
            else:
                terms.pop(m2, None)
        return Polynomial(self.nvars, terms)

    def evaluate(self, values):
        """Full evaluation at a point (list of Fractions, one per variable)."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v *= values[i] ** e
            total += v
        return total

    # printing ---------------------------------------------------------------

    def to_string(self, order=None):
        """Canonical text form: terms descending in the given order."""
        if not self.terms:
            return "0"
        order = order or GRevLex()
        parts = []
        for m in order.sorted_desc(self.terms):
            c = self.terms[m]
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}"
                       for i, e in enumerate(m) if e]
            if not factors:
                body = _fmt_frac(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = _fmt_frac(abs(c)) + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self.to_string()})"


def _fmt_frac(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- multigrading ------------------------------------------------------------


class Multigrading:
    """Assignment of each variable to a (row, column) of a symbolic matrix."""

    def __init__(self, row_of, col_of):
        self.row_of = dict(row_of)
        self.col_of = dict(col_of)

    def _axis_degree(self, mono, axis_of):
        deg = {}
        for i, e in enumerate(mono):
            if e:
                try:
                    k = axis_of[i]
                except KeyError:
                    raise UngradedVariableError(f"variable x{i} has no grading")
                deg[k] = deg.get(k, 0) + e
        return deg


def multidegree(p: Polynomial, g: Multigrading):
    """Per-row and per-column maximal degrees of p, with homogeneity flags.

    Returns (row_degrees, col_degrees, row_homogeneous, col_homogeneous),
    the first two as dicts index -> max degree over terms, the last two as
    dicts index -> bool (every term attains the max).
    """
    row_deg, col_deg = {}, {}
    per_term = []
    for m in p.terms:
        rd = g._axis_degree(m, g.row_of)
        cd = g._axis_degree(m, g.col_of)
        per_term.append((rd, cd))
        for k, v in rd.items():
            row_deg[k] = max(row_deg.get(k, 0), v)
        for k, v in cd.items():
            col_deg[k] = max(col_deg.get(k, 0), v)
    row_homog = {k: all(rd.get(k, 0) == v for rd, _ in per_term)
                 for k, v in row_deg.items()}
    col_homog = {k: all(cd.get(k, 0) == v for _, cd in per_term)
                 for k, v in col_deg.items()}
    return row_deg, col_deg, row_homog, col_homog


def is_multihomogeneous(p: Polynomial, g: Multigrading) -> bool:
    _, _, rh, ch = multidegree(p, g)
    return all(rh.values()) and all(ch.values())
