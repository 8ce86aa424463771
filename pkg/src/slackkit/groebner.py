"""Buchberger-based ideal arithmetic: normal forms, reduced Groebner bases,
elimination, saturation, containment and radical membership.

The public API works with Fraction-coefficient :class:`Polynomial` values;
internally the Buchberger loop runs fraction-free over integer coefficient
dicts (content-normalized) which is considerably faster in pure Python.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import gcd

from .errors import ZeroDivisorPolynomialError
from .poly import (BlockOrder, GRevLex, Polynomial, mono_deg, mono_div,
                   mono_divides, mono_lcm, mono_mul)

# -- integer engine ----------------------------------------------------------
#
# An "ipoly" is a dict {exponent tuple: int coefficient}, nonzero values only,
# primitive (content 1) with positive leading coefficient.


def _to_ipoly(p: Polynomial, order):
    if not p.terms:
        return {}
    lcm = 1
    for c in p.terms.values():
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    terms = {m: int(c * lcm) for m, c in p.terms.items()}
    return _normalize(terms, order)


def _normalize(terms, order):
    """Divide out integer content and make the leading coefficient positive."""
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    lm = order.max_mono(terms)
    if terms[lm] < 0:
        g = -g
    if g != 1:
        terms = {m: c // g for m, c in terms.items()}
    return terms


def _from_ipoly(terms, nvars, order):
    """Monic Fraction polynomial from an ipoly."""
    if not terms:
        return Polynomial.zero(nvars)
    lm = order.max_mono(terms)
    lc = Fraction(terms[lm])
    return Polynomial(nvars, {m: Fraction(c) / lc for m, c in terms.items()})


def _ireduce(f, basis, order, tail=True):
    """Fraction-free full reduction of ipoly f by [(lt, lc, ipoly), ...].

    Returns a content-normalized remainder.  With tail=False only the leading
    term is required to be irreducible (enough for S-poly processing).
    """
    if not f:
        return f
    work = dict(f)
    done = {}
    key = order.key
    while work:
        lm = max(work, key=key)
        lc = work.pop(lm)
        hit = None
        for blt, blc, bterms in basis:
            if mono_divides(blt, lm):
                hit = (blt, blc, bterms)
                break
        if hit is None:
            done[lm] = lc
            if not tail:
                done.update(work)
                break
            continue
        blt, blc, bterms = hit
        g = gcd(lc, blc)
        a, b = blc // g, lc // g
        # work := a*(lm*lc + work) - b * x^(lm-blt) * basiselt
        if a != 1:
            for m in work:
                work[m] *= a
            for m in done:
                done[m] *= a
        shift = mono_div(lm, blt)
        for m, c in bterms.items():
            if m == blt:
                continue
            mm = mono_mul(m, shift)
            s = work.get(mm, 0) - b * c
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return _normalize(done, order)


def _spoly(f, g, order):
    """Fraction-free S-polynomial of two ipolys."""
    ltf = order.max_mono(f)
    ltg = order.max_mono(g)
    lcm = mono_lcm(ltf, ltg)
    cf, cg = f[ltf], g[ltg]
    d = gcd(cf, cg)
    mf = mono_div(lcm, ltf)
    mg = mono_div(lcm, ltg)
    a, b = cg // d, cf // d
    terms = {}
    for m, c in f.items():
        terms[mono_mul(m, mf)] = a * c
    for m, c in g.items():
        mm = mono_mul(m, mg)
        s = terms.get(mm, 0) - b * c
        if s:
            terms[mm] = s
        else:
            terms.pop(mm, None)
    return terms


def _buchberger_int(gens, order):
    """Reduced Groebner basis of a list of ipolys; returns list of ipolys."""
    basis = []  # list of (lt, lc, terms)
    for g in gens:
        g = _ireduce(g, basis, order)
        if g:
            lt = order.max_mono(g)
            basis.append((lt, g[lt], g))
    # pair set with Buchberger's coprime and chain criteria
    pairs = set()
    done = set()  # pairs whose S-polynomial provably reduces to zero
    lts = [b[0] for b in basis]

    def add_pairs(j):
        for i in range(j):
            pairs.add((i, j))

    for j in range(len(basis)):
        add_pairs(j)

    def lcm_key(pair):
        i, j = pair
        l = mono_lcm(lts[i], lts[j])
        return (mono_deg(l),) + tuple(order.key(l))

    while pairs:
        i, j = min(pairs, key=lcm_key)
        pairs.discard((i, j))
        lti, ltj = lts[i], lts[j]
        l = mono_lcm(lti, ltj)
        if l == mono_mul(lti, ltj):  # coprime leading terms
            done.add((i, j))
            continue
        # chain criterion, conservative form: only trust pairs in `done`
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(lts[k], l):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            done.add((i, j))
            continue
        s = _spoly(basis[i][2], basis[j][2], order)
        r = _ireduce(s, basis, order, tail=False)
        done.add((i, j))
        if r:
            lt = order.max_mono(r)
            if mono_deg(lt) == 0:  # unit: whole ring
                one = {(0,) * len(lt): 1}
                return [one]
            basis.append((lt, r[lt], r))
            lts.append(lt)
            add_pairs(len(basis) - 1)
    return _autoreduce_int([b[2] for b in basis], order)


def _autoreduce_int(polys, order):
    """Minimize and tail-reduce a set of ipolys into the reduced basis."""
    # minimize: drop elements whose lt is divisible by another's lt
    entries = []
    for p in polys:
        if p:
            entries.append((order.max_mono(p), p))
    entries.sort(key=lambda e: order.key(e[0]))
    minimal = []
    for lt, p in entries:
        if not any(mono_divides(mlt, lt) for mlt, _ in minimal):
            minimal.append((lt, p))
    # tail-reduce each against the others
    reduced = []
    for idx, (lt, p) in enumerate(minimal):
        others = [(mlt, mp[mlt], mp) for k, (mlt, mp) in enumerate(minimal) if k != idx]
        r = _ireduce(p, others, order)
        if r:
            reduced.append(r)
    reduced.sort(key=lambda p: order.key(order.max_mono(p)), reverse=True)
    return reduced


# -- public API --------------------------------------------------------------


def normal_form(f: Polynomial, G, order) -> Polynomial:
    """Remainder of multivariate division of f by the list G."""
    if f.is_zero():
        return f
    divisors = []
    for g in G:
        if not g.is_zero():
            lt, lc = g.leading_term(order)
            divisors.append((lt, lc, g))
    work = dict(f.terms)
    done = {}
    key = order.key
    while work:
        lm = max(work, key=key)
        lc = work.pop(lm)
        hit = next((d for d in divisors if mono_divides(d[0], lm)), None)
        if hit is None:
            done[lm] = lc
            continue
        blt, blc, g = hit
        factor = lc / blc
        shift = mono_div(lm, blt)
        for m, c in g.terms.items():
            if m == blt:
                continue
            mm = mono_mul(m, shift)
            s = work.get(mm, 0) - factor * c
            if s:
                work[mm] = s
            else:
                work.pop(mm, None)
    return Polynomial(f.nvars, done)


def buchberger(gens, order) -> list:
    """The unique reduced (monic) Groebner basis, leading terms descending."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    nvars = gens[0].nvars
    ipolys = [_to_ipoly(g, order) for g in gens]
    out = _buchberger_int(ipolys, order)
    return [_from_ipoly(p, nvars, order) for p in out]


class Ideal:
    """A finite generator list plus a memoized reduced Groebner basis."""

    def __init__(self, generators, order=None, nvars=None):
        self.generators = list(generators)
        if nvars is None:
            if not self.generators:
                raise ValueError("empty ideal needs an explicit nvars")
            nvars = self.generators[0].nvars
        self.nvars = nvars
        self.order = order or GRevLex()
        self._basis = None
        self._lock = threading.Lock()

    def groebner_basis(self):
        if self._basis is None:
            basis = buchberger(self.generators, self.order)
            with self._lock:
                if self._basis is None:
                    self._basis = basis
        return self._basis

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner_basis(), self.order).is_zero()

    def is_zero(self):
        return not self.groebner_basis()

    def __repr__(self):
        gens = ", ".join(g.to_string(self.order) for g in self.generators[:4])
        more = "" if len(self.generators) <= 4 else ", ..."
        return f"Ideal({gens}{more})"

    def to_strings(self):
        return [g.to_string(self.order) for g in self.groebner_basis()]


def reduced_ideal(I: Ideal) -> Ideal:
    """Same ideal with the reduced basis installed as its generator list."""
    basis = I.groebner_basis()
    J = Ideal(basis, order=I.order, nvars=I.nvars)
    J._basis = basis
    return J


def ideal_equals(I: Ideal, J: Ideal) -> bool:
    """True iff reduced Groebner bases under a common order coincide."""
    if I.nvars != J.nvars:
        return False
    order = GRevLex()
    bi = buchberger(I.generators, order)
    bj = buchberger(J.generators, order)
    return bi == bj


def _is_standard_homogeneous(p: Polynomial) -> bool:
    degs = {sum(m) for m in p.terms}
    return len(degs) <= 1


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """I : f^infinity via the extra-variable (Rabinowitsch) trick.

    A fresh variable t is appended, 1 - t*f adjoined, and t eliminated with a
    block order; the result is expressed back in the original ring.
    """
    if f.is_zero():
        raise ZeroDivisorPolynomialError("cannot saturate by the zero polynomial")
    n = I.nvars
    t = n
    ext_gens = [g.extended(n + 1) for g in I.generators]
    tf = Polynomial.variable(t, n + 1) * f.extended(n + 1)
    ext_gens.append(Polynomial.constant(1, n + 1) - tf)
    order = BlockOrder({t})
    basis = buchberger(ext_gens, order)
    kept = [g.restricted(n) for g in basis if t not in g.variables()]
    out = Ideal(kept, order=I.order, nvars=n)
    out._basis = buchberger(kept, I.order)
    out.generators = out._basis
    return out


def _saturate_variable_homogeneous(gens, v, nvars):
    """I : x_v^infinity for a homogeneous ideal: grevlex basis with x_v
    smallest, each element divided by its maximal x_v power."""
    priority = [i for i in range(nvars) if i != v] + [v]
    order = GRevLex(priority)
    basis = buchberger(gens, order)
    out = []
    for g in basis:
        k = min(m[v] for m in g.terms)
        if k:
            shift = tuple(k if i == v else 0 for i in range(nvars))
            g = Polynomial(nvars, {mono_div(m, shift): c for m, c in g.terms.items()})
        out.append(g)
    return out


def saturate_by_variables(I: Ideal, var_indices) -> Ideal:
    """Iterated single-variable saturation; equals I : (prod x_i)^infinity.

    For homogeneous input (every generator homogeneous in the standard
    grading, which saturation preserves) each step is read off a grevlex
    basis in which the variable is smallest; otherwise the general saturate()
    is used per variable.
    """
    var_indices = sorted(set(var_indices))
    gens = [g for g in I.generators if not g.is_zero()]
    if not gens or not var_indices:
        out = Ideal(gens, order=I.order, nvars=I.nvars)
        out._basis = buchberger(gens, I.order)
        out.generators = out._basis
        return out
    homogeneous = all(_is_standard_homogeneous(g) for g in gens)
    if homogeneous:
        for v in var_indices:
            gens = _saturate_variable_homogeneous(gens, v, I.nvars)
            if gens and gens[0].is_constant():
                break
        out = Ideal(gens, order=I.order, nvars=I.nvars)
        out._basis = buchberger(gens, I.order)
        out.generators = out._basis
        return out
    out = Ideal(gens, order=I.order, nvars=I.nvars)
    for v in var_indices:
        out = saturate(out, Polynomial.variable(v, I.nvars))
    return out


def eliminate(I: Ideal, var_indices) -> Ideal:
    """I intersected with the subring without the given variables."""
    var_indices = set(var_indices)
    if not var_indices:
        return reduced_ideal(I)
    order = BlockOrder(var_indices)
    basis = buchberger(I.generators, order)
    kept = [g for g in basis if not (g.variables() & var_indices)]
    out = Ideal(kept, order=I.order, nvars=I.nvars)
    out._basis = buchberger(kept, I.order)
    out.generators = out._basis
    return out


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """True iff f lies in the radical of I (1 in I + <1 - t*f>)."""
    n = I.nvars
    t = n
    gens = [g.extended(n + 1) for g in I.generators]
    gens.append(Polynomial.constant(1, n + 1)
                - Polynomial.variable(t, n + 1) * f.extended(n + 1))
    basis = buchberger(gens, GRevLex())
    return len(basis) == 1 and basis[0].is_constant() and not basis[0].is_zero()
