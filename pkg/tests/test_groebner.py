"""Buchberger bases, normal forms, saturation, elimination, membership."""

import itertools
import random
from fractions import Fraction

from slackkit import (GRevLex, Ideal, Lex, Polynomial, buchberger, eliminate,
                      ideal_equals, normal_form, radical_membership, saturate,
                      saturate_by_variables)
from slackkit.errors import ZeroDivisorPolynomialError
from conftest import poly

import pytest


def spoly(f, g, order):
    from slackkit.poly import mono_div, mono_lcm
    lf, lg = f.leading_term(order), g.leading_term(order)
    lcm = mono_lcm(lf[0], lg[0])
    return (f.term_mul(mono_div(lcm, lf[0]), 1 / lf[1])
            - g.term_mul(mono_div(lcm, lg[0]), 1 / lg[1]))


def assert_groebner(gens, basis, order):
    """S-pair oracle: every S-polynomial and every input reduces to zero."""
    for f, g in itertools.combinations(basis, 2):
        assert normal_form(spoly(f, g, order), basis, order).is_zero()
    for f in gens:
        assert normal_form(f, basis, order).is_zero()


def test_normal_form_multiple_of_divisor():
    x0 = Polynomial.variable(0, 2)
    assert normal_form(x0 * x0, [x0], GRevLex()).is_zero()


def test_normal_form_single_reduction():
    f = poly(2, (1, {0: 1, 1: 1}), (1, {1: 1}))  # x0*x1 + x1
    x0 = Polynomial.variable(0, 2)
    assert normal_form(f, [x0], GRevLex()) == Polynomial.variable(1, 2)


def test_normal_form_chain_lex():
    # x0*x2 - x1^2 reduces to 0 modulo {x0 - x1, x1 - x2} under lex
    f = poly(3, (1, {0: 1, 2: 1}), (-1, {1: 2}))
    g1 = poly(3, (1, {0: 1}), (-1, {1: 1}))
    g2 = poly(3, (1, {1: 1}), (-1, {2: 1}))
    assert normal_form(f, [g1, g2], Lex()).is_zero()


def test_buchberger_principal():
    x0 = Polynomial.variable(0, 1)
    assert buchberger([x0], GRevLex()) == [x0]


def test_buchberger_empty():
    assert buchberger([], GRevLex()) == []


def test_buchberger_linear_chain_lex():
    g1 = poly(3, (1, {0: 1}), (-1, {1: 1}))  # x0 - x1
    g2 = poly(3, (1, {1: 1}), (-1, {2: 1}))  # x1 - x2
    basis = buchberger([g1, g2], Lex())
    expected = {poly(3, (1, {0: 1}), (-1, {2: 1})),
                poly(3, (1, {1: 1}), (-1, {2: 1}))}
    assert set(basis) == expected
    assert_groebner([g1, g2], basis, Lex())


def test_buchberger_spair_oracle_random():
    rng = random.Random(17)
    for _ in range(8):
        gens = [poly(3, *[(rng.randint(-2, 2),
                           {i: rng.randint(0, 2) for i in range(3)})
                          for _ in range(2)])
                for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        order = GRevLex()
        basis = buchberger(gens, order)
        assert_groebner(gens, basis, order)


def test_reduced_basis_independent_of_generator_order():
    gens = [poly(3, (1, {0: 2}), (-1, {1: 1})),
            poly(3, (1, {1: 2}), (-1, {2: 1})),
            poly(3, (1, {0: 1, 2: 1}), (-1, {1: 1}))]
    order = GRevLex()
    reference = buchberger(gens, order)
    for perm in itertools.permutations(gens):
        assert buchberger(list(perm), order) == reference


def test_saturate_splits_monomial_factor():
    # <x0*x1> : x0^inf = <x1>
    I = Ideal([poly(2, (1, {0: 1, 1: 1}))])
    J = saturate(I, Polynomial.variable(0, 2))
    assert J.groebner_basis() == [Polynomial.variable(1, 2)]


def test_saturate_by_unrelated_variable():
    I = Ideal([Polynomial.variable(0, 2)])
    J = saturate(I, Polynomial.variable(1, 2))
    assert J.groebner_basis() == I.groebner_basis()


def test_saturate_by_zero_rejected():
    I = Ideal([Polynomial.variable(0, 2)])
    with pytest.raises(ZeroDivisorPolynomialError):
        saturate(I, Polynomial.zero(2))


def test_saturate_contains_original():
    I = Ideal([poly(2, (1, {0: 2, 1: 1}), (1, {0: 1}))])
    J = saturate(I, Polynomial.variable(0, 2))
    for g in I.generators:
        assert J.contains(g)


def test_saturate_by_variables_two_generators():
    # <x0*x1, x0*x2> : x0^inf = <x1, x2>
    I = Ideal([poly(3, (1, {0: 1, 1: 1})), poly(3, (1, {0: 1, 2: 1}))])
    J = saturate_by_variables(I, {0})
    K = Ideal([Polynomial.variable(1, 3), Polynomial.variable(2, 3)])
    assert ideal_equals(J, K)


def test_saturate_zero_ideal():
    I = Ideal([], nvars=2)
    assert saturate_by_variables(I, {0, 1}).groebner_basis() == []


def test_saturate_by_variables_order_independent():
    gens = [poly(3, (1, {0: 2, 1: 1}), (-1, {0: 1, 2: 2})),
            poly(3, (1, {1: 2, 2: 1}), (1, {0: 1, 1: 1, 2: 1}))]
    I = Ideal(gens)
    results = []
    for perm in itertools.permutations([0, 1, 2]):
        J = I
        for v in perm:
            J = saturate(J, Polynomial.variable(v, 3))
        results.append(J.groebner_basis())
    assert all(r == results[0] for r in results)
    assert saturate_by_variables(I, {0, 1, 2}).groebner_basis() == results[0]


def test_eliminate_nothing_gives_reduced_basis():
    I = Ideal([poly(2, (2, {0: 1}), (2, {1: 1}))])
    J = eliminate(I, set())
    assert J.groebner_basis() == I.groebner_basis()


def test_eliminate_fresh_variable():
    # eliminate t from <1 - t*x0, x1> with t = index 2
    gens = [poly(3, (1, {}), (-1, {0: 1, 2: 1})), Polynomial.variable(1, 3)]
    J = eliminate(Ideal(gens), {2})
    assert J.groebner_basis() == [Polynomial.variable(1, 3)]


def test_eliminated_generators_avoid_block():
    gens = [poly(3, (1, {0: 1, 1: 1}), (-1, {2: 1})),
            poly(3, (1, {0: 2}), (-1, {1: 1}))]
    J = eliminate(Ideal(gens), {0})
    for g in J.groebner_basis():
        assert 0 not in g.variables()


def test_ideal_equals_reflexive_and_strict():
    x0 = Polynomial.variable(0, 1)
    I = Ideal([x0])
    assert ideal_equals(I, I)
    assert not ideal_equals(I, Ideal([x0 * x0]))


def test_radical_membership_square_root():
    x0 = Polynomial.variable(0, 2)
    assert radical_membership(x0, Ideal([x0 * x0]))


def test_radical_membership_negative():
    x0 = Polynomial.variable(0, 2)
    x1 = Polynomial.variable(1, 2)
    assert not radical_membership(x1, Ideal([x0]))
