"""groebner module: division, bases, initial data, saturation, H^0."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from lexdist.errors import InvalidInputError
from lexdist.groebner import (
    DEFAULT_CHAR,
    Ideal,
    LinearChange,
    Poly,
    apply_linear_change,
    buchberger,
    change_fixing_form,
    format_poly,
    h0_hilbert_function,
    hilbert_function,
    initial_forms_ideal,
    initial_ideal,
    intersect,
    normal_form,
    parse_poly,
    saturate_maximal,
    saturate_variable,
)
from lexdist.monomials import (
    DegRevLexOrder,
    LexOrder,
    MonomialIdeal,
    WeightOrder,
)
from lexdist import monomials

P = DEFAULT_CHAR
LEX = LexOrder()
DRL = DegRevLexOrder()


def poly(text, n=2, p=P):
    return parse_poly(text, n, p)


# --- polynomial arithmetic -----------------------------------------------------

def test_parse_and_format():
    f = poly("x1^2 + 3*x1*x2")
    assert f.terms == {(2, 0): 1, (1, 1): 3}
    assert format_poly(f) == "x1^2 + 3*x1*x2"
    assert poly("x1 - x1").is_zero
    assert format_poly(poly("0*x1")) == "0"
    assert poly("2", 2, 5).terms == {(0, 0): 2}


def test_poly_ring_ops():
    f, g = poly("x1 + x2"), poly("x1 - x2")
    assert (f * g).terms == poly("x1^2 - x2^2").terms
    assert (f + g).terms == poly("2*x1").terms
    assert f.power(2).terms == poly("x1^2 + 2*x1*x2 + x2^2").terms


def test_homogeneity_enforced():
    with pytest.raises(InvalidInputError):
        Ideal(2, [poly("x1 + x1^2")], P)
    with pytest.raises(InvalidInputError):
        Ideal(2, [poly("x1")], 4)  # composite characteristic


# --- orders -------------------------------------------------------------------

def test_order_keys():
    assert LEX.compare((2, 0), (1, 1)) > 0
    assert DRL.compare((2, 0), (1, 1)) > 0 > DRL.compare((0, 2), (1, 1))
    w = WeightOrder((1, 0))
    assert w.compare((1, 0), (0, 5)) > 0  # weight dominates degree


@given(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
       st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
       st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)))
def test_orders_multiplicative(u, v, w):
    for order in (LexOrder(), DegRevLexOrder(), WeightOrder((1, 1, 0))):
        if order.compare(u, v) < 0:
            uw = monomials.mul(u, w)
            vw = monomials.mul(v, w)
            assert order.compare(uw, vw) < 0


# --- division and bases ---------------------------------------------------------

def test_normal_form_examples():
    assert normal_form(poly("x1^2"), [poly("x1^2 - x2^2")], LEX).terms == poly("x2^2").terms
    g = [poly("x1^2 - x2^2")]
    assert normal_form(poly("x2"), g, LEX).terms == poly("x2").terms
    # division against a two-element basis, checked by hand
    basis = [poly("x1^2 - x2^2"), poly("x1*x2 - x2^2")]
    r = normal_form(poly("x1^2*x2"), basis, LEX)
    assert r.terms == poly("x2^3").terms


def test_buchberger_monomial_and_principal():
    i1 = Ideal(2, [poly("x1*x2"), poly("x1^2*x2")], P)
    assert [format_poly(g, LEX) for g in buchberger(i1, LEX)] == ["x1*x2"]
    i2 = Ideal(2, [poly("3*x1^2")], P)
    assert [format_poly(g, LEX) for g in buchberger(i2, LEX)] == ["x1^2"]


def test_buchberger_derived_example():
    ideal = Ideal(2, [poly("x1^2 - x2^2"), poly("x1*x2")], P)
    basis = buchberger(ideal, LEX)
    leads = {g.leading(LEX)[0] for g in basis}
    assert leads == {(2, 0), (1, 1), (0, 3)}
    assert initial_ideal(ideal, LEX).gens == ((1, 1), (2, 0), (0, 3))


def test_buchberger_deterministic():
    gens = [poly("x1^2 - x2^2"), poly("x1*x2 + x2^2"), poly("x2^3")]
    a = buchberger(Ideal(2, gens, P), DRL)
    b = buchberger(Ideal(2, list(gens), P), DRL)
    assert [g.terms for g in a] == [g.terms for g in b]
    # the reduced basis is canonical: generator order does not matter
    c = buchberger(Ideal(2, gens[::-1], P), DRL)
    assert [g.terms for g in a] == [g.terms for g in c]


def test_initial_ideal_examples():
    mono = Ideal(2, [poly("x1*x2"), poly("x1^2")], P)
    assert initial_ideal(mono, LEX) == MonomialIdeal(2, [(1, 1), (2, 0)])
    assert initial_ideal(Ideal(2, [poly("x1^2 - x2^2")], P), LEX) \
        == MonomialIdeal(2, [(2, 0)])


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_buchberger_confluence(seed):
    # random combinations of basis elements reduce to zero
    rng = random.Random(seed)
    gens = [poly("x1^2 - x2^2"), poly("x1*x2 - x2^2")]
    ideal = Ideal(2, gens, P)
    basis = ideal.groebner_basis()
    f = Poly.zero(2, P)
    for g in gens:
        c = rng.randrange(P)
        e = (rng.randrange(3), rng.randrange(3))
        f = f + g.mul_term(e, c)
    assert normal_form(f, basis).is_zero


def test_initial_forms_examples():
    assert initial_forms_ideal(Ideal(2, [poly("x1 + x2")], P), (1, 0)).gens[0].terms \
        == poly("x1").terms
    assert initial_forms_ideal(Ideal(2, [poly("x1*x2 + x2^2")], P), (1, 0)).gens[0].terms \
        == poly("x1*x2").terms


# --- Hilbert functions -----------------------------------------------------------

def test_hilbert_general_examples():
    assert hilbert_function(Ideal(2, [], P), 4) == (1, 2, 3, 4, 5)
    assert hilbert_function(Ideal(2, [poly("x1^2 + x1*x2")], P), 5) == (1, 2, 2, 2, 2, 2)


def test_hilbert_independent_of_order():
    # degrevlex initial ideal vs lex initial ideal give the same HF
    ideal = Ideal(3, [poly("x1^2 - x2*x3", 3), poly("x1*x2 + x3^2", 3)], P)
    via_drl = monomials.hilbert_function(initial_ideal(ideal, DRL), 6)
    via_lex = monomials.hilbert_function(initial_ideal(ideal, LEX), 6)
    assert via_drl == via_lex
    assert via_drl == hilbert_function(ideal, 6)


# --- saturation -------------------------------------------------------------------

def test_saturate_variable_matches_monomial_rule():
    ideal = Ideal(2, [poly("x1^2"), poly("x1*x2")], P)
    sat = saturate_variable(ideal, 1)
    assert {format_poly(g) for g in sat.gens} == {"x1"}
    mono = MonomialIdeal(2, [(2, 0), (1, 1)])
    assert monomials.saturate_variable(mono, 1).gens == ((1, 0),)


def test_saturate_maximal_examples():
    ideal = Ideal(2, [poly("x1^2"), poly("x1*x2")], P)
    assert {format_poly(g) for g in saturate_maximal(ideal).gens} == {"x1"}
    hyper = Ideal(2, [poly("x1*x2")], P)
    assert {format_poly(g) for g in saturate_maximal(hyper).gens} == {"x1*x2"}
    artinian = Ideal(2, [poly("x1^2"), poly("x2^2")], P)
    assert {format_poly(g) for g in saturate_maximal(artinian).gens} == {"1"}


def test_intersection_against_monomial_oracle(rng):
    for _ in range(10):
        gens_a = [tuple(rng.randrange(3) for _ in range(2)) for _ in range(2)]
        gens_b = [tuple(rng.randrange(3) for _ in range(2)) for _ in range(2)]
        a = MonomialIdeal(2, [g for g in gens_a if sum(g)])
        b = MonomialIdeal(2, [g for g in gens_b if sum(g)])
        left = intersect(Ideal.from_monomial_ideal(a, P), Ideal.from_monomial_ideal(b, P))
        expected = monomials.intersect(a, b)
        got = initial_ideal(left)
        assert got == expected


def test_h0_examples():
    ideal = Ideal(2, [poly("x1^2"), poly("x1*x2")], P)
    assert h0_hilbert_function(ideal, 5) == (0, 1, 0, 0, 0, 0)
    assert h0_hilbert_function(MonomialIdeal(2, [(2, 0), (1, 1)]), 5) == (0, 1, 0, 0, 0, 0)
    saturated = Ideal(2, [poly("x1*x2")], P)
    assert h0_hilbert_function(saturated, 4) == (0, 0, 0, 0, 0)
    artinian = MonomialIdeal(2, [(2, 0), (0, 2)])
    assert h0_hilbert_function(artinian, 4) == monomials.hilbert_function(artinian, 4)


def test_saturation_idempotent_general():
    ideal = Ideal(3, [poly("x1^2", 3), poly("x1*x2", 3), poly("x2^3 - x1*x3^2", 3)], P)
    sat = saturate_maximal(ideal)
    again = saturate_maximal(sat)
    assert sat.contains_ideal(ideal)
    assert again.contains_ideal(sat) and sat.contains_ideal(again)


# --- linear changes -------------------------------------------------------------

def test_apply_linear_change_examples():
    ideal = Ideal(2, [poly("x1^2")], P)
    ident = LinearChange.identity(2, P)
    assert [g.terms for g in apply_linear_change(ident, ideal).gens] == [poly("x1^2").terms]
    swap = LinearChange([[0, 1], [1, 0]], P)
    assert apply_linear_change(swap, ideal).gens[0].terms == poly("x2^2").terms
    shear = LinearChange([[1, 0], [1, 1]], P)  # x->x, y->x+y
    out = apply_linear_change(shear, Ideal(2, [poly("x2^2")], P))
    assert out.gens[0].terms == poly("x1^2 + 2*x1*x2 + x2^2").terms


def test_singular_change_rejected():
    with pytest.raises(InvalidInputError):
        LinearChange([[1, 1], [2, 2]], P)


def test_change_fixing_form(rng):
    for _ in range(20):
        coeffs = tuple(rng.randrange(P) for _ in range(3))
        if not any(coeffs):
            continue
        g = change_fixing_form(coeffs, P)
        assert g.apply_to_form(coeffs) == (0, 0, 1)
