from fractions import Fraction
from itertools import combinations
from math import factorial, prod

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from rwgraphs.charclass import (
    ChernData,
    ChernError,
    ChernPoly,
    c4_bound,
    chern_character,
    chi_O,
    even_monomials,
    evaluate_top,
    format_monomial,
    parse_monomial,
    polywheel_to_chern,
    power_sums,
    riemann_roch_constraint,
    td_sqrt,
    todd,
)
from rwgraphs.manifolds import default_dataset

X = sp.Symbol("x")


def _series_coeffs(expr, n):
    s = sp.series(expr, X, 0, n + 1).removeO()
    return [Fraction(str(sp.Rational(s.coeff(X, i)))) for i in range(n + 1)]


TODD = _series_coeffs(X / (1 - sp.exp(-X)), 8)
TODD_HALF = _series_coeffs(sp.sqrt(X / (1 - sp.exp(-X))), 8)


def _multiplicative(coeffs, roots, degree):
    """Degree-``degree`` part of prod_i f(x_i) for f with the given series."""
    poly = [Fraction(1)] + [Fraction(0)] * degree
    for r in roots:
        f = [coeffs[i] * Fraction(r) ** i for i in range(degree + 1)]
        poly = [sum(poly[j] * f[i - j] for j in range(i + 1)) for i in range(degree + 1)]
    return poly[degree]


def _classes(roots):
    return {("", i): Fraction(sum(prod(c) for c in combinations(roots, i))) for i in range(1, len(roots) + 1)}


roots_strategy = st.lists(st.integers(-4, 4), min_size=8, max_size=8)


@settings(max_examples=40, deadline=None)
@given(roots_strategy)
def test_chern_character_against_roots(roots):
    ch = chern_character(8)
    vals = _classes(roots)
    for m in range(1, 9):
        assert ch[m].substitute(vals) == Fraction(sum(r ** m for r in roots), factorial(m))


@settings(max_examples=25, deadline=None)
@given(roots_strategy)
def test_todd_and_its_square_root_against_roots(roots):
    vals = _classes(roots)
    t, h = todd(8), td_sqrt(8)
    for m in range(0, 9):
        assert t.homogeneous(m).substitute(vals) == _multiplicative(TODD, roots, m)
        assert h.homogeneous(m).substitute(vals) == _multiplicative(TODD_HALF, roots, m)


def test_square_root_squares_to_todd():
    h = td_sqrt(8)
    assert h.mul(h, 8) == todd(8)


def test_low_degree_todd():
    c1, c2 = ChernPoly.c(1), ChernPoly.c(2)
    assert todd(2).homogeneous(1) == c1 * Fraction(1, 2)
    assert todd(2).homogeneous(2) == (c1 * c1 + c2) * Fraction(1, 12)


def test_power_sums_newton():
    p = power_sums(3)
    c1, c2, c3 = ChernPoly.c(1), ChernPoly.c(2), ChernPoly.c(3)
    assert p[2] == c1 * c1 - c2 * 2
    assert p[3] == c1 * c1 * c1 - c1 * c2 * 3 + c3 * 3


def test_bundle_tags_stay_separate():
    a, b = ChernPoly.c(2, "A"), ChernPoly.c(2, "B")
    assert (a * b).terms == {(("A", 2), ("B", 2)): 1}
    assert a.rename("B") == b
    assert chern_character(2, 3, "A")[0] == ChernPoly.const(3)


def test_poly_arithmetic():
    c2 = ChernPoly.c(2)
    assert c2 - c2 == ChernPoly()
    assert 1 - c2 == ChernPoly.const(1) - c2
    assert (c2 + 1).truncate(0) == ChernPoly.const(1)
    assert (ChernPoly.c(1) * c2 + c2).kill_odd() == c2
    assert c2.mul(c2, 2) == ChernPoly()


@pytest.mark.parametrize("text", ["c2^2*c4", "c2(E)*c2", "c8", "1", "c2^4"])
def test_monomial_round_trip(text):
    m = parse_monomial(text)
    assert parse_monomial(format_monomial(m)) == m


@pytest.mark.parametrize("text", ["c0", "x2", "c2^", "c2**2"])
def test_monomial_errors(text):
    with pytest.raises(ChernError):
        parse_monomial(text)


def test_even_monomials():
    assert [len(even_monomials(d)) for d in (2, 4, 6, 8)] == [1, 2, 3, 5]


def test_chern_data_validation():
    with pytest.raises(ChernError, match="wrong degree"):
        ChernData("X", 1, {parse_monomial("c4"): 1})
    with pytest.raises(ChernError, match="odd"):
        ChernData("X", 1, {parse_monomial("c1^2"): 1, parse_monomial("c2"): 1})
    with pytest.raises(ChernError, match="Euler"):
        ChernData("X", 2, {parse_monomial("c2^2"): 1})
    d = default_dataset()["K[2]"]
    assert ChernData.from_record(d.record()) == d and d.dim == 4


def test_evaluate_top_needs_values():
    d = ChernData("X", 2, {parse_monomial("c4"): 3})
    with pytest.raises(ChernError, match="no value"):
        evaluate_top(ChernPoly.c(2) * ChernPoly.c(2), d)
    with pytest.raises(ChernError, match="bundle"):
        evaluate_top(ChernPoly.c(4, "E"), d)
    assert evaluate_top(ChernPoly.c(4) * 2 + ChernPoly.c(1) * ChernPoly.c(3), d) == 6


def test_riemann_roch_on_dataset():
    for d in default_dataset().values():
        r = riemann_roch_constraint(d)
        assert r.ok and r.expected == chi_O(d.k)


def test_two_wheel_is_twice_c2():
    # with c1 = 0, -2! ch_2 = 2 c2, so the K3 value is 48
    assert polywheel_to_chern([2]).kill_odd() == ChernPoly.c(2) * 2
    assert evaluate_top(polywheel_to_chern([2]), default_dataset()["S"]) == 48
    with pytest.raises(ChernError):
        polywheel_to_chern([0])


def test_c4_bound_value():
    res = c4_bound()
    assert res.bound == 3024
    assert res.todd_4.terms == {parse_monomial("c2^2"): Fraction(3, 720), parse_monomial("c4"): Fraction(-1, 720)}
