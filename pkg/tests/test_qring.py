"""Exact Laurent polynomial / rational function arithmetic and quantum
combinatorics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klrcalc import (
    DegreeWindow,
    LaurentPoly,
    RatFunc,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
    series_window,
    sigma,
    zeta,
)
from klrcalc.qring import _qbinom_factorial, _qbinom_subset

laurent_dicts = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
)


def lp(d):
    return LaurentPoly(d)


# -- Laurent polynomial ring laws ---------------------------------------


@settings(max_examples=60)
@given(laurent_dicts, laurent_dicts, laurent_dicts)
def test_ring_laws(a, b, c):
    a, b, c = lp(a), lp(b), lp(c)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert (a - a).is_zero()


@settings(max_examples=60)
@given(laurent_dicts, laurent_dicts)
def test_bar_is_ring_involution(a, b):
    a, b = lp(a), lp(b)
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@settings(max_examples=60)
@given(laurent_dicts, st.integers(min_value=-5, max_value=5))
def test_shift_is_monomial_multiplication(a, s):
    a = lp(a)
    assert a.shift(s) == a * LaurentPoly.q(s)


def test_basic_identities():
    q = LaurentPoly.q()
    assert (LaurentPoly.one() + q) * (LaurentPoly.one() - q) == \
        LaurentPoly({0: 1, 2: -1})
    assert LaurentPoly({0: 1, 2: -1}).exact_div(
        LaurentPoly({0: 1, 1: -1})) == LaurentPoly({0: 1, 1: 1})
    p = LaurentPoly({-2: Fraction(1, 2), 3: -1})
    assert p.min_exp() == -2 and p.max_exp() == 3
    assert p.coeff(3) == -1 and p.coeff(0) == 0
    assert p.bar() == LaurentPoly({2: Fraction(1, 2), -3: -1})


def test_json_round_trip():
    p = LaurentPoly({-1: Fraction(2, 3), 4: -5})
    assert LaurentPoly.from_json_obj(p.to_json_obj()) == p


# -- rational functions -------------------------------------------------


def test_ratfunc_reduction_and_equality():
    num = LaurentPoly({0: 1, 4: -1})
    den = LaurentPoly({0: 1, 2: -1})
    r = RatFunc(num, den)
    assert r == RatFunc(LaurentPoly({0: 1, 2: 1}))
    # denominator normalized: constant term, positive leading coefficient
    assert r.den == LaurentPoly.one()
    assert hash(r) == hash(RatFunc(LaurentPoly({0: 1, 2: 1})))


def test_ratfunc_field_ops():
    one = RatFunc.one()
    q2 = RatFunc(LaurentPoly.q(2))
    r = one / (one - q2)
    assert r * (one - q2) == one
    assert (r - r).is_zero()
    assert r + r == r * RatFunc(LaurentPoly({0: 2}))
    with pytest.raises(ZeroDivisionError):
        one / RatFunc.zero()


def test_series_window_geometric():
    w = DegreeWindow(0, 6)
    geo = RatFunc(LaurentPoly.one(),
                  LaurentPoly({0: 1, 1: -1}))
    s = series_window(geo, w)
    assert s == LaurentPoly({d: 1 for d in range(7)})


def test_series_window_polynomial_identity():
    w = DegreeWindow(0, 8)
    num = LaurentPoly({0: 1, 5: -1})
    den = LaurentPoly({0: 1, 1: -1})
    assert series_window(RatFunc(num, den), w) == \
        LaurentPoly({d: 1 for d in range(5)})


def test_series_window_normalizes_denominator():
    # 1/(q - q^2) = q^-1 (1 + q + q^2 + ...): normalization shifts the
    # denominator to constant term 1 before expanding
    w = DegreeWindow(-1, 3)
    f = RatFunc(LaurentPoly.one(), LaurentPoly({1: 1, 2: -1}))
    assert series_window(f, w) == LaurentPoly({d: 1 for d in range(-1, 4)})


# -- degree windows -----------------------------------------------------


def test_degree_window():
    w = DegreeWindow(-2, 3)
    assert list(w) == [-2, -1, 0, 1, 2, 3]
    assert -2 in w and 3 in w and 4 not in w
    with pytest.raises(ValueError):
        DegreeWindow(1, 0)


# -- quantum combinatorics ----------------------------------------------


def test_quantum_integers():
    assert quantum_integer(0, 1).is_zero()
    assert quantum_integer(1, 1) == LaurentPoly.one()
    assert quantum_integer(2, 1) == LaurentPoly({-1: 1, 1: 1})
    assert quantum_integer(3, 2) == LaurentPoly({-4: 1, 0: 1, 4: 1})
    # bar invariance (symmetric in q <-> q^-1)
    for k in range(7):
        for d in (1, 2, 3):
            v = quantum_integer(k, d)
            assert v.bar() == v


def test_quantum_factorial_recursion():
    for d in (1, 2):
        acc = LaurentPoly.one()
        for k in range(1, 6):
            acc = acc * quantum_integer(k, d)
            assert quantum_factorial(k, d) == acc


def test_quantum_binomial_values_and_routes():
    assert quantum_binomial(4, 2, 1) == \
        LaurentPoly({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})
    for n in range(7):
        for k in range(n + 1):
            for d in (1, 2):
                a = _qbinom_factorial(n, k, d)
                b = _qbinom_subset(n, k, d)
                assert a == b == quantum_binomial(n, k, d)
                assert quantum_binomial(n, n - k, d) == a


def test_zeta_sigma():
    for k in range(64):
        assert zeta(k) == bin(k).count("1")
    # sigma on a single bit at position p is p; zeta-choose-2 corrects pairs
    for p in range(8):
        assert sigma(1 << p) == p
    assert sigma(0) == 0
    assert sigma(3) == 0          # bits 0,1
    assert sigma(5) == 1          # bits 0,2
    assert sigma(6) == 2          # bits 1,2
    assert sigma(7) == 0          # bits 0,1,2 minus 3 pairs
