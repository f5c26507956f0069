"""Rank-n divided difference algebra: symbolic products against the faithful
polynomial-operator model."""

import random
from fractions import Fraction

from klrcalc import (
    NilHeckeElement,
    Perm,
    Poly,
    idempotent_e,
    nh_act,
    nh_multiply,
)
from klrcalc.polycalc import all_perms


def random_element(rng, n, max_deg=6, nterms=3):
    perms = list(all_perms(n))
    terms = {}
    for _ in range(nterms):
        g = rng.choice(perms)
        budget = rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(budget):
            e[rng.randrange(n)] += 1
        terms[(tuple(e), g)] = Fraction(rng.randint(-4, 4))
    return NilHeckeElement(n, {k: c for k, c in terms.items() if c})


def random_poly(rng, n, deg=4, nterms=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in range(n))
        terms[e] = Fraction(rng.randint(-5, 5))
    return Poly(n, {e: c for e, c in terms.items() if c})


def test_product_matches_operator_composition():
    """The symbolic product agrees with composition of the polynomial
    operators on random inputs (the faithful representation)."""
    rng = random.Random(2024)
    checked = 0
    for n in range(2, 5):
        for _ in range(70):
            u = random_element(rng, n)
            v = random_element(rng, n)
            p = random_poly(rng, n)
            lhs = nh_act(nh_multiply(u, v), p)
            rhs = nh_act(u, nh_act(v, p))
            assert lhs == rhs
            checked += 1
    assert checked >= 200


def test_tau_squares_to_zero():
    for n in range(2, 5):
        for k in range(1, n):
            t = NilHeckeElement.tau(k, n)
            assert nh_multiply(t, t).is_zero()


def test_braid_relation():
    for n in range(3, 5):
        for k in range(1, n - 1):
            a = NilHeckeElement.tau(k, n)
            b = NilHeckeElement.tau(k + 1, n)
            lhs = nh_multiply(nh_multiply(a, b), a)
            rhs = nh_multiply(nh_multiply(b, a), b)
            assert lhs == rhs
            assert lhs == NilHeckeElement.tau_w(
                Perm.s(k, n) * Perm.s(k + 1, n) * Perm.s(k, n))


def test_x_tau_commutation():
    # tau_k x_k - x_{k+1} tau_k = -1 = x_k tau_k - tau_k x_{k+1}
    for n in range(2, 4):
        for k in range(1, n):
            t = NilHeckeElement.tau(k, n)
            xk = NilHeckeElement.x(k, n)
            xk1 = NilHeckeElement.x(k + 1, n)
            one = NilHeckeElement.one(n)
            assert nh_multiply(t, xk) - nh_multiply(xk1, t) == -one
            assert nh_multiply(xk, t) - nh_multiply(t, xk1) == -one


def test_idempotent():
    for n in range(1, 6):
        e = idempotent_e(n)
        assert nh_multiply(e, e) == e
        assert e.degree() == 0


def test_idempotent_acts_as_projection():
    # e_n projects onto a rank-one summand: on the staircase monomial it
    # acts as the Schubert-type operator with image 1 after full division
    rng = random.Random(5)
    for n in range(2, 5):
        e = idempotent_e(n)
        p = random_poly(rng, n)
        q = nh_act(e, p)
        assert nh_act(e, q) == q


def test_degrees():
    n = 3
    assert NilHeckeElement.x(1, n).degree() == 2
    assert NilHeckeElement.tau(1, n).degree() == -2
    u = nh_multiply(NilHeckeElement.x(2, n), NilHeckeElement.tau(1, n))
    assert u.degree() == 0
