"""Exact arithmetic in Z[q, q^-1] and Q(q), plus quantum combinatorics.

Laurent polynomials are sparse maps exponent -> Fraction with no stored
zero coefficients.  Rational functions are gcd-reduced pairs of Laurent
polynomials with the denominator normalized to lowest exponent 0 and a
positive leading coefficient, so equality is structural and values are
safe to use as cache keys.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction


class LaurentPoly:
    """A sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return LaurentPoly()

    @staticmethod
    def one():
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exp, coeff=1):
        return LaurentPoly({exp: coeff})

    @staticmethod
    def q(exp=1):
        return LaurentPoly({exp: 1})

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def coeff(self, exp):
        return self.coeffs.get(exp, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return res
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("use RatFunc for negative powers")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def bar(self):
        """The bar involution q -> q^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def exact_div(self, other):
        """Exact division; raises ValueError if the division has a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self.coeffs)
        out = {}
        dtop = other.max_exp()
        dlead = other.coeffs[dtop]
        while rem:
            top = max(rem)
            e = top - dtop
            c = rem[top] / dlead
            out[e] = c
            for de, dc in other.coeffs.items():
                k = de + e
                s = rem.get(k, Fraction(0)) - dc * c
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
            if rem and max(rem) >= top:
                raise ValueError("non-exact division")
        return LaurentPoly(out)

    # -- display / serialization ------------------------------------------

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*q" if c != 1 else "q")
            else:
                parts.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
        return " + ".join(parts)

    def to_json_obj(self):
        """JSON object: exponent (decimal string) -> coefficient "p/q", keys ascending."""
        return {str(e): str(self.coeffs[e]) for e in sorted(self.coeffs)}

    def to_json(self):
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_json_obj(obj):
        return LaurentPoly({int(e): Fraction(c) for e, c in obj.items()})


def _poly_gcd(a, b):
    """Monic gcd of two nonzero Laurent polynomials (up to units q^k)."""
    a = a.shift(-a.min_exp())
    b = b.shift(-b.min_exp())
    while b:
        # remainder of a by b in the ordinary polynomial ring
        r = dict(a.coeffs)
        btop = b.max_exp()
        blead = b.coeffs[btop]
        while r and max(r) >= btop:
            top = max(r)
            c = r[top] / blead
            for de, dc in b.coeffs.items():
                k = de + top - btop
                s = r.get(k, Fraction(0)) - dc * c
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
        a, b = b, LaurentPoly(r)
        if b:
            b = b.shift(-b.min_exp())
    lead = a.coeffs[a.max_exp()]
    return a * (1 / lead)


class RatFunc:
    """A rational function in q, stored as a reduced num/den pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly({0: num})
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, int):
            den = LaurentPoly({0: den})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.one()
            return
        g = _poly_gcd(num, den)
        if g != LaurentPoly.one():
            num = num.exact_div(g)
            den = den.exact_div(g)
        # normalize: den lowest exponent 0, leading (top) coefficient positive
        k = den.min_exp()
        den = den.shift(-k)
        num = num.shift(-k)
        lead = den.coeffs[den.max_exp()]
        if lead < 0:
            den, num = den * -1, num * -1
        self.num, self.den = num, den

    @staticmethod
    def zero():
        return RatFunc(LaurentPoly())

    @staticmethod
    def one():
        return RatFunc(LaurentPoly.one())

    @staticmethod
    def from_poly(p):
        return RatFunc(p)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            other = RatFunc(other if isinstance(other, LaurentPoly) else LaurentPoly({0: other}))
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __repr__(self):
        if self.den == LaurentPoly.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


class DegreeWindow:
    """An inclusive range [d_min, d_max] of internal degrees."""

    __slots__ = ("d_min", "d_max")

    def __init__(self, d_min, d_max):
        if d_min > d_max:
            raise ValueError("empty degree window")
        self.d_min = d_min
        self.d_max = d_max

    def __contains__(self, d):
        return self.d_min <= d <= self.d_max

    def __iter__(self):
        return iter(range(self.d_min, self.d_max + 1))

    def __repr__(self):
        return f"DegreeWindow({self.d_min}, {self.d_max})"


def quantum_integer(k, d):
    """[k]_i = (q_i^k - q_i^-k)/(q_i - q_i^-1) with q_i = q^d, as a Laurent polynomial."""
    if k == 0:
        return LaurentPoly()
    sign = 1
    if k < 0:
        k, sign = -k, -1
    # q_i^(k-1) + q_i^(k-3) + ... + q_i^(1-k)
    out = LaurentPoly({d * (k - 1 - 2 * l): 1 for l in range(k)})
    return out * sign


def quantum_factorial(k, d):
    """[k]_i! = [1]_i [2]_i ... [k]_i; the empty product is 1."""
    if k < 0:
        raise ValueError("negative quantum factorial")
    out = LaurentPoly.one()
    for l in range(1, k + 1):
        out = out * quantum_integer(l, d)
    return out


def _qbinom_factorial(n, k, d):
    num = quantum_factorial(n, d)
    den = quantum_factorial(k, d) * quantum_factorial(n - k, d)
    return num.exact_div(den)


def _qbinom_subset(n, k, d):
    # q_i^{-k(n+1)} * sum over k-subsets S of {1..n} of q_i^{2*sum(S)}
    out = LaurentPoly()
    for s in itertools.combinations(range(1, n + 1), k):
        out = out + LaurentPoly({d * (2 * sum(s) - k * (n + 1)): 1})
    return out


def quantum_binomial(n, k, d):
    """Quantum binomial via the factorial ratio, checked against the subset sum."""
    if not 0 <= k <= n:
        raise ValueError(f"quantum binomial needs 0 <= k <= n, got ({n}, {k})")
    a = _qbinom_factorial(n, k, d)
    b = _qbinom_subset(n, k, d)
    assert a == b, f"quantum binomial routes disagree at ({n},{k},{d})"
    return a


def zeta(k):
    """Number of ones in the binary expansion of k."""
    if k < 0:
        raise ValueError("zeta needs a nonnegative argument")
    return bin(k).count("1")


def sigma(k):
    """sum of bit positions of k minus zeta(k)(zeta(k)-1)/2."""
    if k < 0:
        raise ValueError("sigma needs a nonnegative argument")
    z = zeta(k)
    s = sum(pos for pos in range(k.bit_length()) if (k >> pos) & 1)
    return s - z * (z - 1) // 2


def series_window(f, w):
    """Power-series expansion of a RatFunc, truncated to a DegreeWindow.

    The (normalized) denominator must have a nonzero constant term.
    """
    den = f.den
    if f.num.is_zero():
        return LaurentPoly()
    c0 = den.coeff(0)
    if not c0:
        raise ValueError("denominator has zero constant term; not expandable")
    lo = f.num.min_exp()
    out = {}
    # inverse-series coefficients s_m of 1/den, computed on demand
    inv = [Fraction(1) / c0]

    def inv_coeff(m):
        while len(inv) <= m:
            t = len(inv)
            acc = Fraction(0)
            for e, c in den.coeffs.items():
                if 1 <= e <= t:
                    acc += c * inv[t - e]
            inv.append(-acc / c0)
        return inv[m]

    for d in range(max(lo, w.d_min), w.d_max + 1):
        acc = Fraction(0)
        for e, c in f.num.coeffs.items():
            if e <= d:
                acc += c * inv_coeff(d - e)
        if acc:
            out[d] = acc
    return LaurentPoly(out)
