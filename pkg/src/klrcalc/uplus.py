"""Word-algebra oracle with the bilinear form.

Elements are finite linear combinations of color words (products of the
one-letter generators e_i, written left to right) with rational-function
coefficients.  The bilinear form is determined by

    (e_i, e_j) = delta_ij / (1 - q_i^2),
    (y, z z') = (r(y), z (x) z'),

where r is the algebra map with r(e_i) = e_i (x) 1 + 1 (x) e_i into the
twisted tensor square, (y (x) z)(y' (x) z') = q^{wt(z).wt(y')} yy' (x) zz'.
Zero-testing is always done through the form (a Gram test against all
words of the same weight), never through a presentation of the quotient
algebra.
"""

import threading
from fractions import Fraction

from .qring import (LaurentPoly, RatFunc, quantum_factorial, series_window)
from .rootdata import RootVector, height, pairing, sequences

__all__ = [
    "WordVector", "GramCache", "pair", "is_zero_mod_serre", "ad_e",
    "ad_e_divided", "higher_serre_check", "uplusi_member",
    "k0_isometry_calibrate",
]


class WordVector:
    """A finite sum of color words with RatFunc coefficients.

    All words share one weight; words are tuples of index labels in
    written order (the leftmost letter is the leftmost factor).
    """

    def __init__(self, beta, terms=None):
        self.beta = beta
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if RootVector.from_word(w) != beta:
                raise ValueError(f"word {w} does not have the stated weight")
            if not isinstance(c, RatFunc):
                c = RatFunc(LaurentPoly({0: Fraction(c)}))
            if c:
                self.terms[w] = c

    @staticmethod
    def generator(i):
        """The one-letter element e_i."""
        return WordVector(RootVector.simple(i), {(i,): 1})

    @staticmethod
    def from_word(word):
        word = tuple(word)
        return WordVector(RootVector.from_word(word), {word: 1})

    @staticmethod
    def zero(beta):
        return WordVector(beta, {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, WordVector) and self.beta == other.beta
                and self.terms == other.terms)

    def __add__(self, other):
        if self.beta != other.beta:
            raise ValueError("cannot add elements of different weights")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, RatFunc.zero()) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return WordVector(self.beta, out)

    def __sub__(self, other):
        return self + other.scale(RatFunc(LaurentPoly({0: Fraction(-1)})))

    def scale(self, c):
        if not isinstance(c, RatFunc):
            c = RatFunc(LaurentPoly({0: Fraction(c)}))
        return WordVector(self.beta, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, RatFunc.zero()) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return WordVector(self.beta + other.beta, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            bits.append(f"({self.terms[w]})*e[{','.join(map(str, w))}]")
        return " + ".join(bits)


class GramCache:
    """Memoized word pairings for one Cartan datum.

    Reads are lock-free; inserts take the lock, so concurrent lookups are
    safe while the recursion fills the table.
    """

    def __init__(self, cartan):
        self.cartan = cartan
        self._memo = {}
        self._lock = threading.Lock()

    def pair_words(self, u, v):
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            return RatFunc.zero()
        if not u:
            return RatFunc.one()
        got = self._memo.get((u, v))
        if got is not None:
            return got
        dot = self.cartan.dot
        j = v[-1]
        vp = v[:-1]
        acc = RatFunc.zero()
        for p in range(len(u)):
            if u[p] != j:
                continue
            e = sum(dot(j, u[t]) for t in range(p))
            acc = acc + RatFunc(LaurentPoly({e: Fraction(1)})) \
                * self.pair_words(u[:p] + u[p + 1:], vp)
        gen = RatFunc(LaurentPoly.one(),
                      LaurentPoly.one() - LaurentPoly.q(dot(j, j)))
        out = acc * gen
        with self._lock:
            self._memo[(u, v)] = out
            self._memo[(v, u)] = out
        return out


def pair(u, v, cache):
    """The bilinear form on two WordVectors (0 if the weights differ)."""
    if u.beta != v.beta:
        return RatFunc.zero()
    acc = RatFunc.zero()
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            acc = acc + c1 * c2 * cache.pair_words(w1, w2)
    return acc


def is_zero_mod_serre(v, cache, bound=None):
    """Whether v vanishes in the quotient algebra: by non-degeneracy of
    the form this holds iff (w, v) = 0 for every word w of the weight."""
    if v.is_zero():
        return True
    for w in sequences(v.beta, bound):
        word = tuple(reversed(w))  # written order
        if pair(WordVector.from_word(word), v, cache):
            return False
    return True


def _q_power(e):
    return RatFunc(LaurentPoly({e: Fraction(1)}))


def ad_e(i, v, cartan):
    """The adjoint operator e_i * v - q_i^w * v * e_i, w the weight
    pairing of i against the weight of v."""
    ei = WordVector.generator(i)
    w = pairing(cartan, i, v.beta)
    di = cartan.d(i)
    return ei * v - (v * ei).scale(_q_power(di * w))


def _divided_power(i, n, cartan):
    """e_i^{(n)} = e_i^n / [n]_i!."""
    ei = WordVector.generator(i)
    out = WordVector(RootVector({}), {(): 1})
    for _ in range(n):
        out = out * ei
    fact = RatFunc(LaurentPoly.one(), quantum_factorial(n, cartan.d(i)))
    return out.scale(fact)


def ad_e_divided(n, i, v, cartan):
    """Divided n-th adjoint power, computed along two independent routes
    (iterate then divide by [n]_i!, and the closed alternating sum) with
    an internal agreement assertion."""
    di = cartan.d(i)
    iterated = v
    for _ in range(n):
        iterated = ad_e(i, iterated, cartan)
    fact = RatFunc(LaurentPoly.one(), quantum_factorial(n, di))
    iterated = iterated.scale(fact)

    w = pairing(cartan, i, v.beta)
    closed = WordVector.zero(iterated.beta)
    for k in range(n + 1):
        piece = _divided_power(i, n - k, cartan) * v * _divided_power(
            i, k, cartan)
        piece = piece.scale(_q_power(di * k * (n - 1 + w)))
        if k % 2:
            piece = piece.scale(-1)
        closed = closed + piece
    assert iterated == closed, "divided adjoint power routes disagree"
    return closed


def higher_serre_check(n, m, i, j, cache, bound=None):
    """Whether the divided n-th adjoint power of e_j^m vanishes matches
    the criterion n > -m c_{ij}."""
    cartan = cache.cartan
    ej = WordVector.from_word((j,) * m)
    v = ad_e_divided(n, i, ej, cartan)
    expected = n > -m * cartan.cartan(i, j)
    return is_zero_mod_serre(v, cache, bound) == expected


def uplusi_member(v, i, cache, bound=None):
    """Whether v pairs to zero against every e_i z with z a word of the
    complementary weight: the form-theoretic membership test for the
    kernel subalgebra that the twisted adjoint operators map into."""
    if v.is_zero():
        return True
    coeffs = dict(v.beta.coeffs)
    coeffs[i] = coeffs.get(i, 0) - 1
    if coeffs[i] < 0:
        return True
    rest = RootVector(coeffs)
    for z in sequences(rest, bound):
        word = (i,) + tuple(reversed(z))
        if pair(WordVector.from_word(word), v, cache):
            return False
    return True


def k0_isometry_calibrate(beta, window, ctx, bound=None):
    """Compare the form against graded dimensions of the idempotent-
    truncated algebra.

    For every pair of words mu, nu of weight beta, the window expansion of
    (e_mu, e_nu) must equal the graded dimension series of the (mu, nu)
    block of the algebra up to one overall power of q; the report records
    that exponent per pair and asserts it is the same for all pairs.
    """
    from .klr import graded_basis
    from .qring import DegreeWindow
    cache = GramCache(ctx.cartan)
    words = [tuple(reversed(s)) for s in sequences(beta, bound)]
    pad = 2 * sum(abs(ctx.cartan.dot(a, b))
                  for a in beta.coeffs for b in beta.coeffs) \
        * max(height(beta), 1) + 2
    wide = DegreeWindow(window.d_min - pad, window.d_max + pad)
    entries = []
    shifts = set()
    for mu in words:
        mu_pos = tuple(reversed(mu))
        for nu in words:
            nu_pos = tuple(reversed(nu))
            form = series_window(
                pair(WordVector.from_word(mu), WordVector.from_word(nu),
                     cache), wide)
            dims = {}
            for d in wide:
                k = len(graded_basis(ctx, mu_pos, nu_pos, d).keys)
                if k:
                    dims[d] = Fraction(k)
            if not dims and form.is_zero():
                continue
            if not dims or form.is_zero():
                raise ValueError("form and graded dimensions disagree "
                                 "about vanishing")
            lo_dims = min(dims)
            lo_form = min(e for e, c in form.coeffs.items() if c)
            s = lo_form - lo_dims
            for d in window:
                if form.coeff(d + s) != dims.get(d, 0):
                    raise ValueError(
                        f"no monomial correction matches block ({mu},{nu})")
            shifts.add(s)
            entries.append({"left": mu, "right": nu, "shift": s})
    if len(shifts) > 1:
        raise ValueError(f"correction exponent not uniform: {sorted(shifts)}")
    return {
        "weight": dict(beta.coeffs),
        "window": [window.d_min, window.d_max],
        "shift": (sorted(shifts)[0] if shifts else None),
        "pairs": entries,
    }
