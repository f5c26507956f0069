"""Polynomials in x_1..x_n with the symmetric-group action, Demazure
operators, and reduced-word machinery.

Permutations are stored as 1-indexed image tuples and act on positions.
A word (k_1, ..., k_r) denotes the product s_{k_1} ... s_{k_r} applied
right to left (the rightmost letter acts first), matching how a product
tau_{k_1} ... tau_{k_r} eats an idempotent from the right.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# ---------------------------------------------------------------------------
# permutations and words
# ---------------------------------------------------------------------------

class Perm:
    """A permutation of {1..n}, stored by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")

    @staticmethod
    def identity(n):
        return Perm(range(1, n + 1))

    @staticmethod
    def s(k, n):
        """The simple transposition s_k in S_n."""
        im = list(range(1, n + 1))
        im[k - 1], im[k] = im[k], im[k - 1]
        return Perm(im)

    @staticmethod
    def transposition(k, l, n):
        im = list(range(1, n + 1))
        im[k - 1], im[l - 1] = im[l - 1], im[k - 1]
        return Perm(im)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, p):
        return self.images[p - 1]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __mul__(self, other):
        """Function composition: (self * other)(p) = self(other(p))."""
        return Perm(tuple(self.images[q - 1] for q in other.images))

    def inv(self):
        out = [0] * len(self.images)
        for p, q in enumerate(self.images, start=1):
            out[q - 1] = p
        return Perm(out)

    def length(self):
        """Coxeter length = inversion count."""
        im = self.images
        return sum(1 for a in range(len(im)) for b in range(a + 1, len(im))
                   if im[a] > im[b])

    def is_identity(self):
        return all(q == p for p, q in enumerate(self.images, start=1))

    def permute_tuple(self, t):
        """Left color word of tau_w 1_nu for w with word-permutation self:
        position p carries the color of right position self^-1(p)."""
        inv = self.inv().images
        return tuple(t[q - 1] for q in inv)

    def __repr__(self):
        return f"Perm{self.images}"


def perm_of_word(word, n):
    """The permutation of a word, rightmost letter applied first."""
    g = Perm.identity(n)
    for k in word:
        g = g * Perm.s(k, n)
    return g


def is_reduced(word, n=None):
    """True iff the word's length equals the length of its permutation."""
    if n is None:
        n = max(word) + 1 if word else 1
    return perm_of_word(word, n).length() == len(word)


def canonical_word(g):
    """The fixed reduced word of a permutation.

    Recursive rule: peel the strand ending at the top position; if
    r = g^-1(n) then word(g) = word(g') ++ [n-1, n-2, ..., r] where g'
    is g with the top strand removed.  Words for block permutations are
    the concatenation of the blocks' words, so diamond products of basis
    monomials stay basis-aligned.
    """
    n = g.n
    if n == 0:
        return ()
    im = list(g.images)
    r = im.index(n) + 1
    rest = [q for q in im if q != n]
    sub = Perm(rest) if rest else Perm(())
    return canonical_word(sub) + tuple(range(n - 1, r - 1, -1))


def descents_left(g):
    """Letters k with l(s_k g) < l(g)."""
    inv = g.inv().images
    return [k for k in range(1, g.n) if inv[k - 1] > inv[k]]


def longest_word(k, l):
    """Reduced word of the longest element of the symmetric group on
    strands {k..l}, via the recursion w0[k,l+1] = w0[k,l] s_[l down-to k]."""
    if l <= k:
        return ()
    return longest_word(k, l - 1) + tuple(range(l - 1, k - 1, -1))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    """A sparse polynomial in x_1..x_n with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    e = tuple(int(x) for x in e)
                    if len(e) != n or any(x < 0 for x in e):
                        raise ValueError(f"bad exponent vector {e} for n={n}")
                    clean[e] = c
        self.terms = clean

    @staticmethod
    def zero(n):
        return Poly(n)

    @staticmethod
    def one(n):
        return Poly(n, {(0,) * n: 1})

    @staticmethod
    def x(k, n, power=1):
        e = [0] * n
        e[k - 1] = power
        return Poly(n, {tuple(e): 1})

    @staticmethod
    def constant(c, n):
        return Poly(n, {(0,) * n: c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.n)
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.n)
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = Poly.__new__(Poly)
        res.n, res.terms = self.n, out
        return res

    def __neg__(self):
        res = Poly.__new__(Poly)
        res.n = self.n
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.constant(other, self.n)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly(self.n)
            res = Poly.__new__(Poly)
            res.n = self.n
            res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        if self.n != other.n:
            raise ValueError("variable-count mismatch")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = Poly.__new__(Poly)
        res.n, res.terms = self.n, out
        return res

    __rmul__ = __mul__

    def degree(self):
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def embed(self, n, offset=0):
        """View in x_1..x_n with variables shifted up by offset."""
        if offset + self.n > n:
            raise ValueError("embedding does not fit")
        out = {}
        for e, c in self.terms.items():
            ee = [0] * n
            for a, x in enumerate(e):
                ee[offset + a] = x
            out[tuple(ee)] = c
        return Poly(n, out)

    def subst_vars(self, mapping, n=None):
        """Rename variable k to mapping[k] (a 1-indexed injective map)."""
        if n is None:
            n = self.n
        out = {}
        for e, c in self.terms.items():
            ee = [0] * n
            for a, x in enumerate(e):
                if x:
                    ee[mapping[a + 1] - 1] = x
            out[tuple(ee)] = c
        return Poly(n, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            vs = "*".join(f"x{k+1}" + (f"^{p}" if p > 1 else "")
                          for k, p in enumerate(e) if p)
            if not vs:
                parts.append(str(c))
            elif c == 1:
                parts.append(vs)
            else:
                parts.append(f"{c}*{vs}")
        return " + ".join(parts)


def act(g, p):
    """Permute variables: (g.f)(x_1..x_n) = f(x_{g^-1(1)}, ...), i.e. x_k -> x_{g(k)}."""
    if isinstance(g, Perm):
        if g.n != p.n:
            raise ValueError("size mismatch")
        images = g.images
    else:
        raise TypeError("act expects a Perm")
    out = {}
    for e, c in p.terms.items():
        ee = [0] * p.n
        for a, x in enumerate(e):
            ee[images[a] - 1] = x
        out[tuple(ee)] = c
    res = Poly.__new__(Poly)
    res.n, res.terms = p.n, out
    return res


def _swap_exponents(e, k, l):
    ee = list(e)
    ee[k - 1], ee[l - 1] = ee[l - 1], ee[k - 1]
    return tuple(ee)


def demazure(k, l, p):
    """The divided difference (f - s_{k,l} f)/(x_l - x_k), always exact."""
    if k == l:
        raise ValueError("demazure needs two distinct variables")
    n = p.n
    out = Poly.zero(n)
    for e, c in p.terms.items():
        a, b = e[k - 1], e[l - 1]
        if a == b:
            continue
        # (x_k^a x_l^b - x_k^b x_l^a)/(x_l - x_k) over the common factor
        lo, hi = min(a, b), max(a, b)
        sign = 1 if b > a else -1
        rest = list(e)
        rest[k - 1] = rest[l - 1] = 0
        for t in range(hi - lo):
            ee = list(rest)
            ee[k - 1] = lo + t
            ee[l - 1] = hi - 1 - t
            out = out + Poly(n, {tuple(ee): sign * c})
    return out


def demazure_seq(word, p):
    """Left-to-right composition of simple Demazure operators along a word."""
    out = p
    for k in word:
        out = demazure(k, k + 1, out)
    return out


# ---------------------------------------------------------------------------
# the twist polynomials Q_{i,j}
# ---------------------------------------------------------------------------

def q_polynomial(i, j, ctx):
    """Q_{i,j}(u,v) as a polynomial in two variables (u = x_1, v = x_2).

    Q_{i,i} = 0; the default for i != j is u^{-c_ij} + v^{-c_ji}, with
    units and extra middle terms configurable on the context.
    """
    return ctx.q_poly(i, j)


def q_multi(i, nu, ctx):
    """Q_{i,nu}(u, v_1..v_n) = product over positions k with nu_k != i of
    Q_{i,nu_k}(u, v_k), as a polynomial in n+1 variables with v_k = x_k
    and u = x_{n+1}."""
    n = len(nu)
    out = Poly.one(n + 1)
    for k, col in enumerate(nu, start=1):
        if col == i:
            continue
        qp = ctx.q_poly(i, col)  # in vars (u, v)
        out = out * qp.subst_vars({1: n + 1, 2: k}, n + 1)
    return out


def all_perms(n):
    """All permutations of S_n."""
    return [Perm(im) for im in itertools.permutations(range(1, n + 1))]
