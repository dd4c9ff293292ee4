"""Factorization of polynomials over finite fields.

Squarefree decomposition, then distinct-degree factorization, then
Cantor-Zassenhaus equal-degree splitting driven by a seeded generator.
Works over any field object exposing the common interface (prime fields
and ``ExtField``).
"""

import random
from collections import Counter
from dataclasses import dataclass, field

from ..arith import factorint
from ..config import DEFAULT_SEED
from ..errors import ZeroPolynomial
from .poly import FpPolynomial


@dataclass(frozen=True)
class FactorizationFp:
    """unit * prod(g**e for g, e in factors), factors monic irreducible and
    sorted by (degree, coefficient list)."""

    unit: int
    factors: tuple
    seed: int = field(default=DEFAULT_SEED, compare=False)

    def expand(self):
        field_ = self.factors[0][0].field if self.factors else None
        if field_ is None:
            raise ValueError("cannot expand an empty factorization without a field")
        acc = FpPolynomial.constant(field_, self.unit)
        for g, e in self.factors:
            acc = acc * g ** e
        return acc

    def has_repeated_factor(self):
        return any(e > 1 for _, e in self.factors)

    def degrees(self):
        return [(g.degree, e) for g, e in self.factors]

    def __str__(self):
        return format_factorization(self)


def format_factorization(fac):
    """Canonical display string, e.g. ``(x+12)^2 (x+15)^2 (x^2+3x+12)``.

    Single-term factors such as ``x`` are printed without parentheses.
    """
    parts = []
    if fac.unit != 1:
        parts.append(str(fac.unit))
    for g, e in fac.factors:
        s = str(g)
        if "+" in s:
            s = f"({s})"
        if e > 1:
            s = f"{s}^{e}"
        parts.append(s)
    return " ".join(parts) if parts else "1"


def normalize_factorization_string(s):
    """Strip whitespace so printed factorizations compare exactly."""
    return "".join(s.split())


# -- squarefree decomposition ------------------------------------------------

def squarefree_decomposition(f):
    """Monic f -> [(g, m)] with f = prod g**m, g squarefree, pairwise coprime."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of 0")
    f = f.monic()
    if f.degree < 1:
        return []
    p = f.field.char
    out = []
    df = f.derivative()
    if df.is_zero():
        for g, m in squarefree_decomposition(f.pth_root()):
            out.append((g, m * p))
        return out
    c = f.gcd(df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        for g, m in squarefree_decomposition(c.pth_root()):
            out.append((g, m * p))
    return out


# -- distinct-degree and equal-degree ------------------------------------------

def distinct_degree_factorization(f):
    """Squarefree monic f -> [(g_d, d)], g_d the product of the degree-d
    irreducible factors."""
    F = f.field
    q = F.q
    x = FpPolynomial.x(F)
    out = []
    h = x % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _random_poly(F, n, rng):
    return FpPolynomial(F, tuple(rng.randrange(F.q) for _ in range(n)))


def _split_candidate(a, f, d):
    F = f.field
    q = F.q
    if q % 2:
        return a.powmod((q ** d - 1) // 2, f) - 1
    # characteristic 2: absolute trace to F_2 of F_{q^d}
    k = F.degree * d
    t = a % f
    acc = t
    for _ in range(k - 1):
        t = (t * t) % f
        acc = acc + t
    return acc


def equal_degree_factorization(f, d, rng):
    """Split squarefree monic f, all of whose irreducible factors have degree
    d, into those factors."""
    if f.degree == d:
        return [f]
    F = f.field
    while True:
        a = _random_poly(F, f.degree, rng)
        if a.degree < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree < f.degree:
            break
        g = f.gcd(_split_candidate(a, f, d))
        if 0 < g.degree < f.degree:
            break
    return (equal_degree_factorization(g, d, rng)
            + equal_degree_factorization(f // g, d, rng))


def factor(f, seed=DEFAULT_SEED):
    """Full canonical factorization of a nonzero polynomial over its field."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    unit = f.lc
    mult = Counter()
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree_factorization(g):
            for irr in equal_degree_factorization(h, d, rng):
                mult[irr.monic()] += m
    factors = tuple(sorted(mult.items(), key=lambda item: item[0].sort_key()))
    return FactorizationFp(unit, factors, seed)


def is_irreducible(f):
    """Rabin's test."""
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of 0")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    q = F.q
    f = f.monic()
    x = FpPolynomial.x(F)
    if (x.powmod(q ** n, f) - x) % f:
        return False
    for r in factorint(n):
        h = x.powmod(q ** (n // r), f) - x
        if f.gcd(h).degree > 0:
            return False
    return True


def monic_polynomials(F, n):
    """All monic degree-n polynomials over F in a fixed order."""
    q = F.q
    for code in range(q ** n):
        coeffs = []
        for _ in range(n):
            code, r = divmod(code, q)
            coeffs.append(r)
        yield FpPolynomial(F, tuple(coeffs) + (1,))
