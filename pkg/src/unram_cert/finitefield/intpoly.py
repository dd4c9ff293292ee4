"""Integer polynomials: exact discriminants, reduction mod p, Dedekind's
index criterion and splitting types read off a factorization."""

import re
from collections import Counter
from dataclasses import dataclass

from ..config import DEFAULT_SEED
from ..errors import NotMaximalAtP, ZeroPolynomial
from .factor import factor
from .fields import PrimeField
from .poly import FpPolynomial


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple  # constant term first

    def __post_init__(self):
        c = [int(a) for a in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text):
        """Accepts either ``x^6 - 10x^4 + 3`` style expressions or a
        comma-separated coefficient list, constant term first."""
        text = text.strip()
        if "x" not in text:
            return cls(tuple(int(t) for t in re.split(r"[,\s]+", text.strip("[]() ")) if t))
        body = text.replace(" ", "").replace("**", "^").replace("*", "")
        if body[0] not in "+-":
            body = "+" + body
        coeffs = Counter()
        for sign, num, xpart, exp in re.findall(r"([+-])(\d*)(x?)(?:\^(\d+))?", body):
            if not num and not xpart:
                continue
            c = int(num) if num else 1
            e = (int(exp) if exp else 1) if xpart else 0
            coeffs[e] += -c if sign == "-" else c
        n = max(coeffs) if coeffs else 0
        return cls(tuple(coeffs[i] for i in range(n + 1)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def derivative(self):
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def mod(self, p):
        return FpPolynomial.from_ints(PrimeField(p), self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            body = mono if (a == 1 and mono) else f"{a}{mono}"
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s


def _bareiss_det(m):
    """Exact integer determinant by fraction-free elimination."""
    m = [list(r) for r in m]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            a = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - a * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    a = list(reversed(f.coeffs))  # leading coefficient first
    b = list(reversed(g.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def int_poly_discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return d


def factor_mod_p(f, p, seed=DEFAULT_SEED):
    fp = f.mod(p)
    if fp.is_zero():
        raise ZeroPolynomial(f"{f} vanishes modulo {p}")
    return factor(fp, seed=seed)


def _lift(g):
    return IntPolynomial(tuple(g.coeffs))


def _int_mul(a, b):
    if not a.coeffs or not b.coeffs:
        return IntPolynomial(())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(tuple(out))


def dedekind_index_test(f, p, seed=DEFAULT_SEED):
    """True iff p does not divide [O_K : Z[x]/(f)] (Dedekind's criterion).

    With f = prod g_i^e_i mod p, put g = prod g_i, h = prod g_i^(e_i - 1) and
    F = (g*h - f)/p computed on lifts; p is coprime to the index iff
    gcd(F mod p, g, h) = 1.  ``f`` must be monic; irreducibility over Q is
    the caller's responsibility.
    """
    if not f.is_monic():
        raise ValueError("Dedekind's criterion needs a monic polynomial")
    fac = factor_mod_p(f, p, seed)
    F = PrimeField(p)
    g = FpPolynomial.constant(F, 1)
    h = FpPolynomial.constant(F, 1)
    for gi, e in fac.factors:
        g = g * gi
        if e > 1:
            h = h * gi ** (e - 1)
    gh = _int_mul(_lift(g), _lift(h))
    n = max(len(gh.coeffs), len(f.coeffs))
    diff = [(gh.coeffs[i] if i < len(gh.coeffs) else 0) - (f.coeffs[i] if i < len(f.coeffs) else 0)
            for i in range(n)]
    assert all(c % p == 0 for c in diff)
    big_f = FpPolynomial.from_ints(F, [c // p for c in diff])
    common = big_f.gcd(g).gcd(h)
    return common.degree == 0


@dataclass(frozen=True)
class SplittingType:
    """Multiset of (e, f) pairs, stored sorted."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted(tuple(pr) for pr in self.pairs)))

    @property
    def degree(self):
        return sum(e * f for e, f in self.pairs)

    @property
    def max_e(self):
        return max(e for e, _ in self.pairs)

    def has_e(self, e):
        return any(pe == e for pe, _ in self.pairs)

    def is_ramified(self):
        return self.max_e > 1

    def to_list(self):
        return [list(pr) for pr in self.pairs]


def splitting_type(f, p, seed=DEFAULT_SEED):
    if not dedekind_index_test(f, p, seed):
        raise NotMaximalAtP(f"{p} divides the index of Z[x]/({f})")
    fac = factor_mod_p(f, p, seed)
    return SplittingType(tuple((e, g.degree) for g, e in fac.factors))


def unramified_part(f, p, seed=DEFAULT_SEED):
    """(e, f) pairs that are certain without p-maximality: every simple
    factor mod p lifts by Hensel to an unramified prime of degree deg g."""
    fac = factor_mod_p(f, p, seed)
    return SplittingType(tuple((1, g.degree) for g, e in fac.factors if e == 1))
