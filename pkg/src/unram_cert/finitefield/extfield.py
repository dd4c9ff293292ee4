"""Extension fields F_{p^d} = F_p[x]/(modulus).

An element is encoded as the integer sum(c_i * p**i) where c_i is the
coefficient of x**i in its reduced representative, so the codes are
``range(p**d)``, 0 is zero and 1 is one.  Multiplication goes through
log/antilog tables for small fields.
"""

from dataclasses import dataclass, field

from ..arith import factorint, order_from_exponent
from .factor import is_irreducible, monic_polynomials
from .fields import PrimeField
from .poly import FpPolynomial

_TABLE_LIMIT = 1 << 16


@dataclass(frozen=True)
class ExtField:
    base: PrimeField
    modulus: FpPolynomial
    _exp: tuple = field(default=None, repr=False, compare=False, hash=False)
    _log: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.modulus.field != self.base:
            raise ValueError("modulus must be defined over the base field")
        if not self.modulus.is_monic() or not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not monic irreducible")
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    @classmethod
    def of(cls, p, modulus_ints):
        F = PrimeField(p)
        return cls(F, FpPolynomial.from_ints(F, modulus_ints))

    @classmethod
    def conway_like(cls, p, d):
        """The first monic irreducible of degree d (in code order) whose root
        is primitive."""
        F = PrimeField(p)
        n = p ** d - 1
        fac = factorint(n) if n > 1 else {}
        for f in monic_polynomials(F, d):
            if f[0] == 0 or not is_irreducible(f):
                continue
            x = FpPolynomial.x(F)
            if n == 1 or order_from_exponent(lambda k: x.powmod(k, f).is_one(), n, fac) == n:
                return cls(F, f)
        raise ValueError(f"no primitive polynomial of degree {d} over F_{p}")

    # shape -------------------------------------------------------------------
    @property
    def p(self):
        return self.base.p

    @property
    def char(self):
        return self.base.p

    @property
    def degree(self):
        return self.modulus.degree

    @property
    def q(self):
        return self.base.p ** self.modulus.degree

    @property
    def prime_field(self):
        return self.base

    zero = 0
    one = 1

    # encoding ------------------------------------------------------------------
    def to_poly(self, a):
        p = self.base.p
        coeffs = []
        while a:
            a, r = divmod(a, p)
            coeffs.append(r)
        return FpPolynomial(self.base, tuple(coeffs))

    def from_poly(self, f):
        f = f % self.modulus
        p = self.base.p
        code = 0
        for c in reversed(f.coeffs):
            code = code * p + c
        return code

    def coordinates(self, a):
        """Coefficient vector of a in the basis 1, x, ..., x^(d-1)."""
        p = self.base.p
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def __call__(self, n):
        """Embed an integer as n * 1."""
        return int(n) % self.base.p

    def generator(self):
        """The class of x."""
        return self.from_poly(FpPolynomial.x(self.base))

    # arithmetic ------------------------------------------------------------------
    def add(self, a, b):
        p = self.base.p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        p = self.base.p
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * scale
            scale *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._exp is not None:
            n = self.q - 1
            return self._exp[(self._log[a] + self._log[b]) % n]
        return self.from_poly(self.to_poly(a) * self.to_poly(b))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is not None:
            n = self.q - 1
            return self._exp[(-self._log[a]) % n]
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if not a:
            return 0 if e else 1
        if self._exp is not None:
            n = self.q - 1
            return self._exp[(self._log[a] * e) % n]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius_root(self, a):
        # a**(q/p) is the unique p-th root
        return self.pow(a, self.q // self.base.p)

    def elements(self):
        return range(self.q)

    def _build_tables(self):
        n = self.q - 1
        fac = factorint(n) if n > 1 else {}
        mod = self.modulus
        for g in range(1, self.q):
            gp = self.to_poly(g)
            if n == 1 or order_from_exponent(lambda k: gp.powmod(k, mod).is_one(), n, fac) == n:
                break
        powers = [1]
        cur = FpPolynomial.constant(self.base, 1)
        for _ in range(n - 1):
            cur = (cur * gp) % mod
            powers.append(self.from_poly(cur))
        object.__setattr__(self, "_exp", tuple(powers))
        object.__setattr__(self, "_log", {v: i for i, v in enumerate(powers)})

    def __repr__(self):
        return f"GF({self.p}^{self.degree}; {self.modulus})"
