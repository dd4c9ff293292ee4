"""Dense univariate polynomials over a finite field.

Coefficients are stored constant term first, as field elements in the
integer encoding of the coefficient field (see ``PrimeField`` and
``ExtField``).  The zero polynomial has an empty coefficient tuple.
"""

from dataclasses import dataclass

from ..errors import ZeroPolynomial
from .fields import PrimeField


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class FpPolynomial:
    field: object
    coeffs: tuple

    def __post_init__(self):
        F = self.field
        object.__setattr__(self, "coeffs", _strip(F(c) if isinstance(F, PrimeField) else c
                                                  for c in self.coeffs))

    # construction ----------------------------------------------------------
    @classmethod
    def from_ints(cls, field, ints):
        """Coefficients given as integers, constant term first."""
        return cls(field, tuple(field(c) for c in ints))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, n, c=1):
        return cls(field, (0,) * n + (c,))

    def _new(self, coeffs):
        return FpPolynomial(self.field, tuple(coeffs))

    # basic properties -------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self):
        return (self.degree, self.coeffs)

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return self._new(out)

    def __neg__(self):
        F = self.field
        return self._new(F.neg(c) for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if not isinstance(other, FpPolynomial):
            return self.scale(other)
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new(())
        F = self.field
        if isinstance(F, PrimeField):
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return self._new(c % p for c in out)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return self._new(out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        return self._new(F.mul(c, a) for a in self.coeffs)

    def __pow__(self, e):
        result = self._new((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return self._new(()), self
        inv_lc = F.inv(other.lc)
        quot = [0] * (len(rem) - db)
        b = other.coeffs
        prime = isinstance(F, PrimeField)
        p = F.p if prime else None
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = F.mul(c, inv_lc)
            quot[k - db] = c
            shift = k - db
            if prime:
                for j in range(db + 1):
                    rem[shift + j] = (rem[shift + j] - c * b[j]) % p
            else:
                for j in range(db + 1):
                    rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]))
        return self._new(quot), self._new(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.lc))

    def gcd(self, other):
        """Monic gcd (zero if both inputs are zero)."""
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def powmod(self, e, modulus):
        result = self._new((1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self):
        F = self.field
        p = F.char
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            k = i % p
            # the integer k < p encodes the constant k in every field
            out.append(F.mul(k, c) if k else 0)
        return self._new(out)

    def pth_root(self):
        """g with g**p == self; requires self' == 0."""
        F = self.field
        p = F.char
        if any(c for i, c in enumerate(self.coeffs) if i % p):
            raise ValueError("polynomial is not a p-th power")
        return self._new(F.frobenius_root(c) for c in self.coeffs[::p])

    def __call__(self, a):
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    # helpers ----------------------------------------------------------------
    def _check_field(self, other):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def _coerce(self, other):
        if isinstance(other, FpPolynomial):
            self._check_field(other)
            return other
        # plain integers embed via n -> n * 1
        return self._new((self.field(other),))

    def to_ints(self):
        return list(self.coeffs)

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def __repr__(self):
        return f"FpPolynomial({self.field!r}, {list(self.coeffs)})"
