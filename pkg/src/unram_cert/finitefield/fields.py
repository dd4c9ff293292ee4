"""Prime fields.  Elements are plain Python ints in ``range(p)``."""

from dataclasses import dataclass

from ..arith import is_prime


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    # the common field interface shared with ExtField
    @property
    def q(self):
        return self.p

    @property
    def char(self):
        return self.p

    @property
    def degree(self):
        return 1

    @property
    def prime_field(self):
        return self

    zero = 0
    one = 1

    def __call__(self, n):
        return int(n) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self):
        return range(self.p)

    def frobenius_root(self, a):
        # a**(1/p) = a in the prime field
        return a

    def __repr__(self):
        return f"GF({self.p})"
