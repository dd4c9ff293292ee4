"""Permutations, cycle-type analytics for S_n / A_n and a small library of
permutation models used as isomorphism targets."""

from dataclasses import dataclass
from math import lcm

from ..errors import OddPermutation


@dataclass(frozen=True)
class Permutation:
    """Images of 0..n-1.  Product ``a*b`` applies a first, then b."""

    images: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, *cycles):
        img = list(range(n))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                img[a] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    @property
    def degree(self):
        return len(self.images)

    def __mul__(self, other):
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        inv = [0] * len(self.images)
        for i, a in enumerate(self.images):
            inv[a] = i
        return Permutation(tuple(inv))

    def is_identity(self):
        return all(i == a for i, a in enumerate(self.images))

    def cycle_type(self):
        seen = set()
        parts = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            j, k = i, 0
            while j not in seen:
                seen.add(j)
                j = self.images[j]
                k += 1
            parts.append(k)
        return tuple(sorted(parts, reverse=True))

    def order(self):
        return lcm(*self.cycle_type())

    def is_even(self):
        return sum(c - 1 for c in self.cycle_type()) % 2 == 0


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def is_even_type(parts):
    return sum(c - 1 for c in parts) % 2 == 0


def perm_order_spectrum(group, n):
    """Element orders of S_n or A_n from cycle types."""
    if group not in ("S", "A"):
        raise ValueError("group must be 'S' or 'A'")
    if n > 20:
        raise ValueError("partition enumeration limited to n <= 20")
    out = set()
    for parts in partitions(n):
        if group == "A" and not is_even_type(parts):
            continue
        out.add(lcm(*parts))
    return out


def an_class_splits(cycle_type, n):
    """Whether the S_n-class of this even cycle type splits into two A_n
    classes: exactly when the parts are odd and pairwise distinct."""
    parts = tuple(cycle_type)
    if sum(parts) < n:
        parts = parts + (1,) * (n - sum(parts))
    if sum(parts) != n:
        raise ValueError("cycle type is not a partition of n")
    if not is_even_type(parts):
        raise OddPermutation(f"{cycle_type} is odd")
    return all(c % 2 for c in parts) and len(set(parts)) == len(parts)

