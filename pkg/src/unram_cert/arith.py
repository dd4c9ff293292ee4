"""Integer helpers: primality, factorization, multiplicative orders."""

from functools import lru_cache, reduce
from math import gcd

import sympy

# Miller-Rabin with these bases is deterministic below 3.4e14.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)
_MR_DETERMINISTIC_BOUND = 341_550_071_728_321
_MR_EXTRA_BASES = (19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def is_prime(n):
    """Miller-Rabin test; deterministic for n < 3.4e14, probabilistic with
    twenty fixed bases above that."""
    n = int(n)
    if n < 2:
        return False
    for p in _MR_BASES + _MR_EXTRA_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4096)
def _factorint_cached(n):
    return tuple(sorted((int(p), int(e)) for p, e in sympy.factorint(n).items()))


def factorint(n):
    """Prime factorization of |n| as a dict {p: e}."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    return dict(_factorint_cached(n))


def prime_power(q):
    """Return (p, d) with q = p**d, or raise ValueError."""
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, d), = fac.items()
    return p, d


def lcm(*args):
    return reduce(lambda a, b: a * b // gcd(a, b), args, 1)


def order_from_exponent(is_identity_power, exponent, factors=None):
    """Least k with g**k = 1, given that g**exponent = 1.

    ``is_identity_power(k)`` must report whether g**k is the identity.
    """
    if factors is None:
        factors = factorint(exponent)
    order = exponent
    for p, e in sorted(factors.items()):
        for _ in range(e):
            if order % p == 0 and is_identity_power(order // p):
                order //= p
            else:
                break
    return order


def multiplicative_order(a, n):
    """Order of a in (Z/nZ)^*."""
    a %= n
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    phi = int(sympy.totient(n))
    return order_from_exponent(lambda k: pow(a, k, n) == 1, phi)


def squarefree_part(n):
    """Signed squarefree kernel: n = s * m**2 with s squarefree."""
    sign = -1 if n < 0 else 1
    s = 1
    for p, e in factorint(n).items():
        if e % 2:
            s *= p
    return sign * s


def is_square(n):
    if n < 0:
        return False
    r = sympy.integer_nthroot(n, 2)
    return r[1]


def set_partitions(items):
    """All set partitions of a list (Bell-number many)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def gl_order(n, q):
    """|GL_n(F_q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - 1)."""
    prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")
    out = q ** (n * (n - 1) // 2)
    for i in range(1, n + 1):
        out *= q ** i - 1
    return out
