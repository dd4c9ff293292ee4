"""Class groups of quadratic fields from binary quadratic forms.

Imaginary fields use reduced positive definite forms; real fields use
cycles of reduced indefinite forms (narrow classes) together with the norm
of the fundamental unit read off a continued fraction.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import is_prime, is_square, squarefree_part
from .errors import NotFundamental, SquareInput
from .grouplemmas import AbelianInvariants, abelian_invariants_of_generated


@dataclass(frozen=True)
class QuadDiscriminant:
    D: int
    fundamental: bool

    @classmethod
    def of(cls, D):
        return cls(D, is_fundamental(D))


def is_fundamental(D):
    if D in (0, 1) or D % 4 not in (0, 1):
        return False
    if D % 4 == 1:
        return squarefree_part(D) == D
    m = D // 4
    return m % 4 in (2, 3) and squarefree_part(m) == m


def fundamental_discriminant(d):
    """Discriminant of Q(sqrt d)."""
    if is_square(d) or d == 0:
        raise SquareInput(f"{d} is a square")
    s = squarefree_part(d)
    D = s if s % 4 == 1 else 4 * s
    return QuadDiscriminant(D, True)


# -- forms -------------------------------------------------------------------------

def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def disc(self):
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self):
        return gcd(gcd(self.a, self.b), self.c) == 1

    @classmethod
    def principal(cls, D):
        b = D % 2
        return cls(1, b, (b * b - D) // 4)

    @classmethod
    def from_ab(cls, a, b, D):
        c, r = divmod(b * b - D, 4 * a)
        if r:
            raise ValueError(f"no form ({a}, {b}, *) of discriminant {D}")
        return cls(a, b, c)

    def compose(self, other):
        """Gauss composition (Dirichlet's united forms), unreduced."""
        D = self.disc
        if other.disc != D:
            raise ValueError("discriminants differ")
        a1, b1, _ = self.a, self.b, self.c
        a2, b2, _ = other.a, other.b, other.c
        h = (b1 + b2) // 2
        g1, s, t = _xgcd(a1, a2)
        e, x, y = _xgcd(g1, h)
        if e < 0:
            e, x, y = -e, -x, -y
        u, v, w = x * s, x * t, y
        A = a1 * a2 // (e * e)
        B = (a1 * b2 * u + a2 * b1 * v + w * (b1 * b2 + D) // 2) // e
        B %= 2 * A if A > 0 else -2 * A
        return QuadForm.from_ab(A, B, D)

    def inverse(self):
        return QuadForm(self.a, -self.b, self.c)

    # definite reduction ---------------------------------------------------------
    def is_reduced_definite(self):
        a, b, c = self.a, self.b, self.c
        return abs(b) <= a <= c and not (b < 0 and (abs(b) == a or a == c))

    def reduce_definite(self):
        a, b, c = self.a, self.b, self.c
        D = self.disc
        if D >= 0 or a <= 0:
            raise ValueError("positive definite form required")
        while True:
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            b, c = r, (r * r - D) // (4 * a)
            if a > c:
                a, b, c = c, -b, a
                continue
            if a == c and b < 0:
                b = -b
            return QuadForm(a, b, c)

    # indefinite reduction ---------------------------------------------------------
    def is_reduced_indefinite(self):
        """0 < b < sqrt D and sqrt D - b < 2|a| < sqrt D + b, decided with
        integer squares (D is not a square)."""
        D = self.disc
        a2, b = 2 * abs(self.a), self.b
        if b <= 0 or b * b >= D:
            return False
        return D < (a2 + b) ** 2 and (a2 - b < 0 or (a2 - b) ** 2 < D)

    def rho(self):
        """One reduction step for indefinite forms: (a, b, c) -> (c, b', a')
        with b' = -b mod 2c in the normalizing range."""
        D = self.disc
        c = self.c
        r = isqrt(D)
        ac = abs(c)
        b = (-self.b) % (2 * ac)
        if ac <= r:
            # largest b' = -b mod 2|c| with b' < sqrt D, i.e. b' <= r
            b += ((r - b) // (2 * ac)) * 2 * ac
        else:
            if b > ac:
                b -= 2 * ac
        return QuadForm.from_ab(c, b, D)

    def reduce_indefinite(self):
        f = self
        for _ in range(10 ** 6):
            if f.is_reduced_indefinite():
                return f
            f = f.rho()
        raise RuntimeError("indefinite reduction did not terminate")


def reduced_definite_forms(D):
    """All primitive reduced positive definite forms of discriminant D < 0."""
    out = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            f = QuadForm(a, b, c)
            if c >= a and f.is_reduced_definite() and f.is_primitive():
                out.append(f)
        a += 1
    return out


def reduced_indefinite_forms(D):
    out = []
    r = isqrt(D)
    for b in range(1, r + 1):
        if (b - D) % 2:
            continue
        n = (D - b * b) // 4  # = -ac > 0
        if n <= 0:
            continue
        for a in range(1, n + 1):
            if n % a:
                continue
            for sa in (a, -a):
                f = QuadForm(sa, b, -n // sa)
                if f.is_reduced_indefinite() and f.is_primitive():
                    out.append(f)
    return out


def rho_cycles(D):
    """Partition of the reduced indefinite forms into rho-cycles."""
    forms = set(reduced_indefinite_forms(D))
    cycles = []
    while forms:
        start = min(forms, key=lambda f: (abs(f.a), f.a, f.b))
        cyc = [start]
        f = start.rho()
        while f != start:
            cyc.append(f)
            f = f.rho()
        forms -= set(cyc)
        cycles.append(cyc)
    cycles.sort(key=lambda cy: (cy[0].a != 1, abs(cy[0].a), cy[0].a, cy[0].b))
    return cycles


def continued_fraction_period(D):
    """Period length of the continued fraction of (D mod 2 + sqrt D)/2."""
    P, Q = D % 2, 2
    r = isqrt(D)
    seen = {}
    k = 0
    while (P, Q) not in seen:
        seen[(P, Q)] = k
        a = (P + r) // Q
        P = a * Q - P
        Q = (D - P * P) // Q
        k += 1
    return k - seen[(P, Q)]


def unit_norm(D):
    """Norm of the fundamental unit of the order of discriminant D > 0: -1
    exactly when the continued-fraction period is odd."""
    return -1 if continued_fraction_period(D) % 2 else 1


# -- class groups ----------------------------------------------------------------------

@dataclass(frozen=True)
class ClassGroupStructure:
    D: int
    invariants: AbelianInvariants
    narrow: AbelianInvariants = None
    unit_norm: int = None
    representatives: tuple = ()

    @property
    def class_number(self):
        return self.invariants.order

    @property
    def narrow_class_number(self):
        return (self.narrow or self.invariants).order


def class_group_imaginary(D):
    if D >= 0 or not is_fundamental(D):
        raise NotFundamental(f"{D} is not a negative fundamental discriminant")
    reps = reduced_definite_forms(D)
    if len(reps) == 1:
        return ClassGroupStructure(D, AbelianInvariants(()), representatives=tuple(reps))

    def mul(f, g):
        return f.compose(g).reduce_definite()

    inv = abelian_invariants_of_generated(_small_generators(reps, mul, QuadForm.principal(D)),
                                          mul, QuadForm.principal(D))
    return ClassGroupStructure(D, inv, representatives=tuple(reps))


def _small_generators(reps, mul, e):
    """Greedy generating set of the class group."""
    gens, span = [], {e}
    for f in sorted(reps, key=lambda f: (f.a, abs(f.b), f.b)):
        if f in span:
            continue
        gens.append(f)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(span) == len(reps):
            break
    return gens


def class_group_real(D):
    """Wide and narrow class groups of the real quadratic field of
    discriminant D, plus the fundamental unit norm."""
    if D <= 0 or not is_fundamental(D):
        raise NotFundamental(f"{D} is not a positive fundamental discriminant")
    cycles = rho_cycles(D)
    index = {f: i for i, cyc in enumerate(cycles) for f in cyc}
    reps = [cyc[0] for cyc in cycles]
    principal = index[QuadForm.principal(D).reduce_indefinite()]

    def mul(i, j):
        return index[reps[i].compose(reps[j]).reduce_indefinite()]

    ids = list(range(len(reps)))
    gens = _small_generators_idx(ids, mul, principal)
    narrow = abelian_invariants_of_generated(gens, mul, principal)
    b = D % 2
    minus_one = index[QuadForm(-1, b, (D - b * b) // 4).reduce_indefinite()]
    wide = abelian_invariants_of_generated(gens, mul, principal, extra_relations=[minus_one])
    norm = unit_norm(D)
    return ClassGroupStructure(D, wide, narrow, norm, tuple(reps))


def _small_generators_idx(ids, mul, e):
    gens, span = [], {e}
    for f in ids:
        if f in span:
            continue
        gens.append(f)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = mul(x, g)
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
        if len(span) == len(ids):
            break
    return gens


def class_group(D):
    return class_group_imaginary(D) if D < 0 else class_group_real(D)


# -- splitting of primes -------------------------------------------------------------------

def kronecker_symbol(D, p):
    """(D | p) for a prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = D % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def prime_splitting(D, p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    s = kronecker_symbol(D, p)
    return {0: "ramified", 1: "split", -1: "inert"}[s]
