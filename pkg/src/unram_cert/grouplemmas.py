"""Closed-form group facts: Schur multipliers, |GL_n(q)|, minimal dimensions
of faithful cyclic representations, primitive prime divisors, the p-rank
congruence and the p-class-tower rule for small class groups."""

import enum
from dataclasses import dataclass
from math import gcd, prod

from .arith import factorint, gl_order, is_prime, multiplicative_order, set_partitions
from .errors import NotCoprime, OutOfTable

__all__ = [
    "AbelianInvariants", "SimpleGroupLabel", "TausskyConclusion", "gl_order",
    "is_primitive_prime_divisor", "min_gl_dim_for_cyclic", "p_rank_constraint",
    "schur_multiplier", "smith_normal_form", "taussky_rule",
]


# -- finite abelian groups -----------------------------------------------------

def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix (nonzero
    entries only, each dividing the next)."""
    a = [list(map(int, r)) for r in matrix if any(r)]
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        # pick the smallest nonzero entry in the remaining block as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    qt = a[i][t] // p
                    a[i] = [x - qt * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
                        break
            if not done:
                continue
            p = a[t][t]
            for j in range(t + 1, cols):
                if a[t][j]:
                    qt = a[t][j] // p
                    for r in a:
                        r[j] -= qt * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        done = False
                        break
            if not done:
                continue
            # enforce divisibility of the rest of the block by the pivot
            p = a[t][t]
            for i in range(t + 1, rows):
                if any(a[i][j] % p for j in range(t + 1, cols)):
                    a[t] = [x + y for x, y in zip(a[t], a[i])]
                    done = False
                    break
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d_1 | d_2 | ... (all > 1); empty means trivial."""

    divisors: tuple = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.divisors if int(x) != 1)
        if any(x <= 0 for x in d):
            raise ValueError("invariant factors must be positive")
        if any(d[i + 1] % d[i] for i in range(len(d) - 1)):
            raise ValueError(f"{d} is not a divisibility chain")
        object.__setattr__(self, "divisors", d)

    @classmethod
    def from_cyclic_factors(cls, orders):
        """Normalize any list of cyclic orders into invariant factors."""
        by_prime = {}
        for m in orders:
            if m == 0:
                raise ValueError("infinite cyclic factor")
            for p, e in factorint(m).items() if m > 1 else ():
                by_prime.setdefault(p, []).append(p ** e)
        width = max((len(v) for v in by_prime.values()), default=0)
        inv = [1] * width
        for powers in by_prime.values():
            powers.sort(reverse=True)
            for i, pe in enumerate(powers):
                inv[i] *= pe
        return cls(tuple(sorted(inv)))

    @classmethod
    def from_relations(cls, relations, ngens):
        """Z^ngens modulo the row span of the relation matrix."""
        diag = smith_normal_form(relations) if relations else []
        if len(diag) < ngens or any(x == 0 for x in diag):
            raise ValueError("relations do not define a finite group")
        return cls(tuple(diag))

    @classmethod
    def from_element_orders(cls, orders):
        """Invariants of a finite abelian group from the multiset of its
        element orders (the counts of p^j-torsion fix the p-parts)."""
        orders = list(orders)
        n = len(orders)
        cyclic = []
        for p in (factorint(n) if n > 1 else {}):
            logs = [0]
            j = 1
            while True:
                size = sum(1 for o in orders if (p ** j) % o == 0 and _is_p_power(o, p))
                e = _exact_log(size, p)
                if e == logs[-1]:
                    break
                logs.append(e)
                j += 1
            # number of cyclic factors of order >= p^j is logs[j] - logs[j-1]
            at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))] + [0]
            for k in range(1, len(logs)):
                cyclic += [p ** k] * (at_least[k - 1] - at_least[k])
        return cls.from_cyclic_factors(cyclic)

    @property
    def order(self):
        return prod(self.divisors)

    @property
    def rank(self):
        return len(self.divisors)

    def is_trivial(self):
        return not self.divisors

    def is_cyclic(self):
        return len(self.divisors) <= 1

    def p_part(self, p):
        out = []
        for d in self.divisors:
            pe = 1
            while d % p == 0:
                d //= p
                pe *= p
            out.append(pe)
        return AbelianInvariants(tuple(out))

    def p_rank(self, p):
        return sum(1 for d in self.divisors if d % p == 0)

    def to_list(self):
        return list(self.divisors)

    def __str__(self):
        return " x ".join(f"C{d}" for d in self.divisors) if self.divisors else "C1"


def _is_p_power(o, p):
    while o % p == 0:
        o //= p
    return o == 1


def _exact_log(n, p):
    e = 0
    while n > 1:
        if n % p:
            raise ValueError("torsion count is not a prime power; group is not abelian")
        n //= p
        e += 1
    return e


# -- simple groups and Schur multipliers ------------------------------------------

@dataclass(frozen=True)
class SimpleGroupLabel:
    family: str  # "Alt" or "PSL"
    params: tuple

    @classmethod
    def alt(cls, n):
        return cls("Alt", (n,))

    @classmethod
    def psl(cls, n, q):
        return cls("PSL", (n, q))

    @classmethod
    def parse(cls, text):
        """'A5', 'Alt(5)', 'PSL(2,8)' or 'PSL2(8)'."""
        s = text.replace(" ", "").upper()
        if s.startswith("ALT"):
            return cls.alt(int(s[3:].strip("()")))
        if s.startswith("A") and s[1:].isdigit():
            return cls.alt(int(s[1:]))
        if s.startswith("PSL"):
            body = s[3:]
            if body.startswith("("):
                n, q = body.strip("()").split(",")
            else:
                n, q = body.split("(")
                q = q.strip(")")
            return cls.psl(int(n), int(q))
        raise ValueError(f"unrecognized simple group label {text!r}")

    def order(self):
        if self.family == "Alt":
            (n,) = self.params
            return prod(range(1, n + 1)) // 2
        n, q = self.params
        return gl_order(n, q) // (q - 1) // gcd(n, q - 1)

    def __str__(self):
        if self.family == "Alt":
            return f"A{self.params[0]}"
        return f"PSL({self.params[0]},{self.params[1]})"


_PSL_EXCEPTIONS = {
    (2, 4): (2,),
    (2, 9): (6,),
    (3, 2): (2,),
    (3, 4): (4, 12),
    (4, 2): (2,),
}


def schur_multiplier(g):
    if isinstance(g, str):
        g = SimpleGroupLabel.parse(g)
    if g.family == "Alt":
        (n,) = g.params
        if n < 5:
            raise OutOfTable(f"A{n} is not simple")
        return AbelianInvariants((6,) if n in (6, 7) else (2,))
    if g.family == "PSL":
        n, q = g.params
        if n < 2 or (n == 2 and q < 4):
            raise OutOfTable(f"PSL({n},{q}) is not simple")
        if (n, q) in _PSL_EXCEPTIONS:
            return AbelianInvariants(_PSL_EXCEPTIONS[(n, q)])
        return AbelianInvariants((gcd(n, q - 1),))
    raise OutOfTable(f"unknown family {g.family}")


# -- GL dimensions -----------------------------------------------------------------

def min_gl_dim_for_cyclic(m, q):
    """Least n with an element of order m in GL_n(F_q).

    With gcd(m, q) = 1 the module is semisimple; an irreducible summand on
    which the generator has order d has dimension ord_d(q), and faithfulness
    asks for the lcm of the d's to be m.  An optimal choice groups the
    prime-power components of m, so minimize over set partitions of them.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if gcd(m, q) != 1:
        raise NotCoprime(f"gcd({m}, {q}) != 1")
    comps = [p ** e for p, e in factorint(m).items()]
    best = None
    for part in set_partitions(comps):
        total = sum(multiplicative_order(q, prod(block)) for block in part)
        if best is None or total < best:
            best = total
    return best


def is_primitive_prime_divisor(p, q, n):
    if not is_prime(p):
        return False
    return (q ** n - 1) % p == 0 and all((q ** k - 1) % p for k in range(1, n))


def p_rank_constraint(n, p):
    """Multiplicative order f of p mod n: the p-rank of a p-class group
    carrying a faithful action of a group of order n prime to p is a
    multiple of f."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n % p == 0:
        raise NotCoprime(f"{p} divides {n}")
    return multiplicative_order(p, n)


def rank_allowed(rank, n, p):
    return rank % p_rank_constraint(n, p) == 0


# -- p-class tower rule --------------------------------------------------------------

class TausskyConclusion(enum.Enum):
    TrivialNext = "TrivialNext"
    CyclicNext = "CyclicNext"
    NoInfo = "NoInfo"


def taussky_rule(p, group):
    """Cyclic p-class group forces a trivial p-class group one step up; for
    p = 2 a Klein four group forces a cyclic one."""
    if not isinstance(group, AbelianInvariants):
        group = AbelianInvariants.from_cyclic_factors(group)
    if any(not _is_p_power(d, p) for d in group.divisors):
        raise ValueError(f"{group} is not a {p}-group")
    if group.is_cyclic():
        return TausskyConclusion.TrivialNext
    if p == 2 and group.divisors == (2, 2):
        return TausskyConclusion.CyclicNext
    return TausskyConclusion.NoInfo



def abelian_invariants_of_generated(gens, mul, identity, extra_relations=()):
    """Invariants of the finite abelian group generated by ``gens`` under
    ``mul``.  Breadth-first search over exponent vectors gives a spanning
    tree; every non-tree edge yields a relation, and together they span the
    relation lattice.  ``extra_relations`` are group elements to be killed
    (for quotients)."""
    k = len(gens)
    vec = {identity: (0,) * k}
    frontier = [identity]
    relations = []
    while frontier:
        nxt = []
        for x in frontier:
            vx = vec[x]
            for i, g in enumerate(gens):
                y = mul(x, g)
                step = tuple(v + (1 if j == i else 0) for j, v in enumerate(vx))
                if y in vec:
                    rel = tuple(a - b for a, b in zip(step, vec[y]))
                    if any(rel):
                        relations.append(rel)
                else:
                    vec[y] = step
                    nxt.append(y)
        frontier = nxt
    for z in extra_relations:
        relations.append(vec[z])
    if k == 0:
        return AbelianInvariants(())
    return AbelianInvariants.from_relations(relations, k)
