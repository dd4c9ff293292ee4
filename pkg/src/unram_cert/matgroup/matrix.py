"""Matrices over finite fields and finitely generated matrix groups."""

from dataclasses import dataclass, field

from ..arith import factorint, gl_order, order_from_exponent
from ..config import CLOSURE_CAP
from ..errors import CapExceeded, OrderCapExceeded
from ..finitefield import ExtField, PrimeField
from . import linalg


def field_of_order(q):
    """PrimeField for prime q, otherwise the first primitive-modulus ExtField."""
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, d), = fac.items()
    return PrimeField(p) if d == 1 else ExtField.conway_like(p, d)


@dataclass(frozen=True)
class MatrixFq:
    field: object
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        if isinstance(self.field, PrimeField):
            p = self.field.p
            rows = tuple(tuple(a % p for a in r) for r in rows)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, F, n):
        return cls(F, linalg.identity(n))

    @classmethod
    def scalar(cls, F, n, c):
        return cls(F, [[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def companion(cls, f):
        """Companion matrix of monic f, acting on row vectors: e_i -> e_{i+1},
        e_{n-1} -> -(c_0, ..., c_{n-1})."""
        F = f.field
        n = f.degree
        rows = []
        for i in range(n - 1):
            rows.append([1 if j == i + 1 else 0 for j in range(n)])
        rows.append([F.neg(f[j]) for j in range(n)])
        return cls(F, rows)

    @property
    def n(self):
        return len(self.rows)

    @property
    def q(self):
        return self.field.q

    def __mul__(self, other):
        F = self.field
        if isinstance(F, PrimeField):
            p = F.p
            cols = list(zip(*other.rows))
            return MatrixFq(F, tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols)
                                     for r in self.rows))
        return MatrixFq(F, linalg.mat_mul(self.rows, other.rows, F))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = MatrixFq.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        return MatrixFq(self.field, linalg.inverse(self.rows, self.field))

    def det(self):
        return linalg.det(self.rows, self.field)

    def is_invertible(self):
        return self.det() != 0

    def is_identity(self):
        return all(a == (1 if i == j else 0) for i, r in enumerate(self.rows) for j, a in enumerate(r))

    def transpose(self):
        return MatrixFq(self.field, linalg.transpose(self.rows))

    def charpoly(self):
        return linalg.charpoly(self.rows, self.field)

    def minus_identity(self):
        F = self.field
        return [[F.sub(a, 1) if i == j else a for j, a in enumerate(r)] for i, r in enumerate(self.rows)]

    def to_list(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(str(a) for a in r) for r in self.rows)


def ambient_order(n, q):
    return gl_order(n, q)


def element_order(m, cap=10 ** 6):
    """Multiplicative order.  Uses exponent descent from |GL_n(q)|; falls back
    to iteration with a cap when the ambient order is unavailable."""
    if not m.is_invertible():
        raise ValueError("singular matrix has no multiplicative order")
    try:
        N = ambient_order(m.n, m.q)
    except ValueError:
        N = None
    if N is not None:
        return order_from_exponent(lambda k: (m ** k).is_identity(), N, factorint(N))
    acc = m
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * m
    raise OrderCapExceeded(f"order exceeds {cap}")


@dataclass
class MatrixGroupHandle:
    generators: tuple
    cap: int = CLOSURE_CAP
    cached_elements: frozenset = field(default=None, repr=False)

    def __post_init__(self):
        self.generators = tuple(self.generators)
        if not self.generators:
            raise ValueError("need at least one generator")
        for g in self.generators:
            if not g.is_invertible():
                raise ValueError("generators must be invertible")

    @property
    def n(self):
        return self.generators[0].n

    @property
    def field(self):
        return self.generators[0].field

    def identity(self):
        return MatrixFq.identity(self.field, self.n)

    def elements(self):
        if self.cached_elements is None:
            self.cached_elements = frozenset(closure(self.generators, self.identity(), self.cap))
        return self.cached_elements

    def order(self):
        return len(self.elements())


def closure(gens, identity, cap=CLOSURE_CAP):
    """Breadth-first closure under right multiplication by the generators."""
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceeded(cap)
                    nxt.append(y)
        frontier = nxt
    return seen


def group_closure(gens, cap=CLOSURE_CAP):
    """Full element set of <gens> and its order, or CapExceeded."""
    handle = MatrixGroupHandle(tuple(gens), cap=cap)
    els = handle.elements()
    return els, len(els)
