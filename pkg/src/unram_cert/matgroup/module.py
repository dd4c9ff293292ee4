"""Module-theoretic operations on the natural module F_q^n of a matrix group:
commutants, invariant subspaces, irreducibility, Singer elements and
restriction of scalars."""

import itertools
import random
from dataclasses import dataclass

from ..arith import factorint, order_from_exponent
from ..config import COMMUTANT_ENUMERATION_LIMIT, DEFAULT_SEED
from ..errors import EnumerationTooLarge, Inconclusive, NoSuchElement
from ..finitefield import ExtField, FpPolynomial, PrimeField, factor, is_irreducible, monic_polynomials
from . import linalg
from .matrix import MatrixFq, element_order, field_of_order

# projective points of a kernel tested one by one when no good factor shows up
_POINT_BUDGET = 20000


@dataclass(frozen=True)
class CommutantBasis:
    field: object
    n: int
    matrices: tuple

    @property
    def dimension(self):
        return len(self.matrices)

    def element(self, coeffs):
        F = self.field
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for c, m in zip(coeffs, self.matrices):
            if c:
                for i in range(n):
                    for j in range(n):
                        if m.rows[i][j]:
                            rows[i][j] = F.add(rows[i][j], F.mul(c, m.rows[i][j]))
        return MatrixFq(F, rows)

    def commutes_with(self, gens):
        return all(x * g == g * x for x in self.matrices for g in gens)


@dataclass(frozen=True)
class CentralizerResult:
    basis: CommutantBasis
    unit_count: int
    is_cyclic: bool
    witness: object  # a unit of maximal order, or None
    method: str


@dataclass(frozen=True)
class ModuleDecomposition:
    constituent_dimensions: tuple
    irreducible: bool


def commutant_basis(gens):
    """Basis of {X : XA = AX for every generator A}, from the stacked linear
    system in the n^2 entries of X."""
    F = gens[0].field
    n = gens[0].n
    eqs = []
    for A in gens:
        a = A.rows
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                # (XA)_ij = sum_k x_ik a_kj ; (AX)_ij = sum_k a_ik x_kj
                for k in range(n):
                    row[i * n + k] = F.add(row[i * n + k], a[k][j])
                    row[k * n + j] = F.sub(row[k * n + j], a[i][k])
                eqs.append(row)
    vecs = linalg.nullspace(eqs, F, ncols=n * n)
    mats = tuple(MatrixFq(F, [v[i * n:(i + 1) * n] for i in range(n)]) for v in vecs)
    return CommutantBasis(F, n, mats)


def _unit_order(x, unit_count, fac):
    return order_from_exponent(lambda k: (x ** k).is_identity(), unit_count, fac)


def centralizer(gens, n=None, q=None, limit=COMMUTANT_ENUMERATION_LIMIT, seed=DEFAULT_SEED):
    """Commutant of the generators and its unit group (the centralizer in
    GL_n(F_q)).

    Small commutants are enumerated.  Otherwise, if the natural module is
    irreducible the commutant is a finite field F_{q^dim} and its unit group is
    cyclic of order q^dim - 1; a generator is then searched for as witness.
    """
    gens = list(gens)
    if n is not None and gens[0].n != n:
        raise ValueError("dimension mismatch")
    if q is not None and gens[0].q != q:
        raise ValueError("field size mismatch")
    basis = commutant_basis(gens)
    F = basis.field
    qq = F.q
    dim = basis.dimension
    if qq ** dim <= limit:
        units = []
        for coeffs in itertools.product(range(qq), repeat=dim):
            x = basis.element(coeffs)
            if x.is_invertible():
                units.append(x)
        count = len(units)
        fac = factorint(count) if count > 1 else {}
        witness = None
        for x in units:
            if count == 1 or _unit_order(x, count, fac) == count:
                witness = x
                break
        return CentralizerResult(basis, count, witness is not None, witness, "enumeration")
    if module_decompose(gens).irreducible:
        count = qq ** dim - 1
        fac = factorint(count)
        rng = random.Random(seed)
        for _ in range(10000):
            x = basis.element([rng.randrange(qq) for _ in range(dim)])
            if x.is_invertible() and _unit_order(x, count, fac) == count:
                return CentralizerResult(basis, count, True, x, "field")
        raise Inconclusive("no generator of the commutant field found")
    raise EnumerationTooLarge(dim, qq)


def fixed_space(m):
    """dim ker(m - I)."""
    return m.n - linalg.rank(m.minus_identity(), m.field)


# -- invariant subspaces -------------------------------------------------------

def spin(vectors, mats, F):
    """Smallest subspace containing ``vectors`` and stable under v -> v*M.
    Returned in reduced echelon form."""
    basis, pivots = linalg.rref([list(v) for v in vectors], F)
    queue = list(basis)
    while queue:
        v = queue.pop()
        for m in mats:
            w = linalg.vec_mat(v, m, F)
            new, new_piv = linalg.rref(basis + [w], F)
            if len(new) > len(basis):
                basis, pivots = new, new_piv
                queue.append(w)
    return basis, pivots


def _restrict(mats, basis, pivots, F):
    return [[[linalg.vec_mat(b, m, F)[c] for c in pivots] for b in basis] for m in mats]


def _reduce(v, basis, pivots, F):
    v = list(v)
    for b, c in zip(basis, pivots):
        if v[c]:
            f = v[c]
            v = [F.sub(x, F.mul(f, y)) for x, y in zip(v, b)]
    return v


def _quotient(mats, basis, pivots, F, n):
    rest = [c for c in range(n) if c not in pivots]
    out = []
    for m in mats:
        rows = []
        for c in rest:
            e = [0] * n
            e[c] = 1
            w = _reduce(linalg.vec_mat(e, m, F), basis, pivots, F)
            rows.append([w[j] for j in rest])
        out.append(rows)
    return out


def _projective_points(vectors, F):
    """One nonzero representative per line in span(vectors)."""
    k = len(vectors)
    q = F.q
    n = len(vectors[0])
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - lead - 1):
            coeffs = [0] * lead + [1] + list(tail)
            v = [0] * n
            for c, b in zip(coeffs, vectors):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            yield v


def _random_algebra_element(words, F, rng):
    n = len(words[0])
    a, b = rng.choice(words), rng.choice(words)
    words.append(linalg.mat_mul(a, b, F))
    acc = [[0] * n for _ in range(n)]
    for w in rng.sample(words, min(len(words), 4)):
        c = rng.randrange(F.q)
        if c:
            acc = [[F.add(x, F.mul(c, y)) for x, y in zip(r, s)] for r, s in zip(acc, w)]
    return acc


def find_submodule(mats, F, seed=DEFAULT_SEED, attempts=64):
    """A proper nonzero invariant subspace as (basis, pivots), or None when the
    module is proved irreducible (Holt-Rees good factor or Norton's
    criterion on a full kernel).  Raises Inconclusive if no proof is found
    within the budget."""
    n = len(mats[0])
    if n == 1:
        return None
    rng = random.Random(seed)
    words = [list(map(list, m)) for m in mats]
    dual = [linalg.transpose(m) for m in mats]
    for _ in range(attempts):
        A = _random_algebra_element(words, F, rng)
        cp = linalg.charpoly(A, F)
        for g, _e in factor(cp).factors:
            pA = linalg.poly_at_matrix(g, A, F)
            kernel = linalg.left_nullspace(pA, F)
            sub = spin([kernel[0]], mats, F)
            if len(sub[0]) < n:
                return sub
            wk = linalg.nullspace(pA, F)
            dsub, _ = spin([wk[0]], dual, F)
            if len(dsub) < n:
                ann, piv = linalg.rref(linalg.nullspace(dsub, F, ncols=n), F)
                return ann, piv
            if len(kernel) == g.degree:
                return None
            if F.q ** len(kernel) <= _POINT_BUDGET * (F.q - 1):
                for v in _projective_points(kernel, F):
                    sub = spin([v], mats, F)
                    if len(sub[0]) < n:
                        return sub
                return None
    raise Inconclusive("irreducibility not decided within the search budget")


def _decompose(mats, F, seed):
    sub = find_submodule(mats, F, seed)
    n = len(mats[0])
    if sub is None:
        return [n]
    basis, pivots = sub
    lower = _restrict(mats, basis, pivots, F)
    upper = _quotient(mats, basis, pivots, F, n)
    return _decompose(lower, F, seed) + _decompose(upper, F, seed)


def module_decompose(gens, n=None, q=None, seed=DEFAULT_SEED):
    """Composition-factor dimensions of the natural (row-vector) module."""
    gens = list(gens)
    F = gens[0].field
    dims = sorted(_decompose([g.to_list() for g in gens], F, seed))
    return ModuleDecomposition(tuple(dims), len(dims) == 1)


# -- Singer elements -----------------------------------------------------------

def primitive_polynomial(F, n):
    """First monic degree-n polynomial over F whose roots generate F_{q^n}^*."""
    N = F.q ** n - 1
    fac = factorint(N) if N > 1 else {}
    x = FpPolynomial.x(F)
    for f in monic_polynomials(F, n):
        if f[0] == 0 or not is_irreducible(f):
            continue
        if N == 1 or order_from_exponent(lambda k: x.powmod(k, f).is_one(), N, fac) == N:
            return f
    raise NoSuchElement(f"no primitive polynomial of degree {n} over {F}")


def singer_element(n, q, m):
    """An element of order m acting irreducibly on F_q^n, for m dividing
    q^n - 1 but no q^k - 1 with k < n."""
    N = q ** n - 1
    if m < 1 or N % m or any((q ** k - 1) % m == 0 for k in range(1, n)):
        raise NoSuchElement(f"{m} has no irreducible cyclic action in dimension {n} over F_{q}")
    F = field_of_order(q)
    c = MatrixFq.companion(primitive_polynomial(F, n))
    g = c ** (N // m)
    if element_order(g) != m:
        raise AssertionError("Singer power has the wrong order")
    if n > 1 and not module_decompose([g]).irreducible:
        raise AssertionError("Singer power is reducible")
    return g


# -- restriction of scalars ----------------------------------------------------

def multiplication_matrix(K, a):
    """Matrix of u -> u*a on K over its prime field, basis 1, x, ..., x^(d-1),
    row convention."""
    d = K.degree
    rows = []
    xi = 1
    gen = K.generator()
    for _ in range(d):
        rows.append(K.coordinates(K.mul(xi, a)))
        xi = K.mul(xi, gen)
    return rows


def blowup_embedding(m):
    """GL_n(F_{p^d}) -> GL_{nd}(F_p), replacing each entry by its
    multiplication matrix."""
    K = m.field
    if isinstance(K, PrimeField):
        return m
    if not isinstance(K, ExtField):
        raise TypeError("blowup needs an extension field")
    d = K.degree
    n = m.n
    big = [[0] * (n * d) for _ in range(n * d)]
    for i, row in enumerate(m.rows):
        for j, a in enumerate(row):
            block = multiplication_matrix(K, a)
            for r in range(d):
                for s in range(d):
                    big[i * d + r][j * d + s] = block[r][s]
    return MatrixFq(K.base, big)
