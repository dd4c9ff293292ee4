"""Root discriminants and GRH-conditional discriminant lower bounds.

All analytic quantities are evaluated with mpmath at ``MP_DPS`` digits.
The weight is F(x) = G(x/b) with

    G(x) = (1 - x/2) cos(pi x/2) + sin(pi x/2)/pi   on [0, 2], 0 beyond,

and the local term is f = 2 sum_p sum_m log N(p) / N(p)^(m/2) F(m log N(p)).
"""

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath
from mpmath import mp, mpf

from .config import M_MAX, MP_DPS
from .errors import MissingConstant, NoApplicableEntry

mp.dps = MP_DPS


def _mpf(x):
    """Exact decimal input for strings and Fractions, else mpf(x)."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


@dataclass(frozen=True)
class NumberFieldFacts:
    degree: int
    r1: int
    r2: int
    abs_disc: int

    def __post_init__(self):
        if self.r1 + 2 * self.r2 != self.degree:
            raise ValueError("signature does not match the degree")

    @property
    def rd(self):
        return root_discriminant(self.abs_disc, self.degree)


def root_discriminant(abs_disc, n):
    """|d|^(1/n)."""
    if abs_disc < 1 or n < 1:
        raise ValueError("need |d| >= 1 and n >= 1")
    with mp.workdps(MP_DPS):
        return mpmath.root(mpf(abs_disc), n)


@dataclass(frozen=True)
class RdContract:
    """What is known about rd_L given rd_K: equal, or at least."""

    relation: str  # "eq" or "ge"
    value: object

    def admits(self, rd_L, tol=mpf("1e-30")):
        if self.relation == "eq":
            return abs(rd_L - self.value) <= tol * max(1, abs(self.value))
        return rd_L >= self.value - tol


def tower_rd_rule(rd_K, unramified):
    """rd is constant in extensions unramified at all finite places and can
    only grow otherwise."""
    return RdContract("eq" if unramified else "ge", rd_K)


# -- weight functions ---------------------------------------------------------------

def weight_G(x):
    x = _mpf(x)
    if x < 0:
        x = -x
    if x >= 2:
        return mpf(0)
    h = mp.pi * x / 2
    return (1 - x / 2) * mp.cos(h) + mp.sin(h) / mp.pi


def weight_F(x, b):
    return weight_G(_mpf(x) / _mpf(b))


def martinet_E(b):
    """8 pi^2 b ((e^(b/2) + e^(-b/2)) / (pi^2 + b^2))^2."""
    b = _mpf(b)
    if b <= 0:
        raise ValueError("b must be positive")
    return 8 * mp.pi ** 2 * b * ((mp.exp(b / 2) + mp.exp(-b / 2)) / (mp.pi ** 2 + b ** 2)) ** 2


@dataclass(frozen=True)
class LocalPrimeData:
    """(norm, count) pairs: ``count`` prime ideals of norm ``norm``."""

    entries: tuple

    def __post_init__(self):
        ents = tuple((int(n), int(c)) for n, c in self.entries)
        for n, c in ents:
            if n < 2 or c < 1:
                raise ValueError("norms must be >= 2 and counts >= 1")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_splitting(cls, degree, p, e, f):
        """Primes above p in a Galois field of the given degree, all with
        ramification e and residue degree f: degree/(e f) of them, norm p^f."""
        count, r = divmod(degree, e * f)
        if r:
            raise ValueError(f"{e}*{f} does not divide {degree}")
        return cls(((p ** f, count),))

    def __add__(self, other):
        return LocalPrimeData(self.entries + other.entries)


def f_series(local, b, m_max=M_MAX):
    """Truncated local contribution; every term is nonnegative, so the
    truncation is a lower bound for the full sum."""
    b = _mpf(b)
    total = mpf(0)
    for norm, count in local.entries:
        logN = mp.log(norm)
        s = mpf(0)
        for m in range(1, m_max + 1):
            w = weight_F(m * logN, b)
            if w == 0:
                break
            s += logN / mpf(norm) ** (mpf(m) / 2) * w
        total += count * s
    return 2 * total


# -- tables -------------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundTableEntry:
    b: object
    A: object
    B: object
    E: object
    source: str
    E_decimals: int = 2

    def e_consistent(self):
        """The stored E is the closed form rounded up to its printed number
        of decimals."""
        true = martinet_E(self.b)
        return true <= self.E <= true + mpf(10) ** (-self.E_decimals)


@dataclass(frozen=True)
class AsymptoticBound:
    n: int
    r1: int
    r2: int
    bound: object
    source: str

    @property
    def family(self):
        return family_of(self.r1, self.r2)


def family_of(r1, r2):
    if r2 == 0:
        return "totally_real"
    if r1 == 0:
        return "totally_complex"
    return "mixed"


def _read_rows(name):
    text = resources.files("unram_cert.data").joinpath(name).read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield line


def load_bound_table():
    out = []
    for line in _read_rows("martinet_table3.txt"):
        parts = line.split(None, 4)
        b, A, B, E = (None if t == "-" else mpf(t) for t in parts[:4])
        decimals = len(parts[3].partition(".")[2])
        out.append(BoundTableEntry(b, A, B, E, parts[4], decimals))
    return out


def bound_entry(b):
    for entry in load_bound_table():
        if abs(entry.b - _mpf(b)) < mpf("1e-9"):
            return entry
    raise MissingConstant(f"no table row for b = {b}")


def load_asymptotic_bounds():
    out = []
    for line in _read_rows("asymptotic_bounds.txt"):
        parts = line.split(None, 4)
        out.append(AsymptoticBound(int(parts[0]), int(parts[1]), int(parts[2]), mpf(parts[3]), parts[4]))
    return out


# -- bounds -----------------------------------------------------------------------------------

def grh_rd_lower_bound(n, r1, r2, entry, f):
    """(A^r1 B^(2 r2) e^(f - E))^(1/n)."""
    if r1 + 2 * r2 != n:
        raise ValueError("signature does not match the degree")
    if r1 and entry.A is None:
        raise MissingConstant(f"A is not recorded for b = {entry.b}")
    if r2 and entry.B is None:
        raise MissingConstant(f"B is not recorded for b = {entry.b}")
    f = _mpf(f)
    log_d = (r1 * mp.log(entry.A) if r1 else 0) + (2 * r2 * mp.log(entry.B) if r2 else 0) + f - entry.E
    return mp.exp(log_d / n)


def rd_contradiction(lower_bound, rd, margin):
    """The GRH bound strictly exceeds the actual root discriminant."""
    return _mpf(lower_bound) > _mpf(rd) + _mpf(margin)


def degree_bound(rd, asym, base_degree, family=None):
    """Upper bound n/base_degree on the relative degree of an extension of
    a degree-``base_degree`` field with root discriminant ``rd``, from the
    smallest recorded n with rd < B(n, ...).  ``family`` restricts to
    totally real or totally complex entries and is required when the list
    mixes them.  Since B is nondecreasing in the
    degree along a family, any field of degree >= n in the family has root
    discriminant above rd."""
    rd = _mpf(rd)
    if family is None:
        families = {a.family for a in asym}
        if len(families) > 1:
            raise ValueError("entries from several signature families; pass family=")
    candidates = [a for a in asym if (family is None or a.family == family) and rd < a.bound]
    if not candidates:
        raise NoApplicableEntry(f"no recorded bound exceeds rd = {mpmath.nstr(rd, 10)}")
    best = min(candidates, key=lambda a: a.n)
    return Fraction(best.n, base_degree), best


def yamamura_check(rd_K, m, n_K, r1, r2, asym):
    """Whether rd_K < B(60 m n_K, 60 m r1, 60 m r2) follows from the recorded
    entries.  Monotonicity lets an entry of the same family with
    n_entry <= 60 m n_K stand in for the target; with no such entry the
    question is undecidable from the table."""
    N = 60 * m * n_K
    fam = family_of(r1, r2)
    usable = [a for a in asym if a.family == fam and a.n <= N]
    if not usable:
        raise NoApplicableEntry(f"no {fam} entry with degree <= {N}")
    best = max(usable, key=lambda a: a.bound)
    return bool(_mpf(rd_K) < best.bound)
