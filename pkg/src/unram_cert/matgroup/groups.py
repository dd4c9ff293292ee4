"""Structure of small finite groups given by their full element sets:
fingerprints, the internal permutation-model library and isomorphism search
by backtracking on generator images."""

from collections import Counter
from dataclasses import dataclass

from ..errors import NeedsClosure
from ..finitefield import ExtField
from ..grouplemmas import AbelianInvariants
from .matrix import MatrixFq, closure
from .perm import Permutation


def _identity_of(elements):
    for x in elements:
        if x.is_identity():
            return x
    raise ValueError("element set has no identity")


def _order(x):
    k, acc = 1, x
    while not acc.is_identity():
        acc = acc * x
        k += 1
    return k


def generating_set(elements):
    """Greedy small generating set: add elements (largest order first) until
    they generate everything."""
    elements = list(elements)
    e = _identity_of(elements)
    target = len(elements)
    gens = []
    sub = {e}
    for x in sorted(elements, key=lambda y: -_order(y)):
        if x in sub:
            continue
        gens.append(x)
        sub = closure(gens, e, cap=target)
        if len(sub) == target:
            break
    return gens


def _commutator(a, b):
    return a.inverse() * b.inverse() * a * b


def normal_closure(seeds, gens, e):
    """Smallest normal subgroup containing ``seeds`` in the group <gens>."""
    sub_gens = [s for s in seeds if not s.is_identity()]
    if not sub_gens:
        return {e}
    inv = [g.inverse() for g in gens]
    sub = closure(sub_gens, e)
    changed = True
    while changed:
        changed = False
        for s in list(sub_gens):
            for g, gi in zip(gens, inv):
                c = gi * s * g
                if c not in sub:
                    sub_gens.append(c)
                    sub = closure(sub_gens, e)
                    changed = True
    return sub


def derived_subgroup(gens, e):
    seeds = [_commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(seeds, gens, e)


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    center_order: int
    derived_order: int
    abelianization: AbelianInvariants
    order_histogram: tuple  # sorted (order, count) pairs
    perfect: bool

    def __post_init__(self):
        if sum(c for _, c in self.order_histogram) != self.order:
            raise ValueError("histogram does not sum to the group order")


def fingerprint(elements):
    if elements is None:
        raise NeedsClosure("fingerprint needs the full element set")
    elements = frozenset(elements)
    e = _identity_of(elements)
    gens = generating_set(elements)
    center = [z for z in elements if all(z * g == g * z for g in gens)]
    derived = derived_subgroup(gens, e)
    # element orders in G/G'
    seen = set()
    quotient_orders = []
    for x in elements:
        if x in seen:
            continue
        coset = {x * d for d in derived}
        seen |= coset
        k, acc = 1, x
        while acc not in derived:
            acc = acc * x
            k += 1
        quotient_orders.append(k)
    hist = Counter(_order(x) for x in elements)
    return GroupFingerprint(
        order=len(elements),
        center_order=len(center),
        derived_order=len(derived),
        abelianization=AbelianInvariants.from_element_orders(quotient_orders),
        order_histogram=tuple(sorted(hist.items())),
        perfect=len(derived) == len(elements),
    )


def is_perfect(elements):
    elements = list(elements)
    e = _identity_of(elements)
    return len(derived_subgroup(generating_set(elements), e)) == len(elements)


# -- permutation models ----------------------------------------------------------

@dataclass(frozen=True)
class GroupModel:
    name: str
    generators: tuple
    elements: frozenset


def _model(name, gens):
    e = Permutation.identity(gens[0].degree)
    return GroupModel(name, tuple(gens), frozenset(closure(gens, e)))


def model_a5():
    return _model("A5", [Permutation.from_cycles(5, (0, 1, 2, 3, 4)),
                         Permutation.from_cycles(5, (0, 1, 2))])


def model_a5xc2():
    return _model("A5xC2", [Permutation.from_cycles(7, (0, 1, 2, 3, 4)),
                            Permutation.from_cycles(7, (0, 1, 2)),
                            Permutation.from_cycles(7, (5, 6))])


def model_s5():
    return _model("S5", [Permutation.from_cycles(5, (0, 1, 2, 3, 4)),
                         Permutation.from_cycles(5, (0, 1))])


def sl2_f8_generators():
    """Generators of SL_2(F_8), F_8 = F_2[w]/(w^3+w+1): diag(w, w^-1) and
    the two standard unipotent/Weyl elements."""
    K = ExtField.of(2, [1, 1, 0, 1])
    w = K.generator()
    return K, [
        MatrixFq(K, [[w, 0], [0, K.inv(w)]]),
        MatrixFq(K, [[1, 1], [0, 1]]),
        MatrixFq(K, [[0, 1], [1, 0]]),
    ]


def model_psl2_8():
    """PSL_2(8) = SL_2(8) acting on the 9 points of the projective line."""
    K, mats = sl2_f8_generators()
    points = [(1, a) for a in K.elements()] + [(0, 1)]
    index = {pt: i for i, pt in enumerate(points)}

    def normalize(v):
        a, b = v
        if a:
            ia = K.inv(a)
            return (1, K.mul(b, ia))
        return (0, 1)

    gens = []
    for m in mats:
        (a, b), (c, d) = m.rows
        img = []
        for x, y in points:
            v = (K.add(K.mul(x, a), K.mul(y, c)), K.add(K.mul(x, b), K.mul(y, d)))
            img.append(index[normalize(v)])
        gens.append(Permutation(tuple(img)))
    return _model("PSL2(8)", gens)


MODELS = {
    "A5": model_a5,
    "A5xC2": model_a5xc2,
    "S5": model_s5,
    "PSL2(8)": model_psl2_8,
}


# -- isomorphism search ------------------------------------------------------------

def _extend_map(gens, images, e_src, e_tgt, limit):
    """Try to extend gens -> images to a homomorphism on <gens> by BFS over
    words.  Returns the map or None on an inconsistency."""
    phi = {e_src: e_tgt}
    frontier = [e_src]
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for g, t in zip(gens, images):
                y = x * g
                fy = fx * t
                old = phi.get(y)
                if old is None:
                    phi[y] = fy
                    nxt.append(y)
                    if len(phi) > limit:
                        return None
                elif old != fy:
                    return None
        frontier = nxt
    return phi


def _class_representatives(elements, conj_by):
    reps = []
    seen = set()
    for x in elements:
        if x in seen:
            continue
        reps.append(x)
        seen |= {c.inverse() * x * c for c in conj_by}
    return reps


def find_isomorphism(gens, elements, model):
    """An isomorphism <gens> -> model as a dict on generators, or None.

    Backtracks over images of the generators with matching element orders;
    the first image only needs one representative per conjugacy class of the
    target.  Each partial assignment is checked to extend consistently to
    the subgroup generated so far.
    """
    elements = frozenset(elements)
    if len(elements) != len(model.elements):
        return None
    gens = list(gens)
    e_src = _identity_of(elements)
    e_tgt = _identity_of(model.elements)
    by_order = {}
    for t in model.elements:
        by_order.setdefault(_order(t), []).append(t)
    orders = [_order(g) for g in gens]
    first = _class_representatives(by_order.get(orders[0], []), model.generators)
    n = len(elements)

    def search(k, images):
        if k == len(gens):
            phi = _extend_map(gens, images, e_src, e_tgt, n)
            if phi is not None and len(phi) == n and len(set(phi.values())) == n:
                return dict(zip(gens, images))
            return None
        pool = first if k == 0 else by_order.get(orders[k], [])
        for t in pool:
            trial = images + [t]
            phi = _extend_map(gens[:k + 1], trial, e_src, e_tgt, n)
            if phi is None or len(set(phi.values())) != len(phi):
                continue
            found = search(k + 1, trial)
            if found is not None:
                return found
        return None

    return search(0, [])


_A5XC2_FP = None


def _a5xc2_fingerprint():
    global _A5XC2_FP
    if _A5XC2_FP is None:
        _A5XC2_FP = fingerprint(model_a5xc2().elements)
    return _A5XC2_FP


def is_A5xC2(elements):
    """Order 120, centre of order 2, derived subgroup perfect of order 60 and
    the element-order histogram of A5 x C2."""
    if elements is None:
        raise NeedsClosure("is_A5xC2 needs the full element set")
    elements = frozenset(elements)
    if len(elements) != 120:
        return False
    fp = fingerprint(elements)
    if fp.center_order != 2 or fp.derived_order != 60:
        return False
    e = _identity_of(elements)
    derived = derived_subgroup(generating_set(elements), e)
    if not is_perfect(derived):
        return False
    return fp.order_histogram == _a5xc2_fingerprint().order_histogram
