"""Small arithmetic rules the proof skeletons lean on: tame ramification in
composita, central kernels of stem extensions, and the elementary abelian
case split for an unramified layer on top of a perfect group."""

from functools import lru_cache

from ..arith import gl_order
from ..errors import WildCase
from ..grouplemmas import AbelianInvariants, SimpleGroupLabel, min_gl_dim_for_cyclic, schur_multiplier
from ..matgroup import MODELS

_MODEL_NAMES = {"A5": "A5", "PSL(2,8)": "PSL2(8)"}


def abhyankar_unramified(e_upper, e_lower, p):
    """Whether the compositum is unramified over the upper field above p,
    given ramification indices e_upper (upper field) and e_lower (the other
    field) of p over the base.  Tame case only."""
    if e_lower == 1:
        return True
    if e_lower % p == 0:
        raise WildCase(f"p = {p} divides the ramification index {e_lower}")
    return e_upper % e_lower == 0


def stem_extension_rule(schur, class_number_one):
    """Allowed orders of a central kernel.  With class number one at the
    top there is no non-trivial abelian quotient, so a central extension is
    a stem extension and its kernel is a quotient of the Schur multiplier;
    a finite abelian group has quotients of every order dividing its own.
    Returns None when nothing is constrained."""
    if not class_number_one:
        return None
    if isinstance(schur, str):
        schur = schur_multiplier(schur)
    if not isinstance(schur, AbelianInvariants):
        schur = AbelianInvariants.from_cyclic_factors(schur)
    n = schur.order
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _element_orders(label):
    model = MODELS[_MODEL_NAMES[label]]()
    out = set()
    for x in model.elements:
        k, y = 1, x
        while not y.is_identity():
            y = y * x
            k += 1
        out.add(k)
    return tuple(sorted(out))


def elementary_rank_case_split(p, size_bound, base_group):
    """Ranks k such that (C_p)^k can sit under the base group in an
    unramified layer of size at most ``size_bound``.

    Central layers must have order allowed by the stem-extension rule.  A
    faithful action needs |G| to divide |GL_k(F_p)|, an element of every
    order m in G (m prime to p) to fit in dimension k, and k >= 3 since
    GL_1 is abelian and GL_2(F_p) has no non-abelian simple subgroup.
    """
    label = str(SimpleGroupLabel.parse(base_group)) if isinstance(base_group, str) else str(base_group)
    if label not in _MODEL_NAMES:
        raise ValueError(f"case split only implemented for A5 and PSL(2,8), not {label}")
    group = SimpleGroupLabel.parse(label)
    order = group.order()
    kernels = stem_extension_rule(schur_multiplier(group), True)
    orders = [m for m in _element_orders(label) if m > 1 and m % p]
    ranks = []
    k = 1
    while p ** k <= size_bound:
        if p ** k in kernels:
            ranks.append(k)
        elif (k >= 3 and gl_order(k, p) % order == 0
              and all(min_gl_dim_for_cyclic(m, p) <= k for m in orders)):
            ranks.append(k)
        k += 1
    return ranks
