import itertools
import random
from collections import Counter
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from unram_cert.arith import gl_order
from unram_cert.errors import CapExceeded, NoSuchElement, OddPermutation, ScanTooLarge
from unram_cert.finitefield import ExtField, FpPolynomial, PrimeField
from unram_cert.matgroup import (MODELS, MatrixFq, Permutation, an_class_splits, blowup_embedding,
                                 centralizer, closure, count_elements_of_order, element_order,
                                 find_isomorphism, fingerprint, fixed_space,
                                 gl2_rank2_subgroups_meet_center, group_closure, is_A5xC2,
                                 model_a5xc2, module_decompose, order120_subgroups,
                                 perm_order_spectrum, singer_element, sl2_f8_generators)

F2, F3, F5, F19 = PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(19)


def brute_order(m):
    k, acc = 1, m
    while not acc.is_identity():
        acc = acc * m
        k += 1
    return k


def random_invertible(F, n, rng):
    while True:
        m = MatrixFq(F, [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)])
        if m.is_invertible():
            return m


# -- closure and orders ---------------------------------------------------------

def test_trivial_closure():
    els, order = group_closure([MatrixFq.identity(F2, 2)])
    assert order == 1


def test_gl2_f3_standard_generators():
    gens = [MatrixFq(F3, [[2, 0], [0, 1]]), MatrixFq(F3, [[2, 1], [2, 0]])]
    assert group_closure(gens)[1] == gl_order(2, 3) == 48


def test_closure_is_idempotent():
    gens = order120_subgroups("gl4f3")[0].generators
    els, _ = group_closure(gens)
    e = MatrixFq.identity(F3, 4)
    assert closure(list(els)[:10], e) <= els
    assert closure(list(els), e) == set(els)


def test_closure_cap():
    gens = [MatrixFq(F3, [[2, 0], [0, 1]]), MatrixFq(F3, [[2, 1], [2, 0]])]
    with pytest.raises(CapExceeded):
        group_closure(gens, cap=10)


def test_sl2_f8_native_and_blown_up():
    _, gens = sl2_f8_generators()
    q = 8
    assert group_closure(gens)[1] == q * (q * q - 1) == 504
    big = [blowup_embedding(g) for g in gens]
    assert big[0].n == 6 and big[0].field == F2
    assert group_closure(big)[1] == 504
    for g, b in zip(gens, big):
        assert element_order(g) == element_order(b)


def test_element_order_examples():
    assert element_order(MatrixFq.identity(F5, 3)) == 1
    c = MatrixFq.companion(FpPolynomial.from_ints(F19, [12, 3, 1]))
    assert 360 % element_order(c) == 0
    assert element_order(singer_element(4, 3, 5)) == 5


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3), (3, 3), (5, 2), (2, 4), (7, 2)]), st.integers(0, 10 ** 9))
def test_element_order_matches_iteration(shape, seed):
    p, n = shape
    m = random_invertible(PrimeField(p), n, random.Random(seed))
    assert element_order(m) == brute_order(m)


# -- centralizers -------------------------------------------------------------------

def test_singer_centralizers():
    r = centralizer([singer_element(4, 3, 5)], 4, 3)
    assert (r.unit_count, r.is_cyclic) == (80, True)
    assert element_order(r.witness) == 80
    r = centralizer([singer_element(6, 2, 9)], 6, 2)
    assert (r.unit_count, r.is_cyclic) == (63, True)


def test_field_shortcut_agrees_with_enumeration():
    g = singer_element(4, 3, 5)
    fast = centralizer([g], limit=1)
    assert fast.method == "field" and fast.unit_count == 80 and fast.is_cyclic


def test_identity_centralizer_is_whole_group():
    r = centralizer([MatrixFq.identity(F2, 2)])
    assert r.unit_count == 6 and not r.is_cyclic


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (5, 2)]), st.integers(0, 10 ** 9))
def test_centralizer_properties(shape, seed):
    p, n = shape
    F = PrimeField(p)
    rng = random.Random(seed)
    gens = [random_invertible(F, n, rng) for _ in range(rng.randint(1, 2))]
    r = centralizer(gens)
    assert r.basis.commutes_with(gens)
    assert gl_order(n, p) % r.unit_count == 0
    # oracle: brute-force count of invertible matrices commuting with gens
    brute = 0
    for entries in itertools.product(range(p), repeat=n * n):
        x = MatrixFq(F, [entries[i * n:(i + 1) * n] for i in range(n)])
        if x.is_invertible() and all(x * g == g * x for g in gens):
            brute += 1
    assert brute == r.unit_count


def test_no_c10xc2_in_gl4_f3():
    # the centralizer of any order-5 element is cyclic of order 80, so it has
    # exactly one involution
    g = singer_element(4, 3, 5)
    r = centralizer([g])
    gen = r.witness
    involutions = [gen ** k for k in range(1, 80) if element_order(gen ** k) == 2]
    assert len(involutions) == 1


# -- modules ------------------------------------------------------------------------

def test_singer_elements():
    for n, q, m in [(4, 2, 5), (4, 3, 5), (6, 2, 9), (3, 2, 7), (2, 5, 3)]:
        g = singer_element(n, q, m)
        assert element_order(g) == m
        assert fixed_space(g) == 0
        assert module_decompose([g]).irreducible


def test_singer_rejects_non_primitive_divisors():
    with pytest.raises(NoSuchElement):
        singer_element(4, 2, 3)
    with pytest.raises(NoSuchElement):
        singer_element(4, 2, 7)


def test_singer_over_prime_power_field():
    g = singer_element(2, 4, 5)
    assert element_order(g) == 5 and isinstance(g.field, ExtField)


def test_order7_in_blown_up_psl2_8():
    _, gens = sl2_f8_generators()
    big = [blowup_embedding(g) for g in gens]
    els, _ = group_closure(big)
    sevens = [x for x in els if element_order(x) == 7]
    assert len(sevens) == 216
    for x in sevens[:12]:
        assert fixed_space(x) == 0
        assert module_decompose([x]).constituent_dimensions == (3, 3)
    assert module_decompose(big).irreducible


def test_identity_module():
    d = module_decompose([MatrixFq.identity(F2, 2)])
    assert d.constituent_dimensions == (1, 1) and not d.irreducible
    assert fixed_space(MatrixFq.identity(F5, 4)) == 4


def block_diag(F, a, b, glue=None):
    n, m = a.n, b.n
    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        rows[i][:n] = a.rows[i]
    for i in range(m):
        rows[n + i][n:] = b.rows[i]
    if glue is not None:
        for i in range(n):
            for j in range(m):
                rows[i][n + j] = glue[i][j]
    return MatrixFq(F, rows)


def test_fixed_space_block():
    g = singer_element(3, 2, 7)
    assert fixed_space(block_diag(F2, MatrixFq.identity(F2, 1), g)) == 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_decomposition_of_block_matrices(seed):
    rng = random.Random(seed)
    pieces = [(4, 3, 5), (2, 3, 4), (1, 3, 2), (2, 3, 8)]
    a, b = rng.sample(pieces, 2)
    ga, gb = singer_element(*a), singer_element(*b)
    glue = [[rng.randrange(3) for _ in range(gb.n)] for _ in range(ga.n)]
    m = block_diag(F3, ga, gb, glue)
    # upper block-triangular: composition factors are the diagonal blocks
    assert module_decompose([m]).constituent_dimensions == tuple(sorted([a[0], b[0]]))


def test_gl2_rank2_subgroups_meet_center():
    for p in (2, 3, 5):
        holds, examined = gl2_rank2_subgroups_meet_center(p)
        assert holds
    assert gl2_rank2_subgroups_meet_center(5)[1] > 0


# -- blowup -----------------------------------------------------------------------

def test_blowup_identity():
    K = ExtField.of(2, [1, 1, 0, 1])
    assert blowup_embedding(MatrixFq.identity(K, 2)).is_identity()


def test_blowup_multiplicative_100_pairs():
    rng = random.Random(20240601)
    for K, n in [(ExtField.of(2, [1, 1, 0, 1]), 2), (ExtField.conway_like(3, 2), 2), (ExtField.of(2, [1, 1, 1]), 3)]:
        for _ in range(34):
            a = MatrixFq(K, [[rng.randrange(K.q) for _ in range(n)] for _ in range(n)])
            b = MatrixFq(K, [[rng.randrange(K.q) for _ in range(n)] for _ in range(n)])
            assert blowup_embedding(a * b) == blowup_embedding(a) * blowup_embedding(b)


# -- permutation analytics -------------------------------------------------------

def brute_spectrum(n, even_only):
    out = set()
    for img in itertools.permutations(range(n)):
        p = Permutation(img)
        if even_only and not p.is_even():
            continue
        out.add(p.order())
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_order_spectra_match_brute_force(n):
    assert perm_order_spectrum("S", n) == brute_spectrum(n, False)
    assert perm_order_spectrum("A", n) == brute_spectrum(n, True)


def test_spectrum_examples():
    assert 10 not in perm_order_spectrum("A", 8)
    assert perm_order_spectrum("A", 5) == {1, 2, 3, 5}
    assert perm_order_spectrum("S", 2) == {1, 2}


def brute_splits(cycle_type, n):
    perms = [Permutation(img) for img in itertools.permutations(range(n))]
    alt = [p for p in perms if p.is_even()]
    x = next(p for p in alt if p.cycle_type() == tuple(sorted(cycle_type, reverse=True)))
    s_class = {c.inverse() * x * c for c in perms}
    a_class = {c.inverse() * x * c for c in alt}
    return len(a_class) < len(s_class)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_class_splitting_matches_brute_force(n):
    from unram_cert.matgroup import partitions
    for parts in partitions(n):
        if sum(c - 1 for c in parts) % 2:
            continue
        assert an_class_splits(parts, n) == brute_splits(parts, n), parts


def test_class_split_examples():
    assert not an_class_splits((5, 1, 1, 1), 8)
    assert an_class_splits((5,), 5)
    assert not an_class_splits((1,) * 6, 6)
    with pytest.raises(OddPermutation):
        an_class_splits((2, 1, 1), 4)


# -- isomorphism fingerprints ------------------------------------------------------

@pytest.mark.parametrize("ambient", ["gl4f3", "gl3f5"])
def test_order120_lists(ambient):
    sets = order120_subgroups(ambient)
    flags = []
    for s in sets:
        els, order = group_closure(s.generators)
        assert order == 120
        flag = is_A5xC2(els)
        assert flag == s.a5xc2
        iso = find_isomorphism(s.generators, els, model_a5xc2())
        assert (iso is not None) == flag
        flags.append(flag)
    assert flags == [False, False, True, False]


def test_direct_product_model():
    m = model_a5xc2()
    assert is_A5xC2(m.elements)
    assert not is_A5xC2(MODELS["S5"]().elements)


def test_fingerprint_consistency():
    for build in MODELS.values():
        fp = fingerprint(build().elements)
        assert sum(c for _, c in fp.order_histogram) == fp.order
        assert fp.abelianization.order * fp.derived_order == fp.order
    assert fingerprint(MODELS["PSL2(8)"]().elements).perfect


def test_blown_up_sl2_8_is_psl2_8():
    _, gens = sl2_f8_generators()
    big = [blowup_embedding(g) for g in gens]
    els, _ = group_closure(big)
    assert find_isomorphism(big, els, MODELS["PSL2(8)"]()) is not None


# -- scans -------------------------------------------------------------------------

def test_scan_small():
    assert count_elements_of_order(2, 2, 3) == 2
    assert count_elements_of_order(2, 2, 1) == 1


def test_scan_matches_python_enumeration():
    F = F3
    hist = Counter()
    for entries in itertools.product(range(3), repeat=4):
        m = MatrixFq(F, [entries[:2], entries[2:]])
        if m.is_invertible():
            hist[brute_order(m)] += 1
    for k, c in hist.items():
        assert count_elements_of_order(2, 3, k) == c
    assert sum(hist.values()) == 48


def test_scan_limit():
    with pytest.raises(ScanTooLarge):
        count_elements_of_order(5, 3, 5)


@pytest.mark.slow
def test_gl4_f3_order5_single_class():
    count = count_elements_of_order(4, 3, 5, workers=4)
    assert count * 80 == gl_order(4, 3)
    assert count == 303264


def test_permutation_basics():
    p = Permutation.from_cycles(5, (0, 1, 2, 3, 4))
    assert p.order() == 5 and (p ** 5).is_identity() and (p * p.inverse()).is_identity()
    assert lcm(*Permutation.from_cycles(7, (0, 1), (2, 3, 4)).cycle_type()) == 6


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["F7", "F2", "F9", "F8"]), st.integers(1, 5), st.integers(0, 10 ** 9))
def test_charpoly_cayley_hamilton(name, n, seed):
    from unram_cert.matgroup import linalg
    F = {"F7": PrimeField(7), "F2": F2, "F9": ExtField.conway_like(3, 2),
         "F8": ExtField.of(2, [1, 1, 0, 1])}[name]
    rng = random.Random(seed)
    a = [[rng.randrange(F.q) for _ in range(n)] for _ in range(n)]
    cp = linalg.charpoly(a, F)
    assert cp.degree == n and cp.is_monic()
    assert all(v == 0 for row in linalg.poly_at_matrix(cp, a, F) for v in row)
    sign = F.neg(1) if n % 2 else 1
    assert F.mul(sign, cp[0]) == linalg.det(a, F)
