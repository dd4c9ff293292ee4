import itertools
import random
from math import gcd, lcm, prod

import pytest
from hypothesis import given, settings, strategies as st

from unram_cert.arith import factorint, gl_order, multiplicative_order
from unram_cert.errors import NotCoprime, OutOfTable
from unram_cert.finitefield import PrimeField
from unram_cert.grouplemmas import (AbelianInvariants, SimpleGroupLabel, TausskyConclusion,
                                    abelian_invariants_of_generated, is_primitive_prime_divisor,
                                    min_gl_dim_for_cyclic, p_rank_constraint, rank_allowed,
                                    schur_multiplier, smith_normal_form, taussky_rule)
from unram_cert.matgroup import MatrixFq, count_elements_of_order, element_order, singer_element


# -- abelian invariants ----------------------------------------------------------

def test_invariants_normalize():
    assert AbelianInvariants.from_cyclic_factors([2, 3]).to_list() == [6]
    assert AbelianInvariants.from_cyclic_factors([4, 6, 1]).to_list() == [2, 12]
    assert AbelianInvariants.from_cyclic_factors([]).is_trivial()
    assert str(AbelianInvariants(())) == "C1"
    assert str(AbelianInvariants((2, 2))) == "C2 x C2"


def test_invariants_chain_enforced():
    with pytest.raises(ValueError):
        AbelianInvariants((4, 6))


def test_snf_small():
    # Z^2 / <(2, 4), (6, 8)> has order |det| = 8
    assert AbelianInvariants.from_relations([[2, 4], [6, 8]], 2).to_list() == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []


def _brute_cyclic(orders):
    # element orders of the direct product by enumeration
    out = []
    for t in itertools.product(*[range(m) for m in orders]):
        o = 1
        for x, m in zip(t, orders):
            o = o * (m // gcd(x, m)) // gcd(o, m // gcd(x, m))
        out.append(o)
    return out


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=0, max_size=3))
def test_from_element_orders_matches_factors(orders):
    a = AbelianInvariants.from_cyclic_factors(orders)
    assert a.order == prod(orders)
    assert AbelianInvariants.from_element_orders(_brute_cyclic(orders) or [1]) == a


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=5))
def test_snf_determinant(rows):
    d = smith_normal_form(rows)
    nonzero = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    # the gcd of 1x1 minors is preserved
    g = 0
    for r in rows:
        for x in r:
            g = gcd(g, x)
    assert (nonzero[0] if nonzero else 0) == g


def test_generated_group_invariants():
    # (Z/8)^* = C2 x C2, (Z/15)^* = C2 x C4
    def mul8(a, b):
        return a * b % 8
    assert abelian_invariants_of_generated([3, 5], mul8, 1).to_list() == [2, 2]

    def mul15(a, b):
        return a * b % 15
    assert abelian_invariants_of_generated([2, 7, 11], mul15, 1).to_list() == [2, 4]
    # quotient by <4>
    assert abelian_invariants_of_generated([2, 7, 11], mul15, 1, [4]).to_list() == [2, 2]


def test_p_parts():
    a = AbelianInvariants((2, 12))
    assert a.p_part(2).to_list() == [2, 4]
    assert a.p_part(3).to_list() == [3]
    assert a.p_rank(2) == 2 and a.p_rank(5) == 0


# -- Schur multipliers ----------------------------------------------------------

@pytest.mark.parametrize("label,expected", [
    ("A5", [2]), ("PSL(2,8)", []), ("PSL(3,4)", [4, 12]), ("A6", [6]), ("A7", [6]), ("A8", [2]),
    ("PSL(2,7)", [2]), ("PSL(2,4)", [2]), ("PSL(2,9)", [6]), ("PSL(3,2)", [2]), ("PSL(4,2)", [2]),
    ("PSL(2,5)", [2]),
])
def test_schur_table(label, expected):
    assert schur_multiplier(label).to_list() == expected


def test_psl34_order_48():
    m = schur_multiplier(SimpleGroupLabel.psl(3, 4))
    assert m.order == 48
    assert m == AbelianInvariants.from_cyclic_factors([3, 4, 4])


def test_schur_out_of_table():
    with pytest.raises(OutOfTable):
        schur_multiplier("A4")
    with pytest.raises(OutOfTable):
        schur_multiplier("PSL(2,3)")


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6), st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]))
def test_schur_psl_divides_lcm(n, q):
    if n == 2 and q < 4:
        return
    order = schur_multiplier(SimpleGroupLabel.psl(n, q)).order
    assert lcm(n, 48) % order == 0


def test_exactly_five_psl_exceptions():
    odd = []
    for n in range(2, 8):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49):
            if n == 2 and q < 4:
                continue
            if schur_multiplier(SimpleGroupLabel.psl(n, q)).order != gcd(n, q - 1):
                odd.append((n, q))
    assert odd == [(2, 4), (2, 9), (3, 2), (3, 4), (4, 2)]


def test_simple_orders():
    assert SimpleGroupLabel.parse("A5").order() == 60
    assert SimpleGroupLabel.parse("PSL2(8)").order() == 504
    assert SimpleGroupLabel.parse("PSL(3,4)").order() == 20160


# -- GL dimension facts -----------------------------------------------------------

def test_gl_order_examples():
    assert gl_order(2, 2) == 6
    assert gl_order(4, 2) == 20160
    assert gl_order(4, 3) == 24261120


@pytest.mark.parametrize("m,q,n", [(9, 2, 6), (5, 3, 4), (5, 2, 4), (7, 2, 3), (15, 2, 4),
                                   (21, 2, 5), (3, 2, 2), (63, 2, 6), (13, 3, 3)])
def test_min_gl_dim_examples(m, q, n):
    assert min_gl_dim_for_cyclic(m, q) == n


def test_min_gl_dim_coprime():
    with pytest.raises(NotCoprime):
        min_gl_dim_for_cyclic(6, 2)


def _block_diag(blocks, F):
    n = sum(b.n for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, r in enumerate(b.to_list()):
            rows[off + i][off:off + b.n] = r
        off += b.n
    return MatrixFq(F, rows)


def _cyclic_element(m, q):
    """An element of order m from Singer blocks, one per prime-power
    component (sub-optimal for composite m, fine as an existence witness)."""
    F = PrimeField(q)
    blocks = []
    for p, e in factorint(m).items():
        d = multiplicative_order(q, p ** e)
        blocks.append(singer_element(d, q, p ** e) if d > 1 else MatrixFq(F, [[_root(q, p ** e)]]))
    return _block_diag(blocks, F)


def _root(q, m):
    # element of order m in F_q^*
    for a in range(2, q):
        if multiplicative_order(a, q) == m:
            return a
    raise AssertionError


SMALL = [(m, q) for q in (2, 3, 5) for m in range(2, 64) if gcd(m, q) == 1]


@pytest.mark.parametrize("m,q", [(m, q) for m, q in SMALL
                                 if len(factorint(m)) == 1 and min_gl_dim_for_cyclic(m, q) <= 8])
def test_min_gl_dim_attained_prime_power(m, q):
    n = min_gl_dim_for_cyclic(m, q)
    g = _cyclic_element(m, q)
    assert g.n == n and element_order(g) == m
    assert gl_order(n, q) % m == 0


def test_min_gl_dim_exhaustive_lower_dimension():
    """No element of order m in GL_{n-1}(F_q), checked by full scans of the
    small general linear groups."""
    checked = 0
    for m, q in SMALL:
        k = min_gl_dim_for_cyclic(m, q) - 1
        if k < 1 or q ** (k * k) > 70000:
            continue
        assert count_elements_of_order(k, q, m) == 0, (m, q)
        checked += 1
    assert checked > 20


def test_min_gl_dim_composite_witness():
    # C_15 sits in the Singer torus of GL_4(F_2)
    g = singer_element(4, 2, 15)
    assert element_order(g) == 15 and g.n == min_gl_dim_for_cyclic(15, 2)


def test_primitive_prime_divisors():
    assert is_primitive_prime_divisor(5, 2, 4)
    assert is_primitive_prime_divisor(7, 2, 3)
    assert not is_primitive_prime_divisor(3, 2, 4)
    assert not is_primitive_prime_divisor(9, 2, 6)


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_ppd_implies_min_dim(q):
    for n in range(1, 9):
        for p in factorint(q ** n - 1):
            if is_primitive_prime_divisor(p, q, n):
                assert min_gl_dim_for_cyclic(p, q) == n


def test_p_rank_constraint():
    assert p_rank_constraint(5, 2) == 4
    assert p_rank_constraint(5, 3) == 4
    assert p_rank_constraint(2, 3) == 1
    assert rank_allowed(4, 5, 2) and rank_allowed(0, 5, 2) and not rank_allowed(2, 5, 2)
    with pytest.raises(NotCoprime):
        p_rank_constraint(10, 2)


# -- Taussky ----------------------------------------------------------------------

def test_taussky():
    assert taussky_rule(2, AbelianInvariants((2,))) is TausskyConclusion.TrivialNext
    assert taussky_rule(2, [2, 2]) is TausskyConclusion.CyclicNext
    assert taussky_rule(3, [3, 9]) is TausskyConclusion.NoInfo
    assert taussky_rule(2, []) is TausskyConclusion.TrivialNext
    with pytest.raises(ValueError):
        taussky_rule(2, [6])
