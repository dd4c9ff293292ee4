import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import factorint
from sympy.solvers.diophantine.diophantine import diop_DN

from unram_cert.errors import NotFundamental, SquareInput
from unram_cert.quadclass import (QuadDiscriminant, QuadForm, class_group, class_group_imaginary,
                                  class_group_real, fundamental_discriminant, is_fundamental,
                                  prime_splitting, reduced_definite_forms, rho_cycles, unit_norm)

NEG = [D for D in range(-10 ** 4, 0) if is_fundamental(D)]
POS = [D for D in range(2, 2000) if is_fundamental(D)]


_SPF = list(range(10 ** 4 + 1))
for _i in range(2, 101):
    if _SPF[_i] == _i:
        for _j in range(_i * _i, 10 ** 4 + 1, _i):
            if _SPF[_j] == _j:
                _SPF[_j] = _i


def _chi_prime(D, p):
    if p == 2:
        return 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
    r = D % p
    return 0 if r == 0 else (1 if pow(r, (p - 1) // 2, p) == 1 else -1)


def dirichlet_class_number(D):
    """h(D) for D < -4 from the analytic class number formula
    h = (1/(2 - chi(2))) * sum_{0 < a < |D|/2} chi(a)."""
    n = -D
    chi = [0, 1] + [0] * (n // 2)
    prime_vals = {}
    for a in range(2, n // 2 + 1):
        p = _SPF[a]
        if p not in prime_vals:
            prime_vals[p] = _chi_prime(D, p)
        chi[a] = prime_vals[p] * chi[a // p]
    total = sum(chi[1:(n - 1) // 2 + 1])
    return total // (2 - _chi_prime(D, 2))


def brute_reduced_count(D):
    # every (a, b, c) with |b| <= a <= c and the boundary conventions
    count = 0
    for a in range(1, int((-D / 3) ** 0.5) + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            if b < 0 and (b == -a or a == c):
                continue
            count += 1
    return count


# -- discriminants ---------------------------------------------------------------

def test_fundamental_discriminants():
    assert fundamental_discriminant(22268) == QuadDiscriminant(22268, True)
    assert fundamental_discriminant(-1567).D == -1567
    assert fundamental_discriminant(8).D == 8
    assert fundamental_discriminant(19).D == 76
    assert fundamental_discriminant(12).D == 12
    assert 22268 == 4 * 19 * 293 and 5567 % 4 == 3
    with pytest.raises(SquareInput):
        fundamental_discriminant(49)


def test_is_fundamental():
    assert [D for D in range(-30, 30) if is_fundamental(D)] == [
        -24, -23, -20, -19, -15, -11, -8, -7, -4, -3, 5, 8, 12, 13, 17, 21, 24, 28, 29]
    assert not QuadDiscriminant.of(4 * 22268).fundamental


# -- imaginary class groups ----------------------------------------------------------

def test_imaginary_1567():
    cg = class_group_imaginary(-1567)
    assert cg.invariants.to_list() == [15]
    assert class_group_imaginary(-3).invariants.is_trivial()
    assert class_group_imaginary(-23).invariants.to_list() == [3]
    assert {(f.a, f.b, f.c) for f in reduced_definite_forms(-23)} == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}


@pytest.mark.parametrize("D,inv", [(-84, [2, 2]), (-420, [2, 2, 2]), (-3299, [3, 9]),
                                   (-4027, [3, 3]), (-56, [4]), (-5, None)])
def test_imaginary_structures(D, inv):
    if inv is None:
        with pytest.raises(NotFundamental):
            class_group_imaginary(D)
        return
    assert class_group_imaginary(D).invariants.to_list() == inv


def test_class_numbers_match_dirichlet_formula():
    for D in [d for d in NEG if d < -4]:
        h = class_group_imaginary(D).class_number
        assert h == dirichlet_class_number(D) == brute_reduced_count(D), D


def _form_order(f, D):
    e = QuadForm.principal(D)
    k, acc = 1, f
    while acc != e:
        acc = acc.compose(f).reduce_definite()
        k += 1
    return k


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(NEG))
def test_imaginary_invariants_from_element_orders(D):
    from unram_cert.grouplemmas import AbelianInvariants
    reps = reduced_definite_forms(D)
    orders = [_form_order(f, D) for f in reps]
    assert class_group_imaginary(D).invariants == AbelianInvariants.from_element_orders(orders)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(NEG), st.randoms(use_true_random=False))
def test_definite_group_axioms(D, rnd):
    reps = reduced_definite_forms(D)
    e = QuadForm.principal(D)

    def mul(f, g):
        h = f.compose(g)
        assert h.disc == D
        return h.reduce_definite()

    f, g, h = (rnd.choice(reps) for _ in range(3))
    assert mul(f, g) in reps
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, g) == mul(g, f)
    assert mul(f, e) == f
    assert mul(f, f.inverse().reduce_definite()) == e


# -- real class groups ---------------------------------------------------------------

def test_real_22268():
    cg = class_group_real(22268)
    assert cg.invariants.to_list() == [2]
    assert cg.class_number == 2


@pytest.mark.parametrize("D,wide,narrow,norm", [
    (5, [], [], -1), (8, [], [], -1), (12, [], [2], 1), (76, [], [2], 1), (136, [2], [4], 1),
    (229, [3], [3], -1), (40, [2], [2], -1), (60, [2], [2, 2], 1), (316, [3], [6], 1),
    (328, [4], [4], -1),
])
def test_real_structures(D, wide, narrow, norm):
    cg = class_group_real(D)
    assert cg.invariants.to_list() == wide
    assert cg.narrow.to_list() == narrow
    assert cg.unit_norm == norm


def _norm_minus_one_exists(D):
    if D % 4 == 1:
        return bool(diop_DN(D, -4))
    return bool(diop_DN(D // 4, -1))


def test_unit_norm_against_pell():
    for D in POS:
        assert (unit_norm(D) == -1) == _norm_minus_one_exists(D), D


def test_narrow_vs_wide_all_small():
    for D in POS:
        cg = class_group_real(D)
        if cg.unit_norm == -1:
            assert cg.narrow == cg.invariants, D
        else:
            assert cg.narrow_class_number == 2 * cg.class_number, D
        # genus theory: the narrow 2-rank is t - 1
        t = len(factorint(D))
        assert cg.narrow.p_rank(2) == t - 1, D


def test_genus_count_22268():
    # three prime discriminants: -4, -19, 293 ... so narrow 2-rank 2
    cg = class_group_real(22268)
    assert len(factorint(22268)) == 3
    assert cg.narrow.p_rank(2) == 2


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([D for D in POS if len(rho_cycles(D)) > 1]), st.randoms(use_true_random=False))
def test_indefinite_group_axioms(D, rnd):
    cycles = rho_cycles(D)
    index = {f: i for i, cy in enumerate(cycles) for f in cy}

    def cls(f):
        return index[f.reduce_indefinite()]

    reps = [cy[0] for cy in cycles]
    f, g, h = (rnd.choice(reps) for _ in range(3))
    fg = f.compose(g)
    gh = g.compose(h)
    assert cls(reps[cls(fg)].compose(h)) == cls(f.compose(reps[cls(gh)]))
    assert cls(fg) == cls(g.compose(f))
    assert cls(f.compose(QuadForm.principal(D))) == cls(f)
    assert cls(f.compose(f.inverse())) == cls(QuadForm.principal(D))


def test_class_group_dispatch():
    assert class_group(-1567).class_number == 15
    assert class_group(22268).class_number == 2
    with pytest.raises(NotFundamental):
        class_group_real(4 * 22268)


# -- splitting ----------------------------------------------------------------------

def test_prime_splitting():
    assert prime_splitting(-1567, 2) == "split" and -1567 % 8 == 1
    assert prime_splitting(22268, 19) == "ramified"
    assert prime_splitting(22268, 293) == "ramified"
    assert prime_splitting(8, 2) == "ramified"
    assert prime_splitting(-23, 5) == "inert"


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(NEG + POS), st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 29, 31]))
def test_splitting_matches_root_count(D, p):
    # ramified iff x^2 - D has a double root mod p, split iff two roots
    roots = sum(1 for x in range(p) if (x * x - D) % p == 0)
    expected = {1: "ramified", 2: "split", 0: "inert"}[roots]
    assert prime_splitting(D, p) == expected
