"""Exhaustive scans of GL_n(F_p) with numpy."""

import itertools
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..arith import factorint, gl_order, is_prime
from ..config import SCAN_LIMIT
from ..errors import ScanTooLarge
from ..finitefield import PrimeField
from .matrix import MatrixFq

_CHUNK = 1 << 19


def _decode(codes, n, p):
    """Matrices whose row-major base-p digits are the given codes."""
    out = np.empty((len(codes), n * n), dtype=np.int64)
    c = codes.copy()
    for k in range(n * n):
        out[:, k] = c % p
        c //= p
    return out.reshape(len(codes), n, n)


def _batch_pow(m, e, p):
    n = m.shape[1]
    result = np.broadcast_to(np.eye(n, dtype=np.int64), m.shape).copy()
    base = m
    while e:
        if e & 1:
            result = np.matmul(result, base) % p
        e >>= 1
        if e:
            base = np.matmul(base, base) % p
    return result


def _is_identity(m):
    n = m.shape[1]
    return np.all(m == np.eye(n, dtype=np.int64), axis=(1, 2))


def _count_range(args):
    start, stop, n, p, k = args
    codes = np.arange(start, stop, dtype=np.int64)
    m = _decode(codes, n, p)
    hit = _is_identity(_batch_pow(m, k, p))
    for r in factorint(k) if k > 1 else ():
        if not hit.any():
            break
        idx = np.nonzero(hit)[0]
        sub = _is_identity(_batch_pow(m[idx], k // r, p))
        hit[idx[sub]] = False
    return int(hit.sum())


def count_elements_of_order(n, q, k, workers=1, limit=SCAN_LIMIT):
    """Exact number of elements of order k in GL_n(F_q), q prime, by scanning
    all q^(n^2) matrices."""
    if not is_prime(q):
        raise ValueError("the scan supports prime q only")
    if gl_order(n, q) > limit:
        raise ScanTooLarge(f"|GL_{n}({q})| exceeds {limit}")
    total = q ** (n * n)
    jobs = [(s, min(s + _CHUNK, total), n, q, k) for s in range(0, total, _CHUNK)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_range, jobs))
    return sum(_count_range(j) for j in jobs)


def _elements_of_order(p, r):
    F = PrimeField(p)
    out = []
    for entries in itertools.product(range(p), repeat=4):
        m = MatrixFq(F, [entries[:2], entries[2:]])
        if m.is_invertible() and not m.is_identity() and (m ** r).is_identity():
            out.append(m)
    return out


def gl2_rank2_subgroups_meet_center(p):
    """Check that every subgroup C_r x C_r of GL_2(F_p) (r prime) contains a
    nontrivial scalar, by scanning commuting pairs of elements of order r.
    Returns (holds, number of rank-2 pairs examined)."""
    F = PrimeField(p)
    examined = 0
    for r in factorint(gl_order(2, p)):
        elems = _elements_of_order(p, r)
        for a in elems:
            powers_a = {a ** i for i in range(r)}
            for b in elems:
                if b in powers_a or a * b != b * a:
                    continue
                examined += 1
                sub = {(a ** i) * (b ** j) for i in range(r) for j in range(r)}
                if not any(_is_scalar(x) and not x.is_identity() for x in sub):
                    return False, examined
    return True, examined


def _is_scalar(m):
    (a, b), (c, d) = m.rows
    return b == 0 and c == 0 and a == d
