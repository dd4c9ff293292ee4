"""Dense linear algebra over a finite field object (PrimeField or ExtField).

Matrices are lists of rows; vectors are lists.  All routines are exact and
work on copies.
"""

from ..finitefield import FpPolynomial


def rref(rows, F):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, a) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, F):
    return len(rref(rows, F)[1])


def nullspace(rows, F, ncols=None):
    """Basis of {v : rows * v = 0} (column convention), as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows, F) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def left_nullspace(rows, F):
    """Basis of {v : v * rows = 0}."""
    return nullspace(transpose(rows), F, ncols=len(rows))


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def mat_mul(a, b, F):
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = F.add(acc, F.mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def vec_mat(v, m, F):
    n = len(m[0])
    out = [0] * n
    for x, row in zip(v, m):
        if x:
            for j in range(n):
                if row[j]:
                    out[j] = F.add(out[j], F.mul(x, row[j]))
    return out


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def det(rows, F):
    m = [list(r) for r in rows]
    n = len(m)
    d = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = F.neg(d)
        d = F.mul(d, m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = F.mul(m[i][c], inv)
                m[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[i], m[c])]
    return d


def inverse(rows, F):
    n = len(rows)
    aug = [list(r) + e for r, e in zip(rows, identity(n))]
    red, pivots = rref(aug, F)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def charpoly(rows, F):
    """Characteristic polynomial det(xI - A) via Hessenberg reduction."""
    n = len(rows)
    h = [list(r) for r in rows]
    # similarity transform to upper Hessenberg form
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[c + 1], h[piv] = h[piv], h[c + 1]
            for r in h:
                r[c + 1], r[piv] = r[piv], r[c + 1]
        inv = F.inv(h[c + 1][c])
        for i in range(c + 2, n):
            if h[i][c]:
                f = F.mul(h[i][c], inv)
                h[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(h[i], h[c + 1])]
                for r in h:
                    r[c + 1] = F.add(r[c + 1], F.mul(f, r[i]))
    # recurrence on leading principal minors
    x = FpPolynomial.x(F)
    polys = [FpPolynomial.constant(F, 1)]
    for k in range(n):
        pk = (x - FpPolynomial.constant(F, h[k][k])) * polys[k]
        prod = 1
        for i in range(k, 0, -1):
            prod = F.mul(prod, h[i][i - 1])
            coef = F.mul(prod, h[i - 1][k])
            if coef:
                pk = pk - polys[i - 1].scale(coef)
        polys.append(pk)
    return polys[n]


def poly_at_matrix(f, rows, F):
    """f(A) by Horner's rule."""
    n = len(rows)
    acc = [[0] * n for _ in range(n)]
    for c in reversed(f.coeffs):
        acc = mat_mul(acc, rows, F)
        if c:
            for i in range(n):
                acc[i][i] = F.add(acc[i][i], c)
    return acc
