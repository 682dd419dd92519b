"""Exact integer matrix algebra: Smith normal form, kernels, linear solving.

Matrices are lists of lists of Python ints (arbitrary precision), row-major.
Every function treats its arguments as immutable and returns fresh lists.
Fixed-width overflow is a correctness bug here, so nothing in this module may
ever touch floats or numpy.
"""

from __future__ import annotations

from dataclasses import dataclass

Matrix = "list[list[int]]"


def zeros(rows: int, cols: int):
    return [[0] * cols for _ in range(rows)]


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_mat(a):
    return [row[:] for row in a]


def dims(a):
    return len(a), len(a[0]) if a else 0


def transpose(a):
    rows, cols = dims(a)
    return [[a[i][j] for i in range(rows)] for j in range(cols)]


def matmul(a, b):
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError("matmul: %dx%d by %dx%d" % (ra, ca, rb, cb))
    out = zeros(ra, cb)
    for i in range(ra):
        ai = a[i]
        oi = out[i]
        for k in range(ca):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cb):
                    oi[j] += v * bk[j]
    return out


def matvec(a, x):
    rows, cols = dims(a)
    if cols != len(x):
        raise ValueError("matvec: %dx%d by %d" % (rows, cols, len(x)))
    return [sum(a[i][j] * x[j] for j in range(cols)) for i in range(rows)]


def mat_eq(a, b):
    return dims(a) == dims(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_mat(a):
    return all(v == 0 for row in a for v in row)


def det(a):
    """Bareiss fraction-free determinant of a square matrix."""
    n, m = dims(a)
    if n != m:
        raise ValueError("det of non-square matrix")
    if n == 0:
        return 1
    mat = copy_mat(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


@dataclass
class SnfResult:
    """U @ A @ V == D with U, V unimodular and D in Smith normal form."""

    U: list
    D: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def diagonal(self):
        r, c = dims(self.D)
        return [self.D[i][i] for i in range(min(r, c))]

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)


def snf(a) -> SnfResult:
    """Smith normal form with both transforms and their exact inverses.

    Pivot strategy: smallest nonzero magnitude in the remaining block, which
    keeps coefficient growth tame on the dense small matrices we feed it.
    """
    rows, cols = dims(a)
    d = copy_mat(a)
    u, ui = identity(rows), identity(rows)
    v, vi = identity(cols), identity(cols)

    def row_add(i, j, q):
        # row_i -= q * row_j
        di, dj = d[i], d[j]
        for k in range(cols):
            di[k] -= q * dj[k]
        uij, ujj = u[i], u[j]
        for k in range(rows):
            uij[k] -= q * ujj[k]
        for k in range(rows):
            ui[k][j] += q * ui[k][i]

    def col_add(i, j, q):
        # col_i -= q * col_j
        for k in range(rows):
            d[k][i] -= q * d[k][j]
        for k in range(cols):
            v[k][i] -= q * v[k][j]
        vij, vjj = vi[i], vi[j]
        for k in range(cols):
            vjj[k] += q * vij[k]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for k in range(rows):
            ui[k][i], ui[k][j] = ui[k][j], ui[k][i]

    def col_swap(i, j):
        for k in range(rows):
            d[k][i], d[k][j] = d[k][j], d[k][i]
        for k in range(cols):
            v[k][i], v[k][j] = v[k][j], v[k][i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_neg(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for k in range(rows):
            ui[k][i] = -ui[k][i]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate smallest-magnitude nonzero entry of the trailing block
        best = None
        for i in range(t, rows):
            di = d[i]
            for j in range(t, cols):
                x = di[j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if abs(x) == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        if d[t][t] < 0:
            row_neg(t)

        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    row_add(i, t, q)
                    if d[i][t]:
                        row_swap(i, t)
                        if d[t][t] < 0:
                            row_neg(t)
                        dirty = True
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    col_add(j, t, q)
                    if d[t][j]:
                        col_swap(j, t)
                        dirty = True
        # divisibility fix-up: pivot must divide the whole trailing block
        pivot = d[t][t]
        fix = None
        for i in range(t + 1, rows):
            di = d[i]
            for j in range(t + 1, cols):
                if di[j] % pivot:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            row_add(t, fix, -1)
            continue  # redo this pivot
        t += 1

    return SnfResult(U=u, D=d, V=v, Uinv=ui, Vinv=vi)


def kernel_basis(a, cols=None):
    """Columns form a basis of the saturated integer null space of `a`.

    `cols` must be passed explicitly when `a` has zero rows (a 0 x n matrix is
    represented by [], which loses its width).
    """
    rows = len(a)
    if cols is None:
        cols = len(a[0]) if a else 0
    if rows == 0:
        return identity(cols)
    if cols == 0:
        return []
    res = snf(a)
    rank = res.rank
    # A x = 0  <=>  D (V^-1 x) = 0  <=>  x in span of V columns past rank
    return [[res.V[i][j] for j in range(rank, cols)] for i in range(cols)]


def solve(a, b, cols=None):
    """One integer solution x of A x = b, or None when none exists."""
    rows = len(a)
    if cols is None:
        cols = len(a[0]) if a else 0
    if len(b) != rows:
        raise ValueError("solve: dimension mismatch")
    if rows == 0:
        return [0] * cols
    if cols == 0:
        return [] if all(v == 0 for v in b) else None
    res = snf(a)
    c = matvec(res.U, b)
    rank = res.rank
    y = [0] * cols
    for i in range(min(rows, cols)):
        di = res.D[i][i]
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
    for i in range(rank, rows):
        if c[i]:
            return None
    return matvec(res.V, y)


def hstack(a, b):
    if len(a) != len(b):
        raise ValueError("hstack: row mismatch")
    return [ra + rb for ra, rb in zip(a, b)]
