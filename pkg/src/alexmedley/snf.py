"""Smith and Hermite normal forms of integer matrices (lists of lists of int)."""

from __future__ import annotations


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def smith_normal_form(a):
    """Return ``(d, u, v)`` with ``u @ a @ v == d`` diagonal, ``u, v`` unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [list(row) for row in a]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row[dst] += k * row[src]
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for s in range(min(m, n)):
        # pivot: smallest nonzero entry in the remaining block
        while True:
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    x = d[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return _finish(d, u, v, m, n)
            _, i, j = best
            swap_rows(s, i)
            swap_cols(s, j)
            done = True
            for i in range(s + 1, m):
                if d[i][s]:
                    add_row(s, i, -(d[i][s] // d[s][s]))
                    if d[i][s]:
                        done = False
            for j in range(s + 1, n):
                if d[s][j]:
                    add_col(s, j, -(d[s][j] // d[s][s]))
                    if d[s][j]:
                        done = False
            if not done:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(s + 1, m):
                for j in range(s + 1, n):
                    if d[i][j] % d[s][s]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, s, 1)
        if d[s][s] < 0:
            d[s] = [-x for x in d[s]]
            u[s] = [-x for x in u[s]]
    return _finish(d, u, v, m, n)


def _finish(d, u, v, m, n):
    for s in range(min(m, n)):
        if d[s][s] < 0:
            d[s] = [-x for x in d[s]]
            u[s] = [-x for x in u[s]]
    return d, u, v


def invariant_factors(a) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def column_hermite_form(a):
    """Column-style Hermite normal form ``a @ w`` of an integer matrix.

    Returns ``(h, w)`` with ``w`` unimodular.  Pivots run down the rows: each
    pivot is positive, entries left of a pivot are reduced modulo it, entries
    to its right are zero.  The result depends only on the column lattice.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    h = [list(row) for row in a]
    w = identity(n)

    def col_op(j, k, c):
        # col k += c * col j
        for row in h:
            row[k] += c * row[j]
        for row in w:
            row[k] += c * row[j]

    def swap(j, k):
        for row in h:
            row[j], row[k] = row[k], row[j]
        for row in w:
            row[j], row[k] = row[k], row[j]

    def negate(j):
        for row in h:
            row[j] = -row[j]
        for row in w:
            row[j] = -row[j]

    col = 0
    for i in range(m):
        if col >= n:
            break
        # gcd-reduce row i over columns col..n-1 into column col
        while True:
            nz = [j for j in range(col, n) if h[i][j]]
            if not nz:
                break
            j = min(nz, key=lambda j: abs(h[i][j]))
            if j != col:
                swap(j, col)
            for k in range(col + 1, n):
                if h[i][k]:
                    col_op(col, k, -(h[i][k] // h[i][col]))
            if all(h[i][k] == 0 for k in range(col + 1, n)):
                break
        if h[i][col] == 0:
            continue
        if h[i][col] < 0:
            negate(col)
        p = h[i][col]
        for k in range(col):
            q = h[i][k] // p
            if q:
                col_op(col, k, -q)
        col += 1
    return h, w
