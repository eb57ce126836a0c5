"""Smith normal form over the integers, with unimodular certificates."""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


@dataclass
class SmithForm:
    """``left @ matrix @ right == form``; ``form`` is diagonal with d1 | d2 | ...."""

    form: Matrix
    left: Matrix
    right: Matrix

    @property
    def diagonal(self) -> list[int]:
        k = min(len(self.form), len(self.form[0]) if self.form else 0)
        return [self.form[i][i] for i in range(k)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix: Matrix, cols: int | None = None) -> SmithForm:
    """Diagonalise an integer matrix by unimodular row and column operations.

    Pivots are the smallest nonzero absolute value in the unreduced block,
    ties broken row-major. ``cols`` is needed only when ``matrix`` has no rows.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else (cols or 0)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not rectangular")
    u, v = identity(m), identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            # remainders left in the pivot row/column become the new pivot
            best = None
            for i in range(t + 1, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), "row", i)
            for j in range(t + 1, n):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), "col", j)
            if best is not None:
                if best[1] == "row":
                    swap_rows(t, best[2])
                else:
                    swap_cols(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithForm(a, u, v)


def invariant_factors(matrix: Matrix, cols: int | None = None) -> list[int]:
    return [d for d in smith_normal_form(matrix, cols).diagonal]
