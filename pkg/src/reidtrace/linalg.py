"""Exact integer matrix helpers: products, determinants, Smith normal form.

Matrices are tuples of row tuples of Python ints, so every value is
hashable and arbitrary precision.
"""

from __future__ import annotations

from functools import lru_cache
from operator import mul
from typing import NamedTuple, Optional, Sequence

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Sequence) -> tuple:
    """Matrix times vector; works for any numeric entries (ints, Fractions)."""
    return tuple(sum(map(mul, row, v)) for row in m)


def trace(m: Matrix) -> int:
    return sum(m[i][i] for i in range(len(m)))


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class SmithForm(NamedTuple):
    """``U @ M @ V == D`` with both inverses kept for change of basis."""

    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(shape(self.D))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


@lru_cache(maxsize=4096)
def smith_form(m: Matrix) -> SmithForm:
    rows, cols = shape(m)
    a = [list(row) for row in m]
    u = [list(row) for row in identity(rows)]
    u_inv = [list(row) for row in identity(rows)]
    v = [list(row) for row in identity(cols)]
    v_inv = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]
        for row in u_inv:
            row[src] -= k * row[dst]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def add_col(dst, src, k):
        # col dst += k * col src
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]
        v_inv[src] = [x - k * y for x, y in zip(v_inv[src], v_inv[dst])]

    def negate_col(j):
        for row in a:
            row[j] = -row[j]
        for row in v:
            row[j] = -row[j]
        v_inv[j] = [-x for x in v_inv[j]]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = a[t][t]
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, rows)) or any(a[t][j] for j in range(t + 1, cols)):
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and t < cols and a[t][t] < 0:
            negate_col(t)

    freeze = lambda x: tuple(tuple(r) for r in x)
    return SmithForm(freeze(u), freeze(a), freeze(v), freeze(u_inv), freeze(v_inv))


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries ``d1 | d2 | ...``.  Pivots are chosen by smallest absolute value.

    >>> smith_normal_form([[2, 1], [1, 1]])[1]
    ((1, 0), (0, 1))
    """
    s = smith_form(as_matrix(m))
    return s.U, s.D, s.V


def is_smith_normal_form(d: Matrix) -> bool:
    rows, cols = shape(d)
    for i in range(rows):
        for j in range(cols):
            if i != j and d[i][j]:
                return False
    diag = [d[i][i] for i in range(min(rows, cols))]
    if any(x < 0 for x in diag):
        return False
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            return False
        if x and y % x:
            return False
    return True


def solve_integer(m: Matrix, b: Sequence[int]) -> Optional[Vector]:
    """Some integer ``x`` with ``m @ x == b``, or ``None`` when none exists."""
    s = smith_form(m)
    rows, cols = shape(m)
    c = mat_vec(s.U, b)
    y = [0] * cols
    for i in range(rows):
        d = s.D[i][i] if i < cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        elif c[i] % d:
            return None
        else:
            y[i] = c[i] // d
    return mat_vec(s.V, y) if cols else ()
