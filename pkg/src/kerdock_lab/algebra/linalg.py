"""Exact linear algebra over Q on small dense matrices.

Matrices are lists of rows of :class:`~fractions.Fraction` (ints are
accepted on input).  Sizes here never exceed a few dozen, so plain
Gauss-Jordan elimination is used everywhere except :func:`psd_rank`, which
works fraction-free on large integer Gram numerators.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

Matrix = list[list[Fraction]]


def to_fraction_matrix(a) -> Matrix:
    return [[Fraction(x) for x in row] for row in a]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in a]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(Fraction, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix) -> list[list[Fraction]]:
    """Basis of ``{x : a x = 0}`` as a list of column vectors."""
    cols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def det(a: Matrix) -> Fraction:
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def solve(a: Matrix, b: list) -> list[Fraction]:
    """Solve the square system ``a x = b``; raises on singular ``a``."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise np.linalg.LinAlgError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    return [row[n:] for row in red]


def charpoly(a: Matrix) -> list[Fraction]:
    """Coefficients of ``det(x I - a)`` from low to high degree (Faddeev-LeVerrier)."""
    n = len(a)
    a = to_fraction_matrix(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = matmul(a, mk)
        mk = [[am[i][j] + (coeffs[n - k + 1] if i == j else 0) for j in range(n)] for i in range(n)]
        amk = matmul(a, mk)
        coeffs[n - k] = -sum(amk[i][i] for i in range(n)) / k
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def integer_roots(coeffs: list) -> dict[int, int] | None:
    """Integer roots with multiplicity of a monic integer polynomial.

    Returns ``None`` unless the polynomial splits completely over Z.
    """
    c = [Fraction(x) for x in coeffs]
    if c[-1] != 1 or any(x.denominator != 1 for x in c):
        raise ValueError("expected a monic polynomial with integer coefficients")
    c = [int(x) for x in c]
    roots: dict[int, int] = {}
    while len(c) > 1 and c[0] == 0:
        roots[0] = roots.get(0, 0) + 1
        c = c[1:]
    candidates = [s * d for d in _divisors(c[0]) for s in (1, -1)] if len(c) > 1 else []
    for r in candidates:
        while len(c) > 1:
            # synthetic division by (x - r)
            acc = 0
            quotient = []
            for coef in reversed(c):
                acc = acc * r + coef
                quotient.append(acc)
            if quotient[-1] != 0:
                break
            c = list(reversed(quotient[:-1]))
            roots[r] = roots.get(r, 0) + 1
    if len(c) > 1:
        return None
    return roots


def psd_rank(num: np.ndarray) -> tuple[int, bool]:
    """Exact rank and positive-semidefiniteness of a symmetric integer matrix.

    Fraction-free symmetric elimination with diagonal pivoting: the matrix is
    PSD iff every chosen pivot is positive and, once the remaining diagonal
    is exhausted, the residual block is exactly zero.
    """
    a = np.array(num, dtype=object)
    n = a.shape[0]
    if a.shape != (n, n) or not (a == a.T).all():
        raise ValueError("expected a square symmetric matrix")
    prev = 1
    r = 0
    for _ in range(n):
        if a.shape[0] == 0:
            break
        diag = np.array([a[i, i] for i in range(a.shape[0])], dtype=object)
        if (diag < 0).any():
            return r, False
        p = int(np.argmax(diag))
        piv = diag[p]
        if piv == 0:
            return r, not bool((a != 0).any())
        order = [p] + [i for i in range(a.shape[0]) if i != p]
        a = a[np.ix_(order, order)]
        col = a[1:, 0]
        # Bareiss update: exact division by the previous pivot.
        a = (piv * a[1:, 1:] - np.outer(col, col)) // prev
        prev = piv
        r += 1
    return r, True


def integer_rank(mat: np.ndarray) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    a = np.array(mat, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    if a.shape[0] < a.shape[1]:
        a = a.T
    prev = 1
    r = 0
    for c in range(a.shape[1]):
        rows = np.flatnonzero(a[r:, c] != 0)
        if rows.size == 0:
            continue
        p = r + int(rows[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        below = a[r + 1 :, c].copy()
        a[r + 1 :, c + 1 :] = (piv * a[r + 1 :, c + 1 :] - np.outer(below, a[r, c + 1 :])) // prev
        a[r + 1 :, c] = 0
        prev = piv
        r += 1
        if r == a.shape[0]:
            break
    return r
