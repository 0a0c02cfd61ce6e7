"""Pure-Python/numpy implementations of the hot kernels.

Same contracts as the compiled ``_ckernels`` module; selected by
:mod:`kerdock_lab.kernels` when the extension is unavailable.
"""

from __future__ import annotations

import math

import numpy as np


def intersection_numbers(classes: np.ndarray, d: int):
    """Triple counts ``p[i, j, k]`` of a relation partition, checked for constancy.

    Returns ``(p, witness)``.  ``witness`` is ``None`` when every count
    ``#{z : C[x,z] = i, C[z,y] = j}`` is constant over the pairs with
    ``C[x,y] = k``; otherwise ``(x, y, i, j, k, expected, got)`` for the first
    violation found.
    """
    c = np.ascontiguousarray(classes, dtype=np.uint8)
    n = c.shape[0]
    if n >= 1 << 24:
        raise ValueError("float32 counting is exact only below 2^24 points")
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    for j in range(d + 1):
        p[0, j, j] = 1
        p[j, 0, j] = 1
    masks = [c == k for k in range(d + 1)]
    first = [np.unravel_index(np.argmax(mk), mk.shape) for mk in masks]
    adj = [mk.astype(np.float32) for mk in masks]
    for i in range(1, d + 1):
        for j in range(i, d + 1):
            prod = adj[i] @ adj[j]
            for k in range(d + 1):
                x0, y0 = first[k]
                expected = prod[x0, y0]
                bad = masks[k] & (prod != expected)
                if bad.any():
                    x, y = np.unravel_index(np.argmax(bad), bad.shape)
                    return p, (int(x), int(y), i, j, k, int(expected), int(prod[x, y]))
                p[i, j, k] = p[j, i, k] = int(expected)
    return p, None


def _fp_decompose(gram: np.ndarray) -> np.ndarray:
    n = gram.shape[0]
    q = gram.astype(float).copy()
    for i in range(n):
        if q[i, i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k, l] -= q[k, i] * q[i, l]
    return q


def short_vectors(gram: np.ndarray, bound: int, collect: bool = False):
    """Enumerate coefficient vectors ``x`` with ``x^T G x <= bound`` (Fincke-Pohst).

    Returns ``(counts, vectors)``: ``counts[t]`` is the exact number of
    vectors of norm ``t`` (including zero), ``vectors`` an ``(k, n)`` array
    of those with nonzero norm when ``collect`` is set, else ``None``.
    """
    g = np.asarray(gram, dtype=np.int64)
    n = g.shape[0]
    q = _fp_decompose(g)
    qd = [q[i, i] for i in range(n)]
    qu = [[q[i, j] for j in range(n)] for i in range(n)]
    gl = g.tolist()
    counts = [0] * (bound + 1)
    found = []
    eps = 1e-7 * max(1.0, bound)
    x = [0] * n
    t = [0.0] * n
    u = [0.0] * n
    ub = [0] * n
    i = n - 1
    t[i] = bound + eps
    u[i] = 0.0
    descend = True
    while True:
        if descend:
            z = math.sqrt(max(t[i], 0.0) / qd[i])
            ub[i] = math.floor(z - u[i])
            x[i] = math.ceil(-z - u[i]) - 1
        x[i] += 1
        if x[i] > ub[i]:
            i += 1
            if i == n:
                break
            descend = False
            continue
        if i > 0:
            s = x[i] + u[i]
            t[i - 1] = t[i] - qd[i] * s * s
            i -= 1
            u[i] = sum(qu[i][j] * x[j] for j in range(i + 1, n))
            descend = True
            continue
        norm = 0
        for a in range(n):
            xa = x[a]
            if xa:
                row = gl[a]
                acc = 0
                for b in range(n):
                    if x[b]:
                        acc += row[b] * x[b]
                norm += xa * acc
        if norm <= bound:
            counts[norm] += 1
            if collect and norm:
                found.append(list(x))
        descend = False
    vecs = np.array(found, dtype=np.int64).reshape(-1, n) if collect else None
    return np.array(counts, dtype=np.int64), vecs
