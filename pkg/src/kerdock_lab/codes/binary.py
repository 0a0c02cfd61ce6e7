"""Binary codes: distance distributions, Kerdock-like validation, the
punctured simplex code, quadratic forms and Reed-Muller degree."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import isqrt

import numpy as np

from kerdock_lab.codes.words import Code


def pack_words(words) -> np.ndarray:
    """Pack binary words of length <= 64 into ``uint64`` (bit i = coordinate i)."""
    words = np.asarray(words, dtype=np.uint64)
    if words.shape[1] > 64:
        raise ValueError("packing supports length <= 64")
    shifts = np.arange(words.shape[1], dtype=np.uint64)
    return (words << shifts).sum(axis=1, dtype=np.uint64)


def distance_distribution(words, block: int = 1024) -> dict[int, int]:
    """Counts of Hamming distances over unordered pairs of distinct rows."""
    packed = pack_words(words)
    n = len(packed)
    counts = np.zeros(65, dtype=np.int64)
    for start in range(0, n, block):
        chunk = packed[start : start + block]
        d = np.bitwise_count(chunk[:, None] ^ packed[None, :])
        rows = np.arange(start, start + len(chunk))[:, None]
        upper = np.arange(n)[None, :] > rows
        counts += np.bincount(d[upper].ravel(), minlength=65)[:65]
    return {int(k): int(v) for k, v in enumerate(counts) if v}


def distance_matrix(words) -> np.ndarray:
    packed = pack_words(words)
    return np.bitwise_count(packed[:, None] ^ packed[None, :]).astype(np.int64)


def minimum_distance(words) -> int:
    return min(distance_distribution(words))


def kerdock_like_distances(N: int) -> set[int]:
    s = isqrt(N)
    if s * s != N:
        raise ValueError(f"N = {N} is not a perfect square")
    return {(N - s) // 2, N // 2, (N + s) // 2, N}


def is_kerdock_like(code: Code | np.ndarray, N: int) -> bool:
    """``N^2`` words of length ``N`` whose nonzero distances lie in
    ``{(N +- sqrt N)/2, N/2, N}``."""
    words = code.words if isinstance(code, Code) else np.asarray(code)
    allowed = kerdock_like_distances(N)
    if words.shape != (N * N, N):
        return False
    return set(distance_distribution(words)) <= allowed


def build_punctured_simplex_14_4() -> Code:
    """[14, 4, 7] code: the [15, 4, 8] simplex code with its last coordinate removed."""
    cols = [[(v >> i) & 1 for i in range(4)] for v in range(1, 16)]
    gens = np.array(cols, dtype=np.uint8).T
    return Code.from_generators("F2", gens).puncture(14)


def simplex_generators_14_4() -> np.ndarray:
    cols = [[(v >> i) & 1 for i in range(4)] for v in range(1, 15)]
    return np.array(cols, dtype=np.uint8).T


# -- Reed-Muller degree ---------------------------------------------------


def anf(values) -> np.ndarray:
    """Algebraic normal form (Moebius transform) of a truth table of length 2^k."""
    f = np.array(values, dtype=np.uint8) % 2
    n = len(f)
    k = n.bit_length() - 1
    if 1 << k != n:
        raise ValueError("truth table length must be a power of two")
    step = 1
    while step < n:
        f = f.reshape(-1, 2, step)
        f[:, 1, :] ^= f[:, 0, :]
        f = f.reshape(n)
        step *= 2
    return f


def rm_degree(values) -> int:
    """Degree of the polynomial function with the given truth table (-1 for 0)."""
    coeffs = anf(values)
    support = np.flatnonzero(coeffs)
    if support.size == 0:
        return -1
    return max(bin(int(s)).count("1") for s in support)


def truth_table(word, labels) -> np.ndarray:
    """Reorder a word so that entry ``v`` is the coordinate labelled ``v``."""
    labels = np.asarray(labels)
    table = np.zeros(len(labels), dtype=np.uint8)
    table[labels] = np.asarray(word, dtype=np.uint8)
    return table


# -- binary quadratic forms ----------------------------------------------


def _f2_rank(a: np.ndarray) -> int:
    a = np.array(a, dtype=np.uint8) % 2
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i, c]), None)
        if p is None:
            continue
        a[[r, p]] = a[[p, r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


@dataclass(frozen=True)
class QuadraticFormStats:
    radical_dim: int
    zero_count: int
    chi: int | None


@dataclass(frozen=True, eq=False)
class BinaryQuadraticForm:
    """``Q(x) = sum_{i <= j} U_ij x_i x_j`` over F2 with ``U`` upper triangular."""

    upper: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.upper, dtype=np.uint8) % 2
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise ValueError("coefficient matrix must be square")
        if np.tril(u, -1).any():
            raise ValueError("coefficient matrix must be upper triangular")
        object.__setattr__(self, "upper", u)

    @classmethod
    def from_terms(cls, dim: int, terms) -> BinaryQuadraticForm:
        """Build from index pairs; ``(i, i)`` means ``x_i^2``."""
        u = np.zeros((dim, dim), dtype=np.uint8)
        for i, j in terms:
            i, j = min(i, j), max(i, j)
            u[i, j] ^= 1
        return cls(u)

    @property
    def dim(self) -> int:
        return self.upper.shape[0]

    def __call__(self, x) -> int:
        x = np.asarray(x, dtype=np.int64) % 2
        return int(x @ self.upper @ x) % 2

    def bilinear_matrix(self) -> np.ndarray:
        return (self.upper + self.upper.T) % 2

    def bilinear(self, x, y) -> int:
        return int(np.asarray(x) @ self.bilinear_matrix() @ np.asarray(y)) % 2

    def values(self) -> np.ndarray:
        pts = np.array(list(product((0, 1), repeat=self.dim)), dtype=np.int64)[:, ::-1]
        return ((pts @ self.upper.astype(np.int64)) * pts).sum(axis=1) % 2

    def stats(self) -> QuadraticFormStats:
        return quadratic_form_stats(self)


def quadratic_form_stats(Q: BinaryQuadraticForm) -> QuadraticFormStats:
    """Radical dimension of ``B_Q``, exhaustive zero count, and the type for nonsingular ``Q``."""
    if Q.dim > 12:
        raise ValueError("exhaustive evaluation limited to dimension 12")
    r = Q.dim - _f2_rank(Q.bilinear_matrix())
    zeros = int((Q.values() == 0).sum())
    chi = None
    if r == 0:
        m = Q.dim - 1
        excess = zeros - 2**m
        unit = 2 ** ((m - 1) // 2)
        if abs(excess) != unit:
            raise ArithmeticError(f"nonsingular form with {zeros} zeros")
        chi = excess // unit
    return QuadraticFormStats(r, zeros, chi)


def distance_class_counts(words) -> Counter:
    return Counter(distance_distribution(words))
