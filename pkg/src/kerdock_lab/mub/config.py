"""Spherical configurations stored as exact Gram matrices ``num / den``.

The MUB configuration ``X`` lives in ``R^N``.  ``Z`` and ``Y`` are obtained
by keeping the points at cosine ``1/sqrt(N)`` from one (resp. two
orthogonal) reference points of ``X`` and projecting away the reference
directions, which acts on cosines as ``c -> (N c - j) / (N - j)``.  The
Gram matrices are always computed from cosines.  When the reference points
are standard lines an integer model is kept alongside, which serves as an
independent certificate for rank and positivity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import numpy as np

from kerdock_lab.algebra.linalg import integer_rank, psd_rank
from kerdock_lab.algebra.numbers import frac_str, parse_frac
from kerdock_lab.mub.lines import SignedLineSet
from kerdock_lab.schemes.partition import RelationPartition, relations_from_matrix

FAMILIES = ("X", "Z", "Y", "custom")


@dataclass(frozen=True, eq=False)
class SphericalConfig:
    """Unit vectors with Gram matrix ``num / den`` (integer numerators).

    ``vectors`` optionally holds an integer model of the points: rows of
    squared norm ``dim`` with pairwise dot products ``dim * num / den``.
    ``source`` records, for derived configurations, the indices of the
    parent points that were kept.
    """

    num: np.ndarray
    den: int
    dim: int
    family: str = "custom"
    vectors: np.ndarray | None = field(default=None, repr=False)
    source: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        num = np.asarray(self.num)
        if num.ndim != 2 or num.shape[0] != num.shape[1]:
            raise ValueError("Gram numerator must be square")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        if not (np.diag(num) == self.den).all():
            raise ValueError("Gram diagonal must be 1")
        if not (num == num.T).all():
            raise ValueError("Gram matrix must be symmetric")
        num.setflags(write=False)
        object.__setattr__(self, "num", num)

    @property
    def n_points(self) -> int:
        return self.num.shape[0]

    def cosine(self, x: int, y: int) -> Fraction:
        return Fraction(int(self.num[x, y]), self.den)

    def cosine_counts(self, include_diagonal: bool = True) -> dict[Fraction, int]:
        """Exact cosine value -> number of ordered pairs."""
        values, counts = np.unique(self.num, return_counts=True)
        out = {Fraction(int(v), self.den): int(c) for v, c in zip(values, counts)}
        if not include_diagonal:
            out[Fraction(1)] -= self.n_points
            if out[Fraction(1)] == 0:
                del out[Fraction(1)]
        return out

    def inner_products(self) -> list[Fraction]:
        """Distinct cosines between distinct points, ascending."""
        return sorted(self.cosine_counts(include_diagonal=False))

    def has_integer_model(self) -> bool:
        """True when ``vectors`` exactly reproduces the Gram matrix."""
        if self.vectors is None:
            return False
        v = np.asarray(self.vectors, dtype=np.int64)
        if v.shape[0] != self.n_points or v.shape[1] > self.dim:
            return False
        return bool((v @ v.T * self.den == self.dim * self.num.astype(np.int64)).all())

    def rank_and_psd(self, method: str = "auto") -> tuple[int, bool]:
        """Exact rank and positive semidefiniteness of the Gram matrix.

        ``"model"`` certifies PSD through the integer factorization and
        takes the rank of the factor; ``"gram"`` eliminates the Gram matrix
        itself; ``"auto"`` uses the model when one is present.
        """
        if method == "auto":
            method = "model" if self.vectors is not None else "gram"
        if method == "model":
            if not self.has_integer_model():
                raise ValueError("no valid integer model for this configuration")
            return integer_rank(self.vectors), True
        if method == "gram":
            return psd_rank(self.num)
        raise ValueError(f"unknown method {method!r}")

    def partition(self, cosines) -> RelationPartition:
        """Relation partition with class ``i`` at ``cosines[i - 1]``."""
        nums = []
        for c in cosines:
            c = Fraction(c)
            if (c * self.den).denominator != 1:
                raise ValueError(f"cosine {c} is not a multiple of 1/{self.den}")
            nums.append(int(c * self.den))
        rp = relations_from_matrix(self.num, nums)
        return RelationPartition(rp.class_of, tuple(Fraction(v, self.den) for v in nums))

    def scheme_partition(self) -> RelationPartition:
        return self.partition(class_cosines(self.family, self.dim_parameter()))

    def dim_parameter(self) -> int:
        """The MUB dimension ``N`` this configuration was derived from."""
        return {"X": self.dim, "Z": self.dim + 1, "Y": self.dim + 2}[self.family]

    def to_json(self) -> dict:
        rows = [[frac_str(Fraction(int(v), self.den)) for v in row] for row in self.num]
        return {"n": self.n_points, "dim": self.dim, "family": self.family, "gram": rows}

    @classmethod
    def from_json(cls, obj: dict) -> SphericalConfig:
        gram = [[parse_frac(x) for x in row] for row in obj["gram"]]
        den = 1
        for row in gram:
            for x in row:
                den = den * x.denominator // np.gcd(den, x.denominator)
        num = np.array([[int(x * den) for x in row] for row in gram], dtype=np.int64)
        return cls(num, int(den), int(obj["dim"]), obj.get("family", "custom"))


def class_cosines(family: str, N: int) -> tuple[Fraction, ...]:
    """Cosines defining classes ``1..d`` of the ``X``, ``Z``, ``Y`` schemes."""
    s = isqrt(N)
    F = Fraction
    if family == "X":
        return (F(1, s), F(0), F(-1, s), F(-1))
    if family == "Z":
        return (F(-s - 1, N - 1), F(s - 1, N - 1), F(-1, N - 1))
    if family == "Y":
        return (F(-s - 2, N - 2), F(s - 2, N - 2), F(-2, N - 2))
    raise ValueError(f"no class convention for family {family!r}")


def _int_dtype(bound: int):
    return np.int16 if bound < 2**15 else np.int64


def build_X(lines: SignedLineSet) -> SphericalConfig:
    """``M u (-M)`` for the maximal MUB made of ``lines`` and the standard basis.

    Point order: ``+e_0, -e_0, +e_1, -e_1, ...`` then the sign vectors in
    their stored order.  Gram numerators carry the denominator ``sqrt(N)``.
    The integer model scales every point to squared norm ``N``: standard
    lines become ``sqrt(N) e_v``, sign vectors stay ``+-1``.
    """
    N, s = lines.N, lines.sqrt_N
    if s * s != N:
        raise ValueError("N must be a perfect square")
    std = np.zeros((2 * N, N), dtype=np.int64)
    for v in range(N):
        std[2 * v, v] = s
        std[2 * v + 1, v] = -s
    signs = lines.vectors.astype(np.int64)
    if len(signs) != N * N:
        raise ValueError(f"a maximal real MUB in R^{N} needs {N * N} sign vectors, got {len(signs)}")
    vecs = np.vstack([std, signs])
    gram = vecs @ vecs.T
    if (gram % s).any():
        raise ValueError("sign vectors are not pairwise at cosine 0, +-1/sqrt(N) or +-1")
    num = gram // s
    off = num[~np.eye(len(num), dtype=bool)]
    if not np.isin(off, (0, 1, -1, -s)).all():
        raise ValueError("the lines do not form mutually unbiased bases")
    num = num.astype(_int_dtype(N))
    return SphericalConfig(num, s, N, "X", vectors=vecs)


def standard_index(v: int, sign: int = 1) -> int:
    """Index in :func:`build_X`'s order of ``sign * e_v``."""
    return 2 * v + (0 if sign > 0 else 1)


def _check_X(X: SphericalConfig) -> int:
    if X.family != "X":
        raise ValueError("expected the X configuration")
    return X.dim


def _drop_axes(X: SphericalConfig, keep, refs) -> np.ndarray | None:
    """Integer model of a derived configuration when every reference point is a standard line.

    Used only as an independent certificate for the cosine-space formulas;
    ``None`` when some reference point is a sign vector.
    """
    if X.vectors is None:
        return None
    axes = []
    for r in refs:
        row = X.vectors[r]
        nz = np.flatnonzero(row)
        if len(nz) != 1:
            return None
        axes.append(int(nz[0]))
    return np.delete(X.vectors[keep], axes, axis=1)


def build_Z(X: SphericalConfig, u: int | None = None) -> SphericalConfig:
    """Points at cosine ``1/sqrt(N)`` from ``u`` (default ``+e_0``), projected off ``u``."""
    N = _check_X(X)
    s = X.den
    u = standard_index(0) if u is None else u
    if not 0 <= u < X.n_points:
        raise IndexError(f"u = {u} is not a point of X")
    keep = np.flatnonzero(X.num[u] == 1)
    num = s * X.num[np.ix_(keep, keep)].astype(np.int64) - 1
    model = _drop_axes(X, keep, [u])
    return SphericalConfig(num.astype(_int_dtype(N)), N - 1, N - 1, "Z", vectors=model, source=keep)


def build_Y(X: SphericalConfig, u: int | None = None, v: int | None = None) -> SphericalConfig:
    """Points at cosine ``1/sqrt(N)`` from orthogonal ``u, v`` (default ``+e_0, +e_1``), projected off both."""
    N = _check_X(X)
    s = X.den
    u = standard_index(0) if u is None else u
    v = standard_index(1) if v is None else v
    for w in (u, v):
        if not 0 <= w < X.n_points:
            raise IndexError(f"{w} is not a point of X")
    if X.num[u, v] != 0:
        raise ValueError("u and v must be orthogonal")
    keep = np.flatnonzero((X.num[u] == 1) & (X.num[v] == 1))
    num = s * X.num[np.ix_(keep, keep)].astype(np.int64) - 2
    model = _drop_axes(X, keep, [u, v])
    return SphericalConfig(num.astype(_int_dtype(N)), N - 2, N - 2, "Y", vectors=model, source=keep)


def code_bijection(config: SphericalConfig, code) -> np.ndarray | None:
    """Match the points of a sign-vector configuration with the words of a binary code.

    Returns ``index`` with point ``i`` corresponding to word ``index[i]``
    under ``s -> (1 - s) / 2``, provided this is a bijection and
    ``dim * cosine = length - 2 * distance`` for every pair; otherwise ``None``.
    """
    if config.vectors is None or not config.has_integer_model():
        return None
    v = np.asarray(config.vectors, dtype=np.int64)
    if not np.isin(v, (-1, 1)).all():
        return None
    words = ((1 - v) // 2).astype(np.uint8)
    table = {w.tobytes(): j for j, w in enumerate(np.asarray(code.words, dtype=np.uint8))}
    if len(table) != len(words) or words.shape[1] != code.length:
        return None
    try:
        index = np.array([table[w.tobytes()] for w in words], dtype=np.int64)
    except KeyError:
        return None
    if len(set(index.tolist())) != len(index):
        return None
    cw = np.asarray(code.words, dtype=np.int64)[index]
    dist = (cw[:, None, :] != cw[None, :, :]).sum(axis=2)
    if not (config.dim * config.num.astype(np.int64) == config.den * (code.length - 2 * dist)).all():
        return None
    return index


def cosine_profiles_uniform(config: SphericalConfig) -> bool:
    """True when every point sees the same multiset of cosines."""
    rows = np.sort(config.num, axis=1)
    return bool((rows == rows[0]).all())


def cosine_multiset(config: SphericalConfig, x: int = 0) -> Counter:
    return Counter(Fraction(int(v), config.den) for v in config.num[x])
