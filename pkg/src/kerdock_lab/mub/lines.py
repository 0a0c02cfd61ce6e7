"""Kerdock-like binary codes as sets of real lines, and their MUB structure."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from kerdock_lab.codes.binary import is_kerdock_like
from kerdock_lab.codes.words import Code


class NotKerdockLikeError(ValueError):
    pass


class NotMaximalMUBError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SignedLineSet:
    """``vectors`` are ``+-1`` rows; row ``s`` stands for the unit vector ``s / sqrt(N)``.

    The ``N`` standard basis lines are implicit and kept separate.
    """

    N: int
    vectors: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=np.int8)
        if v.ndim != 2 or v.shape[1] != self.N or not np.isin(v, (-1, 1)).all():
            raise ValueError("vectors must be +-1 rows of length N")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def sqrt_N(self) -> int:
        return isqrt(self.N)

    def line_representatives(self) -> np.ndarray:
        """One vector per line (the one with first entry +1), lexicographically sorted."""
        reps = np.where(self.vectors[:, :1] < 0, -self.vectors, self.vectors)
        return np.unique(reps, axis=0)

    def is_antipodal(self) -> bool:
        have = {v.tobytes() for v in self.vectors}
        return all((-v).tobytes() in have for v in self.vectors)


def code_to_lines(code: Code | np.ndarray, N: int | None = None) -> SignedLineSet:
    """``c -> ((-1)^(c_v))_v`` for every codeword of a Kerdock-like code."""
    words = code.words if isinstance(code, Code) else np.asarray(code, dtype=np.uint8)
    N = N or words.shape[1]
    if not is_kerdock_like(words, N):
        raise NotKerdockLikeError(f"code is not Kerdock-like for N={N}")
    return SignedLineSet(N, 1 - 2 * words.astype(np.int8))


def lines_to_code(lines: SignedLineSet) -> Code:
    """Inverse of :func:`code_to_lines`: ``+1 -> 0``, ``-1 -> 1``."""
    words = ((1 - lines.vectors.astype(np.int64)) // 2).astype(np.uint8)
    return Code("F2", np.unique(words, axis=0))


def _components(adj: np.ndarray) -> list[list[int]]:
    n = len(adj)
    seen = np.zeros(n, dtype=bool)
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in np.flatnonzero(adj[x] & ~seen):
                seen[y] = True
                stack.append(int(y))
        comps.append(sorted(comp))
    return comps


def group_into_bases(lines: SignedLineSet) -> list[np.ndarray]:
    """Split the lines into orthonormal bases; the standard basis is appended last.

    Each basis is a connected component of the orthogonality graph on the
    line representatives.  Raises :class:`NotMaximalMUBError` unless every
    component is a set of ``N`` pairwise orthogonal lines and lines from
    different components are unbiased.  Bases are ordered by their
    lexicographically least member.
    """
    N, s = lines.N, lines.sqrt_N
    reps = lines.line_representatives().astype(np.int64)
    dots = reps @ reps.T
    orth = dots == 0
    comps = _components(orth)
    label = np.empty(len(reps), dtype=np.int64)
    for c, comp in enumerate(comps):
        label[comp] = c
        block = dots[np.ix_(comp, comp)]
        if len(comp) != N or (block[~np.eye(len(comp), dtype=bool)] != 0).any():
            raise NotMaximalMUBError(f"orthogonality class of size {len(comp)} is not an orthonormal basis")
    cross = label[:, None] != label[None, :]
    if (np.abs(dots[cross]) != s).any():
        raise NotMaximalMUBError("two lines from different bases are not unbiased")
    # reps are sorted, so each component's first member is its least member
    bases = [reps[comp].astype(np.int8) for comp in sorted(comps, key=lambda c: c[0])]
    bases.append(np.eye(N, dtype=np.int8))
    return bases
