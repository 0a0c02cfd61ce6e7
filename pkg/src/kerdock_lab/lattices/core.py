"""Integer lattices: Hermite normal form, construction A and theta prefixes.

Lattices are stored by their row-style Hermite normal form, so two lattices
are equal exactly when their bases are equal.  Theta coefficients are
computed by splitting the lattice into cosets of ``q Z^n`` whenever such a
sublattice is known, and otherwise by Fincke-Pohst enumeration in the
compiled kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from kerdock_lab import kernels
from kerdock_lab.codes.words import Code, binary_basis, span_words


class NonLinearCodeError(ValueError):
    pass


def hnf(vectors) -> np.ndarray:
    """Row Hermite normal form of the integer span of ``vectors`` (zero rows dropped).

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    """
    a = np.array(vectors, dtype=object)
    if a.ndim != 2:
        raise ValueError("expected an integer matrix")
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            col = a[r:, c]
            nz = np.flatnonzero(col != 0)
            if nz.size == 0:
                break
            k = r + int(nz[np.argmin(np.abs(col[nz]).astype(object))])
            if k != r:
                a[[r, k]] = a[[k, r]]
            piv = a[r, c]
            rest = a[r + 1 :, c]
            if not rest.any():
                break
            q = np.array([x // piv for x in rest], dtype=object)
            a[r + 1 :] -= np.outer(q, a[r])
        if a[r, c] == 0:
            continue
        if a[r, c] < 0:
            a[r] = -a[r]
        piv = a[r, c]
        for i in range(r):
            a[i] -= (a[i, c] // piv) * a[r]
        r += 1
    out = a[:r]
    if out.size and max(abs(int(x)) for x in out.flat) < 2**62:
        return out.astype(np.int64)
    return out


@dataclass(frozen=True, eq=False)
class IntegerLattice:
    """A lattice in ``Z^dim`` given by an HNF basis.

    ``residues`` optionally describes the lattice as ``{x : x mod q in R}``
    for ``q = modulus``, which lets :func:`theta_prefix` work coset by coset.
    """

    basis: np.ndarray
    modulus: int | None = field(default=None)
    residues: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        b = np.asarray(self.basis)
        if b.ndim != 2 or b.shape[0] == 0:
            raise ValueError("basis must be a nonempty matrix")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def gram(self) -> np.ndarray:
        return self.basis @ self.basis.T

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dim

    def determinant(self) -> int:
        """Gram determinant (squared covolume)."""
        if self.is_full_rank:
            d = 1
            for i in range(self.rank):
                d *= int(self.basis[i, np.flatnonzero(self.basis[i])[0]])
            return d * d
        from kerdock_lab.algebra.linalg import det

        return int(det(self.gram.tolist()))

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=object).reshape(1, -1)
        return np.array_equal(hnf(np.vstack([self.basis.astype(object), v])).astype(object), self.basis.astype(object))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.basis.shape == other.basis.shape and bool((self.basis == other.basis).all())

    def __hash__(self):
        return hash(self.basis.tobytes())

    def norms(self, vectors) -> np.ndarray:
        v = np.asarray(vectors, dtype=np.int64)
        return (v * v).sum(axis=1)

    def to_json(self) -> dict:
        return {"rank": self.rank, "dim": self.dim, "basis": [[int(x) for x in row] for row in self.basis]}

    @classmethod
    def from_json(cls, obj: dict) -> IntegerLattice:
        b = np.array(obj["basis"], dtype=np.int64)
        if b.shape != (obj["rank"], obj["dim"]):
            raise ValueError("basis shape does not match rank and dim")
        return lattice_from_vectors(b)


def lattice_from_vectors(vectors) -> IntegerLattice:
    """Integer span of the rows of ``vectors``."""
    h = hnf(vectors)
    if h.shape[0] == 0:
        raise ValueError("vectors span the zero lattice")
    return IntegerLattice(h)


def with_residues(lattice: IntegerLattice, modulus: int) -> IntegerLattice:
    """Attach the residue code of ``lattice`` modulo ``modulus``.

    Requires ``modulus * Z^dim`` to be a sublattice.
    """
    n = lattice.dim
    if not lattice.is_full_rank:
        raise ValueError("residue description needs a full-rank lattice")
    for i in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[i] = modulus
        if not lattice.contains(e):
            raise ValueError(f"{modulus} Z^{n} is not contained in the lattice")
    res = span_words(np.mod(lattice.basis, modulus).astype(np.uint8), modulus)
    return IntegerLattice(lattice.basis, modulus, res)


def construction_a(code: Code, scale: int = 1) -> IntegerLattice:
    """``{x in Z^n : x mod 2 in code}``, optionally multiplied by ``scale``."""
    if code.alphabet != "F2":
        raise ValueError("construction A needs a binary code")
    words = code.words
    if not code.is_closed_under_addition():
        raise NonLinearCodeError("construction A needs a linear code")
    n = code.length
    gens = binary_basis(words) if code.size > 1 else np.zeros((0, n), dtype=np.uint8)
    stacked = np.vstack([gens.astype(np.int64).reshape(-1, n), 2 * np.eye(n, dtype=np.int64)])
    basis = hnf(stacked)
    if scale != 1:
        if scale == 0:
            raise ValueError("scale must be nonzero")
        return IntegerLattice(hnf(basis * scale))
    return IntegerLattice(basis, 2, words.copy())


# -- theta series --------------------------------------------------------------


@dataclass(frozen=True)
class ThetaPrefix:
    """Counts of lattice vectors by squared norm, complete up to ``max_norm``."""

    coefficients: dict
    max_norm: int
    scale_note: str = ""

    def __post_init__(self):
        c = self.coefficients
        if c.get(0) != 1:
            raise ValueError("theta series must start with 1")
        odd = [k for k, v in c.items() if k > 0 and v % 2]
        if odd:
            raise ValueError(f"odd count at norm {odd[0]} contradicts antipodal symmetry")

    def nonzero(self) -> dict[int, int]:
        return {k: v for k, v in sorted(self.coefficients.items()) if v}

    def minimum(self) -> int | None:
        pos = [k for k, v in self.coefficients.items() if k > 0 and v]
        return min(pos) if pos else None

    def to_json(self) -> dict:
        return {"scale_note": self.scale_note, "max_norm": self.max_norm,
                "coeffs": {str(k): v for k, v in self.nonzero().items()}}


def _residue_series(r: int, q: int, max_norm: int) -> list[int]:
    """Number of integers ``v = r mod q`` with ``v^2 = t``, for ``t <= max_norm``."""
    out = [0] * (max_norm + 1)
    top = isqrt(max_norm)
    for v in range(-top, top + 1):
        if v % q == r:
            out[v * v] += 1
    return out


def _poly_mul(a: list[int], b: list[int], cap: int) -> list[int]:
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: cap + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def _poly_pow(a: list[int], e: int, cap: int) -> list[int]:
    out = [1] + [0] * cap
    base = a
    while e:
        if e & 1:
            out = _poly_mul(out, base, cap)
        base = _poly_mul(base, base, cap)
        e >>= 1
    return out


def theta_by_cosets(residues: np.ndarray, modulus: int, max_norm: int) -> dict[int, int]:
    """Theta counts of ``{x : x mod q in residues}`` from per-coordinate series.

    A coset contributes the product over coordinates of the series for its
    residue digit, so cosets with the same digit histogram share one product.
    """
    res = np.asarray(residues, dtype=np.int64)
    series = [_residue_series(r, modulus, max_norm) for r in range(modulus)]
    hist = Counter(tuple(int(c) for c in np.bincount(row, minlength=modulus)) for row in res)
    total = [0] * (max_norm + 1)
    for h, mult in hist.items():
        p = [1] + [0] * max_norm
        for r, e in enumerate(h):
            if e:
                p = _poly_mul(p, _poly_pow(series[r], e, max_norm), max_norm)
        for t in range(max_norm + 1):
            total[t] += mult * p[t]
    return {t: c for t, c in enumerate(total)}


def theta_by_enumeration(lattice: IntegerLattice, max_norm: int) -> dict[int, int]:
    """Theta counts by Fincke-Pohst over the HNF basis (compiled kernel when available)."""
    counts, _ = kernels.short_vectors(lattice.gram.astype(np.int64), int(max_norm))
    return {t: int(c) for t, c in enumerate(counts)}


def theta_prefix(lattice: IntegerLattice, max_norm: int, method: str = "auto", scale_note: str = "") -> ThetaPrefix:
    """Exact theta coefficients up to ``max_norm``.

    ``method`` is ``"cosets"``, ``"enumerate"`` or ``"auto"`` (cosets when
    the residue description is attached).
    """
    if max_norm < 0:
        raise ValueError("max_norm must be nonnegative")
    if method == "auto":
        method = "cosets" if lattice.residues is not None else "enumerate"
    if method == "cosets":
        if lattice.residues is None:
            raise ValueError("lattice has no residue description; use with_residues first")
        coeffs = theta_by_cosets(lattice.residues, lattice.modulus, max_norm)
    elif method == "enumerate":
        coeffs = theta_by_enumeration(lattice, max_norm)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ThetaPrefix(coeffs, max_norm, scale_note)


def minimal_vectors(lattice: IntegerLattice, norm: int) -> np.ndarray:
    """All lattice vectors (in ambient coordinates) of squared norm exactly ``norm``."""
    counts, coeffs = kernels.short_vectors(lattice.gram.astype(np.int64), int(norm), collect=True)
    vecs = coeffs @ lattice.basis.astype(np.int64)
    return vecs[(vecs * vecs).sum(axis=1) == norm]
