"""Lattices spanned by the MUB-derived configurations.

Two integer models are used.  For the 64-point configuration in ``R^14``
the doubly shortened Kerdock sign vectors have squared norm 14, twice the
radius 7 of the unit-scaled points; their span is ``sqrt 2`` times a
lattice containing ``2 Z^14``.  The norm-8 vectors of the span form an
orthogonal frame, and coordinates along that frame divided by 4 give the
norm-7 model in which the theta series is compared.  For ``N = 16`` the
288 points are scaled by ``2 N^(1/4)``: standard lines become ``4 e_v`` and
sign lines stay ``+-1`` vectors, all of squared norm 16.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from kerdock_lab.codes.binary import build_punctured_simplex_14_4, simplex_generators_14_4
from kerdock_lab.codes.words import Code, binary_basis
from kerdock_lab.lattices.core import (
    IntegerLattice,
    ThetaPrefix,
    construction_a,
    lattice_from_vectors,
    minimal_vectors,
    theta_prefix,
    with_residues,
)
from kerdock_lab.mub.config import SphericalConfig

Y_SCALE_NOTE = (
    "norm-7 model: sign vectors of squared norm 14 rescaled by 1/sqrt(2) via an orthogonal frame; "
    "2e_i has squared norm 4"
)
BW_SCALE_NOTE = "unit vectors scaled by 2*N^(1/4): standard lines 4e_v, sign lines +-1; squared norms as listed"


class LatticeClaimError(AssertionError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# -- the 64-point configuration in R^14 --------------------------------------


@dataclass(frozen=True, eq=False)
class YLatticeModel:
    sign_lattice: IntegerLattice  # span of the +-1 vectors
    frame: np.ndarray  # 14 orthogonal norm-8 vectors of the sign lattice
    vectors: np.ndarray  # the points in the norm-7 model
    lattice: IntegerLattice  # their span, with residues mod 2
    residue_code: Code
    permutation: tuple[int, ...] | None  # coordinate map onto the reference [14, 4, 7] code


def _frame(sign_lattice: IntegerLattice) -> np.ndarray:
    vecs = minimal_vectors(sign_lattice, 8)
    n = sign_lattice.dim
    if len(vecs) != 2 * n:
        raise LatticeClaimError(f"expected {2 * n} vectors of norm 8, found {len(vecs)}", witness=len(vecs))
    first = vecs[np.arange(len(vecs)), (vecs != 0).argmax(axis=1)]
    frame = vecs[first > 0]
    frame = frame[np.lexsort(frame.T[::-1])][::-1]
    g = frame @ frame.T
    if not (g == 8 * np.eye(n, dtype=np.int64)).all():
        raise LatticeClaimError("norm-8 vectors do not form an orthogonal frame")
    return frame


def code_permutation(code: Code, reference_gens: np.ndarray) -> tuple[int, ...] | None:
    """A coordinate permutation ``pi`` with ``code[:, pi] == span(reference_gens)``, if any.

    Both codes must have generator columns that are distinct nonzero
    vectors of ``F_2^k``.  Searches images of an information set.
    """
    gens = binary_basis(code.words)
    ref = np.asarray(reference_gens, dtype=np.uint8)
    k, n = ref.shape
    if gens.shape != (k, n):
        return None
    weights = 1 << np.arange(k)
    cols = (gens.T.astype(np.int64) * weights).sum(axis=1)
    ref_cols = (ref.T.astype(np.int64) * weights).sum(axis=1)
    if len(set(cols.tolist())) != n or len(set(ref_cols.tolist())) != n or 0 in cols or 0 in ref_cols:
        return None
    ref_index = {int(c): j for j, c in enumerate(ref_cols)}
    # an information set of the candidate code
    info = []
    basis = np.zeros((0, k), dtype=np.uint8)
    for j in range(n):
        trial = np.vstack([basis, gens[:, j]])
        if len(binary_basis(trial)) > len(basis):
            basis = trial
            info.append(j)
        if len(info) == k:
            break
    inv_src = _gf2_inverse(gens[:, info])
    for image in permutations(range(n), k):
        A = (ref[:, list(image)].astype(np.int64) @ inv_src) % 2
        mapped = (A @ gens.astype(np.int64)) % 2
        mc = (mapped.T * weights).sum(axis=1)
        try:
            perm = [ref_index[int(c)] for c in mc]
        except KeyError:
            continue
        if len(set(perm)) == n:
            # column j of the candidate lands on column perm[j] of the reference
            pi = [0] * n
            for j, p in enumerate(perm):
                pi[p] = j
            return tuple(pi)
    return None


def _gf2_inverse(m: np.ndarray) -> np.ndarray:
    k = m.shape[0]
    a = np.hstack([m.astype(np.int64) % 2, np.eye(k, dtype=np.int64)])
    for c in range(k):
        p = c + int(np.flatnonzero(a[c:, c])[0])
        a[[c, p]] = a[[p, c]]
        for r in range(k):
            if r != c and a[r, c]:
                a[r] ^= a[c]
    return a[:, k:]


def y_lattice_model(Y: SphericalConfig) -> YLatticeModel:
    """Build the norm-7 integer model of the 64 points and its lattice.

    ``Y`` must carry its sign-vector integer model (the default reference
    points of :func:`kerdock_lab.mub.config.build_Y`).
    """
    if Y.vectors is None or not Y.has_integer_model():
        raise ValueError("the configuration has no sign-vector integer model")
    V = np.asarray(Y.vectors, dtype=np.int64)
    sign_lattice = lattice_from_vectors(V)
    frame = _frame(sign_lattice)
    coords = V @ frame.T
    if (coords % 4).any():
        raise LatticeClaimError("frame coordinates are not divisible by 4")
    W = coords // 4
    lat = with_residues(lattice_from_vectors(W), 2)
    code = Code("F2", lat.residues.astype(np.uint8))
    pi = code_permutation(code, simplex_generators_14_4())
    return YLatticeModel(sign_lattice, frame, W, lat, code, pi)


def y_lattice_matches_construction_a(model: YLatticeModel) -> bool:
    """HNF equality of the permuted model lattice with construction A of the reference code."""
    if model.permutation is None:
        return False
    permuted = lattice_from_vectors(model.vectors[:, list(model.permutation)])
    return permuted == construction_a(build_punctured_simplex_14_4())


def y_theta(model: YLatticeModel, max_norm: int = 8) -> ThetaPrefix:
    return theta_prefix(model.lattice, max_norm, scale_note=Y_SCALE_NOTE)


# -- N = 16 Barnes-Wall check ---------------------------------------------------


@dataclass(frozen=True)
class BW16Report:
    n_vectors: int
    norms: dict
    rank: int
    determinant: int
    minimum: int | None
    minimal_count: int
    minimal_count_enumerated: int | None
    all_points_minimal: bool
    even_after_quarter: bool
    contains_frame: bool
    witness: object = None
    scale_note: str = BW_SCALE_NOTE

    @property
    def passed(self) -> bool:
        return (
            self.witness is None
            and self.minimum == 16
            and self.all_points_minimal
            and self.even_after_quarter
            and self.contains_frame
            and (self.minimal_count_enumerated in (None, self.minimal_count))
        )

    def to_json(self) -> dict:
        return {
            "n_vectors": self.n_vectors,
            "norms": {str(k): v for k, v in sorted(self.norms.items())},
            "rank": self.rank,
            "determinant": self.determinant,
            "minimum": self.minimum,
            "minimal_count": self.minimal_count,
            "minimal_count_enumerated": self.minimal_count_enumerated,
            "all_points_minimal": self.all_points_minimal,
            "even_after_quarter": self.even_after_quarter,
            "contains_frame": self.contains_frame,
            "witness": self.witness,
            "passed": self.passed,
            "scale_note": self.scale_note,
        }


def bw16_membership_check(X: SphericalConfig, enumerate_oracle: bool = True) -> BW16Report:
    """Check that the scaled 288 points are minimal vectors of their span.

    The minimum and the kissing number come from the residue description
    modulo 4; ``enumerate_oracle`` recounts them by Fincke-Pohst.
    """
    if X.family != "X" or X.dim != 16:
        raise ValueError("expects the X configuration for N = 16")
    if X.vectors is None or not X.has_integer_model():
        raise ValueError("the configuration has no integer model")
    V = np.asarray(X.vectors, dtype=np.int64)
    norms = (V * V).sum(axis=1)
    counts = {int(k): int(c) for k, c in zip(*np.unique(norms, return_counts=True))}
    witness = None
    bad = np.flatnonzero(norms != 16)
    if bad.size:
        witness = {"index": int(bad[0]), "norm": int(norms[bad[0]])}
    lat = lattice_from_vectors(V)
    frame_ok = all(lat.contains(4 * np.eye(16, dtype=np.int64)[i]) for i in range(16))
    theta = None
    if frame_ok and lat.is_full_rank:
        theta = theta_prefix(with_residues(lat, 4), 16, scale_note=BW_SCALE_NOTE)
    else:
        theta = theta_prefix(lat, 16, method="enumerate", scale_note=BW_SCALE_NOTE)
    minimum = theta.minimum()
    minimal_count = theta.coefficients.get(minimum, 0) if minimum else 0
    if witness is None and minimum is not None and minimum < 16:
        short = minimal_vectors(lat, minimum)
        witness = {"short_vector": [int(x) for x in short[0]], "norm": int(minimum)}
    enumerated = None
    if enumerate_oracle:
        enumerated = theta_prefix(lat, 16, method="enumerate").coefficients.get(16, 0)
    g = lat.gram
    even = bool((g % 4 == 0).all() and ((np.diag(g) // 4) % 2 == 0).all())
    return BW16Report(
        n_vectors=len(V),
        norms=counts,
        rank=lat.rank,
        determinant=lat.determinant(),
        minimum=minimum,
        minimal_count=int(minimal_count),
        minimal_count_enumerated=enumerated,
        all_points_minimal=bool((norms == minimum).all()) if minimum else False,
        even_after_quarter=even,
        contains_frame=frame_ok,
        witness=witness,
    )
