"""Z4-linear Kerdock codes, their Preparata duals, and coset structure.

The Kerdock code is realised through the Galois-ring trace: the shortened
code has generator rows ``(Tr(root^j * root^k))_k`` for ``j < m``, ``k < q - 1``;
the full code indexes coordinates by the Teichmuller set and adds the
all-ones word.

The punctured Preparata code is never materialised.  A word ``w`` of the
ambient space ``Z4^(q-1)`` is identified with its *syndrome*
``(<w, g_j>)_j`` against the ``m`` shortened-Kerdock generators, which maps
``A / P_punct`` bijectively onto ``Z4^m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from kerdock_lab.algebra.galois_ring import GaloisRing
from kerdock_lab.codes.words import Code

COSET_TAGS = ("V0", "V1", "V2", "V3")


def _check_m(m: int) -> None:
    if m < 3 or m % 2 == 0:
        raise ValueError(f"m must be odd and >= 3, got {m}")


def shortened_kerdock_generators(m: int, ring: GaloisRing | None = None) -> np.ndarray:
    _check_m(m)
    ring = ring or GaloisRing(m)
    t = np.array(ring.trace_sequence, dtype=np.uint8)
    n = ring.q - 1
    return np.array([np.roll(t, -j)[:n] for j in range(m)], dtype=np.uint8)


def build_shortened_kerdock(m: int, ring: GaloisRing | None = None) -> Code:
    """Shortened Z4-Kerdock code: length ``2^m - 1``, ``4^m`` words."""
    return Code.from_generators("Z4", shortened_kerdock_generators(m, ring))


def build_full_z4_kerdock(m: int, ring: GaloisRing | None = None) -> Code:
    """Z4-Kerdock code of length ``2^m`` with coordinates ``0, 1, root, ..., root^(q-2)``."""
    gens = shortened_kerdock_generators(m, ring)
    full = np.hstack([np.zeros((m, 1), dtype=np.uint8), gens])
    full = np.vstack([full, np.ones((1, full.shape[1]), dtype=np.uint8)])
    return Code.from_generators("Z4", full)


def build_binary_kerdock(m: int, ring: GaloisRing | None = None) -> Code:
    """Gray image of the full Z4-Kerdock code: length ``N = 2^(m+1)``, ``N^2`` words."""
    return build_full_z4_kerdock(m, ring).gray_image()


def binary_kerdock_labels(m: int, ring: GaloisRing | None = None) -> np.ndarray:
    """Label in ``F2^(m+1)`` of each coordinate of :func:`build_binary_kerdock`.

    Coordinate ``2k + e`` carries ``(bits of the k-th Teichmuller point mod 2, e)``
    encoded as the integer ``xbar | (e << m)``.  Under this labelling every
    codeword is a polynomial function of degree at most 2.
    """
    ring = ring or GaloisRing(m)
    xbars = [0] + [x.reduce_mod2() for x in ring.root_powers]
    return np.array([xb | (e << m) for xb in xbars for e in (0, 1)], dtype=np.int64)


# -- Z4-valued quadratic forms -------------------------------------------


def _check_symmetric(R) -> np.ndarray:
    R = np.asarray(R, dtype=np.int64) % 2
    if R.ndim != 2 or R.shape[0] != R.shape[1] or not (R == R.T).all():
        raise ValueError("R must be a symmetric binary matrix")
    return R


def t_r_eval(R, v) -> int:
    """``T_R(v) = sum_i R_ii v_i^2 + 2 sum_{i<j} R_ij v_i v_j`` in Z4, ``v`` lifted to 0/1."""
    R = _check_symmetric(R)
    v = np.asarray(v, dtype=np.int64) % 2
    diag = int((np.diag(R) * v * v).sum())
    off = int(np.triu(R, 1).dot(v).dot(v))
    return (diag + 2 * off) % 4


def t_r_identity_holds(R, u, v) -> bool:
    """``T_R(u+v) = T_R(u) + T_R(v) + 2 u R v^T`` in Z4."""
    R = _check_symmetric(R)
    u = np.asarray(u, dtype=np.int64) % 2
    v = np.asarray(v, dtype=np.int64) % 2
    lhs = t_r_eval(R, (u + v) % 2)
    rhs = (t_r_eval(R, u) + t_r_eval(R, v) + 2 * int(u @ R @ v)) % 4
    return lhs == rhs


# -- Preparata cosets ----------------------------------------------------


def preparata_syndrome(w, kerdock: Code) -> np.ndarray:
    """``(<w, g_j> mod 4)_j``; zero exactly when ``w`` is in the punctured Preparata code.

    ``w`` may be a single word or a stack of words (last axis = coordinates).
    """
    if kerdock.generators is None:
        raise ValueError("kerdock code must carry its generator rows")
    g = kerdock.generators.astype(np.int64)
    w = np.asarray(w, dtype=np.int64)
    if w.shape[-1] != g.shape[1]:
        raise ValueError(f"length mismatch: word {w.shape[-1]} vs code {g.shape[1]}")
    return (w @ g.T) % 4


def syndrome_index(s) -> np.ndarray | int:
    """Base-4 integer encoding of a syndrome (last axis)."""
    s = np.asarray(s, dtype=np.int64)
    powers = 4 ** np.arange(s.shape[-1], dtype=np.int64)
    out = (s * powers).sum(axis=-1)
    return int(out) if np.ndim(out) == 0 else out


def coset_representatives(n: int, v2_form: str = "a") -> dict[str, np.ndarray]:
    """Coset representatives of low Lee weight, one family per class tag.

    ``V1``: ``+-e_i``; ``V3``: ``2 e_i``; ``V2`` depends on ``v2_form``:
    ``"a"`` gives ``e_i - e_j`` (i != j), ``"b"`` gives ``e_i + e_j`` and
    ``-e_i - e_j`` (i < j), ``"c"`` gives ``2 e_i + e_j`` (i != j).
    Each family is listed in lexicographic order.
    """
    eye = np.eye(n, dtype=np.int64)
    v1 = np.vstack([eye, 3 * eye])
    v3 = 2 * eye
    ordered = [(i, j) for i in range(n) for j in range(n) if i != j]
    unordered = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if v2_form == "a":
        v2 = np.array([eye[i] - eye[j] for i, j in ordered])
    elif v2_form == "b":
        v2 = np.array([eye[i] + eye[j] for i, j in unordered] + [-eye[i] - eye[j] for i, j in unordered])
    elif v2_form == "c":
        v2 = np.array([2 * eye[i] + eye[j] for i, j in ordered])
    else:
        raise ValueError(f"unknown V2 form {v2_form!r}")

    def lex(a):
        a = np.asarray(a, dtype=np.int64) % 4
        return a[np.lexsort(a.T[::-1])].astype(np.uint8)

    return {
        "V0": np.zeros((1, n), dtype=np.uint8),
        "V1": lex(v1),
        "V2": lex(v2),
        "V3": lex(v3),
    }


@dataclass(frozen=True)
class CosetClass:
    tag: str
    representative: np.ndarray

    @property
    def index(self) -> int:
        return COSET_TAGS.index(self.tag)


class CosetPartitionError(AssertionError):
    """The representative families do not hit every coset exactly once."""


class CosetClassifier:
    """Syndrome lookup from ``A / P_punct`` to the four representative families."""

    def __init__(self, kerdock: Code, v2_form: str = "a"):
        self.kerdock = kerdock
        self.m = kerdock.generators.shape[0]
        self.v2_form = v2_form
        reps = coset_representatives(kerdock.length, v2_form)
        size = 4**self.m
        tag_of = np.full(size, -1, dtype=np.int64)
        rep_row = np.full(size, -1, dtype=np.int64)
        self._reps = reps
        self._rep_rows = []
        for t, tag in enumerate(COSET_TAGS):
            idx = syndrome_index(preparata_syndrome(reps[tag], kerdock))
            for k, s in enumerate(np.atleast_1d(idx)):
                if tag_of[s] != -1:
                    raise CosetPartitionError(f"syndrome {s} hit twice (tags {COSET_TAGS[tag_of[s]]}, {tag})")
                tag_of[s] = t
                rep_row[s] = k
        if (tag_of == -1).any():
            missing = int((tag_of == -1).sum())
            raise CosetPartitionError(f"{missing} cosets are not represented")
        self.tag_of_syndrome = tag_of
        self._rep_row = rep_row

    @cached_property
    def class_sizes(self) -> dict[str, int]:
        return {tag: len(self._reps[tag]) for tag in COSET_TAGS}

    def classify(self, w) -> CosetClass:
        s = syndrome_index(preparata_syndrome(w, self.kerdock))
        t = int(self.tag_of_syndrome[s])
        tag = COSET_TAGS[t]
        return CosetClass(tag, self._reps[tag][self._rep_row[s]])

    def class_matrix(self) -> np.ndarray:
        """Class of ``x - y`` for all pairs of cosets, indexed by syndrome integer."""
        size = 4**self.m
        digits = (np.arange(size)[:, None] // 4 ** np.arange(self.m)) % 4
        diff = (digits[:, None, :] - digits[None, :, :]) % 4
        return self.tag_of_syndrome[syndrome_index(diff)].astype(np.uint8)


def classify_coset(w, kerdock: Code) -> CosetClass:
    return CosetClassifier(kerdock).classify(w)
