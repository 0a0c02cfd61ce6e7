"""Exact parameters of symmetric association schemes.

Conventions used throughout:

* ``B[i][j][k] = p_ij^k``; the column sums of ``B[i]`` are the valency ``k_i``.
* ``P[l][i]`` is the eigenvalue of the class-``i`` adjacency matrix on the
  ``l``-th eigenspace; row 0 is the valency row.
* ``Q = n P^{-1}``, so ``Q[i][l]`` and row 0 of ``Q`` lists the multiplicities.
* ``Bstar[i][j][k] = q_ij^k`` (Krein parameters).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from kerdock_lab import kernels
from kerdock_lab.algebra import linalg
from kerdock_lab.algebra.numbers import frac_str
from kerdock_lab.schemes.partition import RelationPartition

Matrix = tuple[tuple[Fraction, ...], ...]


class SchemeError(ValueError):
    """The data do not define a (commutative, symmetric) association scheme."""


class SchemeAxiomError(SchemeError):
    """An intersection number is not constant; ``witness`` pins it down."""

    def __init__(self, witness):
        x, y, i, j, k, expected, got = witness
        super().__init__(
            f"p_{i}{j}^{k} not constant: pair ({x}, {y}) in class {k} has {got} "
            f"intermediate points, another pair in class {k} has {expected}"
        )
        self.witness = witness


class IrrationalEigenvalueError(SchemeError):
    pass


def _freeze(m) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


@dataclass(frozen=True)
class SchemeParameters:
    n: int
    d: int
    valencies: tuple[int, ...]
    B: tuple[Matrix, ...]
    P: Matrix
    Q: Matrix
    multiplicities: tuple[Fraction, ...]
    Bstar: tuple[Matrix, ...]

    @classmethod
    def from_intersections(cls, B, n: int, P=None) -> SchemeParameters:
        """Complete parameter set from the intersection matrices (and optionally ``P``)."""
        B = tuple(_freeze(b) for b in B)
        d = len(B) - 1
        if P is None:
            P, Q = eigenmatrices(B, n)
        else:
            P = _freeze(P)
            Q = _freeze(linalg.scale(linalg.inverse([list(r) for r in P]), n))
        valencies = tuple(int(B[i][i][0]) for i in range(d + 1))
        return cls(n, d, valencies, B, P, Q, tuple(Q[0]), tuple(krein(P, Q, n)))

    def permute_eigenspaces(self, perm) -> SchemeParameters:
        """Reorder the eigenspaces: new eigenspace ``l`` is old eigenspace ``perm[l]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.d + 1)) or perm[0] != 0:
            raise ValueError("perm must be a permutation fixing 0")
        P = tuple(self.P[l] for l in perm)
        Q = tuple(tuple(row[l] for l in perm) for row in self.Q)
        Bstar = tuple(
            tuple(tuple(self.Bstar[perm[i]][perm[j]][perm[k]] for k in range(self.d + 1)) for j in range(self.d + 1))
            for i in range(self.d + 1)
        )
        return SchemeParameters(self.n, self.d, self.valencies, self.B, P, Q, tuple(Q[0]), Bstar)

    def to_json(self) -> dict:
        def mat(m):
            return [[frac_str(x) for x in row] for row in m]

        return {
            "n": self.n,
            "d": self.d,
            "valencies": list(self.valencies),
            "multiplicities": [frac_str(x) for x in self.multiplicities],
            "P": mat(self.P),
            "Q": mat(self.Q),
            "B": [mat(b) for b in self.B],
            "Bstar": [mat(b) for b in self.Bstar],
        }


def intersection_matrices(rp: RelationPartition):
    """``(B, witness)`` from the point-level triple counts."""
    p, witness = kernels.intersection_numbers(rp.class_of, rp.d)
    B = [[[int(p[i, j, k]) for k in range(rp.d + 1)] for j in range(rp.d + 1)] for i in range(rp.d + 1)]
    return B, witness


def verify_scheme(rp: RelationPartition) -> SchemeParameters:
    """Check the scheme axioms on every pair and return the exact parameters.

    Raises :class:`SchemeAxiomError` with a witness when some ``p_ij^k``
    varies over the pairs of class ``k``, and :class:`SchemeError` when the
    algebra is not commutative or a Krein parameter is negative.
    """
    B, witness = intersection_matrices(rp)
    if witness is not None:
        raise SchemeAxiomError(witness)
    params = SchemeParameters.from_intersections(B, rp.n)
    problems = consistency_problems(params)
    if problems:
        raise SchemeError("; ".join(problems))
    return params


# -- eigenmatrices -------------------------------------------------------


def _commute(a, b) -> bool:
    return linalg.matmul(a, b) == linalg.matmul(b, a)


def _eigen_split(space, Bi, roots):
    """Split a Bi-invariant subspace (list of column vectors) into eigenspaces."""
    n = len(Bi)
    W = linalg.transpose(space)  # n x dim
    out = []
    for lam in roots:
        shifted = [[Bi[r][c] - (lam if r == c else 0) for c in range(n)] for r in range(n)]
        coeffs = linalg.nullspace(linalg.matmul(shifted, W))
        if coeffs:
            vecs = [[sum((W[r][c] * y[c] for c in range(len(y))), Fraction(0)) for r in range(n)] for y in coeffs]
            out.append(vecs)
    return out


def eigenmatrices(B, n: int) -> tuple[Matrix, Matrix]:
    """First and second eigenmatrices from the intersection matrices.

    Eigenvalues are found exactly as integer roots of the characteristic
    polynomials; common eigenvectors come from successive eigenspace
    refinement.  Row 0 of ``P`` is the valency row and the other rows are
    sorted by descending entry in column 1 (then column 2, ...).
    """
    B = [linalg.to_fraction_matrix(b) for b in B]
    d = len(B) - 1
    if d > 5:
        raise ValueError("eigenmatrix extraction supports at most 5 classes")
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            if not _commute(B[i], B[j]):
                raise SchemeError(f"intersection matrices B_{i} and B_{j} do not commute")
    spaces = [[[Fraction(int(r == c)) for r in range(d + 1)] for c in range(d + 1)]]
    for i in range(1, d + 1):
        roots = linalg.integer_roots(linalg.charpoly(B[i]))
        if roots is None:
            raise IrrationalEigenvalueError(f"B_{i} has a non-integer eigenvalue")
        refined = []
        for space in spaces:
            refined.extend(_eigen_split(space, B[i], sorted(roots)))
        spaces = refined
    if len(spaces) != d + 1 or any(len(s) != 1 for s in spaces):
        raise SchemeError("common eigenspaces are not one-dimensional")
    rows = []
    for (v,) in spaces:
        if v[0] == 0:
            raise SchemeError("eigenvector with vanishing first entry")
        rows.append(tuple(x / v[0] for x in v))
    valency_row = tuple(B[i][i][0] for i in range(d + 1))
    if valency_row not in rows:
        raise SchemeError("no eigenvector carries the valencies")
    rest = sorted((r for r in rows if r != valency_row), key=lambda r: tuple(-x for x in r[1:]))
    P = (valency_row, *rest)
    Q = _freeze(linalg.scale(linalg.inverse([list(r) for r in P]), n))
    return _freeze(P), Q


def krein(P, Q, n: int) -> list[Matrix]:
    """``q_ij^k = (1/n) sum_l Q[l][i] Q[l][j] P[k][l]`` as exact rationals."""
    d = len(P) - 1
    out = []
    for i in range(d + 1):
        mat = []
        for j in range(d + 1):
            mat.append(
                tuple(
                    sum((Fraction(Q[l][i]) * Q[l][j] * P[k][l] for l in range(d + 1)), Fraction(0)) / n
                    for k in range(d + 1)
                )
            )
        out.append(tuple(mat))
    return out


# -- consistency checks ----------------------------------------------------


def pq_identity_holds(params: SchemeParameters) -> bool:
    prod = linalg.matmul([list(r) for r in params.P], [list(r) for r in params.Q])
    return prod == linalg.scale(linalg.identity(params.d + 1), params.n)


def column_orthogonality_holds(params: SchemeParameters) -> bool:
    """``sum_i P[j][i] P[l][i] / k_i = delta_jl n / m_j``."""
    d = params.d
    for j in range(d + 1):
        for l in range(d + 1):
            s = sum((params.P[j][i] * params.P[l][i] / params.valencies[i] for i in range(d + 1)), Fraction(0))
            want = Fraction(params.n) / params.multiplicities[j] if j == l else 0
            if s != want:
                return False
    return True


def negative_krein(params: SchemeParameters) -> list[tuple[int, int, int]]:
    d = params.d
    return [
        (i, j, k)
        for i in range(d + 1)
        for j in range(d + 1)
        for k in range(d + 1)
        if params.Bstar[i][j][k] < 0
    ]


def consistency_problems(params: SchemeParameters) -> list[str]:
    problems = []
    if not pq_identity_holds(params):
        problems.append("P Q != n I")
    if tuple(params.P[0]) != tuple(Fraction(k) for k in params.valencies):
        problems.append("row 0 of P is not the valency row")
    if any(row[0] != 1 for row in params.P):
        problems.append("column 0 of P is not all ones")
    if sum(params.multiplicities) != params.n:
        problems.append("multiplicities do not sum to n")
    if not column_orthogonality_holds(params):
        problems.append("column orthogonality fails")
    neg = negative_krein(params)
    if neg:
        problems.append(f"negative Krein parameters at {neg[:5]}")
    return problems


# -- comparison ------------------------------------------------------------


def parameter_diff(computed: SchemeParameters, reference: SchemeParameters) -> list[str]:
    """Human-readable list of fields that differ (empty when identical)."""
    diffs = []
    for name in ("n", "d", "valencies"):
        a, b = getattr(computed, name), getattr(reference, name)
        if a != b:
            diffs.append(f"{name}: computed {a}, expected {b}")
    if diffs:
        return diffs
    for name in ("P", "Q"):
        for r, (ra, rb) in enumerate(zip(getattr(computed, name), getattr(reference, name))):
            if tuple(ra) != tuple(rb):
                diffs.append(
                    f"{name} row {r}: computed {[frac_str(x) for x in ra]}, expected {[frac_str(x) for x in rb]}"
                )
    for name in ("B", "Bstar"):
        for i, (ma, mb) in enumerate(zip(getattr(computed, name), getattr(reference, name))):
            for r, (ra, rb) in enumerate(zip(ma, mb)):
                if tuple(ra) != tuple(rb):
                    diffs.append(
                        f"{name}_{i} row {r}: computed {[frac_str(x) for x in ra]}, "
                        f"expected {[frac_str(x) for x in rb]}"
                    )
    return diffs


def align_eigenspaces(params: SchemeParameters, reference: SchemeParameters) -> SchemeParameters | None:
    """Relabel eigenspaces so that ``P`` matches ``reference.P`` row for row.

    Eigenspace order carries no meaning of its own; this searches the
    ``d!`` relabellings fixing the trivial eigenspace.  Returns ``None``
    when no relabelling reproduces the reference ``P``.
    """
    if params.d != reference.d:
        return None
    ref_rows = [tuple(r) for r in reference.P]
    for tail in permutations(range(1, params.d + 1)):
        perm = (0, *tail)
        if all(tuple(params.P[perm[l]]) == ref_rows[l] for l in range(params.d + 1)):
            return params.permute_eigenspaces(perm)
    return None


def compare_to_reference(params: SchemeParameters, reference: SchemeParameters) -> list[str]:
    """Diff after eigenspace alignment; reports the raw ``P`` when no alignment exists."""
    aligned = align_eigenspaces(params, reference)
    if aligned is None:
        return ["no eigenspace relabelling matches the reference P", *parameter_diff(params, reference)]
    return parameter_diff(aligned, reference)


def verify_duality(a: SchemeParameters, b: SchemeParameters) -> bool:
    """True iff some eigenspace labelling of each scheme gives ``P_b = Q_a`` and ``Q_b = P_a``."""
    if a.n != b.n or a.d != b.d:
        return False
    d = a.d
    idx = range(d + 1)
    for ta in permutations(range(1, d + 1)):
        sa = (0, *ta)
        qa = [[a.Q[i][sa[l]] for l in idx] for i in idx]
        pa = [list(a.P[sa[l]]) for l in idx]
        for tb in permutations(range(1, d + 1)):
            sb = (0, *tb)
            pb = [list(b.P[sb[l]]) for l in idx]
            qb = [[b.Q[i][sb[l]] for l in idx] for i in idx]
            if pb == qa and qb == pa:
                return True
    return False


def as_integer_matrix(m) -> np.ndarray:
    """Integer numpy copy of an exact matrix whose entries are all integral."""
    if any(Fraction(x).denominator != 1 for row in m for x in row):
        raise ValueError("matrix has non-integer entries")
    return np.array([[int(x) for x in row] for row in m], dtype=np.int64)
