"""Closed-form parameter tables of the Kerdock-family schemes, evaluated at ``N``.

Families (``N = 2^(m+1)``, ``m`` odd, ``s = sqrt(N)``):

``Y``
    ``N^2/4`` points: the shortened Z4-Kerdock code, the doubly shortened
    binary Kerdock code, and the doubly projected MUB configuration.
``Y-dual``
    ``N^2/4`` points: cosets of the punctured Preparata code.  Its
    eigenmatrices are those of ``Y`` swapped.
``Z``
    ``N^2/2`` points: the shortened binary Kerdock code and the singly
    projected MUB configuration.
``X``
    ``N^2 + 2N`` points: a maximal real MUB together with its negatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from kerdock_lab.schemes.parameters import SchemeParameters, krein

FAMILIES = ("Y", "Y-dual", "Z", "X")


@dataclass(frozen=True)
class ClosedFormFamily:
    family: str
    N: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        check_N(self.N)

    @property
    def sqrt_N(self) -> int:
        return isqrt(self.N)

    @property
    def n_points(self) -> int:
        N = self.N
        return {"Y": N * N // 4, "Y-dual": N * N // 4, "Z": N * N // 2, "X": N * N + 2 * N}[self.family]


def check_N(N: int) -> int:
    """Validate ``N = 2^(m+1)`` with ``m`` odd and ``m >= 3``; return ``m``."""
    if N < 16 or N & (N - 1):
        raise ValueError(f"N must be a power of two >= 16, got {N}")
    m = N.bit_length() - 2
    if m % 2 == 0:
        raise ValueError(f"N = {N} is not an even power of two")
    return m


def _F(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _y_tables(N: int, s: int):
    F = Fraction
    P = [
        [1, F((N - 2 * s) * (N - 2), 8), F((N + 2 * s) * (N - 2), 8), F(N, 2) - 1],
        [1, -F(s * (N - 4), 8), F(s * (N - 4), 8), -1],
        [1, F(s, 2), -F(s, 2), -1],
        [1, -F(N - 2 * s, 4), -F(N + 2 * s, 4), F(N, 2) - 1],
    ]
    Q = [
        [1, N - 2, F((N - 2) * (N - 4), 4), F(N, 2) - 1],
        [1, -s - 2, s + 2, -1],
        [1, s - 2, -s + 2, -1],
        [1, -2, -F(N, 2) + 2, F(N, 2) - 1],
    ]
    B1 = [
        [0, 1, 0, 0],
        [
            F((N - 2 * s) * (N - 2), 8),
            F((N + 2 * s) * (N - 7 * s + 12), 16),
            F((N - 2 * s) * (N - s - 4), 16),
            F((N - 2 * s) * (N - 2 * s - 4), 16),
        ],
        [0, F((N + 2 * s) * (N - s - 4), 16), F((N - 2 * s) * (N + s - 4), 16), F(N * (N - 4), 16)],
        [0, F(N - 2 * s - 4, 4), F(N - 2 * s, 4), 0],
    ]
    B2 = [
        [0, 0, 1, 0],
        [0, F((N + 2 * s) * (N - s - 4), 16), F((N - 2 * s) * (N + s - 4), 16), F(N * (N - 4), 16)],
        [
            F((N + 2 * s) * (N - 2), 8),
            F((N + 2 * s) * (N + s - 4), 16),
            F((N - 2 * s) * (N + 7 * s + 12), 16),
            F((N + 2 * s) * (N + 2 * s - 4), 16),
        ],
        [0, F(N + 2 * s, 4), F(N + 2 * s - 4, 4), 0],
    ]
    B3 = [
        [0, 0, 0, 1],
        [0, F(N - 2 * s - 4, 4), F(N - 2 * s, 4), 0],
        [0, F(N + 2 * s, 4), F(N + 2 * s - 4, 4), 0],
        [F(N, 2) - 1, 0, 0, F(N, 2) - 2],
    ]
    S1 = [
        [0, 1, 0, 0],
        [N - 2, 0, 4, 2],
        [0, N - 4, N - 8, N - 4],
        [0, 1, 2, 0],
    ]
    S2 = [
        [0, 0, 1, 0],
        [0, N - 4, N - 8, N - 4],
        [F((N - 2) * (N - 4), 4), F((N - 4) * (N - 8), 4), F(N * N - 12 * N + 48, 4), F((N - 4) * (N - 6), 4)],
        [0, F(N, 2) - 2, F(N, 2) - 3, 0],
    ]
    S3 = [
        [0, 0, 0, 1],
        [0, 1, 2, 0],
        [0, F(N, 2) - 2, F(N, 2) - 3, 0],
        [F(N, 2) - 1, 0, 0, F(N, 2) - 2],
    ]
    return P, Q, [B1, B2, B3], [S1, S2, S3]


def coset_multiplication_matrices(q: int):
    """Matrices of multiplication by the class sums ``D_1, D_2, D_3`` in the coset scheme.

    Entry ``[j][k]`` is the coefficient of ``D_j`` in ``D_i D_k``; these are
    the transposes of the intersection matrices.
    """
    rho1 = [
        [0, 2 * q - 2, 0, 0],
        [1, 0, 2 * (q - 2), 1],
        [0, 4, 2 * (q - 4), 2],
        [0, 2, 2 * (q - 2), 0],
    ]
    rho2 = [
        [0, 0, (q - 1) * (q - 2), 0],
        [0, 2 * (q - 2), (q - 4) * (q - 2), q - 2],
        [1, 2 * (q - 4), q * q - 6 * q + 12, q - 3],
        [0, 2 * (q - 2), (q - 3) * (q - 2), 0],
    ]
    rho3 = [
        [0, 0, 0, q - 1],
        [0, 1, q - 2, 0],
        [0, 2, q - 3, 0],
        [1, 0, 0, q - 2],
    ]
    return [rho1, rho2, rho3]


def _z_tables(N: int, s: int):
    F = Fraction
    P = [
        [1, F((N - s) * (N - 2), 4), F((N + s) * (N - 2), 4), N - 1],
        [1, -F(s * (N - 2), 4), F(s * (N - 2), 4), -1],
        [1, F(s, 2), -F(s, 2), -1],
        [1, -F(N - s, 2), -F(N + s, 2), N - 1],
    ]
    Q = [
        [1, N - 1, F((N - 2) * (N - 1), 2), F(N, 2) - 1],
        [1, -s - 1, s + 1, -1],
        [1, s - 1, -s + 1, -1],
        [1, -1, -F(N, 2) + 1, F(N, 2) - 1],
    ]
    B1 = [
        [0, 1, 0, 0],
        [F((N - s) * (N - 2), 4), F((N - 3 * s) * (N - 4), 8), F((N - s) * (N - 4), 8), F((N - 2 * s) * (N - 2), 8)],
        [0, F((N + s) * (N - 4), 8), F((N - s) * (N - 4), 8), F(N * (N - 2), 8)],
        [0, F((s - 2) * (s + 1), 2), F(N - s, 2), 0],
    ]
    B2 = [
        [0, 0, 1, 0],
        [0, F((N + s) * (N - 4), 8), F((N - s) * (N - 4), 8), F(N * (N - 2), 8)],
        [F((N + s) * (N - 2), 4), F((N + s) * (N - 4), 8), F((N + 3 * s) * (N - 4), 8), F((N + 2 * s) * (N - 2), 8)],
        [0, F(N + s, 2), F((s - 1) * (s + 2), 2), 0],
    ]
    B3 = [
        [0, 0, 0, 1],
        [0, F((s - 2) * (s + 1), 2), F(N - s, 2), 0],
        [0, F(N + s, 2), F((s - 1) * (s + 2), 2), 0],
        [N - 1, 0, 0, N - 2],
    ]
    S1 = [
        [0, 1, 0, 0],
        [N - 1, 0, 2, 0],
        [0, N - 2, N - 4, N - 1],
        [0, 0, 1, 0],
    ]
    S2 = [
        [0, 0, 1, 0],
        [0, N - 2, N - 4, N - 1],
        [F((N - 2) * (N - 1), 2), F((N - 4) * (N - 2), 2), F(N * N - 6 * N + 12, 2), F((N - 4) * (N - 1), 2)],
        [0, F(N, 2) - 1, F(N, 2) - 2, 0],
    ]
    S3 = [
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, F(N, 2) - 1, F(N, 2) - 2, 0],
        [F(N, 2) - 1, 0, 0, F(N, 2) - 2],
    ]
    return P, Q, [B1, B2, B3], [S1, S2, S3]


def _x_tables(N: int, s: int):
    F = Fraction
    h = N * s  # N^(3/2)
    P = [
        [1, F(N * N, 2), 2 * (N - 1), F(N * N, 2), 1],
        [1, F(h, 2), 0, -F(h, 2), -1],
        [1, 0, -2, 0, 1],
        [1, -s, 0, s, -1],
        [1, -N, 2 * (N - 1), -N, 1],
    ]
    Q = [
        [1, N, F((N - 1) * (N + 2), 2), F(N * N, 2), F(N, 2)],
        [1, s, 0, -s, -1],
        [1, 0, -F(N, 2) - 1, 0, F(N, 2)],
        [1, -s, 0, s, -1],
        [1, -N, F((N - 1) * (N + 2), 2), -F(N * N, 2), F(N, 2)],
    ]
    a = F((N + s) * (N - 2), 4)
    b = F((N - s) * (N - 2), 4)
    B1 = [
        [0, 1, 0, 0, 0],
        [F(N * N, 2), a, F(N * N, 4), b, 0],
        [0, N - 1, 0, N - 1, 0],
        [0, b, F(N * N, 4), a, F(N * N, 2)],
        [0, 0, 0, 1, 0],
    ]
    B2 = [
        [0, 0, 1, 0, 0],
        [0, N - 1, 0, N - 1, 0],
        [2 * (N - 1), 0, 2 * (N - 2), 0, 2 * (N - 1)],
        [0, N - 1, 0, N - 1, 0],
        [0, 0, 1, 0, 0],
    ]
    B3 = [
        [0, 0, 0, 1, 0],
        [0, b, F(N * N, 4), a, F(N * N, 2)],
        [0, N - 1, 0, N - 1, 0],
        [F(N * N, 2), a, F(N * N, 4), b, 0],
        [0, 1, 0, 0, 0],
    ]
    B4 = [[int(j + k == 4) for k in range(5)] for j in range(5)]
    S1 = [
        [0, 1, 0, 0, 0],
        [N, 0, F(2 * N, N + 2), 0, 0],
        [0, N - 1, 0, N - 1, 0],
        [0, 0, F(N * N, N + 2), 0, N],
        [0, 0, 0, 1, 0],
    ]
    S2 = [
        [0, 0, 1, 0, 0],
        [0, N - 1, 0, N - 1, 0],
        [F((N + 2) * (N - 1), 2), 0, F((N + 2) * (N - 2), 2), 0, F((N + 2) * (N - 1), 2)],
        [0, F(N * (N - 1), 2), 0, F(N * (N - 1), 2), 0],
        [0, 0, F(N, 2), 0, 0],
    ]
    S3 = [
        [0, 0, 0, 1, 0],
        [0, 0, F(N * N, N + 2), 0, N],
        [0, F(N * (N - 1), 2), 0, F(N * (N - 1), 2), 0],
        [F(N * N, 2), 0, F(N**3, 2 * (N + 2)), 0, F(N * (N - 2), 2)],
        [0, F(N, 2), 0, F(N, 2) - 1, 0],
    ]
    S4 = [
        [0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0],
        [0, 0, F(N, 2), 0, 0],
        [0, F(N, 2), 0, F(N, 2) - 1, 0],
        [F(N, 2), 0, 0, 0, F(N, 2) - 1],
    ]
    return P, Q, [B1, B2, B3, B4], [S1, S2, S3, S4]


def _identity(d: int):
    return [[int(j == k) for k in range(d + 1)] for j in range(d + 1)]


def closed_form(family: ClosedFormFamily | str, N: int | None = None) -> SchemeParameters:
    """The tabulated parameters of ``family`` at ``N`` as exact rationals.

    For ``Y-dual`` the intersection matrices come from the coset-class
    multiplication tables and the Krein matrices are computed from ``P, Q``.
    """
    if isinstance(family, str):
        family = ClosedFormFamily(family, N)
    N, s = family.N, family.sqrt_N
    if family.family in ("Y", "Y-dual"):
        P, Q, Bs, Ss = _y_tables(N, s)
        if family.family == "Y-dual":
            P, Q = Q, P
            rho = coset_multiplication_matrices(N // 2)
            Bs = [[list(col) for col in zip(*r)] for r in rho]
            Ss = None
    elif family.family == "Z":
        P, Q, Bs, Ss = _z_tables(N, s)
    else:
        P, Q, Bs, Ss = _x_tables(N, s)
    d = len(P) - 1
    n = family.n_points
    P, Q = _F(P), _F(Q)
    B = (_F(_identity(d)), *(_F(b) for b in Bs))
    Bstar = tuple(krein(P, Q, n)) if Ss is None else (_F(_identity(d)), *(_F(b) for b in Ss))
    valencies = tuple(int(x) for x in P[0])
    return SchemeParameters(n, d, valencies, B, P, Q, tuple(Q[0]), Bstar)


def tables_self_consistent(params: SchemeParameters) -> list[str]:
    """Cross-check a tabulated parameter set: ``Bstar`` against the Krein formula,
    ``B`` against the eigenvalue relations ``P_l(i) P_l(j) = sum_k p_ij^k P_l(k)``."""
    problems = []
    computed = krein(params.P, params.Q, params.n)
    for i, (a, b) in enumerate(zip(computed, params.Bstar)):
        if tuple(a) != tuple(b):
            problems.append(f"Bstar_{i} disagrees with the Krein formula")
    d = params.d
    for i in range(d + 1):
        for l in range(d + 1):
            for j in range(d + 1):
                lhs = params.P[l][i] * params.P[l][j]
                rhs = sum((params.B[i][j][k] * params.P[l][k] for k in range(d + 1)), Fraction(0))
                if lhs != rhs:
                    problems.append(f"B_{i} row {j} inconsistent with P row {l}")
    return problems
