"""Design strength, annihilator expansions and the intersection-number system.

Gegenbauer polynomials are generated as in Delsarte-Goethals-Seidel:
``Q_0 = 1``, ``Q_1 = n t`` and

    lambda_{k+1} Q_{k+1} = t Q_k - (1 - lambda_{k-1}) Q_{k-1},
    lambda_k = k / (n + 2k - 2),

so that ``Q_k(1)`` is the dimension of the space of degree-``k`` harmonics
(``normalization="dgs"``).  ``normalization="unit"`` rescales each ``Q_k``
to ``Q_k(1) = 1``; annihilator expansions are reported in that form.
Moment vanishing does not depend on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb, isqrt

from kerdock_lab.algebra import linalg
from kerdock_lab.algebra.numbers import frac_str
from kerdock_lab.algebra.poly import Poly, binomial_poly, expand_in_basis
from kerdock_lab.mub.config import SphericalConfig, class_cosines
from kerdock_lab.schemes.closed_form import check_N


class GegenbauerBasis:
    """``Q_0 .. Q_kmax`` on ``S^(n-1)`` with the monomial expansion tensor ``f``."""

    def __init__(self, n: int, kmax: int = 7, normalization: str = "dgs"):
        if n < 2:
            raise ValueError("dimension must be at least 2")
        if normalization not in ("dgs", "unit"):
            raise ValueError(f"unknown normalization {normalization!r}")
        self.n = n
        self.kmax = kmax
        self.normalization = normalization
        t = Poly([0, 1])
        polys = [Poly([1]), Poly([0, n])]
        for k in range(1, kmax):
            lam_next = Fraction(k + 1, n + 2 * k)
            lam_prev = Fraction(k - 1, n + 2 * k - 4)
            polys.append((t * polys[k] - polys[k - 1] * (1 - lam_prev)) * (1 / lam_next))
        polys = polys[: kmax + 1]
        if normalization == "unit":
            polys = [p * (1 / p(1)) for p in polys]
        self.polys = polys

    def __getitem__(self, k: int) -> Poly:
        return self.polys[k]

    def expand(self, p: Poly) -> list[Fraction]:
        return expand_in_basis(p, self.polys[: p.degree + 1])

    @cached_property
    def f(self) -> list[list[Fraction]]:
        """``t^i = sum_k f[i][k] Q_k(t)``."""
        out = []
        for i in range(self.kmax + 1):
            c = self.expand(Poly.monomial(i))
            out.append(c + [Fraction(0)] * (self.kmax + 1 - len(c)))
        return out

    def F(self, i: int, j: int) -> Poly:
        """``F_ij(t) = sum_k f[i][k] f[j][k] Q_k(t)``."""
        out = Poly()
        for k in range(min(i, j) + 1):
            out = out + self.polys[k] * (self.f[i][k] * self.f[j][k])
        return out


def gegenbauer_moments(config: SphericalConfig, t_max: int = 7) -> list[Fraction]:
    """``sum_{x,y} Q_k(<x,y>)`` over ordered pairs for ``k = 0..t_max``."""
    basis = GegenbauerBasis(config.dim, t_max)
    counts = config.cosine_counts()
    return [sum((c * basis[k](v) for v, c in counts.items()), Fraction(0)) for k in range(t_max + 1)]


def design_strength(config: SphericalConfig, t_max: int = 7) -> int:
    """Largest ``t <= t_max`` with vanishing moments for ``k = 1..t`` (0 if ``k = 1`` fails)."""
    moments = gegenbauer_moments(config, t_max)
    t = 0
    for k in range(1, t_max + 1):
        if moments[k] != 0:
            break
        t = k
    return t


def annihilator(cosines) -> Poly:
    """``prod (x - a) / (1 - a)``, equal to 1 at ``x = 1``."""
    cosines = [Fraction(a) for a in cosines]
    if len(set(cosines)) != len(cosines):
        raise ValueError("cosines must be distinct")
    if Fraction(1) in cosines:
        raise ValueError("cosine 1 cannot be annihilated")
    p = Poly([1])
    for a in cosines:
        p = p * Poly([-a, 1]) * (1 / (1 - a))
    return p


def annihilator_expansion(cosines, dim: int, normalization: str = "unit") -> list[Fraction]:
    """Gegenbauer coefficients of :func:`annihilator` in dimension ``dim``."""
    p = annihilator(cosines)
    return GegenbauerBasis(dim, max(p.degree, 1), normalization).expand(p)


def expected_annihilator_coefficients(N: int) -> list[Fraction]:
    """The four tabulated coefficients for the ``Y`` cosines, evaluated at ``N``.

    Note: under ``Q_k(1) = 1`` only the first two agree with the exact
    expansion; see :func:`derived_annihilator_coefficients`.
    """
    F = Fraction
    return [
        F(4, N * N),
        F(2 * (N * N + 6) * (N - 2), N**3 * (N - 1)),
        F((N - 2) ** 3 * (N + 3), N**3 * (N - 1)),
        F(6 * (N - 2) * (N - 3), N * N * (N - 1)),
    ]


def derived_annihilator_coefficients(N: int) -> list[Fraction]:
    """Closed forms of the exact ``Y`` expansion (unit normalization, dimension ``N - 2``)."""
    F = Fraction
    return [
        F(4, N * N),
        F(2 * (N * N + 6) * (N - 2), N**3 * (N - 1)),
        F(6 * (N - 2) * (N - 3), N * N * (N - 1)),
        F((N - 2) ** 3 * (N - 3), N**3 * (N - 1)),
    ]


# -- intersection-number linear system ------------------------------------

# equation rows (i, j) and unknowns p_ab: class of <x, w> and of <y, w>, over points w
EQUATIONS = ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2))
UNKNOWNS = ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class IntersectionSolution:
    z: Fraction
    third_class_count: int
    values: dict  # (a, b) -> p_ab with a, b class indices in 1..3
    determinant: Fraction


def y_cosines(N: int) -> tuple[Fraction, Fraction, Fraction]:
    """Cosines of classes 1, 2, 3 of the ``Y`` configuration at ``N``."""
    return class_cosines("Y", N)


def system_matrix(c1, c2, c3) -> list[list[Fraction]]:
    A = (Fraction(c1), Fraction(c2), Fraction(c3))
    return [[A[a] ** i * A[b] ** j for a, b in UNKNOWNS] for i, j in EQUATIONS]


def expected_determinant(c1, c2, c3) -> Fraction:
    a, b, c = map(Fraction, (c1, c2, c3))
    return (a - b) ** 6 * (a - c) ** 4 * (b - c) ** 4


def third_class_count(N: int, z: Fraction) -> int:
    """``#{w : <x,w> and <y,w> both in class 3}`` by cases on ``z = <x, y>``."""
    c1, c2, c3 = y_cosines(N)
    if z == 1:
        return N // 2 - 1
    if z in (c1, c2):
        return 0
    if z == c3:
        return N // 2 - 2
    raise ValueError(f"{z} is not an inner product of the Y configuration")


def intersection_solver(N: int, z, n_points: int | None = None, third_count: int | None = None) -> IntersectionSolution:
    """Solve the 8x8 system for the intersection numbers at ``z = <x, y>``.

    ``n_points`` defaults to ``N^2/4`` and ``third_count`` to the case
    analysis of :func:`third_class_count`.  The result maps class pairs
    ``(a, b)`` to ``#{w : <x,w> in class a, <y,w> in class b}``.
    """
    check_N(N)
    z = Fraction(z)
    c1, c2, c3 = y_cosines(N)
    n_points = N * N // 4 if n_points is None else n_points
    third_count = third_class_count(N, z) if third_count is None else third_count
    basis = GegenbauerBasis(N - 2, 4)
    A = system_matrix(c1, c2, c3)
    delta = 1 if z == 1 else 0
    rhs = [
        n_points * basis.F(i, j)(z) - z**i - z**j + delta - c3 ** (i + j) * third_count for i, j in EQUATIONS
    ]
    det = linalg.det(A)
    if det == 0:
        raise ArithmeticError("intersection system is singular")
    sol = linalg.solve(A, rhs)
    values = {(a + 1, b + 1): v for (a, b), v in zip(UNKNOWNS, sol)}
    values[(3, 3)] = Fraction(third_count)
    return IntersectionSolution(z, third_count, values, det)


def brute_force_counts(config: SphericalConfig, x: int, y: int, cosines) -> dict:
    """Direct ``#{w : <x,w> = c_a, <y,w> = c_b}`` on a concrete configuration."""
    nums = [int(Fraction(c) * config.den) for c in cosines]
    out = {}
    for a, ca in enumerate(nums, start=1):
        for b, cb in enumerate(nums, start=1):
            out[(a, b)] = int(((config.num[x] == ca) & (config.num[y] == cb)).sum())
    return out


# -- Delsarte bound ----------------------------------------------------------


def krawtchouk(n: int, k: int) -> Poly:
    """``K_k(z) = sum_j (-1)^j C(z, j) C(n - z, k - j)`` as a polynomial in ``z``."""
    z = Poly([0, 1])
    out = Poly()
    for j in range(k + 1):
        out = out + binomial_poly(z, j) * binomial_poly(n - z, k - j) * (-1) ** j
    return out


@dataclass(frozen=True)
class DelsarteResult:
    N: int
    length: int
    distances: tuple[int, ...]
    coefficients: tuple[Fraction, ...]
    bound: Fraction

    @property
    def ratios(self) -> tuple[Fraction, ...]:
        """Coefficients relative to the constant one."""
        return tuple(c / self.coefficients[0] for c in self.coefficients)


def delsarte_bound(N: int, length: int | None = None) -> DelsarteResult:
    """Linear-programming bound for binary codes with the three Kerdock distances.

    ``f(z) = prod_d (1 - z/d)`` over the distances ``(N -+ sqrt N)/2, N/2``
    is expanded in Krawtchouk polynomials for the given length (default
    ``N - 2``).  Nonnegative coefficients give ``|C| <= f(0) / c_0``.
    """
    check_N(N)
    s = isqrt(N)
    length = N - 2 if length is None else length
    distances = ((N - s) // 2, N // 2, (N + s) // 2)
    z = Poly([0, 1])
    f = Poly([1])
    for d in distances:
        f = f * (1 - z * Fraction(1, d))
    basis = [krawtchouk(length, k) for k in range(len(distances) + 1)]
    coeffs = tuple(expand_in_basis(f, basis))
    if any(c < 0 for c in coeffs) or coeffs[0] <= 0:
        raise ArithmeticError(f"Krawtchouk coefficients not all positive: {coeffs}")
    return DelsarteResult(N, length, distances, coeffs, f(0) / coeffs[0])


def krawtchouk_at_zero_ok(n: int, kmax: int = 3) -> bool:
    return all(krawtchouk(n, k)(0) == comb(n, k) for k in range(kmax + 1))


def moment_table(config: SphericalConfig, t_max: int = 7) -> dict[int, str]:
    """Moments as ``"num/den"`` strings, for reports."""
    return {k: frac_str(v) for k, v in enumerate(gegenbauer_moments(config, t_max))}
