from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from kerdock_lab.algebra.poly import Poly
from kerdock_lab.mub.config import SphericalConfig, class_cosines
from kerdock_lab.mub.design import (
    GegenbauerBasis,
    annihilator,
    annihilator_expansion,
    brute_force_counts,
    delsarte_bound,
    derived_annihilator_coefficients,
    design_strength,
    expected_annihilator_coefficients,
    expected_determinant,
    gegenbauer_moments,
    intersection_solver,
    krawtchouk,
    krawtchouk_at_zero_ok,
    system_matrix,
    y_cosines,
)

F = Fraction


class TestGegenbauer:
    def test_dimensions_at_one(self):
        b = GegenbauerBasis(14, 4)
        # dimensions of harmonic spaces on S^13
        assert [b[k](1) for k in range(4)] == [1, 14, 104, 546]

    def test_unit_normalization(self):
        b = GegenbauerBasis(14, 5, "unit")
        assert all(b[k](1) == 1 for k in range(6))

    def test_expansion_roundtrip(self):
        b = GegenbauerBasis(7, 6)
        p = Poly([F(1, 3), 0, -2, 5])
        c = b.expand(p)
        back = Poly()
        for k, ck in enumerate(c):
            back = back + b[k] * ck
        assert back == p

    def test_bad_args(self):
        with pytest.raises(ValueError):
            GegenbauerBasis(1)
        with pytest.raises(ValueError):
            GegenbauerBasis(4, normalization="other")


class TestStrength:
    def test_strengths(self, m3):
        assert design_strength(m3.X) == 5
        assert design_strength(m3.Z) == 3
        assert design_strength(m3.Y) == 3

    def test_y_moments(self, m3):
        mom = gegenbauer_moments(m3.Y, 4)
        assert mom[0] == 64 * 64
        assert mom[1:4] == [0, 0, 0]
        assert mom[4] > 0

    def test_antipodal_pair(self):
        cfg = SphericalConfig(np.array([[1, -1], [-1, 1]]), 1, 3)
        assert design_strength(cfg) == 1

    def test_single_point(self):
        cfg = SphericalConfig(np.array([[1]]), 1, 3)
        assert design_strength(cfg) == 0

    @pytest.mark.slow
    def test_strengths_n64(self, m5):
        assert design_strength(m5.Y) == 3
        assert design_strength(m5.Z) == 3


class TestAnnihilator:
    def test_normalized(self):
        p = annihilator(y_cosines(16))
        assert p(1) == 1
        assert all(p(a) == 0 for a in y_cosines(16))

    def test_rejects(self):
        with pytest.raises(ValueError):
            annihilator([F(1, 2), F(1, 2)])
        with pytest.raises(ValueError):
            annihilator([1])

    @pytest.mark.parametrize("N", [16, 64, 256])
    def test_derived_formulas(self, N):
        got = annihilator_expansion(y_cosines(N), N - 2)
        assert got == derived_annihilator_coefficients(N)
        assert sum(got) == 1

    def test_values_n16(self):
        assert annihilator_expansion(y_cosines(16), 14) == [F(1, 64), F(917, 7680), F(91, 320), F(4459, 7680)]

    def test_tabulated_first_two_agree(self):
        for N in (16, 64):
            assert expected_annihilator_coefficients(N)[:2] == derived_annihilator_coefficients(N)[:2]

    @pytest.mark.parametrize("N", [16, 64])
    def test_quadrature_oracle(self, N):
        # independent check: L2 projection against the weight (1 - t^2)^((n - 3) / 2)
        n = N - 2
        cos = [float(c) for c in y_cosines(N)]
        x, w = np.polynomial.legendre.leggauss(400)
        w = w * (1 - x**2) ** ((n - 3) / 2)
        f = np.prod([(x - c) / (1 - c) for c in cos], axis=0)
        b = GegenbauerBasis(n, 3, "unit")
        exact = derived_annihilator_coefficients(N)
        for k in range(4):
            q = np.array([float(b[k](float(t))) for t in x])
            assert (f * q * w).sum() / (q * q * w).sum() == pytest.approx(float(exact[k]), rel=1e-9)

    def test_constant_term_is_density(self):
        assert annihilator_expansion(y_cosines(16), 14)[0] == F(1, 64)


class TestIntersectionSystem:
    def test_determinant(self):
        for N in (16, 64):
            a, b, c = y_cosines(N)
            from kerdock_lab.algebra.linalg import det

            assert det(system_matrix(a, b, c)) == expected_determinant(a, b, c)

    def test_third_class_cases(self):
        a, b, c = y_cosines(16)
        assert intersection_solver(16, 1).third_class_count == 7
        assert intersection_solver(16, c).third_class_count == 6
        assert intersection_solver(16, a).third_class_count == 0

    def test_against_brute_force(self, m3):
        Y = m3.Y
        cos = class_cosines("Y", 16)
        rng = np.random.default_rng(0)
        for z in (F(1),) + cos:
            zn = int(z * Y.den)
            for x in rng.choice(Y.n_points, 4, replace=False):
                y = int(np.flatnonzero(Y.num[x] == zn)[0])
                sol = intersection_solver(16, z, n_points=Y.n_points)
                assert sol.values == brute_force_counts(Y, int(x), y, cos)

    def test_solution_matches_tables(self, m3):
        from kerdock_lab.schemes.closed_form import closed_form

        B = closed_form("Y", 16).B
        cos = class_cosines("Y", 16)
        for k, z in enumerate(cos, start=1):
            sol = intersection_solver(16, z)
            for (i, j), v in sol.values.items():
                assert v == B[i][j][k]

    def test_integral(self):
        for z in y_cosines(64):
            assert all(v.denominator == 1 and v >= 0 for v in intersection_solver(64, z).values.values())

    def test_bad_inner_product(self):
        with pytest.raises(ValueError):
            intersection_solver(16, F(1, 2))


class TestDelsarte:
    @pytest.mark.parametrize("N,bound", [(16, 64), (64, 1024), (256, 16384)])
    def test_bound(self, N, bound):
        r = delsarte_bound(N)
        assert r.bound == bound
        assert r.ratios[1:] == (F(N + 2, 2 * N - 2), F(3, N - 1), F(3, 2 * N - 2))

    def test_attained(self, m3):
        assert m3.binary.double_shorten(0, 1).size == delsarte_bound(16).bound

    def test_krawtchouk(self):
        assert krawtchouk_at_zero_ok(14)
        k1 = krawtchouk(14, 1)
        assert k1 == Poly([14, -2])

    def test_bad_N(self):
        with pytest.raises(ValueError):
            delsarte_bound(32)
