"""Acceptance gate: one test per numbered criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in the terminal summary.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np
import pytest

from kerdock_lab.algebra import linalg
from kerdock_lab.codes import (
    CosetClassifier,
    build_binary_kerdock,
    build_full_z4_kerdock,
    build_punctured_simplex_14_4,
    build_shortened_kerdock,
    distance_distribution,
    lee_weight,
)
from kerdock_lab.codes.kerdock import coset_representatives, preparata_syndrome, syndrome_index
from kerdock_lab.codes.words import gray_map
from kerdock_lab.lattices import (
    bw16_membership_check,
    construction_a,
    theta_prefix,
    y_lattice_matches_construction_a,
    y_lattice_model,
)
from kerdock_lab.mub import design
from kerdock_lab.mub.config import build_X, build_Y, build_Z
from kerdock_lab.mub.lines import code_to_lines, lines_to_code
from kerdock_lab.schemes.builders import binary_distance_partition, coset_partition, kerdock_partition
from kerdock_lab.schemes.characters import dual_character_check
from kerdock_lab.schemes.closed_form import FAMILIES, closed_form, coset_multiplication_matrices
from kerdock_lab.schemes.parameters import (
    align_eigenspaces,
    compare_to_reference,
    negative_krein,
    pq_identity_holds,
    verify_duality,
    verify_scheme,
)

# criterion -> list of (passed, detail); parametrized cases add one entry each
RESULTS: dict[int, list[tuple[bool, str]]] = {}


def summary_line(k: int) -> str:
    parts = RESULTS[k]
    ok = all(p for p, _ in parts)
    detail = "; ".join(d for _, d in parts if d)
    return f"{'PASS' if ok else 'FAIL'} criterion {k}" + (f": {detail}" if detail else "")


@contextmanager
def criterion(k: int, detail: list):
    ok = False
    try:
        yield
        ok = True
    finally:
        RESULTS.setdefault(k, []).append((ok, "; ".join(detail)))
        print(f"{'PASS' if ok else 'FAIL'} criterion {k}" + (f": {'; '.join(detail)}" if detail else ""))


def _y_pipeline(m: int):
    lines = code_to_lines(build_binary_kerdock(m))
    Y = build_Y(build_X(lines))
    return Y, verify_scheme(Y.scheme_partition())


def _exact_against(params, family, N):
    """Aligned parameters equal the closed form field for field."""
    diffs = compare_to_reference(params, closed_form(family, N))
    assert not diffs, diffs
    aligned = align_eigenspaces(params, closed_form(family, N))
    ref = closed_form(family, N)
    assert aligned.P == ref.P and aligned.Q == ref.Q
    assert aligned.B == ref.B and aligned.Bstar == ref.Bstar


def test_criterion_01_y_scheme_n16():
    info = []
    with criterion(1, info):
        t0 = time.perf_counter()
        Y, params = _y_pipeline(3)
        _exact_against(params, "Y", 16)
        dt = time.perf_counter() - t0
        assert Y.n_points == 64
        aligned = align_eigenspaces(params, closed_form("Y", 16))
        assert aligned.P == aligned.Q  # self-dual at N = 16
        info.append(f"64 points, P = Q exact, {dt:.2f} s")
        assert dt < 5


def test_criterion_02_y_scheme_n64():
    info = []
    with criterion(2, info):
        t0 = time.perf_counter()
        Y, params = _y_pipeline(5)
        _exact_against(params, "Y", 64)
        dt = time.perf_counter() - t0
        assert Y.n_points == 1024
        info.append(f"1024 points, P and Q exact, {dt:.1f} s")
        assert dt < 120


def test_criterion_03_short_lee_spectra():
    info = []
    with criterion(3, info):
        assert build_shortened_kerdock(3).weight_distribution() == {0: 1, 6: 42, 8: 7, 10: 14}
        cf = closed_form("Y", 64)
        got = build_shortened_kerdock(5).weight_distribution()
        # valencies in class order: q+e, q-e, q
        assert got == {0: 1, 28: cf.valencies[2], 32: cf.valencies[3], 36: cf.valencies[1]}
        assert (got[28], got[32], got[36]) == (620, 31, 372)
        info.append(f"m=5 {got}")


def test_criterion_04_gray_image():
    info = []
    with criterion(4, info):
        g = build_full_z4_kerdock(3).gray_image()
        dist = distance_distribution(g.words)
        dmin = min(k for k in dist if k)
        assert (g.length, g.size, dmin) == (16, 256, 6)
        assert len(g.word_set()) == 256
        info.append(f"(16, 256, {dmin}), distances {sorted(dist)}")


def test_criterion_05_coset_partition():
    info = []
    with criterion(5, info):
        K = build_shortened_kerdock(3)
        # the classifier raises unless the 64 representatives meet each coset once
        mats = {f: CosetClassifier(K, f) for f in "abc"}
        assert sum(mats["a"].class_sizes.values()) == 64
        assert all((mats["a"].class_matrix() == mats[f].class_matrix()).all() for f in "bc")
        # exhaustive: every word of Z4^7 lands in one of the 64 syndromes
        words = (np.arange(4**7)[:, None] // 4 ** np.arange(7)) % 4
        s = syndrome_index(preparata_syndrome(words, K))
        assert len(np.unique(s)) == 64
        K5 = build_shortened_kerdock(5)
        reps = np.vstack(list(coset_representatives(K5.length).values()))
        assert len(reps) == 1024
        assert len(np.unique(syndrome_index(preparata_syndrome(reps, K5)))) == 1024
        info.append("m=3: 64 cosets once each, forms a/b/c agree; m=5: 1024 distinct syndromes")


@pytest.mark.parametrize("m", [3, 5])
def test_criterion_06_duality(m):
    info = []
    with criterion(6, info):
        q = 2**m
        K = build_shortened_kerdock(m)
        a = verify_scheme(kerdock_partition(m, K))
        b = verify_scheme(coset_partition(m, K))
        assert verify_duality(a, b)
        rho = coset_multiplication_matrices(q)
        for i in range(1, 4):
            got = [[int(b.B[i][k][j]) for k in range(4)] for j in range(4)]
            assert got == rho[i - 1], (i, got)
        info.append(f"m={m}: P' = Q, Q' = P, rho_1..3 at q={q}")


@pytest.mark.parametrize("m", [3, 5])
def test_criterion_07_character_sums(m):
    info = []
    with criterion(7, info):
        K = build_shortened_kerdock(m)
        Q = closed_form("Y", 2 ** (m + 1)).Q
        w = lee_weight(K.words)
        for wt in sorted(set(w.tolist()) - {0}):
            u = K.words[int(np.flatnonzero(w == wt)[0])]
            j, row = dual_character_check(K, u)
            assert [Fraction(x) for x in row] == list(Q[j]), (wt, row)
        info.append(f"m={m}: three Lee classes reproduce Q rows")


@pytest.mark.parametrize("m", [3, 5])
def test_criterion_08_x_scheme(m):
    info = []
    with criterion(8, info):
        N = 2 ** (m + 1)
        t0 = time.perf_counter()
        X = build_X(code_to_lines(build_binary_kerdock(m)))
        params = verify_scheme(X.scheme_partition())
        _exact_against(params, "X", N)
        strength = design.design_strength(X)
        dt = time.perf_counter() - t0
        assert X.n_points == N * (N + 2) and params.d == 4
        assert strength == 5
        info.append(f"N={N}: {X.n_points} points, tables exact, strength 5, {dt:.1f} s")
        assert dt < 600


def test_criterion_09_z_scheme():
    info = []
    with criterion(9, info):
        Z = build_Z(build_X(code_to_lines(build_binary_kerdock(3))))
        assert Z.n_points == 128
        _exact_against(verify_scheme(Z.scheme_partition()), "Z", 16)
        assert design.design_strength(Z) == 3
        info.append("128 points, tables exact, strength 3")


def test_criterion_10_y_design(m3, m5):
    info = []
    with criterion(10, info):
        for art in (m3, m5):
            mom = design.gegenbauer_moments(art.Y, 3)
            assert mom[1:] == [0, 0, 0]
        info.append("moments k=1..3 vanish at N=16, 64")
        mismatched = []
        for N in (16, 64):
            got = design.annihilator_expansion(design.y_cosines(N), N - 2)
            want = design.expected_annihilator_coefficients(N)
            if got != want:
                mismatched.append(N)
                info.append(f"N={N} annihilator computed {[str(x) for x in got]} vs tabulated {[str(x) for x in want]}")
        assert not mismatched


def test_criterion_11_intersection_system(m3):
    info = []
    with criterion(11, info):
        Y = m3.Y
        cos = design.y_cosines(16)
        for z in (Fraction(1), *cos):
            zn = int(z * Y.den)
            for x in range(Y.n_points):
                ys = np.flatnonzero(Y.num[x] == zn)
                sol = design.intersection_solver(16, z, n_points=Y.n_points)
                for y in ys[:3]:
                    assert design.brute_force_counts(Y, x, int(y), cos) == sol.values
        a, b, c = cos
        assert linalg.det(design.system_matrix(a, b, c)) == (a - b) ** 6 * (a - c) ** 4 * (b - c) ** 4
        info.append("all classes, all points; determinant exact")


def test_criterion_12_delsarte(m3, m5):
    info = []
    with criterion(12, info):
        for art, bound in ((m3, 64), (m5, 1024)):
            N = art.N
            r = design.delsarte_bound(N)
            assert r.ratios[1:] == (Fraction(N + 2, 2 * N - 2), Fraction(3, N - 1), Fraction(3, 2 * N - 2))
            assert r.bound == bound
            assert art.binary.double_shorten(0, 1).size == bound
            info.append(f"N={N}: bound {bound} attained")


def test_criterion_13_construction_a(m3):
    info = []
    with criterion(13, info):
        th = theta_prefix(construction_a(build_punctured_simplex_14_4()), 8).nonzero()
        assert th == {0: 1, 4: 28, 7: 1024, 8: 2156}
        model = y_lattice_model(m3.Y)
        assert y_lattice_matches_construction_a(model)
        info.append("theta 1 + 28q^4 + 1024q^7 + 2156q^8; Y span HNF-equal")


def test_criterion_14_bw16(m3):
    info = []
    with criterion(14, info):
        r = bw16_membership_check(m3.X, enumerate_oracle=True)
        info.append(f"minimum {r.minimum}, kissing {r.minimal_count} (enumerated {r.minimal_count_enumerated})")
        assert r.witness is None
        assert r.norms == {16: 288} and r.minimum == 16
        assert r.minimal_count_enumerated == r.minimal_count == 4320
        assert r.passed


def test_criterion_15_property_suites(m3):
    info = []
    with criterion(15, info):
        w = m3.full.words.astype(np.int64)
        g = gray_map(w).astype(np.int64)
        lee = lee_weight((w[:, None, :] - w[None, :, :]) % 4)
        assert (lee == (g[:, None, :] != g[None, :, :]).sum(axis=2)).all()
        emitted = [
            verify_scheme(kerdock_partition(3, m3.short)),
            verify_scheme(coset_partition(3, m3.short)),
            verify_scheme(binary_distance_partition(m3.binary.double_shorten(0, 1).words, (10, 6, 8))),
            verify_scheme(binary_distance_partition(m3.binary.shorten(0).words, (10, 6, 8))),
        ] + [verify_scheme(getattr(m3, k).scheme_partition()) for k in ("X", "Z", "Y")]
        emitted += [closed_form(f, N) for f in FAMILIES for N in (16, 64)]
        for p in emitted:
            assert pq_identity_holds(p)
            assert not negative_krein(p)
        th = theta_prefix(construction_a(build_punctured_simplex_14_4()), 12).coefficients
        assert all(c % 2 == 0 for t, c in th.items() if t)
        assert lines_to_code(m3.lines).word_set() == m3.binary.word_set()
        info.append(f"Gray exhaustive, {len(emitted)} schemes PQ = nI and Krein >= 0, theta even, round trip")
