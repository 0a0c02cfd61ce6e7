"""End-to-end verification of the closed-form claims for ``m = 3`` or ``m = 5``.

Every check is tied to a :class:`Claim` with a stable descriptive id; a
failing check reports the claim id together with a diff.  Artifacts shared
between checks (codes, line sets, configurations) are built once up front,
after which independent checks may run on a thread pool.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from kerdock_lab.algebra.numbers import frac_str
from kerdock_lab.codes import (
    CosetClassifier,
    CosetPartitionError,
    build_binary_kerdock,
    build_full_z4_kerdock,
    build_punctured_simplex_14_4,
    build_shortened_kerdock,
    distance_distribution,
    lee_weight,
)
from kerdock_lab.lattices import (
    bw16_membership_check,
    construction_a,
    theta_prefix,
    y_lattice_matches_construction_a,
    y_lattice_model,
)
from kerdock_lab.mub import design
from kerdock_lab.mub.config import build_X, build_Y, build_Z, code_bijection
from kerdock_lab.mub.lines import code_to_lines, group_into_bases, lines_to_code
from kerdock_lab.schemes.builders import binary_distance_partition, coset_partition, kerdock_partition
from kerdock_lab.schemes.characters import dual_character_check
from kerdock_lab.schemes.closed_form import closed_form, coset_multiplication_matrices
from kerdock_lab.schemes.parameters import compare_to_reference, verify_duality, verify_scheme


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("z4-kerdock.short-lee-spectrum", "shortened Z4 Kerdock code has Lee weights q+e, q-e, q with the scheme valencies"),
        Claim("z4-kerdock.gray-image", "Gray image of the full Z4 Kerdock code is a (2^(m+1), 4^(m+1), q-e) binary code"),
        Claim("preparata-cosets.partition", "low-weight representatives meet every Preparata coset once, for each V2 form"),
        Claim("kerdock-scheme.tables", "Lee-distance scheme on the shortened code has the closed-form P, Q and B"),
        Claim("coset-scheme.tables", "coset-class scheme has the dual closed-form parameters"),
        Claim("coset-scheme.duality", "coset scheme is formally dual to the Kerdock scheme"),
        Claim("coset-scheme.multiplication", "coset-class multiplication tables equal the closed-form rho matrices"),
        Claim("coset-scheme.character-sums", "character sums over coset classes give the Kerdock Q rows"),
        Claim("binary-kerdock.doubly-shortened", "doubly shortened binary Kerdock code has N^2/4 words at distances q-e, q, q+e"),
        Claim("binary-kerdock.doubly-shortened-scheme", "distance scheme of the doubly shortened code has the Y tables"),
        Claim("binary-kerdock.shortened-scheme", "distance scheme of the shortened code has the Z tables"),
        Claim("mub.bijection", "Kerdock-like code gives N/2 unbiased bases which with the standard basis are maximal"),
        Claim("mub.x-tables", "antipodal MUB configuration X has the closed-form 4-class tables"),
        Claim("mub.z-tables", "derived configuration Z has the closed-form 3-class tables"),
        Claim("mub.y-tables", "derived configuration Y has the closed-form 3-class tables"),
        Claim("mub.y-is-doubly-shortened-code", "Y corresponds pair for pair to the doubly shortened code"),
        Claim("mub.gram-rank", "Gram matrices of Y and Z are PSD of rank N-2 and N-1"),
        Claim("design.strengths", "X is a spherical 5-design, Z and Y are 3-designs"),
        Claim("design.y-annihilator", "annihilator of the Y cosines has the four tabulated Gegenbauer coefficients"),
        Claim("intersection-system.determinant", "8x8 system determinant is (a-b)^6 (a-c)^4 (b-c)^4"),
        Claim("intersection-system.solution", "solving the system reproduces the triple counts of Y"),
        Claim("delsarte.coefficients", "Krawtchouk coefficients of the annihilator are (N+2)/(2N-2), 3/(N-1), 3/(2N-2)"),
        Claim("delsarte.bound", "three-distance codes of length N-2 have at most N^2/4 words, attained"),
        Claim("lattice.construction-a-theta", "construction A on the [14,4,7] code has theta 1 + 28q^4 + 1024q^7 + 2156q^8"),
        Claim("lattice.y-span", "the 64 points of Y span the construction-A lattice"),
        Claim("lattice.bw16", "scaled X points are minimal vectors of their span, minimum 16"),
    ]
}


@dataclass
class CheckResult:
    claim: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status} {self.claim}"
        if not self.passed:
            msg += f" ({CLAIMS[self.claim].statement})"
        if self.detail:
            msg += f": {self.detail}"
        return msg

    def to_json(self) -> dict:
        return {"claim": self.claim, "passed": self.passed, "detail": self.detail, "seconds": round(self.seconds, 3)}


def _diff(diffs: list[str], limit: int = 4) -> str:
    if not diffs:
        return ""
    more = f" (+{len(diffs) - limit} more)" if len(diffs) > limit else ""
    return "; ".join(diffs[:limit]) + more


def _fr(xs) -> str:
    return "[" + ", ".join(frac_str(Fraction(x)) for x in xs) + "]"


@dataclass
class Context:
    """Shared artifacts for one value of ``m``."""

    m: int
    params: dict = field(default_factory=dict)

    @property
    def N(self) -> int:
        return 2 ** (self.m + 1)

    @property
    def q(self) -> int:
        return 2**self.m

    @cached_property
    def short_kerdock(self):
        return build_shortened_kerdock(self.m)

    @cached_property
    def full_kerdock(self):
        return build_full_z4_kerdock(self.m)

    @cached_property
    def binary_kerdock(self):
        return build_binary_kerdock(self.m)

    @cached_property
    def lines(self):
        return code_to_lines(self.binary_kerdock)

    @cached_property
    def X(self):
        return build_X(self.lines)

    @cached_property
    def Y(self):
        return build_Y(self.X)

    @cached_property
    def Z(self):
        return build_Z(self.X)

    def prepare(self) -> None:
        for name in ("short_kerdock", "full_kerdock", "binary_kerdock", "lines", "X", "Y", "Z"):
            getattr(self, name)

    def scheme(self, key: str, build):
        if key not in self.params:
            self.params[key] = verify_scheme(build())
        return self.params[key]


# -- checks -------------------------------------------------------------------


def check_short_spectrum(ctx: Context):
    cf = closed_form("Y", ctx.N)
    e = 2 ** ((ctx.m - 1) // 2)
    expected = {0: 1, ctx.q + e: cf.valencies[1], ctx.q - e: cf.valencies[2], ctx.q: cf.valencies[3]}
    got = ctx.short_kerdock.weight_distribution()
    return got == dict(sorted(expected.items())), f"weights {got}"


def check_gray(ctx: Context):
    g = ctx.full_kerdock.gray_image()
    dist = distance_distribution(g.words)
    dmin = min(k for k in dist if k > 0)
    e = 2 ** ((ctx.m - 1) // 2)
    ok = g.length == ctx.N and g.size == 4 ** (ctx.m + 1) and dmin == ctx.q - e
    return ok, f"({g.length}, {g.size}, {dmin})"


def check_coset_partition(ctx: Context):
    mats = {}
    try:
        for form in ("a", "b", "c"):
            mats[form] = CosetClassifier(ctx.short_kerdock, form).class_matrix()
    except CosetPartitionError as exc:
        return False, f"V2 form {form}: {exc}"
    agree = all((mats["a"] == mats[f]).all() for f in ("b", "c"))
    return agree, f"{4 ** ctx.m} cosets, forms a/b/c {'agree' if agree else 'disagree'}"


def check_kerdock_scheme(ctx: Context):
    p = ctx.scheme("kerdock", lambda: kerdock_partition(ctx.m, ctx.short_kerdock))
    diffs = compare_to_reference(p, closed_form("Y", ctx.N))
    return not diffs, _diff(diffs)


def check_coset_scheme(ctx: Context):
    p = ctx.scheme("coset", lambda: coset_partition(ctx.m, ctx.short_kerdock))
    diffs = compare_to_reference(p, closed_form("Y-dual", ctx.N))
    return not diffs, _diff(diffs)


def check_duality(ctx: Context):
    a = ctx.scheme("kerdock", lambda: kerdock_partition(ctx.m, ctx.short_kerdock))
    b = ctx.scheme("coset", lambda: coset_partition(ctx.m, ctx.short_kerdock))
    return verify_duality(a, b), ""


def check_multiplication(ctx: Context):
    p = ctx.scheme("coset", lambda: coset_partition(ctx.m, ctx.short_kerdock))
    rho = coset_multiplication_matrices(ctx.q)
    bad = []
    for i in range(1, 4):
        got = [[int(p.B[i][k][j]) for k in range(4)] for j in range(4)]
        if got != rho[i - 1]:
            bad.append(f"rho_{i}: computed {got}, expected {rho[i - 1]}")
    return not bad, _diff(bad)


def check_characters(ctx: Context):
    K = ctx.short_kerdock
    Q = closed_form("Y", ctx.N).Q
    weights = lee_weight(K.words)
    bad = []
    for w in sorted(set(weights.tolist()) - {0}):
        u = K.words[int(np.flatnonzero(weights == w)[0])]
        j, row = dual_character_check(K, u)
        if [Fraction(x) for x in row] != list(Q[j]):
            bad.append(f"weight {w}: sums {row}, Q row {_fr(Q[j])}")
    return not bad, _diff(bad)


def _doubly_shortened(ctx: Context):
    return ctx.binary_kerdock.double_shorten(0, 1)


def check_doubly_shortened(ctx: Context):
    c = _doubly_shortened(ctx)
    e = 2 ** ((ctx.m - 1) // 2)
    dist = set(distance_distribution(c.words)) - {0}
    ok = c.size == ctx.N**2 // 4 and c.length == ctx.N - 2 and dist == {ctx.q - e, ctx.q, ctx.q + e}
    return ok, f"{c.size} words of length {c.length}, distances {sorted(dist)}"


def _binary_order(ctx: Context):
    e = 2 ** ((ctx.m - 1) // 2)
    return (ctx.q + e, ctx.q - e, ctx.q)


def check_doubly_shortened_scheme(ctx: Context):
    c = _doubly_shortened(ctx)
    p = verify_scheme(binary_distance_partition(c.words, _binary_order(ctx)))
    diffs = compare_to_reference(p, closed_form("Y", ctx.N))
    return not diffs, _diff(diffs)


def check_shortened_scheme(ctx: Context):
    c = ctx.binary_kerdock.shorten(0)
    p = verify_scheme(binary_distance_partition(c.words, _binary_order(ctx)))
    diffs = compare_to_reference(p, closed_form("Z", ctx.N))
    return not diffs, _diff(diffs)


def check_mub_bijection(ctx: Context):
    bases = group_into_bases(ctx.lines)
    back = lines_to_code(ctx.lines)
    same = back.word_set() == ctx.binary_kerdock.word_set()
    ok = len(bases) == ctx.N // 2 + 1 and same
    return ok, f"{len(bases)} bases, round trip {'exact' if same else 'broken'}"


def _config_tables(ctx: Context, name: str):
    cfg = getattr(ctx, name)
    p = ctx.scheme(name, cfg.scheme_partition)
    diffs = compare_to_reference(p, closed_form(name, ctx.N))
    return not diffs, f"{cfg.n_points} points" + (f"; {_diff(diffs)}" if diffs else "")


def check_y_code(ctx: Context):
    idx = code_bijection(ctx.Y, _doubly_shortened(ctx))
    return idx is not None, "" if idx is not None else "no distance-respecting bijection"


def check_gram_rank(ctx: Context):
    ry = ctx.Y.rank_and_psd()
    rz = ctx.Z.rank_and_psd()
    ok = ry == (ctx.N - 2, True) and rz == (ctx.N - 1, True)
    return ok, f"Y rank {ry[0]} psd {ry[1]}, Z rank {rz[0]} psd {rz[1]}"


def check_strengths(ctx: Context):
    got = {k: design.design_strength(getattr(ctx, k)) for k in ("X", "Z", "Y")}
    moments = design.gegenbauer_moments(ctx.Y, 3)[1:]
    ok = got == {"X": 5, "Z": 3, "Y": 3} and all(x == 0 for x in moments)
    return ok, ", ".join(f"{k} {v}" for k, v in got.items())


def check_annihilator(ctx: Context):
    coeffs = design.annihilator_expansion(design.y_cosines(ctx.N), ctx.N - 2)
    expected = design.expected_annihilator_coefficients(ctx.N)
    if coeffs == expected:
        return True, _fr(coeffs)
    return False, f"computed {_fr(coeffs)}, tabulated {_fr(expected)}"


def check_determinant(ctx: Context):
    a, b, c = design.y_cosines(ctx.N)
    from kerdock_lab.algebra import linalg

    det = linalg.det(design.system_matrix(a, b, c))
    exp = design.expected_determinant(a, b, c)
    return det == exp, frac_str(det)


def check_solution(ctx: Context):
    Y = ctx.Y
    cos = design.y_cosines(ctx.N)
    bad = []
    for z in (Fraction(1), *cos):
        if z == 1:
            eta = 0
        else:
            eta = int(np.flatnonzero(Y.num[0] == int(z * Y.den))[0])
        sol = design.intersection_solver(ctx.N, z, n_points=Y.n_points)
        brute = design.brute_force_counts(Y, 0, eta, cos)
        if {k: Fraction(v) for k, v in brute.items()} != sol.values:
            bad.append(f"z={frac_str(z)}")
    return not bad, _diff(bad) or "4 inner products checked"


def check_delsarte_coefficients(ctx: Context):
    N = ctx.N
    r = design.delsarte_bound(N)
    expected = (Fraction(1), Fraction(N + 2, 2 * N - 2), Fraction(3, N - 1), Fraction(3, 2 * N - 2))
    return r.ratios == expected, _fr(r.ratios)


def check_delsarte_bound(ctx: Context):
    r = design.delsarte_bound(ctx.N)
    size = _doubly_shortened(ctx).size
    return r.bound == ctx.N**2 // 4 == size, f"bound {frac_str(r.bound)}, code size {size}"


TARGET_THETA = {0: 1, 4: 28, 7: 1024, 8: 2156}


def check_theta(ctx: Context):
    th = theta_prefix(construction_a(build_punctured_simplex_14_4()), 8).nonzero()
    return th == TARGET_THETA, str(th)


def check_y_span(ctx: Context):
    model = y_lattice_model(ctx.Y)
    th = theta_prefix(model.lattice, 8).nonzero()
    ok = y_lattice_matches_construction_a(model) and th == TARGET_THETA
    return ok, f"residue code {model.residue_code.weight_distribution()}, theta {th}"


def check_bw16(ctx: Context):
    r = bw16_membership_check(ctx.X)
    return r.passed, f"minimum {r.minimum}, minimal vectors {r.minimal_count}" + (
        f", witness {r.witness}" if r.witness else ""
    )


CHECKS = [
    ("z4-kerdock.short-lee-spectrum", check_short_spectrum, None),
    ("z4-kerdock.gray-image", check_gray, None),
    ("preparata-cosets.partition", check_coset_partition, None),
    ("kerdock-scheme.tables", check_kerdock_scheme, None),
    ("coset-scheme.tables", check_coset_scheme, None),
    ("coset-scheme.duality", check_duality, None),
    ("coset-scheme.multiplication", check_multiplication, None),
    ("coset-scheme.character-sums", check_characters, None),
    ("binary-kerdock.doubly-shortened", check_doubly_shortened, None),
    ("binary-kerdock.doubly-shortened-scheme", check_doubly_shortened_scheme, None),
    ("binary-kerdock.shortened-scheme", check_shortened_scheme, None),
    ("mub.bijection", check_mub_bijection, None),
    ("mub.x-tables", lambda c: _config_tables(c, "X"), None),
    ("mub.z-tables", lambda c: _config_tables(c, "Z"), None),
    ("mub.y-tables", lambda c: _config_tables(c, "Y"), None),
    ("mub.y-is-doubly-shortened-code", check_y_code, None),
    ("mub.gram-rank", check_gram_rank, None),
    ("design.strengths", check_strengths, None),
    ("design.y-annihilator", check_annihilator, None),
    ("intersection-system.determinant", check_determinant, None),
    ("intersection-system.solution", check_solution, None),
    ("delsarte.coefficients", check_delsarte_coefficients, None),
    ("delsarte.bound", check_delsarte_bound, None),
    ("lattice.construction-a-theta", check_theta, 3),
    ("lattice.y-span", check_y_span, 3),
    ("lattice.bw16", check_bw16, 3),
]

# the scheme checks that share cached parameters run on the calling thread
_SEQUENTIAL_PREFIXES = ("kerdock-scheme", "coset-scheme")


def _run_one(claim_id, fn, ctx) -> CheckResult:
    t = time.perf_counter()
    try:
        ok, detail = fn(ctx)
    except Exception as exc:  # a crash in a check is a failed claim, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(claim_id, bool(ok), detail, time.perf_counter() - t)


def thread_count() -> int:
    raw = os.environ.get("KERDOCK_LAB_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_claims(m: int, threads: int | None = None, progress=None) -> list[CheckResult]:
    """Run every applicable check for ``m`` in registry order.

    The lattice checks only apply to ``m = 3``.  ``progress`` is called with
    each :class:`CheckResult` in order.
    """
    if m not in (3, 5):
        raise ValueError("m must be 3 or 5")
    ctx = Context(m)
    ctx.prepare()
    todo = [(cid, fn) for cid, fn, only in CHECKS if only in (None, m)]
    threads = thread_count() if threads is None else threads
    out = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {}
        if threads > 1:
            futures = {c: pool.submit(_run_one, c, f, ctx) for c, f in todo if not c.startswith(_SEQUENTIAL_PREFIXES)}
        for c, f in todo:
            r = futures[c].result() if c in futures else _run_one(c, f, ctx)
            out.append(r)
            if progress is not None:
                progress(r)
    return out
