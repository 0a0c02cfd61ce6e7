from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from kerdock_lab.codes import Code
from kerdock_lab.codes.binary import build_punctured_simplex_14_4
from kerdock_lab.codes.words import gray_map, hamming_weight, lee_weight
from kerdock_lab.lattices import construction_a, hnf, lattice_from_vectors, theta_prefix
from kerdock_lab.mub.lines import code_to_lines, lines_to_code
from kerdock_lab.schemes.builders import binary_distance_partition, coset_partition, kerdock_partition
from kerdock_lab.schemes.closed_form import FAMILIES, closed_form
from kerdock_lab.schemes.parameters import negative_krein, pq_identity_holds, verify_scheme


# -- Gray map ------------------------------------------------------------------


def test_gray_isometry_exhaustive(m3):
    w = m3.full.words.astype(np.int64)
    g = gray_map(w).astype(np.int64)
    lee = lee_weight((w[:, None, :] - w[None, :, :]) % 4).reshape(len(w), len(w))
    ham = (g[:, None, :] != g[None, :, :]).sum(axis=2)
    assert (lee == ham).all()


@given(arrays(np.int64, 12, elements=st.integers(0, 3)), arrays(np.int64, 12, elements=st.integers(0, 3)))
def test_gray_isometry_random(a, b):
    assert int(lee_weight((a - b) % 4)) == int(hamming_weight(gray_map(a) ^ gray_map(b)))


# -- schemes --------------------------------------------------------------------


def _emitted(m3):
    yield "kerdock", verify_scheme(kerdock_partition(3, m3.short))
    yield "coset", verify_scheme(coset_partition(3, m3.short))
    ds = m3.binary.double_shorten(0, 1)
    yield "doubly-shortened", verify_scheme(binary_distance_partition(ds.words, (6, 8, 10)))
    for name in ("X", "Z", "Y"):
        yield name, verify_scheme(getattr(m3, name).scheme_partition())


def test_pq_and_krein_emitted(m3):
    seen = []
    for name, params in _emitted(m3):
        assert pq_identity_holds(params), name
        assert not negative_krein(params), name
        seen.append(name)
    assert len(seen) == 6


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("N", [16, 64, 256])
def test_pq_and_krein_closed_forms(family, N):
    cf = closed_form(family, N)
    assert pq_identity_holds(cf)
    assert not negative_krein(cf)


# -- lattices -------------------------------------------------------------------

small_int_matrix = arrays(np.int64, st.tuples(st.integers(1, 5), st.integers(1, 4)), elements=st.integers(-6, 6))


@settings(max_examples=60, deadline=None)
@given(small_int_matrix)
def test_hnf_idempotent(a):
    h = hnf(a)
    assert (hnf(h) == h).all()


@settings(max_examples=60, deadline=None)
@given(small_int_matrix, st.integers(0, 10**6))
def test_hnf_invariant_under_unimodular(a, seed):
    if not a.any():
        return
    rng = np.random.default_rng(seed)
    b = a.copy()
    for _ in range(6):
        i, j = rng.choice(len(b), 2) if len(b) > 1 else (0, 0)
        if i != j:
            b[i] += int(rng.integers(-3, 4)) * b[j]
        else:
            b[i] = -b[i]
    b = b[rng.permutation(len(b))]
    assert (hnf(b) == hnf(a)).all()


@settings(max_examples=40, deadline=None)
@given(arrays(np.int64, (3, 3), elements=st.integers(-3, 3)))
def test_theta_even(a):
    a = a + 3 * np.eye(3, dtype=np.int64) * 4
    lat = lattice_from_vectors(a)
    th = theta_prefix(lat, 20)
    assert th.coefficients[0] == 1
    assert all(c % 2 == 0 for t, c in th.coefficients.items() if t)


def test_theta_even_construction_a():
    th = theta_prefix(construction_a(build_punctured_simplex_14_4()), 10)
    assert all(c % 2 == 0 for t, c in th.coefficients.items() if t)


# -- code <-> lines -------------------------------------------------------------


def test_code_lines_roundtrip(m3):
    lines = code_to_lines(m3.binary)
    back = lines_to_code(lines)
    assert back.word_set() == m3.binary.word_set()
    again = code_to_lines(back)
    assert set(map(tuple, again.vectors.tolist())) == set(map(tuple, lines.vectors.tolist()))


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(16))))
def test_roundtrip_after_coordinate_permutation(m3, perm):
    code = Code("F2", m3.binary.words[:, perm])
    assert lines_to_code(code_to_lines(code)).word_set() == code.word_set()
