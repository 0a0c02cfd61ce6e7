from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from kerdock_lab.codes import lee_weight
from kerdock_lab.schemes.builders import coset_partition, kerdock_partition
from kerdock_lab.schemes.characters import character_sum, dual_character_check
from kerdock_lab.schemes.closed_form import check_N, closed_form, coset_multiplication_matrices, tables_self_consistent
from kerdock_lab.schemes.parameters import (
    SchemeAxiomError,
    SchemeParameters,
    compare_to_reference,
    consistency_problems,
    eigenmatrices,
    krein,
    negative_krein,
    pq_identity_holds,
    verify_duality,
    verify_scheme,
)
from kerdock_lab.schemes.partition import RelationPartition, UnexpectedValueError, relations_from_values

P16 = [[1, 14, 42, 7], [1, -6, 6, -1], [1, 2, -2, -1], [1, -2, -6, 7]]


def ints(m):
    return [[int(x) for x in row] for row in m]


@pytest.fixture(scope="module")
def kerdock3(m3):
    return verify_scheme(kerdock_partition(3, m3.short))


@pytest.fixture(scope="module")
def coset3(m3):
    return verify_scheme(coset_partition(3, m3.short))


class TestPartition:
    def test_relations_from_values(self, m3):
        words = m3.short.words.astype(np.int64)
        rp = relations_from_values(words, lambda a, b: int(lee_weight((a - b) % 4)), [10, 6, 8])
        assert rp.valencies() == [1, 14, 42, 7]

    def test_unexpected_value(self, m3):
        words = m3.short.words.astype(np.int64)
        with pytest.raises(UnexpectedValueError):
            relations_from_values(words, lambda a, b: int(lee_weight((a - b) % 4)), [10, 6])

    def test_single_point(self):
        rp = RelationPartition(np.zeros((1, 1), dtype=np.uint8))
        assert rp.n == 1 and rp.d == 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            RelationPartition(np.zeros((0, 0), dtype=np.uint8))

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            RelationPartition(np.array([[0, 1], [2, 0]]))

    def test_json_roundtrip(self):
        rp = RelationPartition(np.array([[0, 1, 1], [1, 0, 1], [1, 1, 0]]))
        assert (RelationPartition.from_json(rp.to_json()).class_of == rp.class_of).all()


class TestVerify:
    def test_kerdock_m3(self, kerdock3):
        assert kerdock3.d == 3 and kerdock3.valencies == (1, 14, 42, 7)
        assert not compare_to_reference(kerdock3, closed_form("Y", 16))

    def test_random_coloring_rejected(self):
        rng = np.random.default_rng(5)
        a = np.triu(rng.integers(1, 4, (8, 8)), 1)
        c = a + a.T
        with pytest.raises(SchemeAxiomError) as exc:
            verify_scheme(RelationPartition(c))
        assert exc.value.witness is not None

    def test_complete_graph(self):
        n = 6
        c = np.ones((n, n), dtype=np.uint8) - np.eye(n, dtype=np.uint8)
        p = verify_scheme(RelationPartition(c))
        assert ints(p.P) == [[1, n - 1], [1, -1]]
        assert ints(p.B[1]) == [[0, 1], [n - 1, n - 2]]

    def test_pq_identity_and_krein(self, kerdock3, coset3):
        for p in (kerdock3, coset3):
            assert pq_identity_holds(p)
            assert not negative_krein(p)
            assert not consistency_problems(p)


class TestEigen:
    def test_complete(self):
        B = [[[1, 0], [0, 1]], [[0, 1], [4, 3]]]
        P, Q = eigenmatrices(B, 5)
        assert ints(P) == [[1, 4], [1, -1]]
        assert ints(Q) == [[1, 4], [1, -1]]
        Bs = krein(P, Q, 5)
        assert [[Fraction(x) for x in r] for r in Bs[1]] == [[0, 1], [4, 3]]

    def test_y16(self, kerdock3):
        cf = closed_form("Y", 16)
        assert ints(cf.P) == P16 and ints(cf.Q) == P16
        assert sorted(map(tuple, ints(kerdock3.P))) == sorted(map(tuple, P16))

    def test_y64_entry(self):
        cf = closed_form("Y", 64)
        assert cf.P[1][1] == -60  # -sqrt(N)(N-4)/8


class TestClosedForm:
    def test_krein_entries(self):
        cf = closed_form("Y", 16)
        assert ints(cf.Bstar[1])[1] == [14, 0, 4, 2]
        assert ints(cf.Bstar[3])[3] == [7, 0, 0, 6]

    def test_b3_entries(self):
        b3 = ints(closed_form("Y", 16).B[3])
        assert b3 == [[0, 0, 0, 1], [0, 1, 2, 0], [0, 6, 5, 0], [7, 0, 0, 6]]
        assert all(sum(b3[j][k] for j in range(4)) == 7 for k in range(4))

    def test_x_row(self):
        assert ints(closed_form("X", 16).P)[1] == [1, 32, 0, -32, -1]

    def test_z_row(self):
        assert ints(closed_form("Z", 16).Q)[0] == [1, 15, 105, 7]

    @pytest.mark.parametrize("family", ["Y", "Y-dual", "Z", "X"])
    @pytest.mark.parametrize("N", [16, 64, 256])
    def test_tables_consistent(self, family, N):
        cf = closed_form(family, N)
        assert not tables_self_consistent(cf)
        assert pq_identity_holds(cf)

    @pytest.mark.parametrize("N", [8, 32, 24])
    def test_bad_N(self, N):
        with pytest.raises(ValueError):
            check_N(N)


class TestDuality:
    def test_coset_m3(self, kerdock3, coset3):
        assert not compare_to_reference(coset3, closed_form("Y-dual", 16))
        assert verify_duality(kerdock3, coset3)

    def test_self_dual(self, kerdock3):
        assert verify_duality(kerdock3, kerdock3)

    def test_different_sizes(self):
        assert not verify_duality(closed_form("Y", 16), closed_form("Z", 16))

    def test_rho(self, coset3):
        rho = coset_multiplication_matrices(8)
        for i in range(1, 4):
            assert [[int(coset3.B[i][k][j]) for k in range(4)] for j in range(4)] == rho[i - 1]


class TestCharacters:
    def test_trivial(self, m3):
        j, row = dual_character_check(m3.short, np.zeros(7, dtype=int))
        assert j == 0 and row == [1, 14, 42, 7]

    def test_weight10(self, m3):
        K = m3.short
        u = K.words[int(np.flatnonzero(lee_weight(K.words) == 10)[0])]
        assert dual_character_check(K, u) == (1, [1, -6, 6, -1])

    def test_non_codeword_rejected(self, m3):
        with pytest.raises(ValueError):
            dual_character_check(m3.short, [1, 0, 0, 0, 0, 0, 0])

    def test_character_sum_small(self):
        s = character_sum([1], [[0], [1], [2], [3]])
        assert s.re == 0 and s.im == 0

    @pytest.mark.slow
    def test_m5_rows(self, m5):
        K = m5.short
        Q = closed_form("Y", 64).Q
        w = lee_weight(K.words)
        for weight in (28, 32, 36):
            u = K.words[int(np.flatnonzero(w == weight)[0])]
            j, row = dual_character_check(K, u)
            assert row == ints(Q)[j]


@pytest.mark.slow
class TestM5:
    def test_kerdock_and_coset(self, m5):
        k = verify_scheme(kerdock_partition(5, m5.short))
        c = verify_scheme(coset_partition(5, m5.short))
        assert not compare_to_reference(k, closed_form("Y", 64))
        assert not compare_to_reference(c, closed_form("Y-dual", 64))
        assert verify_duality(k, c)


def test_parameters_json(kerdock3):
    obj = kerdock3.to_json()
    assert obj["P"][0] == ["1/1", "14/1", "42/1", "7/1"]
    assert isinstance(kerdock3, SchemeParameters)
