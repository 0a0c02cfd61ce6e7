from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from kerdock_lab.codes import Code
from kerdock_lab.mub.config import (
    SphericalConfig,
    build_X,
    build_Y,
    build_Z,
    class_cosines,
    code_bijection,
    cosine_profiles_uniform,
    standard_index,
)
from kerdock_lab.mub.lines import (
    NotKerdockLikeError,
    NotMaximalMUBError,
    SignedLineSet,
    code_to_lines,
    group_into_bases,
    lines_to_code,
)
from kerdock_lab.schemes.closed_form import closed_form
from kerdock_lab.schemes.parameters import compare_to_reference, verify_scheme


class TestLines:
    def test_counts(self, m3):
        L = m3.lines
        assert len(L.vectors) == 256
        assert len(L.line_representatives()) == 128
        assert L.is_antipodal()

    def test_zero_word_is_all_plus(self, m3):
        i = m3.binary.index_of(np.zeros(16, dtype=np.uint8))
        assert (m3.lines.vectors[i] == 1).all()

    def test_distances_to_dots(self, m3):
        v = m3.lines.vectors.astype(np.int64)
        dots = v @ v.T
        w = m3.binary.words.astype(np.int64)
        dist = (w[:, None, :] != w[None, :, :]).sum(axis=2)
        assert ((16 - 2 * dist) == dots).all()
        assert set(np.unique(dots)) == {-16, -4, 0, 4, 16}

    def test_roundtrip(self, m3):
        assert lines_to_code(m3.lines).word_set() == m3.binary.word_set()

    def test_bases(self, m3):
        bases = group_into_bases(m3.lines)
        assert len(bases) == 9
        assert all(b.shape == (16, 16) for b in bases)
        assert (bases[-1] == np.eye(16)).all()

    def test_single_basis(self):
        h = np.array([[1, 1], [1, -1]])
        H = np.kron(np.kron(h, h), np.kron(h, h))
        bases = group_into_bases(SignedLineSet(16, H))
        assert len(bases) == 2

    def test_not_maximal(self):
        h = np.array([[1, 1], [1, -1]])
        H = np.kron(np.kron(h, h), np.kron(h, h))
        with pytest.raises(NotMaximalMUBError):
            group_into_bases(SignedLineSet(16, H[:5]))

    def test_non_kerdock_rejected(self):
        words = np.random.default_rng(2).integers(0, 2, (256, 16)).astype(np.uint8)
        with pytest.raises(NotKerdockLikeError):
            code_to_lines(Code("F2", words))

    @pytest.mark.slow
    def test_m5_bases(self, m5):
        assert len(group_into_bases(m5.lines)) == 33


class TestConfigs:
    def test_sizes_and_cosines(self, m3):
        assert m3.X.n_points == 288
        assert m3.Z.n_points == 128
        assert m3.Y.n_points == 64
        F = Fraction
        assert m3.X.inner_products() == [F(-1), F(-1, 4), F(0), F(1, 4)]
        assert m3.Z.inner_products() == [F(-1, 3), F(-1, 15), F(1, 5)]
        assert m3.Y.inner_products() == [F(-3, 7), F(-1, 7), F(1, 7)]

    def test_antipodal_pairs(self, m3):
        assert m3.X.cosine_counts(include_diagonal=False)[Fraction(-1)] == 288

    def test_uniform_profiles(self, m3):
        assert all(cosine_profiles_uniform(c) for c in (m3.X, m3.Y, m3.Z))

    @pytest.mark.parametrize("name", ["X", "Z", "Y"])
    def test_tables(self, m3, name):
        cfg = getattr(m3, name)
        p = verify_scheme(cfg.scheme_partition())
        assert not compare_to_reference(p, closed_form(name, 16))

    def test_rank_both_methods(self, m3):
        for cfg, r in ((m3.Y, 14), (m3.Z, 15), (m3.X, 16)):
            assert cfg.rank_and_psd("model") == (r, True)
            assert cfg.rank_and_psd("gram") == (r, True)

    def test_integer_model_certifies_cosines(self, m3):
        assert m3.Y.has_integer_model() and m3.Z.has_integer_model()

    def test_other_reference_points(self, m3):
        X = m3.X
        Y = build_Y(X, standard_index(3), standard_index(5, -1))
        p = verify_scheme(Y.scheme_partition())
        assert not compare_to_reference(p, closed_form("Y", 16))
        # a sign vector as reference: no integer model, Gram route only
        Z = build_Z(X, 2 * 16 + 7)
        assert Z.vectors is None
        assert Z.rank_and_psd() == (15, True)

    def test_non_orthogonal_rejected(self, m3):
        with pytest.raises(ValueError):
            build_Y(m3.X, standard_index(0), standard_index(0, -1))

    def test_json_roundtrip(self, m3):
        back = SphericalConfig.from_json(m3.Y.to_json())
        assert (back.num * m3.Y.den == m3.Y.num * back.den).all()
        assert back.family == "Y" and back.dim == 14

    def test_bad_gram(self):
        with pytest.raises(ValueError):
            SphericalConfig(np.array([[2, 1], [0, 2]]), 2, 2)

    def test_class_cosines(self):
        assert class_cosines("Y", 16) == (Fraction(-3, 7), Fraction(1, 7), Fraction(-1, 7))

    def test_y_matches_doubly_shortened(self, m3):
        a = code_bijection(m3.Y, m3.binary.double_shorten(0, 1))
        assert a is not None and sorted(a.tolist()) == list(range(64))

    def test_bijection_detects_mismatch(self, m3):
        assert code_bijection(m3.Y, m3.binary.double_shorten(2, 3)) is None

    def test_build_x_rejects_wrong_count(self, m3):
        with pytest.raises(ValueError):
            build_X(SignedLineSet(16, m3.lines.vectors[:100]))


@pytest.mark.slow
class TestN64:
    @pytest.mark.parametrize("name", ["Y", "Z"])
    def test_tables(self, m5, name):
        cfg = getattr(m5, name)
        p = verify_scheme(cfg.scheme_partition())
        assert not compare_to_reference(p, closed_form(name, 64))

    def test_ranks(self, m5):
        assert m5.Y.rank_and_psd() == (62, True)
        assert m5.Z.rank_and_psd() == (63, True)
