from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from kerdock_lab.codes import (
    BinaryQuadraticForm,
    Code,
    CosetClassifier,
    build_punctured_simplex_14_4,
    classify_coset,
    distance_distribution,
    gray_map,
    hamming_distance,
    hamming_weight,
    is_kerdock_like,
    lee_weight,
    coset_representatives,
    minimum_distance,
    preparata_syndrome,
    quadratic_form_stats,
    rm_degree,
    syndrome_index,
    t_r_eval,
    t_r_identity_holds,
)
from kerdock_lab.codes.binary import truth_table
from kerdock_lab.codes.kerdock import binary_kerdock_labels


class TestWords:
    def test_lee_weight(self):
        assert lee_weight([1, 2, 3, 0]) == 4
        assert lee_weight([0, 0, 0]) == 0

    def test_gray_map_convention(self):
        assert gray_map([2]).tolist() == [1, 1]
        assert gray_map([0, 0, 0]).tolist() == [0] * 6

    def test_gray_isometry_exhaustive_length4(self):
        words = np.array(list(product(range(4), repeat=4)), dtype=np.uint8)
        assert (hamming_weight(gray_map(words)) == lee_weight(words)).all()

    def test_hamming_distance(self):
        assert hamming_distance([0, 1, 1, 0], [1, 1, 0, 0]) == 2

    def test_json_roundtrip(self, m3):
        for code in (m3.short, m3.binary):
            back = Code.from_json(code.to_json())
            assert back.word_set() == code.word_set()

    def test_json_rejects_bad_digit(self):
        with pytest.raises(ValueError):
            Code.from_json({"alphabet": "F2", "length": 2, "words": ["02"]})


class TestKerdock:
    def test_short_spectrum_m3(self, m3):
        wd = m3.short.weight_distribution()
        assert wd == {0: 1, 6: 42, 8: 7, 10: 14}
        assert m3.short.size == 64 and m3.short.length == 7

    def test_zero_coefficient_gives_zero_word(self, m3):
        assert np.zeros(7, dtype=np.uint8) in m3.short

    def test_full_code(self, m3):
        assert m3.full.size == 4 ** (3 + 1) and m3.full.length == 8
        assert np.ones(8, dtype=np.uint8) in m3.full

    def test_full_contains_shortened(self, m3):
        # the words of the full code with a zero in the extra coordinate and no all-ones part
        full = m3.full.shorten(0).word_set()
        assert m3.short.word_set() <= full

    def test_cardinality_from_generators(self, m3):
        assert m3.short.cardinality() == 64

    def test_puncture_length(self, m3):
        assert m3.full.puncture(3).length == 7

    def test_double_shortened_binary(self, m3):
        c = m3.binary.double_shorten(0, 1)
        assert c.size == 64 and c.length == 14
        assert set(distance_distribution(c.words)) - {0} == {6, 8, 10}

    def test_double_shorten_needs_distinct_positions(self, m3):
        with pytest.raises(ValueError):
            m3.binary.double_shorten(2, 2)

    def test_binary_kerdock_degree_two(self, m3):
        labels = binary_kerdock_labels(3)
        degrees = {rm_degree(truth_table(w, labels)) for w in m3.binary.words}
        assert max(degrees) == 2

    @pytest.mark.slow
    def test_short_spectrum_m5(self, m5):
        assert m5.short.weight_distribution() == {0: 1, 28: 620, 32: 31, 36: 372}


class TestTR:
    def test_zero_form(self):
        R = np.zeros((3, 3), dtype=int)
        assert all(t_r_eval(R, v) == 0 for v in product((0, 1), repeat=3))

    def test_identity_form_counts_bits(self):
        R = np.eye(3, dtype=int)
        for v in product((0, 1), repeat=3):
            assert t_r_eval(R, v) == sum(v) % 4

    def test_identity_exhaustive(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            a = rng.integers(0, 2, (3, 3))
            R = np.triu(a) + np.triu(a, 1).T
            for u in product((0, 1), repeat=3):
                for v in product((0, 1), repeat=3):
                    assert t_r_identity_holds(R, u, v)

    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            t_r_eval([[0, 1], [0, 0]], [1, 1])


class TestPreparata:
    def test_kernel_words_have_zero_syndrome(self, m3):
        K = m3.short
        words = np.array(list(product(range(4), repeat=7)), dtype=np.int64)
        s = preparata_syndrome(words, K)
        kernel = words[(s == 0).all(axis=1)]
        assert len(kernel) == 4**7 // 64
        assert (preparata_syndrome(kernel[:5], K) == 0).all()

    def test_representatives_distinct(self, m3):
        reps = coset_representatives(7)
        sizes = {t: len(r) for t, r in reps.items()}
        assert sizes == {"V0": 1, "V1": 14, "V2": 42, "V3": 7}
        allreps = np.vstack(list(reps.values()))
        idx = syndrome_index(preparata_syndrome(allreps, m3.short))
        assert len(set(np.atleast_1d(idx).tolist())) == 64

    def test_classify(self, m3):
        assert classify_coset(np.zeros(7, dtype=np.uint8), m3.short).tag == "V0"
        c = CosetClassifier(m3.short)
        assert c.class_sizes == {"V0": 1, "V1": 14, "V2": 42, "V3": 7}

    @pytest.mark.parametrize("form", ["b", "c"])
    def test_alternative_forms_agree(self, m3, form):
        a = CosetClassifier(m3.short, "a").class_matrix()
        b = CosetClassifier(m3.short, form).class_matrix()
        assert (a == b).all()


class TestBinary:
    def test_simplex(self):
        c = build_punctured_simplex_14_4()
        assert c.size == 16
        assert c.weight_distribution() == {0: 1, 7: 8, 8: 7}
        assert minimum_distance(c.words) == 7

    def test_kerdock_like(self, m3):
        assert is_kerdock_like(m3.binary, 16)
        rng = np.random.default_rng(0)
        rand = rng.integers(0, 2, (256, 16)).astype(np.uint8)
        assert not is_kerdock_like(rand, 16)
        rep = np.array([[0] * 16, [1] * 16], dtype=np.uint8)
        assert not is_kerdock_like(rep, 16)

    def test_quadratic_forms(self):
        assert quadratic_form_stats(BinaryQuadraticForm.from_terms(4, [])).zero_count == 16
        hyp = BinaryQuadraticForm.from_terms(4, [(0, 1), (2, 3)]).stats()
        assert (hyp.radical_dim, hyp.zero_count, hyp.chi) == (0, 10, 1)
        ell = BinaryQuadraticForm.from_terms(4, [(0, 1), (2, 3), (2, 2), (3, 3)]).stats()
        assert (ell.zero_count, ell.chi) == (6, -1)

    def test_zero_form_has_full_radical(self):
        s = BinaryQuadraticForm.from_terms(4, []).stats()
        assert s.radical_dim == 4 and s.chi is None
