"""Relation partitions of the Kerdock-family point sets."""

from __future__ import annotations

import numpy as np

from kerdock_lab.codes.binary import distance_matrix
from kerdock_lab.codes.kerdock import CosetClassifier, build_shortened_kerdock
from kerdock_lab.codes.words import Code, lee_weight
from kerdock_lab.schemes.partition import RelationPartition, relations_from_matrix


def kerdock_weight_order(m: int) -> tuple[int, int, int]:
    """Lee weights defining classes 1, 2, 3 of the Kerdock scheme."""
    q = 2**m
    e = 2 ** ((m - 1) // 2)
    return (q + e, q - e, q)


def lee_distance_matrix(words, block: int = 256) -> np.ndarray:
    w = np.asarray(words, dtype=np.int64)
    n = len(w)
    out = np.zeros((n, n), dtype=np.int64)
    for start in range(0, n, block):
        chunk = w[start : start + block]
        out[start : start + len(chunk)] = lee_weight((chunk[:, None, :] - w[None, :, :]) % 4)
    return out


def kerdock_partition(m: int, code: Code | None = None) -> RelationPartition:
    """Classes on the shortened Z4-Kerdock code by the Lee weight of differences."""
    code = code or build_shortened_kerdock(m)
    return relations_from_matrix(lee_distance_matrix(code.words), kerdock_weight_order(m))


def coset_partition(m: int, code: Code | None = None, v2_form: str = "a") -> RelationPartition:
    """Classes ``V1, V2, V3`` on the ``4^m`` Preparata cosets, indexed by syndrome."""
    code = code or build_shortened_kerdock(m)
    classes = CosetClassifier(code, v2_form).class_matrix()
    return RelationPartition(classes.astype(np.int64), ("V1", "V2", "V3"))


def binary_distance_partition(words, distances) -> RelationPartition:
    """Classes on a binary code by Hamming distance, in the order given."""
    return relations_from_matrix(distance_matrix(words), distances)
