"""Z4 and binary codes: Kerdock, Preparata cosets, Gray images, quadratic forms."""

from kerdock_lab.codes.binary import (
    BinaryQuadraticForm,
    QuadraticFormStats,
    build_punctured_simplex_14_4,
    distance_distribution,
    is_kerdock_like,
    minimum_distance,
    quadratic_form_stats,
    rm_degree,
)
from kerdock_lab.codes.kerdock import (
    COSET_TAGS,
    CosetClass,
    CosetClassifier,
    CosetPartitionError,
    binary_kerdock_labels,
    build_binary_kerdock,
    build_full_z4_kerdock,
    build_shortened_kerdock,
    classify_coset,
    coset_representatives,
    preparata_syndrome,
    syndrome_index,
    t_r_eval,
    t_r_identity_holds,
)
from kerdock_lab.codes.words import (
    Code,
    gray_map,
    hamming_distance,
    hamming_weight,
    lee_distance,
    lee_weight,
)


def shorten(code: Code, position: int) -> Code:
    return code.shorten(position)


def puncture(code: Code, position: int) -> Code:
    return code.puncture(position)


def double_shorten(code: Code, pos1: int, pos2: int) -> Code:
    return code.double_shorten(pos1, pos2)


__all__ = [
    "COSET_TAGS",
    "BinaryQuadraticForm",
    "Code",
    "CosetClass",
    "CosetClassifier",
    "CosetPartitionError",
    "QuadraticFormStats",
    "binary_kerdock_labels",
    "build_binary_kerdock",
    "build_full_z4_kerdock",
    "build_punctured_simplex_14_4",
    "build_shortened_kerdock",
    "classify_coset",
    "distance_distribution",
    "double_shorten",
    "gray_map",
    "hamming_distance",
    "hamming_weight",
    "is_kerdock_like",
    "lee_distance",
    "lee_weight",
    "coset_representatives",
    "minimum_distance",
    "preparata_syndrome",
    "puncture",
    "quadratic_form_stats",
    "rm_degree",
    "shorten",
    "syndrome_index",
    "t_r_eval",
    "t_r_identity_holds",
]
