"""Integer lattices from codes and MUB configurations."""

from kerdock_lab.lattices.core import (
    IntegerLattice,
    NonLinearCodeError,
    ThetaPrefix,
    construction_a,
    hnf,
    lattice_from_vectors,
    minimal_vectors,
    theta_by_cosets,
    theta_by_enumeration,
    theta_prefix,
    with_residues,
)
from kerdock_lab.lattices.models import (
    BW16Report,
    LatticeClaimError,
    YLatticeModel,
    bw16_membership_check,
    code_permutation,
    y_lattice_matches_construction_a,
    y_lattice_model,
    y_theta,
)

__all__ = [
    "BW16Report",
    "IntegerLattice",
    "LatticeClaimError",
    "NonLinearCodeError",
    "ThetaPrefix",
    "YLatticeModel",
    "bw16_membership_check",
    "code_permutation",
    "construction_a",
    "hnf",
    "lattice_from_vectors",
    "minimal_vectors",
    "theta_by_cosets",
    "theta_by_enumeration",
    "theta_prefix",
    "with_residues",
    "y_lattice_matches_construction_a",
    "y_lattice_model",
    "y_theta",
]
