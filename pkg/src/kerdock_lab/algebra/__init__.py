"""Exact arithmetic: GF(2^m), GR(4,m), Gaussian integers, rational linear algebra."""

from kerdock_lab.algebra.fields import PRIMITIVE_POLYNOMIALS, BinaryField
from kerdock_lab.algebra.galois_ring import GaloisRing, GaloisRingElement, hensel_lift
from kerdock_lab.algebra.numbers import Fraction, GaussianInteger, frac_str, i_power, parse_frac
from kerdock_lab.algebra.poly import Poly

__all__ = [
    "PRIMITIVE_POLYNOMIALS",
    "BinaryField",
    "GaloisRing",
    "GaloisRingElement",
    "hensel_lift",
    "Fraction",
    "GaussianInteger",
    "frac_str",
    "i_power",
    "parse_frac",
    "Poly",
]


def teichmuller_set(m: int) -> list[GaloisRingElement]:
    return GaloisRing(m).teichmuller_set()


def gr4_trace(x: GaloisRingElement) -> int:
    return x.trace()
