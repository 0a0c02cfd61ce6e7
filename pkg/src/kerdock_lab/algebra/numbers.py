"""Gaussian integers and canonical rational strings.

Rationals are :class:`fractions.Fraction` throughout; this module only adds
the ``"num/den"`` wire format and the Gaussian integers needed for Z4
character sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Fraction", "GaussianInteger", "I_POWERS", "i_power", "frac_str", "parse_frac"]


@dataclass(frozen=True)
class GaussianInteger:
    re: int = 0
    im: int = 0

    def __add__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInteger) -> GaussianInteger:
        return GaussianInteger(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInteger:
        return GaussianInteger(-self.re, -self.im)

    def __mul__(self, other) -> GaussianInteger:
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        return GaussianInteger(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianInteger:
        if e < 0:
            raise ValueError("negative powers are only defined for units; use i_power")
        out = GaussianInteger(1, 0)
        for _ in range(e):
            out = out * self
        return out

    def conjugate(self) -> GaussianInteger:
        return GaussianInteger(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


I = GaussianInteger(0, 1)
I_POWERS = (GaussianInteger(1, 0), I, GaussianInteger(-1, 0), GaussianInteger(0, -1))


def i_power(k: int) -> GaussianInteger:
    """``i**k`` for any integer ``k`` (only ``k mod 4`` matters)."""
    return I_POWERS[k % 4]


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s))
