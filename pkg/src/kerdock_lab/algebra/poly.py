"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class Poly:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots) -> Poly:
        p = cls([1])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly([other])
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-other if isinstance(other, Poly) else Poly([-Fraction(other)]))

    def __rsub__(self, other) -> Poly:
        return Poly([other]) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly([c * x for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)


def binomial_poly(a: Poly, j: int) -> Poly:
    """``C(a(t), j)`` as a polynomial in ``t``."""
    out = Poly([1])
    for i in range(j):
        out = out * (a - i)
    return out * Fraction(1, factorial(j))


def expand_in_basis(p: Poly, basis: list[Poly]) -> list[Fraction]:
    """Coefficients ``c`` with ``p = sum c[k] basis[k]``.

    ``basis[k]`` must have exact degree ``k``; the expansion is unique.
    """
    if p.degree >= len(basis):
        raise ValueError("basis too short for polynomial degree")
    for k, b in enumerate(basis):
        if b.degree != k:
            raise ValueError(f"basis element {k} has degree {b.degree}")
    rest = p
    out = [Fraction(0)] * len(basis)
    for k in range(len(basis) - 1, -1, -1):
        c = rest.coeff(k) / basis[k].coeffs[k]
        out[k] = c
        rest = rest - basis[k] * c
    if rest.coeffs:
        raise ArithmeticError("expansion residue nonzero")
    return out
