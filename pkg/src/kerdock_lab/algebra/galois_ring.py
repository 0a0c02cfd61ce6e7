"""The Galois ring GR(4, m) = Z4[x] / (h(x)) for odd m.

``h`` is the Hensel lift of a primitive binary polynomial, so its root
``root`` has multiplicative order ``2^m - 1``.  Elements are stored as
tuples of ``m`` digits in ``{0, 1, 2, 3}`` (coefficients of ``root**i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from kerdock_lab.algebra.fields import PRIMITIVE_POLYNOMIALS, BinaryField, _prime_factors


def _poly_mul_z4(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % 4
    return out


def _graeffe_step(f: list[int]) -> list[int]:
    """Polynomial whose roots are the squares of the roots of ``f`` (mod 4)."""
    even = [c if i % 2 == 0 else 0 for i, c in enumerate(f)]
    odd = [c if i % 2 == 1 else 0 for i, c in enumerate(f)]
    e2 = _poly_mul_z4(even, even)
    o2 = _poly_mul_z4(odd, odd)
    diff = [(x - y) % 4 for x, y in zip(e2, o2)]
    # diff(x) = g(x^2); keep even-indexed coefficients.
    g = diff[0::2]
    if g[-1] == 3:
        g = [(-c) % 4 for c in g]
    return g


def hensel_lift(primitive_poly: int) -> tuple[int, ...]:
    """Hensel lift of a bit-encoded primitive polynomial to Z4.

    Returns the monic lift as coefficients from low to high degree.  The lift
    is computed by the Graeffe square-of-roots step iterated until it is a
    fixed point, then validated by checking that its root has order
    ``2^m - 1``.

    Raises
    ------
    ValueError
        If the degree is not odd and at least 3, or if the input is not
        primitive.
    """
    m = primitive_poly.bit_length() - 1
    if m < 3 or m % 2 == 0:
        raise ValueError(f"degree must be odd and >= 3, got {m}")
    f = [(primitive_poly >> i) & 1 for i in range(m + 1)]
    for _ in range(8):
        g = _graeffe_step(f)
        if g == f:
            break
        f = g
    else:
        raise ValueError("Graeffe iteration did not stabilise")
    lifted = tuple(f)
    ring = GaloisRing(m, primitive_poly, _lift=lifted)
    if ring.root_order() != (1 << m) - 1:
        raise ValueError(f"{primitive_poly:#b} is not primitive over F2")
    return lifted


class GaloisRing:
    """GR(4, m) presented as Z4[root] with ``root`` a root of the Hensel lift."""

    def __init__(self, m: int, primitive_poly: int | None = None, *, _lift: tuple[int, ...] | None = None):
        if m < 3 or m % 2 == 0:
            raise ValueError(f"m must be odd and >= 3, got {m}")
        if primitive_poly is None:
            primitive_poly = PRIMITIVE_POLYNOMIALS[m]
        if primitive_poly.bit_length() - 1 != m:
            raise ValueError("primitive polynomial degree does not match m")
        self.m = m
        self.q = 1 << m
        self.primitive_poly = primitive_poly
        self.lift = _lift if _lift is not None else hensel_lift(primitive_poly)
        self.residue_field = BinaryField(m, primitive_poly)

    def __repr__(self) -> str:
        return f"GaloisRing(m={self.m}, lift={self.lift})"

    # -- element construction -------------------------------------------

    def element(self, coeffs) -> GaloisRingElement:
        coeffs = tuple(int(c) % 4 for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients")
        return GaloisRingElement(self, coeffs)

    @property
    def zero(self) -> GaloisRingElement:
        return GaloisRingElement(self, (0,) * self.m)

    @property
    def one(self) -> GaloisRingElement:
        return GaloisRingElement(self, (1,) + (0,) * (self.m - 1))

    @property
    def root(self) -> GaloisRingElement:
        return GaloisRingElement(self, (0, 1) + (0,) * (self.m - 2))

    def elements(self):
        """All 4^m elements, in lexicographic digit order."""
        from itertools import product

        for digits in product(range(4), repeat=self.m):
            yield GaloisRingElement(self, digits[::-1])

    # -- arithmetic on coefficient tuples --------------------------------

    def _reduce(self, poly: list[int]) -> tuple[int, ...]:
        m = self.m
        poly = [c % 4 for c in poly]
        for deg in range(len(poly) - 1, m - 1, -1):
            c = poly[deg]
            if c:
                # x^m = -(lift[0] + ... + lift[m-1] x^(m-1))
                for i in range(m):
                    poly[deg - m + i] = (poly[deg - m + i] - c * self.lift[i]) % 4
                poly[deg] = 0
        poly += [0] * (m - len(poly))
        return tuple(poly[:m])

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return self._reduce(_poly_mul_z4(list(a), list(b)))

    @cached_property
    def root_powers(self) -> tuple[GaloisRingElement, ...]:
        """``root**k`` for ``k = 0 .. 2m - 2`` and beyond up to ``q - 2``."""
        out = [self.one]
        for _ in range(self.q - 2):
            out.append(out[-1] * self.root)
        return tuple(out)

    def root_order(self) -> int:
        n = self.q - 1
        if self.root ** n != self.one:
            return -1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and self.root ** (order // p) == self.one:
                order //= p
        return order

    def teichmuller_set(self) -> list[GaloisRingElement]:
        """``[0, 1, root, ..., root^(q-2)]``."""
        return [self.zero, *self.root_powers]

    @cached_property
    def trace_of_basis(self) -> tuple[int, ...]:
        """``Tr(root**i)`` for ``i < m``; the trace is Z4-linear in these."""
        return tuple(self.root_powers[i].conjugate_trace() for i in range(self.m))

    @cached_property
    def trace_sequence(self) -> tuple[int, ...]:
        """``Tr(root**k)`` for ``k = 0 .. q - 2``."""
        return tuple(x.trace() for x in self.root_powers)


@dataclass(frozen=True)
class GaloisRingElement:
    ring: GaloisRing
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        return f"GR4({''.join(map(str, self.coeffs))})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring.lift == other.ring.lift

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: GaloisRingElement) -> GaloisRingElement:
        return GaloisRingElement(self.ring, tuple((a + b) % 4 for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: GaloisRingElement) -> GaloisRingElement:
        return GaloisRingElement(self.ring, tuple((a - b) % 4 for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GaloisRingElement:
        return GaloisRingElement(self.ring, tuple((-a) % 4 for a in self.coeffs))

    def __mul__(self, other) -> GaloisRingElement:
        if isinstance(other, int):
            return GaloisRingElement(self.ring, tuple((a * other) % 4 for a in self.coeffs))
        return GaloisRingElement(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaloisRingElement:
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reduce_mod2(self) -> int:
        """Image in GF(2^m), bit-encoded."""
        return sum((c & 1) << i for i, c in enumerate(self.coeffs))

    def frobenius(self) -> GaloisRingElement:
        """The ring automorphism fixing Z4 and sending ``root`` to ``root**2``."""
        ring = self.ring
        acc = ring.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + ring.root_powers[(2 * i) % (ring.q - 1)] * c
        return acc

    def conjugate_trace(self) -> int:
        """Trace to Z4 as the literal sum of the ``m`` Frobenius conjugates."""
        acc = self
        x = self
        for _ in range(self.ring.m - 1):
            x = x.frobenius()
            acc = acc + x
        if any(acc.coeffs[1:]):
            raise ArithmeticError(f"trace of {self} left Z4: {acc}")
        return acc.coeffs[0]

    def trace(self) -> int:
        """Trace to Z4 via linearity over the basis ``1, root, ..., root^(m-1)``."""
        t = self.ring.trace_of_basis
        return sum(c * ti for c, ti in zip(self.coeffs, t)) % 4

    def teichmuller_part(self) -> GaloisRingElement:
        """``a`` in the unique decomposition ``x = a + 2b`` with ``a, b`` Teichmuller."""
        return self ** self.ring.q

    def two_adic(self) -> tuple[GaloisRingElement, GaloisRingElement]:
        a = self.teichmuller_part()
        rest = self - a
        if any(c % 2 for c in rest.coeffs):
            raise ArithmeticError("x - x^q is not divisible by 2")
        b_bits = GaloisRingElement(self.ring, tuple(c // 2 for c in rest.coeffs))
        return a, b_bits.teichmuller_part()
