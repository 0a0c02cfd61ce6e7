"""Binary extension fields GF(2^m).

Elements are plain integers whose bits are the polynomial coordinates
modulo a fixed primitive polynomial (bit ``i`` is the coefficient of
``x**i``).
"""

from __future__ import annotations

from functools import cached_property

# Defaults per odd extension degree; overridable by passing ``modulus``.
PRIMITIVE_POLYNOMIALS: dict[int, int] = {
    3: 0b1011,  # x^3 + x + 1
    5: 0b100101,  # x^5 + x^2 + 1
    7: 0b10001001,  # x^7 + x^3 + 1
}


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class BinaryField:
    """GF(2^m) with elements encoded as ``m``-bit integers.

    Parameters
    ----------
    m : int
        Extension degree.
    modulus : int, optional
        Bit-encoded monic polynomial of degree ``m``.  Defaults to the
        built-in primitive polynomial for ``m``.
    """

    def __init__(self, m: int, modulus: int | None = None) -> None:
        if modulus is None:
            if m not in PRIMITIVE_POLYNOMIALS:
                raise ValueError(f"no default primitive polynomial for m={m}")
            modulus = PRIMITIVE_POLYNOMIALS[m]
        if modulus.bit_length() != m + 1:
            raise ValueError("modulus degree does not match m")
        self.m = m
        self.modulus = modulus
        self.order = 1 << m

    def __repr__(self) -> str:
        return f"BinaryField(m={self.m}, modulus={self.modulus:#b})"

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.m:
                a ^= self.modulus
        return r

    def pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^m)")
        return self.pow(a, self.order - 2)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        n = self.order - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    def is_primitive_modulus(self) -> bool:
        """True iff ``x`` generates the multiplicative group."""
        return self.pow(0b10, self.order - 1) == 1 and self.multiplicative_order(0b10) == self.order - 1

    @cached_property
    def generator_powers(self) -> tuple[int, ...]:
        """``x**k`` for ``k = 0 .. 2^m - 2``."""
        out = [1]
        for _ in range(self.order - 2):
            out.append(self.mul(out[-1], 0b10))
        return tuple(out)
