"""Character sums over the Preparata coset classes."""

from __future__ import annotations

import numpy as np

from kerdock_lab.algebra.numbers import GaussianInteger, i_power
from kerdock_lab.codes.kerdock import COSET_TAGS, coset_representatives
from kerdock_lab.codes.words import Code, lee_weight
from kerdock_lab.schemes.builders import kerdock_weight_order


class NonRealCharacterSum(ArithmeticError):
    pass


def character_sum(u, reps) -> GaussianInteger:
    """``sum_v i^(-<v, u>)`` over the rows ``v`` of ``reps``."""
    pairing = (np.asarray(reps, dtype=np.int64) @ np.asarray(u, dtype=np.int64)) % 4
    counts = np.bincount(pairing, minlength=4)
    total = GaussianInteger(0, 0)
    for e in range(4):
        total = total + i_power(-e) * int(counts[e])
    return total


def kerdock_class_of(u, m: int) -> int:
    """Class index (0..3) of a shortened-Kerdock word by its Lee weight."""
    w = lee_weight(u)
    if w == 0:
        return 0
    order = kerdock_weight_order(m)
    if w not in order:
        raise ValueError(f"Lee weight {w} is not a Kerdock weight for m={m}")
    return order.index(w) + 1


def dual_character_check(kerdock: Code, u, class_reps=None) -> tuple[int, list[int]]:
    """Row of the Kerdock-scheme ``Q`` seen by the character of ``u``.

    Returns ``(j, row)`` with ``j`` the Lee-weight class of ``u`` and
    ``row[k] = sum_{v in V_k} i^(-<v, u>)``.  Only the coset
    representatives are summed over; the Preparata code itself is never
    enumerated.  Raises :class:`NonRealCharacterSum` if a sum is not real.
    """
    u = np.asarray(u, dtype=np.int64) % 4
    if u.shape != (kerdock.length,):
        raise ValueError("u has the wrong length")
    if u.astype(np.uint8) not in kerdock:
        raise ValueError("u is not a codeword of the shortened Kerdock code")
    m = kerdock.generators.shape[0]
    reps = class_reps or coset_representatives(kerdock.length)
    row = []
    for tag in COSET_TAGS:
        s = character_sum(u, reps[tag])
        if not s.is_real:
            raise NonRealCharacterSum(f"character sum over {tag} is {s}")
        row.append(s.re)
    return kerdock_class_of(u, m), row
