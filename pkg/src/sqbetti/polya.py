"""Binary bracelet counting via the dihedral cycle index.

A bracelet is an equivalence class of bead arrangements on a cycle under
rotations *and* reflections.  The boundary strata counted in this package are
indexed by two-color bracelets: the curve automorphisms acting on a cycle of
rational components include the full dihedral reflection, not just rotations,
so the plain rotation-only necklace count would overcount strata.

Counts are extracted coefficient-by-coefficient from the cycle index of the
dihedral group specialized to two colors (Burnside sum with binomial
coefficients), never by orbit enumeration, so lengths in the hundreds stay
instant.  An orbit-enumeration oracle lives in the test suite only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .polynomial import IntPolynomial


def totient(k: int) -> int:
    """Euler's totient phi(k): the number of units mod k.

    >>> [totient(k) for k in range(1, 8)]
    [1, 1, 2, 2, 4, 2, 6]
    """
    if k < 1:
        raise ValueError("totient is defined for positive integers only")
    result = k
    n = k
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


@dataclass(frozen=True)
class BraceletQuery:
    """A bracelet counting problem: ``total`` beads, ``black`` of them black."""

    total: int
    black: int

    def __post_init__(self):
        if self.total < 1:
            raise ValueError("bead total must be positive")
        if not 0 <= self.black <= self.total:
            raise ValueError("black bead count must lie in [0, total]")

    def count(self) -> int:
        return bracelet_count(self.total, self.black)


def _rotation_orbit_sum(d: int, i: int) -> int:
    # Burnside sum over the d rotations: a rotation of order g fixes
    # colorings constant on its d/g cycles of length g.
    total = 0
    for g in range(1, d + 1):
        if d % g == 0 and i % g == 0:
            total += totient(g) * math.comb(d // g, i // g)
    return total


def _reflection_fixed_count(d: int, i: int) -> int:
    # Summed count of i-black colorings fixed by each of the d reflections,
    # read off the reflections' cycle types.
    if d % 2 == 1:
        # every axis passes through one bead and (d-1)/2 transposed pairs
        return d * math.comb((d - 1) // 2, i // 2)
    half = d // 2
    # d/2 axes through two beads, d/2 axes through two gaps
    through_gaps = math.comb(half, i // 2) if i % 2 == 0 else 0
    if i % 2 == 0:
        through_beads = math.comb(half - 1, i // 2) + (
            math.comb(half - 1, i // 2 - 1) if i >= 2 else 0
        )
    else:
        through_beads = 2 * math.comb(half - 1, (i - 1) // 2)
    return half * (through_gaps + through_beads)


def bracelet_count(total: int, black: int) -> int:
    """Number of bracelets with ``black`` black and ``total - black`` white beads.

    >>> bracelet_count(4, 2)
    2
    >>> bracelet_count(6, 3)
    3
    """
    BraceletQuery(total, black)
    numerator = _rotation_orbit_sum(total, black) + _reflection_fixed_count(
        total, black
    )
    count, remainder = divmod(numerator, 2 * total)
    if remainder != 0:
        raise ArithmeticError(
            f"Burnside sum {numerator} not divisible by group order {2 * total}"
        )
    return count


def bracelet_count_for(query: BraceletQuery) -> int:
    return bracelet_count(query.total, query.black)


@lru_cache(maxsize=None)
def bracelet_generating_polynomial(d: int) -> IntPolynomial:
    """Sum over i of N(d, i) * t^(2(d - i)), N(d, i) the bracelet count.

    The exponent pairs the count for i black beads with degree 2(d - i); by
    the black/white swap symmetry N(d, i) = N(d, d - i) the result is
    palindromic in t^2.

    >>> print(bracelet_generating_polynomial(2))
    1 + t^2 + t^4
    """
    if d < 1:
        raise ValueError("bead total must be positive")
    coeffs = [0] * (2 * d + 1)
    for i in range(d + 1):
        coeffs[2 * (d - i)] = bracelet_count(d, i)
    return IntPolynomial(coeffs)


def total_bracelets(d: int) -> int:
    """Total number of two-color bracelets of length d (cycle index at 2).

    >>> [total_bracelets(d) for d in range(1, 7)]
    [2, 3, 4, 6, 8, 13]
    """
    if d < 1:
        raise ValueError("bead total must be positive")
    rotations = sum(
        totient(g) * 2 ** (d // g) for g in range(1, d + 1) if d % g == 0
    )
    if d % 2 == 1:
        reflections = d * 2 ** ((d + 1) // 2)
    else:
        reflections = (d // 2) * (2 ** (d // 2) + 2 ** (d // 2 + 1))
    total, remainder = divmod(rotations + reflections, 2 * d)
    if remainder != 0:
        raise ArithmeticError("cycle index evaluation must be an integer")
    return total
