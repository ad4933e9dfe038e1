"""Special values of L(s, chi_D): exact L(-1) and numeric L'(0).

L(-1, chi_D) comes from the closed finite sum -S/(2D) with
S = sum_{n=1}^{D} n^2 chi_D(n); for D > 5 it is a negative even integer
(equivalently 4D | S), for D = 5 it equals -2/5.  L'(0, chi_D) uses the
log-Gamma formula for even primitive characters,
L'(0, chi) = sum_a chi(a) log Gamma(a/D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .characters import CharTable


class LValueError(ValueError):
    """L-value invariant failed (bad discriminant or character bug)."""


@dataclass(frozen=True)
class LValueRecord:
    """Exact data at s = -1: the character sum S, L(-1) and m = -L(-1)/2."""

    D: int
    S_chi: int
    l_minus_one: Fraction
    m_exponent: Fraction


def l_minus_one(ct: CharTable) -> LValueRecord:
    """Exact L(-1, chi_D) = -S/(2D) with its structural invariants checked."""
    D = ct.D
    S = sum(n * n * ct.values[n % D] for n in range(1, D + 1))
    l = Fraction(-S, 2 * D)
    m = -l / 2
    if D == 5:
        if l != Fraction(-2, 5):
            raise LValueError(f"L(-1, chi_5) = {l}, expected -2/5")
    else:
        if l.denominator != 1 or l >= 0 or l % 2 != 0:
            raise LValueError(
                f"L(-1, chi_{D}) = {l} is not a negative even integer"
            )
        if S % (4 * D) != 0:
            raise LValueError(f"S(chi_{D}) = {S} is not divisible by 4D")
    if m <= 0:
        raise LValueError(f"valuation exponent m = {m} must be positive")
    return LValueRecord(D=D, S_chi=S, l_minus_one=l, m_exponent=m)


def l_prime_zero(ct: CharTable, digits: int = 30) -> mpmath.mpf:
    """L'(0, chi_D) = sum_{a=1}^{D-1} chi_D(a) log Gamma(a/D), to `digits`."""
    D = ct.D
    with mpmath.workdps(digits + 10):
        total = mpmath.mpf(0)
        for a in range(1, D):
            c = ct.values[a]
            if c:
                total += c * mpmath.loggamma(mpmath.mpf(a) / D)
        return +total


def l_function_hurwitz(ct: CharTable, s, digits: int = 30) -> mpmath.mpf:
    """L(s, chi_D) via the Hurwitz-zeta decomposition, for cross-checks.

    Independent of the log-Gamma route: finite differences of this function
    at s = 0 must reproduce l_prime_zero.
    """
    D = ct.D
    with mpmath.workdps(digits + 10):
        s = mpmath.mpf(s)
        total = mpmath.mpf(0)
        for a in range(1, D):
            c = ct.values[a]
            if c:
                total += c * mpmath.zeta(s, mpmath.mpf(a) / D)
        return +(mpmath.power(D, -s) * total)
