"""Independent recomputation of a_D(N) through partition convolutions.

Assembles, in the model ring Z[x]/(x^D - 1),

    F_NR(q,D)^2 * F_e(q,1) * Z(q) * prod_{a in qr} F_e(q, zeta^a)
                                  * prod_{b in nr} F_ord(q, zeta^b),

where F_e(q,theta) = prod(1 - theta q^n), F_ord = 1/F_e, and Z collects the
parts with chi_D(n) = 0 (for prime D this is exactly F_ord(q^D, 1)).  The
theta = 1 factor uses the pentagonal expansion; the twisted F_e factors are
multiplied out binomial by binomial, since the pentagonal monomial shortcut
is a theta = 1 identity only; the twisted F_ord factors come from the
length-distribution counts.  Every assembled coefficient must project
exactly onto O_D.  The results are the anti-bug cross-check for the direct
product construction in qseries: no period polynomials, no O_D arithmetic
until the final projection.
"""

from __future__ import annotations

from math import gcd

from .characters import build_char_table
from .cyclotomic import CycPoly, cyc_mul, project_to_quad
from .partitions import length_distribution, p_nr_table, pentagonal_int_series
from .quad_ring import RingElem


class CycSeries:
    """Truncated q-series with CycPoly coefficients (one per q-power)."""

    __slots__ = ("D", "prec", "coeffs")

    def __init__(self, D: int, coeffs: list[CycPoly]):
        self.D = D
        self.coeffs = coeffs
        self.prec = len(coeffs) - 1

    @classmethod
    def from_int_series(cls, D: int, ints) -> "CycSeries":
        return cls(D, [CycPoly.monomial(D, 0, c) for c in ints])

    def mul_dense(self, other: "CycSeries") -> "CycSeries":
        N = self.prec
        out = [CycPoly(self.D) for _ in range(N + 1)]
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j in range(N + 1 - i):
                cj = other.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + cyc_mul(ci, cj)
        return CycSeries(self.D, out)

    def mul_binomial_inplace(self, zexp: int, gap: int) -> None:
        """Multiply by (1 - zeta^zexp * q^gap) in place."""
        coeffs = self.coeffs
        for k in range(self.prec, gap - 1, -1):
            src = coeffs[k - gap]
            if not src.is_zero():
                coeffs[k].add_shifted(src, zexp, -1)


def _int_convolve(u, v, N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, a in enumerate(u[: N + 1]):
        if a == 0:
            continue
        for j in range(min(len(v), N + 1 - i)):
            b = v[j]
            if b:
                out[i + j] += a * b
    return out


def _chi_zero_series(D: int, N: int) -> list[int]:
    """prod over n <= N with gcd(n, D) > 1 of (1 - q^n)^{-1}.

    For prime D these n are the multiples of D and the series is
    F_ord(q^D, 1); the gcd form keeps composite squarefree D correct.
    """
    out = [0] * (N + 1)
    out[0] = 1
    for part in range(1, N + 1):
        if gcd(part, D) > 1:
            for k in range(part, N + 1):
                out[k] += out[k - part]
    return out


def a_via_convolution(D: int, N: int) -> list[RingElem]:
    """a_D(0..N) via the partition-convolution route, fully independent of
    the direct q-series product."""
    ct = build_char_table(D)
    if N < 0:
        raise ValueError("order must be >= 0")

    pnr = p_nr_table(ct, N)
    base = _int_convolve(pnr, pnr, N)                       # F_NR^2
    base = _int_convolve(base, _chi_zero_series(D, N), N)   # chi = 0 parts
    base = _int_convolve(base, pentagonal_int_series(N), N)  # F_e(q, 1)

    series = CycSeries.from_int_series(D, base)

    for a in ct.qr_list:
        for n in range(1, N + 1):
            series.mul_binomial_inplace(a, n)

    c = length_distribution(D, N)
    for b in ct.nr_list:
        coeffs = []
        for k in range(N + 1):
            poly = CycPoly(D)
            row = c[k]
            for r in range(D):
                cnt = row[r]
                if cnt:
                    poly.coeffs[b * r % D] += cnt
            coeffs.append(poly)
        series = series.mul_dense(CycSeries(D, coeffs))

    return [project_to_quad(u, ct) for u in series.coeffs]


def compare_with_eta(D: int, N: int):
    """(matches, mismatches) where mismatches lists (N, direct, oracle)."""
    from .qseries import eta_series

    direct = eta_series(D, N).coeffs
    conv = a_via_convolution(D, N)
    mismatches = [
        (k, direct[k], conv[k]) for k in range(N + 1) if direct[k] != conv[k]
    ]
    return len(direct) - len(mismatches), mismatches
