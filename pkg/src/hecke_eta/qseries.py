"""Truncated power series over O_D and the exact eta-analogue coefficients.

A QSeries carries coefficients a(0..N) in O_D plus an exact rational
valuation v, and stands for q^v * sum a(k) q^k in q = exp(2 pi i z/sqrt(D)).
The eta constructor multiplies out, for each n <= N,

    (1 - q^n)^{chi_D(n)} * f_plus(q^n) / f_minus(q^n),

with f_plus/f_minus the period polynomials, staying in exact O_D arithmetic
throughout (denominators never exceed the fixed 2).  The hot loops run on
plain numerator pairs rather than RingElem objects; divisions assert
exactness, so any sign-convention error in sqrt(D) aborts immediately.
"""

from __future__ import annotations

from fractions import Fraction

from .characters import build_char_table
from .cyclotomic import period_polynomials
from .lseries import l_minus_one
from .quad_ring import RingElem, RingCtx, RingError, ring_ctx

# Guard against runaway allocations from CLI input; generous for this domain.
MAX_ORDER = 200_000


class SeriesError(ValueError):
    """Incompatible operands or non-invertible series."""


class QSeries:
    """Truncated series over O_D with rational valuation metadata."""

    __slots__ = ("ctx", "prec", "coeffs", "valuation")

    def __init__(self, ctx: RingCtx, coeffs, valuation=Fraction(0)):
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        self.prec = len(self.coeffs) - 1
        self.valuation = Fraction(valuation)
        for c in self.coeffs:
            if c.ctx.D != ctx.D:
                raise RingError("coefficient context mismatch")

    @classmethod
    def one(cls, ctx: RingCtx, prec: int) -> "QSeries":
        coeffs = [RingElem.from_int(1, ctx)] + [
            RingElem.from_int(0, ctx) for _ in range(prec)
        ]
        return cls(ctx, coeffs)

    @classmethod
    def _from_pairs(cls, ctx: RingCtx, A, B, valuation=Fraction(0)) -> "QSeries":
        return cls(
            ctx,
            [RingElem(a, b, ctx) for a, b in zip(A, B)],
            valuation,
        )

    def _pairs(self) -> tuple[list[int], list[int]]:
        return [c.num_a for c in self.coeffs], [c.num_b for c in self.coeffs]

    def __eq__(self, other):
        return (
            isinstance(other, QSeries)
            and self.ctx.D == other.ctx.D
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:4])
        return (
            f"QSeries(D={self.ctx.D}, v={self.valuation}, prec={self.prec}, "
            f"[{head}, ...])"
        )


def _check_compat(f: QSeries, g: QSeries) -> None:
    if f.ctx.D != g.ctx.D:
        raise SeriesError(f"context mismatch: D={f.ctx.D} vs D={g.ctx.D}")
    if f.prec != g.prec:
        raise SeriesError(f"precision mismatch: {f.prec} vs {g.prec}")


def _halve(n: int) -> int:
    q, r = divmod(n, 2)
    if r:
        raise RingError("internal corruption: odd numerator after convolution")
    return q


def _mul_pairs(A1, B1, A2, B2, D: int, N: int) -> tuple[list[int], list[int]]:
    """Truncated product of two numerator-pair series over denominator 2."""
    A = [0] * (N + 1)
    B = [0] * (N + 1)
    for i in range(N + 1):
        a1 = A1[i]
        b1 = B1[i]
        if a1 == 0 and b1 == 0:
            continue
        for j in range(N + 1 - i):
            a2 = A2[j]
            b2 = B2[j]
            if a2 == 0 and b2 == 0:
                continue
            A[i + j] += a1 * a2 + D * b1 * b2
            B[i + j] += a1 * b2 + b1 * a2
    return [_halve(a) for a in A], [_halve(b) for b in B]


def _inv_pairs(A1, B1, D: int, N: int) -> tuple[list[int], list[int]]:
    """Inverse of a pair series whose constant term is +1 or -1."""
    if (A1[0], B1[0]) == (2, 0):
        s = 1
    elif (A1[0], B1[0]) == (-2, 0):
        s = -1
    else:
        raise SeriesError("series_inv needs constant term +1 or -1")
    A = [0] * (N + 1)
    B = [0] * (N + 1)
    A[0] = 2 * s
    for k in range(1, N + 1):
        sa = 0
        sb = 0
        for i in range(1, k + 1):
            a1, b1 = A1[i], B1[i]
            if a1 == 0 and b1 == 0:
                continue
            a2, b2 = A[k - i], B[k - i]
            sa += a1 * a2 + D * b1 * b2
            sb += a1 * b2 + b1 * a2
        # b_k = -s * sum, with the sum carrying denominator 4 = 2*2
        A[k] = -s * _halve(sa)
        B[k] = -s * _halve(sb)
    return A, B


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    """Exact truncated product; valuations add."""
    _check_compat(f, g)
    A1, B1 = f._pairs()
    A2, B2 = g._pairs()
    A, B = _mul_pairs(A1, B1, A2, B2, f.ctx.D, f.prec)
    return QSeries._from_pairs(f.ctx, A, B, f.valuation + g.valuation)


def series_inv(f: QSeries) -> QSeries:
    """Exact truncated inverse; requires constant term +1 or -1."""
    A1, B1 = f._pairs()
    A, B = _inv_pairs(A1, B1, f.ctx.D, f.prec)
    return QSeries._from_pairs(f.ctx, A, B, -f.valuation)


def series_pow(f: QSeries, k: int) -> QSeries:
    """f**k for positive integer k, by binary powering."""
    if k < 1:
        raise SeriesError("series_pow needs a positive integer exponent")
    result = None
    base = f
    while k:
        if k & 1:
            result = base if result is None else series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def sparse_binomial_apply(f: QSeries, n: int, e: int) -> QSeries:
    """Multiply (e = +1) or divide (e = -1) by (1 - q^n) in O(prec) steps."""
    if not 1 <= n <= f.prec:
        raise SeriesError(f"gap n={n} out of range 1..{f.prec}")
    if e not in (1, -1):
        raise SeriesError("exponent must be +1 or -1")
    A, B = f._pairs()
    _binomial_inplace(A, B, n, e)
    return QSeries._from_pairs(f.ctx, A, B, f.valuation)


def _binomial_inplace(A, B, n: int, e: int) -> None:
    N = len(A) - 1
    if e == 1:
        for k in range(N, n - 1, -1):
            A[k] -= A[k - n]
            B[k] -= B[k - n]
    else:
        for k in range(n, N + 1):
            A[k] += A[k - n]
            B[k] += B[k - n]


def _poly_mul_inplace(A, B, fpa, fpb, n: int, D: int) -> None:
    """In-place multiply by the polynomial sum_j (fpa[j]+fpb[j] sqrtD)/2 q^{jn}.

    Requires constant term 1, i.e. (fpa[0], fpb[0]) = (2, 0).
    """
    N = len(A) - 1
    deg = len(fpa) - 1
    for k in range(N, n - 1, -1):
        sa = 0
        sb = 0
        jmax = min(deg, k // n)
        for j in range(1, jmax + 1):
            fa = fpa[j]
            fb = fpb[j]
            x = A[k - j * n]
            y = B[k - j * n]
            sa += fa * x + D * fb * y
            sb += fa * y + fb * x
        if sa or sb:
            A[k] += _halve(sa)
            B[k] += _halve(sb)


def _poly_div_inplace(A, B, fma, fmb, n: int, D: int) -> None:
    """In-place divide by the polynomial with pair coefficients (fma, fmb).

    Constant term must be 1; the division is exact in O_D by ring closure
    (unit constant term), and _halve asserts it.
    """
    N = len(A) - 1
    deg = len(fma) - 1
    for k in range(n, N + 1):
        sa = 0
        sb = 0
        jmax = min(deg, k // n)
        for j in range(1, jmax + 1):
            fa = fma[j]
            fb = fmb[j]
            x = A[k - j * n]
            y = B[k - j * n]
            sa += fa * x + D * fb * y
            sb += fa * y + fb * x
        if sa or sb:
            A[k] -= _halve(sa)
            B[k] -= _halve(sb)


def eta_series(D: int, N: int) -> QSeries:
    """Coefficients a_D(0..N) of the eta analogue for H(sqrt(D)).

    Builds prod_{n<=N} (1-q^n)^{chi(n)} f_plus(q^n) f_minus(q^n)^{-1}
    truncated at q^N, with valuation metadata m = -L(-1, chi_D)/2.
    """
    if N < 1:
        raise SeriesError("order must be >= 1")
    if N > MAX_ORDER:
        raise SeriesError(f"order {N} exceeds capacity limit {MAX_ORDER}")
    ct = build_char_table(D)
    ctx = ring_ctx(D)
    rec = l_minus_one(ct)
    pp = period_polynomials(ct)
    fpa = [c.num_a for c in pp.f_plus]
    fpb = [c.num_b for c in pp.f_plus]
    fma = [c.num_a for c in pp.f_minus]
    fmb = [c.num_b for c in pp.f_minus]
    chi = ct.values

    A = [0] * (N + 1)
    B = [0] * (N + 1)
    A[0] = 2
    for n in range(1, N + 1):
        e = chi[n % D]
        if e:
            _binomial_inplace(A, B, n, e)
        _poly_mul_inplace(A, B, fpa, fpb, n, D)
        _poly_div_inplace(A, B, fma, fmb, n, D)

    if (A[0], B[0]) != (2, 0):
        raise RingError("eta series constant term is not 1")
    return QSeries._from_pairs(ctx, A, B, rec.m_exponent)


def delta5_series(N: int) -> QSeries:
    """Fifth power of the D = 5 series: valuation 1, coefficient k is tau_5(k+1)."""
    return series_pow(eta_series(5, N), 5)


def tau5_values(n_max: int) -> dict[int, RingElem]:
    """tau_5(1..n_max) as a dict keyed by the q-exponent N."""
    if n_max < 1:
        raise SeriesError("need n_max >= 1")
    ds = delta5_series(n_max - 1) if n_max > 1 else delta5_series(1)
    return {n: ds.coeffs[n - 1] for n in range(1, n_max + 1)}
