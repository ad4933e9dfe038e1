"""Partition-theoretic data behind the coefficient formula.

Covers the ordinary partition numbers p(k) (Euler pentagonal recurrence),
the generalized pentagonal expansion of prod(1 - theta q^n), partitions
into quadratic non-residue parts, and the joint size/length-mod-D counts
c[k][r] that realize the twisted counts p_ord(k, zeta_D^b).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .characters import CharTable


class PentagonalTerm(NamedTuple):
    """One term of prod(1 - theta q^n) = sum sign * theta^theta_power * q^g."""

    k: int
    g: int
    sign: int
    theta_power: int


def p_table(N: int) -> list[int]:
    """p(0..N) by the pentagonal recurrence, exact."""
    if N < 0:
        raise ValueError("order must be >= 0")
    p = [0] * (N + 1)
    p[0] = 1
    for k in range(1, N + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p


def pentagonal_terms(K: int) -> list[PentagonalTerm]:
    """All generalized pentagonal terms with exponent g(k) <= K.

    Encodes p_e(k, theta): sign (-1)^k with theta-power 3k-1 for k > 0 and
    -3k for k <= 0.  Sorted by (g, k) for deterministic output.
    """
    terms = []
    k = 0
    while True:
        g = k * (3 * k - 1) // 2
        if k > 0 and g > K:
            break
        if g <= K:
            if k > 0:
                terms.append(PentagonalTerm(k, g, (-1) ** k, 3 * k - 1))
            else:
                terms.append(PentagonalTerm(k, g, (-1) ** (-k), -3 * k))
        if k <= 0:
            k = -k + 1
        else:
            k = -k
    terms.sort(key=lambda t: (t.g, t.k))
    return terms


def pentagonal_int_series(K: int) -> list[int]:
    """Coefficients of prod_{n>=1}(1 - q^n) up to q^K (theta = 1)."""
    out = [0] * (K + 1)
    for t in pentagonal_terms(K):
        out[t.g] += t.sign
    return out


def p_nr_table(ct: CharTable, N: int) -> list[int]:
    """Partitions of 0..N into parts n with chi_D(n) = -1."""
    p = [0] * (N + 1)
    p[0] = 1
    for part in range(1, N + 1):
        if ct.values[part % ct.D] == -1:
            for k in range(part, N + 1):
                p[k] += p[k - part]
    return p


def length_distribution(D: int, N: int) -> list[list[int]]:
    """c[k][r] = number of partitions of k whose length is r mod D.

    DP on prod_n (1 - t q^n)^{-1} with the t-exponent reduced mod D at each
    step; only residues of the length enter the twisted counts, and this
    bounds the table at (N+1) x D entries.
    """
    if D < 1:
        raise ValueError("modulus must be positive")
    c = [[0] * D for _ in range(N + 1)]
    c[0][0] = 1
    for part in range(1, N + 1):
        for k in range(part, N + 1):
            row = c[k]
            prev = c[k - part]
            for r in range(D):
                add = prev[r - 1]  # index -1 wraps to D-1: length residue r-1 -> r
                if add:
                    row[r] += add
    return c


@dataclass(frozen=True)
class PartitionTables:
    """p, p_nr and the length-distribution matrix up to N_max."""

    D: int
    N_max: int
    p: tuple[int, ...]
    p_nr: tuple[int, ...]
    c: tuple[tuple[int, ...], ...]


def build_partition_tables(ct: CharTable, N: int) -> PartitionTables:
    p = p_table(N)
    pnr = p_nr_table(ct, N)
    c = length_distribution(ct.D, N)
    for k in range(N + 1):
        if sum(c[k]) != p[k]:
            raise AssertionError(f"length distribution row {k} does not sum to p({k})")
    return PartitionTables(
        D=ct.D,
        N_max=N,
        p=tuple(p),
        p_nr=tuple(pnr),
        c=tuple(tuple(row) for row in c),
    )
