"""The primitive real character chi_D = (./D) and residue classification mod D.

For a fundamental discriminant D = 1 mod 4 (squarefree, D >= 5) the
Kronecker symbol (n/D) coincides with the Jacobi symbol, is even, completely
multiplicative and has conductor exactly D.  CharTable tabulates one period
together with the sorted lists of quadratic residues / non-residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class CharacterError(ValueError):
    """Invalid modulus or broken character invariant."""


def is_fundamental(D: int) -> bool:
    """True iff D = 1 mod 4, D >= 5 and D squarefree."""
    if D < 5 or D % 4 != 1:
        return False
    n = D
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        else:
            p += 1 if p == 2 else 2
    return True


def kronecker(n: int, D: int) -> int:
    """Kronecker symbol (n/D) for fundamental D = 1 mod 4.

    D is odd and positive here, so this is the Jacobi symbol, computed by
    the standard reciprocity loop in O(log^2).
    """
    if not is_fundamental(D):
        raise CharacterError(f"D={D} is not a fundamental discriminant = 1 mod 4")
    a = n % D
    m = D
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


@dataclass(frozen=True)
class CharTable:
    """One period of chi_D plus residue / non-residue lists.

    values[n] = chi_D(n mod D); qr_list and nr_list are the sorted a in
    [1, D] with chi_D(a) = +1 / -1, each of length phi(D)/2.
    """

    D: int
    values: tuple[int, ...]
    qr_list: tuple[int, ...]
    nr_list: tuple[int, ...]

    def chi(self, n: int) -> int:
        return self.values[n % self.D]


def build_char_table(D: int) -> CharTable:
    """Tabulate chi_D and check the character invariants.

    Raises CharacterError for non-fundamental D, either up front or via an
    invariant failure (balance, evenness, cardinality).
    """
    if not is_fundamental(D):
        raise CharacterError(
            f"D={D} rejected: need D = 1 mod 4, D >= 5, squarefree"
        )
    values = tuple(kronecker(n, D) for n in range(D))
    qr = tuple(a for a in range(1, D + 1) if values[a % D] == 1)
    nr = tuple(a for a in range(1, D + 1) if values[a % D] == -1)

    if values[1 % D] != 1:
        raise CharacterError("chi(1) != 1")
    for n in range(D):
        if (values[n] == 0) != (gcd(n, D) > 1):
            raise CharacterError(f"chi({n}) zero pattern wrong for D={D}")
    if values[D - 1] != 1:
        raise CharacterError(f"chi(-1) != 1 for D={D}: character is not even")
    if sum(values) != 0:
        raise CharacterError(f"sum chi(n) != 0 for D={D}")
    if sum(n * values[n % D] for n in range(1, D + 1)) != 0:
        raise CharacterError(f"sum n*chi(n) != 0 for D={D}")
    phi = sum(1 for n in range(1, D + 1) if gcd(n, D) == 1)
    if len(qr) != phi // 2 or len(nr) != phi // 2:
        raise CharacterError(f"residue lists have wrong cardinality for D={D}")
    return CharTable(D=D, values=values, qr_list=qr, nr_list=nr)


def euler_phi(D: int) -> int:
    """Euler totient, by trial-division factorization."""
    n = D
    result = D
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


def squares_mod(D: int) -> set[int]:
    """Brute-force set {a^2 mod D : gcd(a, D) = 1}, for cross-checking."""
    return {a * a % D for a in range(1, D) if gcd(a, D) == 1}


def fundamental_discriminants(limit: int) -> list[int]:
    """All fundamental D = 1 mod 4 with 5 <= D <= limit, ascending."""
    return [D for D in range(5, limit + 1, 4) if is_fundamental(D)]
