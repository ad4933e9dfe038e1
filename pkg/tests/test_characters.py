import random
from math import gcd

import pytest

from hecke_eta.characters import (
    CharacterError,
    build_char_table,
    euler_phi,
    fundamental_discriminants,
    is_fundamental,
    kronecker,
    squares_mod,
)


class TestKronecker:
    def test_examples(self):
        assert kronecker(2, 5) == -1
        assert kronecker(1, 13) == 1
        assert kronecker(4, 17) == 1

    def test_periodicity(self):
        for n in range(-20, 40):
            assert kronecker(n, 13) == kronecker(n % 13, 13)

    def test_invalid_modulus(self):
        with pytest.raises(CharacterError):
            kronecker(2, 9)
        with pytest.raises(CharacterError):
            kronecker(2, 7)

    def test_against_square_enumeration_for_primes(self):
        primes = [D for D in fundamental_discriminants(200) if euler_phi(D) == D - 1]
        assert primes[:3] == [5, 13, 17]
        for D in primes:
            squares = squares_mod(D)
            for n in range(D):
                if n % D == 0:
                    expected = 0
                elif n in squares:
                    expected = 1
                else:
                    expected = -1
                assert kronecker(n, D) == expected


class TestIsFundamental:
    def test_examples(self):
        assert is_fundamental(5)
        assert not is_fundamental(9)
        assert is_fundamental(21)

    def test_more_cases(self):
        assert is_fundamental(13) and is_fundamental(17) and is_fundamental(33)
        assert not is_fundamental(15)  # 3 mod 4
        assert not is_fundamental(25)  # square
        assert not is_fundamental(45)  # 9 * 5, not squarefree
        assert not is_fundamental(1) and not is_fundamental(-3)


class TestCharTable:
    def test_d5(self):
        ct = build_char_table(5)
        assert ct.values == (0, 1, -1, -1, 1)
        assert ct.qr_list == (1, 4)
        assert ct.nr_list == (2, 3)

    def test_d13_residues(self):
        ct = build_char_table(13)
        assert ct.qr_list == (1, 3, 4, 9, 10, 12)

    def test_d17_cardinality(self):
        ct = build_char_table(17)
        assert len(ct.qr_list) == 8 == euler_phi(17) // 2

    def test_rejects_non_fundamental(self):
        for D in (9, 15, 25, 45, 8, 1):
            with pytest.raises(CharacterError):
                build_char_table(D)

    def test_balance_and_evenness_up_to_500(self):
        for D in fundamental_discriminants(500):
            ct = build_char_table(D)
            assert sum(ct.values) == 0
            assert ct.values[D - 1] == 1
            assert sum(n * ct.chi(n) for n in range(1, D + 1)) == 0
            assert len(ct.qr_list) == len(ct.nr_list) == euler_phi(D) // 2

    def test_complete_multiplicativity_small_d_exhaustive(self):
        for D in fundamental_discriminants(101):
            ct = build_char_table(D)
            for m in range(D):
                for n in range(D):
                    assert ct.values[m * n % D] == ct.values[m] * ct.values[n]

    def test_complete_multiplicativity_sampled_to_1000(self):
        rng = random.Random(12345)
        for D in fundamental_discriminants(1000):
            ct = build_char_table(D)
            for _ in range(200):
                m = rng.randrange(D)
                n = rng.randrange(D)
                assert ct.values[m * n % D] == ct.values[m] * ct.values[n]

    def test_zero_exactly_on_non_coprime(self):
        ct = build_char_table(21)
        for n in range(21):
            assert (ct.values[n] == 0) == (gcd(n, 21) > 1)
