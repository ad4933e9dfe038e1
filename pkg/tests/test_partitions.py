from collections import Counter

import pytest

from oracles import count_partitions_with_parts, dp_partition_counts, enumerate_partitions

from hecke_eta.characters import build_char_table
from hecke_eta.partitions import (
    PentagonalTerm,
    build_partition_tables,
    length_distribution,
    p_nr_table,
    p_table,
    pentagonal_int_series,
    pentagonal_terms,
)


class TestPTable:
    def test_small_values_by_enumeration(self):
        p = p_table(12)
        for k in range(13):
            assert p[k] == sum(1 for _ in enumerate_partitions(k))
        assert p[5] == 7
        assert p[0] == 1

    def test_p100_against_dp_oracle(self):
        p = p_table(200)
        dp = dp_partition_counts(200)
        assert p == dp
        assert p[100] == 190569292

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            p_table(-1)


class TestPentagonal:
    def test_term_examples(self):
        terms = {t.k: t for t in pentagonal_terms(30)}
        assert terms[1] == PentagonalTerm(1, 1, -1, 2)
        assert terms[-1] == PentagonalTerm(-1, 2, -1, 3)
        assert terms[2] == PentagonalTerm(2, 5, 1, 5)
        assert terms[0] == PentagonalTerm(0, 0, 1, 0)

    def test_all_exponents_within_bound_and_sorted(self):
        terms = pentagonal_terms(100)
        gs = [t.g for t in terms]
        assert gs == sorted(gs)
        assert all(0 <= g <= 100 for g in gs)

    def test_euler_identity_to_500(self):
        # prod (1 - q^n) computed by sequential binomial multiplication
        N = 500
        prod = [0] * (N + 1)
        prod[0] = 1
        for n in range(1, N + 1):
            for k in range(N, n - 1, -1):
                prod[k] -= prod[k - n]
        assert prod == pentagonal_int_series(N)


class TestPnr:
    def test_examples_d5(self):
        ct = build_char_table(5)
        pnr = p_nr_table(ct, 10)
        assert pnr[0] == 1
        assert pnr[4] == 1  # 2+2
        assert pnr[5] == 1  # 3+2

    def test_brute_force_match(self):
        for D in (5, 13):
            ct = build_char_table(D)
            pnr = p_nr_table(ct, 40)
            allowed = tuple(
                n for n in range(1, 41) if ct.values[n % D] == -1
            )
            for k in range(41):
                assert pnr[k] == count_partitions_with_parts(k, allowed)


class TestLengthDistribution:
    def test_row_examples(self):
        c = length_distribution(5, 4)
        assert c[0] == [1, 0, 0, 0, 0]
        assert c[3] == [0, 1, 1, 1, 0]

    def test_row_sums_match_p(self):
        N = 300
        c = length_distribution(5, N)
        p = p_table(N)
        for k in range(N + 1):
            assert sum(c[k]) == p[k]

    def test_against_enumeration(self):
        for D in (5, 13):
            c = length_distribution(D, 18)
            for k in range(19):
                counted = Counter(len(lam) % D for lam in enumerate_partitions(k))
                for r in range(D):
                    assert c[k][r] == counted.get(r, 0)


class TestTables:
    def test_build_partition_tables(self):
        ct = build_char_table(5)
        t = build_partition_tables(ct, 30)
        assert t.p[0] == 1 and t.p_nr[0] == 1 and t.c[0][0] == 1
        assert all(sum(row) == pk for row, pk in zip(t.c, t.p))
