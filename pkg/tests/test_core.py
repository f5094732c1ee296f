import random

import pytest

from hopset.catalog import builtin
from hopset.core import (
    Alphabet,
    Fhs,
    FhsSet,
    correlation_profile,
    fhs_set_from_rows,
    hamming_correlation,
    occurrence_map,
)


def brute_force_profile(rows, n):
    """Independent double-loop recomputation of all maxima."""
    h_auto = 0
    h_cross = 0
    m = len(rows)
    for i in range(m):
        for j in range(m):
            for tau in range(n):
                c = sum(1 for t in range(n) if rows[i][t] == rows[j][(t + tau) % n])
                if i == j and tau > 0:
                    h_auto = max(h_auto, c)
                if i != j:
                    h_cross = max(h_cross, c)
    return h_auto, h_cross


def random_set(rng, max_m=4, max_n=12, max_v=6):
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    v = rng.randint(1, max_v)
    rows = [tuple(rng.randrange(v) for _ in range(n)) for _ in range(m)]
    return fhs_set_from_rows(rows, v)


class TestAlphabet:
    def test_plain(self):
        a = Alphabet(7)
        assert a.kind == "plain" and a.factors == ()

    def test_product(self):
        a = Alphabet(91, (13, 7))
        assert a.kind == "product"

    def test_factor_product_must_match(self):
        with pytest.raises(ValueError):
            Alphabet(90, (13, 7))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Alphabet(0)


class TestFhsValidation:
    def test_symbol_out_of_range(self):
        with pytest.raises(ValueError, match="position 2"):
            Fhs((0, 1, 7), Alphabet(7))

    def test_bool_is_not_a_symbol(self):
        with pytest.raises(ValueError):
            Fhs((0, True, 1), Alphabet(7))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Fhs((), Alphabet(7))

    def test_set_requires_equal_lengths(self):
        a = Alphabet(3)
        with pytest.raises(ValueError, match="length"):
            FhsSet((Fhs((0, 1), a), Fhs((0, 1, 2), a)))

    def test_set_requires_common_alphabet(self):
        with pytest.raises(ValueError, match="alphabet"):
            FhsSet((Fhs((0, 1), Alphabet(3)), Fhs((0, 1), Alphabet(4))))


class TestHammingCorrelation:
    def test_full_agreement_at_zero(self):
        x = Fhs((0, 1, 2, 1), Alphabet(3))
        assert hamming_correlation(x, x, 0) == 4

    def test_hand_enumeration(self):
        a = Alphabet(3)
        x = Fhs((0, 1, 2), a)
        y = Fhs((1, 2, 0), a)
        # x(t) vs y(t+1): (0,1,2) vs (2,0,1) -> no hits; t+2: (0,1,2) -> all hit
        assert hamming_correlation(x, y, 1) == 0
        assert hamming_correlation(x, y, 2) == 3

    def test_example1_cross_pair_max(self):
        s = builtin("example1_base")
        vals = [hamming_correlation(s.sequences[0], s.sequences[1], t) for t in range(26)]
        assert max(vals) <= 4
        assert max(vals) == 4

    def test_mismatched_inputs_rejected(self):
        x = Fhs((0, 1), Alphabet(3))
        y = Fhs((0, 1, 2), Alphabet(3))
        with pytest.raises(ValueError):
            hamming_correlation(x, y, 0)
        z = Fhs((0, 1), Alphabet(4))
        with pytest.raises(ValueError):
            hamming_correlation(x, z, 0)
        with pytest.raises(ValueError):
            hamming_correlation(x, x, 2)

    def test_symmetry_property(self):
        rng = random.Random(42)
        for _ in range(60):
            s = random_set(rng)
            n = s.length
            for i in range(s.num_sequences):
                for j in range(s.num_sequences):
                    for tau in range(n):
                        assert hamming_correlation(s.sequences[i], s.sequences[j], tau) == \
                            hamming_correlation(s.sequences[j], s.sequences[i], (n - tau) % n)

    def test_conservation_property(self):
        # for fixed x, y the shift-sum counts every symbol agreement once
        rng = random.Random(7)
        for _ in range(60):
            s = random_set(rng, max_m=2)
            x, y = s.sequences[0], s.sequences[-1]
            n = s.length
            total = sum(hamming_correlation(x, y, tau) for tau in range(n))
            by_symbol = sum(
                x.symbols.count(k) * y.symbols.count(k) for k in range(s.alphabet.size)
            )
            assert total == by_symbol


class TestCorrelationProfile:
    def test_example1_base(self):
        prof = correlation_profile(builtin("example1_base"))
        assert prof.h_max == 4

    def test_example2_base(self):
        prof = correlation_profile(builtin("example2_base"))
        assert prof.h_max == 3

    def test_single_constant_sequence(self):
        prof = correlation_profile(fhs_set_from_rows([(0, 0, 0)], 1))
        assert prof.h_auto == 3
        assert prof.h_cross == 0
        assert prof.h_max == 3

    def test_trivial_peak_stored_but_excluded(self):
        prof = correlation_profile(fhs_set_from_rows([(0, 1, 2)], 3))
        assert prof.table[(0, 0)][0] == 3
        assert prof.h_auto == 0

    def test_matches_brute_force_on_random_sets(self):
        rng = random.Random(99)
        for _ in range(80):
            s = random_set(rng)
            prof = correlation_profile(s)
            want = brute_force_profile(s.symbol_rows(), s.length)
            assert (prof.h_auto, prof.h_cross) == want

    def test_table_entries_match_pointwise(self):
        rng = random.Random(5)
        s = random_set(rng, max_m=3, max_n=9, max_v=4)
        prof = correlation_profile(s)
        for (i, j), vec in prof.table.items():
            for tau, c in enumerate(vec):
                assert c == hamming_correlation(s.sequences[i], s.sequences[j], tau)

    def test_thread_fanout_agrees(self, monkeypatch):
        monkeypatch.setenv("FHS_THREADS", "3")
        s = builtin("example1_base")
        prof = correlation_profile(s)
        assert prof.h_max == 4


class TestOccurrenceMap:
    def test_example1_multiplicity(self):
        assert occurrence_map(builtin("example1_base")).multiplicity == 12

    def test_example2_multiplicity(self):
        assert occurrence_map(builtin("example2_base")).multiplicity == 8

    def test_all_distinct_symbols(self):
        om = occurrence_map(fhs_set_from_rows([(0, 1, 2)], 3))
        assert om.multiplicity == 1

    def test_partition_and_row_major_order(self):
        rng = random.Random(13)
        for _ in range(40):
            s = random_set(rng)
            om = occurrence_map(s)
            total = sum(len(lst) for lst in om.positions)
            assert total == s.num_sequences * s.length
            flat = [site for lst in om.positions for site in lst]
            assert len(set(flat)) == total
            for lst in om.positions:
                assert list(lst) == sorted(lst)
            assert om.multiplicity == max(len(lst) for lst in om.positions)
            for k, lst in enumerate(om.positions):
                for (i, t) in lst:
                    assert s.sequences[i].symbols[t] == k
