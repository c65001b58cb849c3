"""Reports, richness, first returns, stabilization and closure checks."""

import pytest

from palindromics import (
    ClosureReport,
    PalReport,
    StabilizedPalSet,
    Word,
    complete_first_returns,
    is_rich,
    longest_palindrome,
    pal_set,
    periodic,
    reversal_closure_check,
    resolve_generator,
    stabilized_pal_set,
)

from conftest import all_words, naive_complete_first_returns, naive_pal_set


class TestPalSet:
    def test_period6_square(self):
        report = pal_set(Word("aababbaababb"))
        assert report.pal_set == {
            "", "a", "b", "aa", "bb", "aba", "bab", "abba", "baab",
        }
        assert report.count == 9

    def test_empty_word(self):
        report = pal_set(Word(""))
        assert report.count == 1
        assert report.palindromes == ("",)

    def test_exceptional_witness(self):
        report = pal_set(Word("aaababaabaaa"))
        assert report.count == 12
        assert report.pal_set == {
            "", "b", "bab", "baab", "a", "aba", "ababa", "abaaba",
            "aa", "aababaa", "aabaa", "aaa",
        }

    def test_counts_consistent(self):
        report = pal_set(Word("abacaba"))
        assert report.count == len(report.palindromes)
        assert sum(report.per_length.values()) == report.count
        assert report.per_length[0] == 1
        assert report.richness_defect == len("abacaba") + 1 - report.count

    def test_floor_and_ceiling(self):
        for n in range(9):
            for s in all_words("ab", n):
                report = pal_set(s)
                assert report.count <= n + 1
                if n:
                    assert report.count >= 1 + len(set(s))

    def test_monotone_under_extension(self):
        s = resolve_generator("fib-abbab")
        prev: frozenset = frozenset()
        for n in range(0, 2001, 250):
            current = pal_set(s.prefix(n)).pal_set
            assert prev <= current
            prev = current

    def test_report_round_trip(self):
        report = pal_set(Word("aababb"))
        assert PalReport.from_record(report.to_record()) == report


class TestRichness:
    def test_rich_examples(self):
        assert is_rich(Word("abac"))
        assert is_rich(Word(""))
        assert not is_rich(Word("aababbaababb"))

    def test_rich_means_defect_zero(self):
        for s in all_words("ab", 7):
            assert is_rich(s) == (pal_set(s).richness_defect == 0)


class TestLongestPalindrome:
    def test_tie_broken_by_first_occurrence(self):
        assert longest_palindrome(Word("ab")).text == "a"
        assert longest_palindrome(Word("ba")).text == "b"

    def test_plain(self):
        assert longest_palindrome(Word("aababbaababb")).text == "abba"

    def test_matches_oracle_length(self):
        for s in all_words("ab", 9):
            expected = max(len(p) for p in naive_pal_set(s))
            assert len(longest_palindrome(s).text) == expected


class TestCompleteFirstReturns:
    def test_period6_power(self):
        w = periodic("aababb").prefix(24)
        scan = complete_first_returns(w, Word("ababb"))
        assert scan.returns == ("ababbaababb",)

    def test_square_single_return(self):
        scan = complete_first_returns(Word("aabaab"), Word("aab"))
        assert scan.returns == ("aabaab",)

    def test_other_period6_power(self):
        w = periodic("aabbab").prefix(30)
        scan = complete_first_returns(w, Word("aab"))
        assert scan.returns == ("aabbabaab",)

    def test_anchor_not_found(self):
        scan = complete_first_returns(Word("aaaa"), Word("b"))
        assert not scan.anchor_found
        assert scan.returns == ()

    def test_empty_anchor_rejected(self):
        with pytest.raises(ValueError):
            complete_first_returns(Word("ab"), Word(""))

    def test_against_naive_scan(self):
        anchors = ("a", "ab", "aab", "aba")
        for n in range(1, 11):
            for s in all_words("ab", n):
                for v in anchors:
                    got = set(complete_first_returns(s, v).returns)
                    assert got == naive_complete_first_returns(s, v), (s, v)

    def test_against_naive_scan_long_sample(self):
        # Spot-check longer words (full length-16 space is covered by the
        # consecutive-occurrence argument; sample deterministically here).
        words = [w for i, w in enumerate(all_words("ab", 16)) if i % 977 == 0]
        for s in words:
            for v in ("aab", "abba"):
                got = set(complete_first_returns(s, v).returns)
                assert got == naive_complete_first_returns(s, v), (s, v)


class TestStabilizedPalSet:
    def test_fib_bc(self):
        stab = stabilized_pal_set(resolve_generator("fib-bc"), cap=10000)
        assert stab.stable
        assert stab.pal_set == {"", "a", "b", "c", "aa"}
        assert stab.count == 5

    def test_fib_abbab(self):
        stab = stabilized_pal_set(resolve_generator("fib-abbab"), cap=10000)
        assert stab.count == 11
        assert stab.pal_set == {
            "", "a", "b", "aa", "bb", "aaa", "aba", "bab", "abba",
            "baab", "baaab",
        }

    def test_periodic_three_letters(self):
        stab = stabilized_pal_set(periodic("abc"), cap=10000)
        assert stab.stable
        assert stab.count == 4

    def test_periodic_block_nine(self):
        stab = stabilized_pal_set(periodic("aababb"), cap=10000)
        assert stab.stable
        assert stab.count == 9

    def test_unstable_at_cap(self):
        stab = stabilized_pal_set(periodic("ab"), cap=256)
        assert not stab.stable
        assert stab.flag == "unstable-at-cap"
        assert stab.checked_horizon == 256

    def test_doubling_window_invariant(self):
        stab = stabilized_pal_set(resolve_generator("paperfolding"), cap=16384)
        assert stab.stable
        assert stab.checked_horizon >= 2 * stab.stable_horizon

    def test_preconditions(self):
        with pytest.raises(ValueError):
            stabilized_pal_set(periodic("ab"), start=0, cap=100)
        with pytest.raises(ValueError):
            stabilized_pal_set(periodic("ab"), start=60, cap=100)

    def test_round_trip(self):
        stab = stabilized_pal_set(periodic("abc"), cap=1000)
        assert StabilizedPalSet.from_record(stab.to_record()) == stab


class TestClosureCheck:
    def test_paperfolding_witness(self):
        report = reversal_closure_check(resolve_generator("paperfolding"), k=5)
        assert ("aaaba", "abaaa") in report.witness_missing

    def test_fib_abbab_witness(self):
        report = reversal_closure_check(resolve_generator("fib-abbab"), k=5)
        assert ("abaaa", "aaaba") in report.witness_missing

    def test_constant_word_closed(self):
        report = reversal_closure_check(periodic("aa"), k=4, horizon=64)
        assert report.witness_missing == ()
        assert report.closed_up_to == 4

    def test_closed_up_to_stops_before_first_witness(self):
        report = reversal_closure_check(resolve_generator("fib-bc"), k=4)
        lengths = {len(u) for u, _ in report.witness_missing}
        assert report.closed_up_to == min(lengths) - 1

    def test_horizon_precondition(self):
        with pytest.raises(ValueError):
            reversal_closure_check(periodic("ab"), k=5, horizon=10)

    def test_round_trip(self):
        report = reversal_closure_check(periodic("ab"), k=3, horizon=64)
        assert ClosureReport.from_record(report.to_record()) == report
