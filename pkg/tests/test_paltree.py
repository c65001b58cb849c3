"""Palindromic tree behaviour against the naive enumeration oracle."""

import pytest

from palindromics import PalTree, Word, pal_set

from conftest import all_words, naive_pal_set


def test_empty_tree():
    tree = PalTree()
    assert tree.distinct_palindromes == 0
    assert tree.node_count == 2
    assert tree.palindromes() == []


def test_incremental_growth_flags():
    tree = PalTree()
    assert tree.append("a") is True       # a
    assert tree.append("b") is True       # b
    assert tree.append("c") is True       # c
    assert tree.append("a") is False      # longest suffix palindrome is just a
    assert tree.append("b") is False
    assert tree.distinct_palindromes == 3
    assert tree.last_growth == 3


def test_at_most_one_node_per_letter():
    for s in ("aababbaababb", "aaababaabaaa", "abcabcabc"):
        tree = PalTree()
        before = tree.node_count
        for ch in s:
            tree.append(ch)
            assert tree.node_count - before <= 1
            before = tree.node_count


def test_node_count_matches_pal_set():
    for n in range(11):
        for s in all_words("ab", n):
            tree = PalTree(s)
            assert tree.distinct_palindromes == len(naive_pal_set(s)) - 1


@pytest.mark.parametrize(
    "word",
    ["", "a", "ab", "aababbaababb", "aaababaabaaa", "abacaba", "aabbaabb"],
)
def test_pal_strings_match_oracle(word):
    assert set(PalTree(word).palindromes()) | {""} == naive_pal_set(word)


def test_oracle_equivalence_ternary():
    for n in range(10):
        for s in all_words("abc", n):
            assert pal_set(s).pal_set == naive_pal_set(s)


def test_occurrence_counts():
    s = "aababbaababb"
    counts = PalTree(s).occurrence_counts()
    # Count each palindrome with the sliding window.
    for p, c in counts.items():
        naive = sum(
            1 for i in range(len(s) - len(p) + 1) if s[i : i + len(p)] == p
        )
        assert c == naive, p
    assert counts["a"] == 6
    assert "aababbaababb" not in counts  # the word itself is not a palindrome


def test_occurrence_counts_exhaustive_small():
    for s in all_words("ab", 8):
        counts = PalTree(s).occurrence_counts()
        for p, c in counts.items():
            naive = sum(
                1 for i in range(len(s) - len(p) + 1) if s[i : i + len(p)] == p
            )
            assert c == naive


def test_extract_after_long_run():
    # Palindrome extraction uses first-occurrence positions, which must
    # survive later growth of the underlying buffer.
    tree = PalTree("abc" * 50)
    assert set(tree.palindromes()) == {"a", "b", "c"}
