"""Constraint-pruned depth-first word enumeration and parametric word families.

All predicates used for pruning are prefix-closed: a forbidden factor, an
exhausted palindrome budget or an over-long palindrome can never disappear by
appending letters. Required factors are the one non-prefix-closed constraint
and are treated as a condition that must hold by the time evidence is
collected, not as a pruning rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .paltree import PalTree
from .words import Alphabet, Word, _text

ENUMERATION_GUARD = 10**8


@dataclass(frozen=True)
class FamilyTemplate:
    """Words of the shape prefix . block^n . suffix for n in [n_min, n_max]."""

    prefix: str
    block: str
    suffix: str
    n_min: int = 0
    n_max: int | None = None

    def __post_init__(self):
        if not self.block:
            raise ValueError("family block must be non-empty")
        if self.n_min < 0:
            raise ValueError("n_min must be non-negative")

    def matches(self, word: str) -> bool:
        fixed = len(self.prefix) + len(self.suffix)
        body = len(word) - fixed
        if body < 0 or body % len(self.block):
            return False
        n = body // len(self.block)
        if n < self.n_min or (self.n_max is not None and n > self.n_max):
            return False
        return word == self.prefix + self.block * n + self.suffix

    def instance(self, n: int) -> str:
        return self.prefix + self.block * n + self.suffix

    def describe(self) -> str:
        rng = f"n>={self.n_min}"
        if self.n_max is not None:
            rng = f"{self.n_min}<=n<={self.n_max}"
        return f"{self.prefix}({self.block})^n{self.suffix} for {rng}"


def matches_any(word: str, families) -> bool:
    return any(f.matches(word) for f in families)


@dataclass(frozen=True)
class ConstraintSet:
    """Prefix-checkable word constraints for bounded searches.

    forbidden_factors, pal_budget and pal_length_cap prune during the search;
    required_factors is checked on the words evidence is drawn from. The
    assumed_palindromes set models palindromes known to occur elsewhere in
    the (infinite) word under study: the budget is charged for the union of
    the assumed set and the palindromes actually present in the search word.
    """

    alphabet: Alphabet
    forbidden_factors: frozenset[str] = frozenset()
    required_factors: frozenset[str] = frozenset()
    pal_budget: int | None = None
    pal_length_cap: int | None = None
    assumed_palindromes: frozenset[str] = frozenset()

    def assumed_with_epsilon(self) -> frozenset[str]:
        return self.assumed_palindromes | {""}

    def charged_count(self, pals: set[str]) -> int:
        """Distinct palindromes charged to the budget (union with assumed)."""
        return len(self.assumed_with_epsilon() | pals)

    def satisfies(self, word: Word | str, check_required: bool = True) -> bool:
        """Full non-incremental check, used by oracles and witness replay."""
        s = _text(word)
        for f in self.forbidden_factors:
            if f in s:
                return False
        pals = {""}
        longest = 0
        tree = PalTree(s)
        for p in tree.palindromes():
            pals.add(p)
            longest = max(longest, len(p))
        if self.pal_length_cap is not None and longest > self.pal_length_cap:
            return False
        if self.pal_budget is not None and self.charged_count(pals) > self.pal_budget:
            return False
        if check_required:
            for r in self.required_factors:
                if r not in s:
                    return False
        return True


def palindromes_of_length(alphabet: Alphabet, length: int) -> set[str]:
    """Every palindrome of the given length over the alphabet."""
    if length < 0:
        raise ValueError("length must be non-negative")
    if length == 0:
        return {""}
    half = (length + 1) // 2
    out = set()
    for core in product(alphabet.symbols, repeat=half):
        left = "".join(core)
        mirror = left[::-1]
        out.add(left + (mirror[1:] if length % 2 else mirror))
    return out


def forbid_other_palindromes(
    alphabet: Alphabet, length: int, allowed: set[str] | frozenset[str]
) -> frozenset[str]:
    """Forbidden-factor encoding of 'the only length-L palindromes are these'."""
    return frozenset(palindromes_of_length(alphabet, length) - set(allowed))


def _longest_palindromic_suffix(s: str) -> str:
    # Longest first; the single-letter suffix always matches.
    for i in range(len(s)):
        t = s[i:]
        if t == t[::-1]:
            return t
    return ""


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0


@dataclass(frozen=True)
class ReturnScan:
    """Outcome of a bounded complete-first-return enumeration."""

    anchor: str
    max_len: int
    returns: dict[str, str]  # return word -> example host word
    stats: SearchStats = field(compare=False, default_factory=SearchStats)


def scan_complete_returns(
    constraints: ConstraintSet, anchor: str, max_len: int
) -> ReturnScan:
    """Collect every complete first return to the anchor that appears in any
    word of length <= max_len satisfying the constraints.

    A return counts once the host branch has produced all required factors
    (before or after the return inside the window); returns seen earlier on
    the branch are kept pending and flushed at that point.
    """
    alphabet = constraints.alphabet.symbols
    forbidden = sorted(constraints.forbidden_factors)
    required = sorted(constraints.required_factors)
    budget = constraints.pal_budget
    cap = constraints.pal_length_cap
    assumed = constraints.assumed_with_epsilon()
    base_charge = len(assumed)

    found: dict[str, str] = {}
    stats = SearchStats()
    pals: set[str] = set()  # palindromes of the current word not in assumed
    raw_pals: set[str] = {""}  # all palindromes of the current word

    def recurse(s: str, missing: tuple[str, ...], anchor_starts: tuple[int, ...],
                pending: tuple[str, ...]) -> None:
        stats.nodes += 1
        stats.max_depth = max(stats.max_depth, len(s))
        if len(s) >= max_len:
            return
        for ch in alphabet:
            t = s + ch
            if any(t.endswith(f) for f in forbidden):
                continue
            lps = _longest_palindromic_suffix(t)
            new_pal = lps not in raw_pals
            if new_pal:
                if cap is not None and len(lps) > cap:
                    continue
                charged = base_charge + len(pals) + (0 if lps in assumed else 1)
                if budget is not None and charged > budget:
                    continue
            t_missing = tuple(r for r in missing if r not in t) if missing else ()
            t_starts = anchor_starts
            t_pending = pending
            if t.endswith(anchor):
                start = len(t) - len(anchor)
                if t_starts and start > t_starts[-1]:
                    ret = t[t_starts[-1] :]
                    if t_missing:
                        t_pending = pending + (ret,)
                    else:
                        found.setdefault(ret, t)
                if not t_starts or start > t_starts[-1]:
                    t_starts = t_starts + (start,)
            if not t_missing and t_pending:
                for ret in t_pending:
                    found.setdefault(ret, t)
                t_pending = ()
            if new_pal:
                raw_pals.add(lps)
                if lps not in assumed:
                    pals.add(lps)
            recurse(t, t_missing, t_starts, t_pending)
            if new_pal:
                raw_pals.discard(lps)
                pals.discard(lps)

    recurse("", tuple(required), (), ())
    return ReturnScan(anchor=anchor, max_len=max_len, returns=found, stats=stats)


def iter_satisfying_words(constraints: ConstraintSet, max_len: int):
    """Yield every non-empty word (length <= max_len) whose prefixes all pass
    the prefix-closed constraints. Required factors are not applied here.
    Lexicographic depth-first order.
    """
    alphabet = constraints.alphabet.symbols
    forbidden = sorted(constraints.forbidden_factors)
    budget = constraints.pal_budget
    cap = constraints.pal_length_cap
    assumed = constraints.assumed_with_epsilon()
    base_charge = len(assumed)
    pals: set[str] = set()
    raw_pals: set[str] = {""}

    def recurse(s: str):
        if len(s) >= max_len:
            return
        for ch in alphabet:
            t = s + ch
            if any(t.endswith(f) for f in forbidden):
                continue
            lps = _longest_palindromic_suffix(t)
            new_pal = lps not in raw_pals
            if new_pal:
                if cap is not None and len(lps) > cap:
                    continue
                charged = base_charge + len(pals) + (0 if lps in assumed else 1)
                if budget is not None and charged > budget:
                    continue
                raw_pals.add(lps)
                if lps not in assumed:
                    pals.add(lps)
            yield t
            yield from recurse(t)
            if new_pal:
                raw_pals.discard(lps)
                pals.discard(lps)

    yield from recurse("")


@dataclass(frozen=True)
class DepthScan:
    """Longest word reachable under prefix-closed constraints."""

    max_len: int
    witness: str
    exhausted: bool
    stats: SearchStats = field(compare=False, default_factory=SearchStats)


def deepest_word(constraints: ConstraintSet, hard_cap: int = 64) -> DepthScan:
    """Exhaustive extension search for the longest word the constraints allow.

    exhausted is False when some branch reached hard_cap, in which case the
    reported maximum is only a lower bound.
    """
    stats = SearchStats()
    best = {"len": 0, "word": "", "capped": False}
    for w in iter_satisfying_words(constraints, hard_cap):
        stats.nodes += 1
        if len(w) > best["len"]:
            best["len"], best["word"] = len(w), w
        if len(w) >= hard_cap:
            best["capped"] = True
    stats.max_depth = best["len"]
    return DepthScan(
        max_len=best["len"],
        witness=best["word"],
        exhausted=not best["capped"],
        stats=stats,
    )


def enumerate_words(alphabet: Alphabet, n: int, dedupe: str = "none"):
    """All words of length n over the alphabet, in lexicographic order.

    dedupe='iso' keeps one representative per renaming-or-reversal class
    (the lexicographically least member). Guarded against enumerations
    beyond 10**8 raw words.
    """
    from .words import canonical_class

    if n < 0:
        raise ValueError("word length must be non-negative")
    if dedupe not in ("none", "iso"):
        raise ValueError("dedupe must be 'none' or 'iso'")
    space = len(alphabet) ** n
    if space > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration of {len(alphabet)}^{n} = {space} words exceeds the "
            f"{ENUMERATION_GUARD} guard"
        )
    for tup in product(alphabet.symbols, repeat=n):
        text = "".join(tup)
        w = Word(text, alphabet)
        if dedupe == "iso" and canonical_class(w).canonical.text != text:
            continue
        yield w


def low_palindrome_words(
    max_letters: int, length: int, budget: int
) -> list[tuple[str, int]]:
    """Every canonical word of the given length whose palindrome count
    (epsilon included) stays within the budget.

    Canonical means letters first appear in alphabetical order, so exactly
    one representative per renaming class is produced; palindrome counts are
    renaming-invariant. The budget prunes the search tree, which keeps the
    scan tiny even for alphabet sizes up to 8.
    """
    if not 1 <= max_letters <= 8:
        raise ValueError("max_letters must be 1..8")
    out: list[tuple[str, int]] = []
    raw_pals: set[str] = {""}
    from .words import SYMBOLS

    def recurse(s: str, used: int) -> None:
        if len(s) == length:
            out.append((s, len(raw_pals)))
            return
        width = min(max_letters, used + 1)
        for ch in SYMBOLS[:width]:
            t = s + ch
            lps = _longest_palindromic_suffix(t)
            new_pal = lps not in raw_pals
            if new_pal:
                if len(raw_pals) + 1 > budget:
                    continue
                raw_pals.add(lps)
            recurse(t, max(used, SYMBOLS.index(ch) + 1))
            if new_pal:
                raw_pals.discard(lps)

    recurse("", 0)
    return out
