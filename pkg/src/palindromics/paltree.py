"""Incremental palindromic tree (eertree) over an append-only letter sequence.

The structure keeps one node per distinct non-empty palindromic factor of the
processed prefix. Appending a letter creates at most one node, so the node
count (minus the two sentinel roots) always equals the number of distinct
non-empty palindromic factors seen so far. Suffix links point to the longest
proper palindromic suffix of each node's palindrome, which is always strictly
shorter.
"""

from __future__ import annotations


class PalTree:
    """Eertree over characters, built strictly left to right.

    Node 0 is the length -1 root, node 1 the length 0 (empty) root. Each
    real node stores its palindrome length, suffix link, per-letter
    transitions, the end position of its first occurrence, and the number of
    times it has been the longest palindromic suffix (the seed counts for
    occurrence totals).
    """

    __slots__ = (
        "_s",
        "_len",
        "_link",
        "_trans",
        "_first_end",
        "_seed_count",
        "_suffix",
        "_last_growth",
    )

    def __init__(self, text: str = "") -> None:
        self._s: list[str] = []
        self._len = [-1, 0]
        self._link = [0, 0]
        self._trans: list[dict[str, int]] = [{}, {}]
        self._first_end = [-1, -1]
        self._seed_count = [0, 0]
        self._suffix = 1  # longest palindromic suffix of the processed prefix
        self._last_growth = 0
        self.extend(text)

    def _climb(self, v: int, pos: int) -> int:
        # Find the first suffix-link ancestor whose palindrome extends by s[pos].
        s, lens, links = self._s, self._len, self._link
        ch = s[pos]
        while True:
            j = pos - lens[v] - 1
            if j >= 0 and s[j] == ch:
                return v
            v = links[v]

    def append(self, ch: str) -> bool:
        """Process one letter; True when a new palindrome node was created."""
        self._s.append(ch)
        pos = len(self._s) - 1
        cur = self._climb(self._suffix, pos)
        nxt = self._trans[cur].get(ch)
        if nxt is not None:
            self._suffix = nxt
            self._seed_count[nxt] += 1
            return False
        new_len = self._len[cur] + 2
        if new_len == 1:
            link = 1
        else:
            link = self._trans[self._climb(self._link[cur], pos)][ch]
        self._len.append(new_len)
        self._link.append(link)
        self._trans.append({})
        self._first_end.append(pos)
        self._seed_count.append(1)
        nxt = len(self._len) - 1
        self._trans[cur][ch] = nxt
        self._suffix = nxt
        self._last_growth = pos + 1
        return True

    def extend(self, text: str) -> None:
        for ch in text:
            self.append(ch)

    @property
    def processed_length(self) -> int:
        return len(self._s)

    @property
    def text(self) -> str:
        return "".join(self._s)

    @property
    def node_count(self) -> int:
        """All nodes including the two roots."""
        return len(self._len)

    @property
    def distinct_palindromes(self) -> int:
        """Number of distinct non-empty palindromic factors processed."""
        return len(self._len) - 2

    @property
    def last_growth(self) -> int:
        """Prefix length at which the palindrome set last grew (0 if never)."""
        return self._last_growth

    def _extract(self, node: int) -> str:
        end = self._first_end[node]
        return "".join(self._s[end - self._len[node] + 1 : end + 1])

    def palindromes(self) -> list[str]:
        """The distinct non-empty palindromic factors, in creation order."""
        return [self._extract(v) for v in range(2, len(self._len))]

    def palindromes_with_first_end(self) -> list[tuple[str, int]]:
        return [
            (self._extract(v), self._first_end[v]) for v in range(2, len(self._len))
        ]

    def occurrence_counts(self) -> dict[str, int]:
        """Occurrences of each distinct palindrome as a factor.

        Seed counts propagate along suffix links in reverse creation order
        (children were created after their links), giving exact totals.
        """
        totals = list(self._seed_count)
        links = self._link
        for v in range(len(totals) - 1, 1, -1):
            totals[links[v]] += totals[v]
        return {self._extract(v): totals[v] for v in range(2, len(totals))}
