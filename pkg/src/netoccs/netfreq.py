"""Enumerate net occurrences of a text and compute per-string net frequency.

Two independent enumerators are provided and must agree everywhere:

* ``net_occurrences_bruteforce`` — definition-driven oracle. For each start
  position it finds the largest repeated substring beginning there (binary
  search on a monotone predicate, probed with C-speed scans) and then checks
  the definition directly on that single candidate. One candidate per start
  suffices: a shorter candidate has a repeated right extension, so it cannot
  be a net occurrence, and a longer one is not repeated at all.
* ``net_occurrences_indexed`` — suffix-array route. It computes, for every
  suffix, the maximum common prefix with any other suffix (adjacent maxima of
  the LCP array) and reads the net occurrences off that table without any
  substring scanning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .occurrences import Occurrence, is_net_occurrence


@dataclass(frozen=True)
class NetOccurrenceRecord:
    """A net occurrence together with its substring and one-letter context."""

    occurrence: Occurrence
    substring: str
    left: str | None
    right: str | None

    def to_json_dict(self) -> dict:
        return {
            "start": self.occurrence.start,
            "end": self.occurrence.end,
            "string": self.substring,
            "left": self.left,
            "right": self.right,
        }


def _record(text: str, occ: Occurrence) -> NetOccurrenceRecord:
    n = len(text)
    return NetOccurrenceRecord(
        occurrence=occ,
        substring=text[occ.start - 1 : occ.end],
        left=text[occ.start - 2] if occ.start > 1 else None,
        right=text[occ.end] if occ.end < n else None,
    )


def _max_repeated_prefix_len(text: str, start0: int) -> int:
    """Largest L such that text[start0:start0+L] occurs at least twice.

    Monotone in L, so binary search; each probe is a pair of C-level scans
    (first and last occurrence differ iff the substring is repeated).
    """
    lo, hi = 0, len(text) - start0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        sub = text[start0 : start0 + mid]
        if text.find(sub) != text.rfind(sub):
            lo = mid
        else:
            hi = mid - 1
    return lo


def net_occurrences_bruteforce(text: str) -> list[NetOccurrenceRecord]:
    """All net occurrences, checked against the definition, sorted by start.

    A net occurrence starting at s must cover exactly the longest repeated
    substring starting there, so each start yields at most one candidate;
    the candidate is then verified letter-for-letter.
    """
    if not text:
        raise ValueError("net_occurrences_bruteforce: empty text")
    out = []
    for s in range(1, len(text) + 1):
        length = _max_repeated_prefix_len(text, s - 1)
        if length == 0:
            continue
        occ = Occurrence(s, s + length - 1)
        if is_net_occurrence(text, occ):
            out.append(_record(text, occ))
    return out


def suffix_array(text: str) -> list[int]:
    """Suffix array (0-based suffix starts) by rank doubling."""
    n = len(text)
    rank = [ord(c) for c in text]
    sa = sorted(range(n), key=rank.__getitem__)
    tmp = [0] * n
    k = 1
    while True:
        def key(i: int) -> tuple[int, int]:
            return (rank[i], rank[i + k] if i + k < n else -1)

        sa.sort(key=key)
        tmp[sa[0]] = 0
        for t in range(1, n):
            tmp[sa[t]] = tmp[sa[t - 1]] + (key(sa[t]) != key(sa[t - 1]))
        rank = tmp[:]
        if rank[sa[-1]] == n - 1:
            return sa
        k <<= 1


def lcp_array(text: str, sa: list[int]) -> list[int]:
    """lcp[r] = longest common prefix of sa[r-1] and sa[r] (lcp[0] = 0)."""
    n = len(text)
    rank = [0] * n
    for r, s in enumerate(sa):
        rank[s] = r
    lcp = [0] * n
    h = 0
    for s in range(n):
        r = rank[s]
        if r == 0:
            h = 0
            continue
        t = sa[r - 1]
        while s + h < n and t + h < n and text[s + h] == text[t + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def repeated_prefix_table(text: str) -> list[int]:
    """For each 0-based start s, the length of the longest prefix of the
    suffix at s that also occurs elsewhere in the text."""
    n = len(text)
    if n == 1:
        return [0]
    sa = suffix_array(text)
    lcp = lcp_array(text, sa)
    table = [0] * n
    for r, s in enumerate(sa):
        best = lcp[r]
        if r + 1 < n and lcp[r + 1] > best:
            best = lcp[r + 1]
        table[s] = best
    return table


def net_occurrences_indexed(text: str) -> list[NetOccurrenceRecord]:
    """Index-based enumerator; must match the brute-force oracle exactly.

    With R[s] the longest repeated-substring length at start s, the net
    occurrences are the (s, s+R[s]-1) with R[s] >= 1 whose left extension is
    unique — i.e. s = 1 or R[s-1] <= R[s], since the left extension is the
    length-(R[s]+1) string starting one position earlier.
    """
    if not text:
        raise ValueError("net_occurrences_indexed: empty text")
    table = repeated_prefix_table(text)
    out = []
    for s0, length in enumerate(table):
        if length == 0:
            continue
        if s0 > 0 and table[s0 - 1] > length:
            continue
        out.append(_record(text, Occurrence(s0 + 1, s0 + length)))
    return out


def net_frequency(text: str, pattern: str) -> int:
    """Number of net occurrences of the pattern; 0 for unique or absent
    strings."""
    if not pattern:
        raise ValueError("net_frequency: empty pattern")
    if pattern not in text:
        return 0
    return sum(1 for rec in net_occurrences_indexed(text) if rec.substring == pattern)
