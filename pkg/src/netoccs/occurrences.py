"""Occurrences in a text: positions, containment relations, extensions, and
the net-occurrence predicate.

An occurrence is a 1-based inclusive interval (start, end) of a text. It is a
net occurrence when the covered substring is repeated in the text while both
its one-letter extensions are unique; an extension that would fall off either
end of the text counts as unique.
"""

from __future__ import annotations

from dataclasses import dataclass

PositionSet = tuple[int, ...]


def shift_positions(positions: PositionSet, d: int) -> PositionSet:
    """Translate every position by d."""
    return tuple(p + d for p in positions)


def merge_positions(*sets: PositionSet) -> PositionSet:
    """Exact set union, returned strictly increasing."""
    out: set[int] = set()
    for s in sets:
        out.update(s)
    return tuple(sorted(out))


def intersect_positions(a: PositionSet, b: PositionSet) -> PositionSet:
    return tuple(sorted(set(a) & set(b)))


@dataclass(frozen=True, order=True)
class Occurrence:
    """1-based inclusive interval inside a text."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.end:
            raise ValueError(f"invalid occurrence ({self.start}, {self.end})")

    def length(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class ExtensionPair:
    """One-letter context of an occurrence; a side is None at the text edge."""

    left: str | None
    right: str | None


@dataclass(frozen=True)
class OccurrenceRelation:
    """All containment/overlap predicates between two occurrences.

    The categories are not mutually exclusive (a proper sub-occurrence also
    overlaps), so each is reported independently.
    """

    equal: bool
    sub: bool
    proper_sub: bool
    super_: bool
    proper_super: bool
    overlap: bool
    disjoint: bool


def find_occurrences(pattern: str, text: str) -> PositionSet:
    """All 1-based starting positions of the pattern in the text, including
    overlapping ones, in increasing order. Direct-scan oracle."""
    if not pattern:
        raise ValueError("find_occurrences: empty pattern")
    out = []
    pos = text.find(pattern)
    while pos != -1:
        out.append(pos + 1)
        pos = text.find(pattern, pos + 1)
    return tuple(out)


def _check_bounds(text: str, occ: Occurrence) -> None:
    if occ.end > len(text):
        raise ValueError(f"occurrence {occ} out of bounds for text of length {len(text)}")


def extension_characters(text: str, occ: Occurrence) -> ExtensionPair:
    """The letters immediately before and after the occurrence; None where
    the occurrence touches a text boundary."""
    _check_bounds(text, occ)
    left = text[occ.start - 2] if occ.start > 1 else None
    right = text[occ.end] if occ.end < len(text) else None
    return ExtensionPair(left, right)


def occurrence_relation(o1: Occurrence, o2: Occurrence) -> OccurrenceRelation:
    """Containment and overlap flags of o1 relative to o2 (sub means o1 lies
    within o2)."""
    equal = o1 == o2
    sub = o2.start <= o1.start and o1.end <= o2.end
    super_ = o1.start <= o2.start and o2.end <= o1.end
    overlap = o1.start <= o2.end and o2.start <= o1.end
    return OccurrenceRelation(
        equal=equal,
        sub=sub,
        proper_sub=sub and not equal,
        super_=super_,
        proper_super=super_ and not equal,
        overlap=overlap,
        disjoint=not overlap,
    )


def _is_unique(text: str, sub: str) -> bool:
    # sub is known to occur; unique iff first and last occurrences coincide.
    return text.find(sub) == text.rfind(sub)


def is_net_occurrence(text: str, occ: Occurrence) -> bool:
    """Definition-level check: the covered substring is repeated, and each
    one-letter extension is unique or falls off the text."""
    _check_bounds(text, occ)
    s, e, n = occ.start, occ.end, len(text)
    sub = text[s - 1 : e]
    if _is_unique(text, sub):
        return False
    if s > 1 and not _is_unique(text, text[s - 2 : e]):
        return False
    if e < n and not _is_unique(text, text[s - 1 : e + 1]):
        return False
    return True
