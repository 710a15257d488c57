"""Structure theory for Fibonacci words.

Covers three groups of machine-checkable facts about fib_word(i):

* a recurrence for the starting positions of fib_word(i-j) inside
  fib_word(i), valid for offsets j up to i-4, plus a closed form for the
  number of such occurrences over the full offset range;
* concatenation identities that re-split fib_word(i) around its central
  blocks and around the truncated suffix word q_word(i);
* the uniqueness/follower lemmas that pin down the three net occurrences,
  together with the predicted net occurrence list itself.

Checks return flat claim maps so callers can serialize them uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .occurrences import (
    PositionSet,
    find_occurrences,
    merge_positions,
    shift_positions,
)
from .occurrences import Occurrence
from .reports import ClaimResult
from .words import delta, fib_length, fib_length_ext, fib_word, q_word


def _check_theta_domain(i: int, j: int) -> None:
    if i < 6:
        raise ValueError(f"theta_set: order {i} out of domain (need i >= 6)")
    if not 0 <= j <= i - 4:
        raise ValueError(f"theta_set: offset {j} out of domain for order {i}")


@lru_cache(maxsize=None)
def theta_set(i: int, j: int) -> PositionSet:
    """Starting positions of fib_word(i-j) inside fib_word(i), 0 <= j <= i-4.

    Computed by the two-track recurrence: each level unions the previous
    level with a shifted copy of the level before it, plus (at even offsets)
    one extra rightmost position.
    """
    _check_theta_domain(i, j)
    if j <= 1:
        return (1,)
    prev = theta_set(i, j - 1)
    shifted = shift_positions(theta_set(i, j - 2), fib_length(i - j))
    merged = merge_positions(prev, shifted)
    if j % 2 == 0:
        merged = merge_positions(merged, (fib_length(i) - fib_length(i - j) + 1,))
    return merged


@dataclass(frozen=True)
class ThetaParts:
    """The three recurrence constituents at one step (rightmost only when
    the offset is even)."""

    prev: PositionSet
    shifted: PositionSet
    rightmost: int | None


def theta_parts(i: int, j: int) -> ThetaParts:
    _check_theta_domain(i, j)
    if j < 2:
        raise ValueError(f"theta_parts: offset {j} has no recurrence step")
    rightmost = fib_length(i) - fib_length(i - j) + 1 if j % 2 == 0 else None
    return ThetaParts(
        prev=theta_set(i, j - 1),
        shifted=shift_positions(theta_set(i, j - 2), fib_length(i - j)),
        rightmost=rightmost,
    )


def theta_max_position(i: int, j: int) -> int:
    """Closed form for the largest element of theta_set(i, j); the reference
    length is fib_length(i-j) at even offsets and fib_length(i-j+1) at odd."""
    _check_theta_domain(i, j)
    ref = i - j if j % 2 == 0 else i - (j - 1)
    return fib_length(i) - fib_length(ref) + 1


def theta_step_ok(i: int, j: int) -> bool:
    """Verify the step clauses at (i, j): the constituents are pairwise
    disjoint, their union is theta_set(i, j), and the max matches the
    parity-dependent closed form."""
    full = theta_set(i, j)
    if max(full) != theta_max_position(i, j):
        return False
    if j < 2:
        return full == (1,)
    parts = theta_parts(i, j)
    pieces = [set(parts.prev), set(parts.shifted)]
    if parts.rightmost is not None:
        pieces.append({parts.rightmost})
    union: set[int] = set()
    for piece in pieces:
        if union & piece:
            return False
        union |= piece
    return union == set(full)


def theta_count(i: int, j: int) -> int:
    """Number of occurrences of fib_word(i-j) in fib_word(i), closed form.

    Three regimes by offset; the small-offset branch subtracts the offset
    parity, and the extended length table (with values 1 and 0 at orders -1
    and 0) covers the edge branches at tiny orders.
    """
    if i < 2:
        raise ValueError(f"theta_count: order {i} out of domain (need i >= 2)")
    if not 0 <= j <= i - 1:
        raise ValueError(f"theta_count: offset {j} out of domain for order {i}")
    if j <= i - 4:
        return fib_length_ext(j + 2) - (j % 2)
    if j <= i - 2:
        return fib_length_ext(j + 1)
    return fib_length_ext(j - 1)


def predicted_fib_net_occurrences(i: int) -> tuple[Occurrence, ...]:
    """The three net occurrences of fib_word(i) for i >= 7: two copies of
    the core block fib_word(i-2) + q_word(i) at positions 1 and
    fib_length(i-2)+1, and fib_word(i-2) as a suffix."""
    if i < 7:
        raise ValueError(f"predicted_fib_net_occurrences: order {i} < 7")
    core = fib_length(i - 2)
    qlen = fib_length(i - 3) - 2
    return (
        Occurrence(1, core + qlen),
        Occurrence(core + 1, 2 * core + qlen),
        Occurrence(fib_length(i - 1) + 1, fib_length(i)),
    )


def _unique_in(text: str, sub: str) -> bool:
    first = text.find(sub)
    return first != -1 and first == text.rfind(sub)


def _followed_by(text: str, pattern: str, follower: str, *, require_room: bool) -> tuple[bool, int | None]:
    """Check every occurrence of pattern is followed by follower.

    With require_room, an occurrence too close to the end is itself a
    failure; otherwise such occurrences are skipped. Returns (ok, witness
    position of the first violation).
    """
    if not follower:
        return True, None
    for pos in find_occurrences(pattern, text):
        tail_start = pos - 1 + len(pattern)
        if tail_start + len(follower) > len(text):
            if require_room:
                return False, pos
            continue
        if text[tail_start : tail_start + len(follower)] != follower:
            return False, pos
    return True, None


def check_fib_identities(i: int) -> dict[str, ClaimResult]:
    """Literal concatenation checks of the re-splitting identities.

    Available from order 6; the q_word identities join at order 7.
    """
    if i < 6:
        raise ValueError(f"check_fib_identities: order {i} < 6")
    word = fib_word(i)
    claims = {
        "split_mid_copy": ClaimResult(
            word == fib_word(i - 2) + fib_word(i - 3) + fib_word(i - 2)
        ),
        "split_double_prefix": ClaimResult(
            word == fib_word(i - 2) + fib_word(i - 2) + fib_word(i - 5) + fib_word(i - 4)
        ),
    }
    if i >= 7:
        q = q_word(i)
        claims["tail_pair_forward"] = ClaimResult(
            fib_word(i - 4) + fib_word(i - 5) == q + delta(1 - (i % 2))
        )
        claims["tail_pair_reversed"] = ClaimResult(
            fib_word(i - 5) + fib_word(i - 4) == q + delta(i % 2)
        )
        claims["q_length"] = ClaimResult(len(q) == fib_length(i - 3) - 2)
    return claims


def check_fib_lemmas(i: int) -> dict[str, ClaimResult]:
    """Exhaustive oracle checks of the occurrence-position, follower, and
    uniqueness lemmas behind the net occurrence characterization (i >= 7)."""
    if i < 7:
        raise ValueError(f"check_fib_lemmas: order {i} < 7")
    word = fib_word(i)
    n = fib_length(i)
    claims: dict[str, ClaimResult] = {}

    sq = find_occurrences(word, word + word)
    claims["square_two_occurrences"] = ClaimResult(sq == (1, n + 1), witness=list(sq))

    prev_occ = find_occurrences(fib_word(i - 1), word)
    claims["previous_only_at_1"] = ClaimResult(prev_occ == (1,), witness=list(prev_occ))

    second = find_occurrences(fib_word(i - 2), word)
    expect2 = (1, fib_length(i - 2) + 1, fib_length(i - 1) + 1)
    claims["second_previous_positions"] = ClaimResult(second == expect2, witness=list(second))

    third = find_occurrences(fib_word(i - 3), word)
    expect3 = (1, fib_length(i - 3) + 1, fib_length(i - 2) + 1, fib_length(i - 1) + 1)
    claims["third_previous_positions"] = ClaimResult(third == expect3, witness=list(third))

    core = fib_word(i - 2) + q_word(i)
    core_occ = find_occurrences(core, word)
    claims["core_block_positions"] = ClaimResult(
        core_occ == (1, fib_length(i - 2) + 1), witness=list(core_occ)
    )

    # q_word(6) is not defined; the truncated suffix word degenerates to the
    # empty word there, making the follower claim vacuous at order 7.
    follower = q_word(i - 1) if i >= 8 else ""
    ok, bad = _followed_by(word, fib_word(i - 3), follower, require_room=True)
    claims["third_previous_follower"] = ClaimResult(ok, witness=bad)

    extended = fib_word(i - 3) + fib_word(i - 6) + fib_word(i - 5)
    claims["extended_block_unique"] = ClaimResult(
        _unique_in(word, extended)
        and _unique_in(word, extended[: fib_length(i - 2) - 1])
    )

    stem = fib_word(i - 3)
    ok, bad = _followed_by(word, stem[:-1], stem[-1], require_room=False)
    claims["prefix_forces_last_letter"] = ClaimResult(ok, witness=bad)

    # Any proper superstring of the core block contains it extended by one
    # letter on at least one side, so uniqueness of every one-letter
    # extension that actually appears forces uniqueness of all of them.
    ext_ok = True
    bad_ext = None
    for probe in ("a" + core, "b" + core, core + "a", core + "b"):
        if probe in word and not _unique_in(word, probe):
            ext_ok = False
            bad_ext = probe[:8] + "..."
            break
    claims["core_block_superstrings_unique"] = ClaimResult(ext_ok, witness=bad_ext)
    return claims
