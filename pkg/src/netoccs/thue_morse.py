"""Structure theory for Thue-Morse words.

Four groups of machine-checkable facts about tm_word(i):

* mutual recurrences for the starting positions of tm_word(i-j) and its
  letterwise flip inside tm_word(i), with explicit overlap sets at each
  step, plus the Jacobsthal-style count recurrences;
* the nine predicted net occurrences (three pattern words and their
  flips at fixed positions);
* re-splitting identities (4, 5 and 9 blocks) and the overlap-/cube-
  freeness scans that back the pattern-word lemmas;
* the "smallest factorization containing all occurrences" construction:
  a mutual recurrence over factor lists using order-decrement, letterwise
  flip, and a splice operator that merges the two central factors.

ab_sets deliberately stops at offset i-2: one step further the recurrence
would shift by the length of an order-0 word, which does not exist, and
the counts stop matching a direct scan. Callers wanting single-letter
occurrence sets should scan the word directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .occurrences import (
    Occurrence,
    PositionSet,
    find_occurrences,
    intersect_positions,
    merge_positions,
    shift_positions,
)
from .reports import ClaimResult
from .words import (
    Factorization,
    FactorRef,
    flip_word,
    lit_ref,
    tm_flip_ref,
    tm_length,
    tm_ref,
    tm_word,
)


@dataclass(frozen=True)
class OccurrenceSets:
    """Starting positions of a word (a_set) and its flip (b_set) inside a
    fixed host word."""

    a_set: PositionSet
    b_set: PositionSet


def _check_ab_domain(i: int, j: int) -> None:
    if i < 2:
        raise ValueError(f"ab_sets: order {i} out of domain (need i >= 2)")
    if not 0 <= j <= i - 2:
        raise ValueError(
            f"ab_sets: offset {j} out of the recurrence domain for order {i}; "
            "scan the word directly for larger offsets"
        )


@lru_cache(maxsize=None)
def ab_sets(i: int, j: int) -> OccurrenceSets:
    """Occurrence positions of tm_word(i-j) / flipped tm_word(i-j) inside
    tm_word(i), for 0 <= j <= i-2, via the mutual shift recurrences."""
    _check_ab_domain(i, j)
    if j == 0:
        return OccurrenceSets(a_set=(1,), b_set=())
    if j == 1:
        return OccurrenceSets(a_set=(1,), b_set=(tm_length(i - 1) + 1,))
    prev = ab_sets(i, j - 1)
    back = ab_sets(i, j - 2)
    near = tm_length(i - j)
    far = near + tm_length(i - (j + 1))
    return OccurrenceSets(
        a_set=merge_positions(
            prev.a_set, shift_positions(prev.b_set, near), shift_positions(back.a_set, far)
        ),
        b_set=merge_positions(
            prev.b_set, shift_positions(prev.a_set, near), shift_positions(back.b_set, far)
        ),
    )


@dataclass(frozen=True)
class ABStepParts:
    """Constituents of one recurrence step, for clause-level checking."""

    prev_a: PositionSet
    b_shift: PositionSet
    a_shift2: PositionSet
    overlap_a: PositionSet
    prev_b: PositionSet
    a_shift: PositionSet
    b_shift2: PositionSet
    overlap_b: PositionSet


def ab_step_parts(i: int, j: int) -> ABStepParts:
    _check_ab_domain(i, j)
    if j < 2:
        raise ValueError(f"ab_step_parts: offset {j} has no recurrence step")
    prev = ab_sets(i, j - 1)
    back = ab_sets(i, j - 2)
    near = tm_length(i - j)
    far = near + tm_length(i - (j + 1))
    if j == 2:
        overlap_a: PositionSet = ()
        overlap_b: PositionSet = ()
    else:
        deep = ab_sets(i, j - 3)
        mid = tm_length(i - (j - 1)) + near
        wide = tm_length(i - (j - 2))
        overlap_a = merge_positions(
            shift_positions(deep.a_set, mid), shift_positions(deep.b_set, wide)
        )
        overlap_b = merge_positions(
            shift_positions(deep.a_set, wide), shift_positions(deep.b_set, mid)
        )
    return ABStepParts(
        prev_a=prev.a_set,
        b_shift=shift_positions(prev.b_set, near),
        a_shift2=shift_positions(back.a_set, far),
        overlap_a=overlap_a,
        prev_b=prev.b_set,
        a_shift=shift_positions(prev.a_set, near),
        b_shift2=shift_positions(back.b_set, far),
        overlap_b=overlap_b,
    )


def ab_step_ok(i: int, j: int) -> bool:
    """Verify both recurrence steps at (i, j): the stated unions, the exact
    overlap sets between the first two constituents, and emptiness of the
    other two pairwise intersections."""
    parts = ab_step_parts(i, j)
    sets = ab_sets(i, j)
    a_ok = (
        merge_positions(parts.prev_a, parts.b_shift, parts.a_shift2) == sets.a_set
        and intersect_positions(parts.prev_a, parts.b_shift) == parts.overlap_a
        and not intersect_positions(parts.prev_a, parts.a_shift2)
        and not intersect_positions(parts.b_shift, parts.a_shift2)
    )
    b_ok = (
        merge_positions(parts.prev_b, parts.a_shift, parts.b_shift2) == sets.b_set
        and intersect_positions(parts.prev_b, parts.a_shift) == parts.overlap_b
        and not intersect_positions(parts.prev_b, parts.b_shift2)
        and not intersect_positions(parts.a_shift, parts.b_shift2)
    )
    return a_ok and b_ok


def ab_counts(j_max: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Closed count recurrences: a_j = a_{j-1} + 2a_{j-2} with a_0 = a_1 = 1,
    and b_j = b_{j-1} + a_{j-1} with b_0 = 0."""
    if j_max < 0:
        raise ValueError(f"ab_counts: j_max {j_max} < 0")
    a = [1, 1]
    b = [0, 1]
    for j in range(2, j_max + 1):
        a.append(a[j - 1] + 2 * a[j - 2])
        b.append(b[j - 1] + a[j - 1])
    return tuple(a[: j_max + 1]), tuple(b[: j_max + 1])


def jacobsthal(k: int) -> int:
    """k-th Jacobsthal number (2^k - (-1)^k) / 3; equals a_{k-1} of
    ab_counts for k >= 1."""
    if k < 0:
        raise ValueError(f"jacobsthal: index {k} < 0")
    return (2**k - (-1) ** k) // 3


def predicted_tm_net_occurrences(i: int) -> tuple[Occurrence, ...]:
    """The nine net occurrences of tm_word(i) for i >= 5: three of the
    order-(i-2) word, two of its flip, and two each of the two mixed
    order-(i-4)/(i-3) pattern words."""
    if i < 5:
        raise ValueError(f"predicted_tm_net_occurrences: order {i} < 5")
    t1 = tm_length(i - 1)
    t2 = tm_length(i - 2)
    t3 = tm_length(i - 3)
    t4 = tm_length(i - 4)
    mixed = t4 + t3
    occs = [
        Occurrence(1, t2),
        Occurrence(t2 + t3 + 1, t2 + t3 + t2),
        Occurrence(t1 + t2 + 1, t1 + 2 * t2),
        Occurrence(t2 + 1, 2 * t2),
        Occurrence(t1 + 1, t1 + t2),
        Occurrence(t3 + t4 + 1, t3 + t4 + mixed),
        Occurrence(t1 + t3 + 1, t1 + t3 + mixed),
        Occurrence(t3 + 1, t3 + mixed),
        Occurrence(t1 + t3 + t4 + 1, t1 + t3 + t4 + mixed),
    ]
    return tuple(sorted(occs))


def _max_true_run(mask: np.ndarray) -> int:
    if mask.size == 0:
        return 0
    padded = np.concatenate(([0], mask.astype(np.int8), [0]))
    steps = np.diff(padded)
    starts = np.flatnonzero(steps == 1)
    if starts.size == 0:
        return 0
    ends = np.flatnonzero(steps == -1)
    return int((ends - starts).max())


def is_overlap_free(text: str) -> bool:
    """No substring of length 2d+1 with period d, for any d >= 1
    (equivalently: no two occurrences of the same string overlap)."""
    arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    n = arr.size
    for d in range(1, (n - 1) // 2 + 1):
        if _max_true_run(arr[d:] == arr[:-d]) >= d + 1:
            return False
    return True


def is_cube_free(text: str) -> bool:
    """No substring of the form www with w nonempty."""
    arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    n = arr.size
    for d in range(1, n // 3 + 1):
        if _max_true_run(arr[d:] == arr[:-d]) >= 2 * d:
            return False
    return True


def check_tm_identities(i: int) -> dict[str, ClaimResult]:
    """Literal concatenation checks of the four re-splitting identities,
    plus quadratic overlap-/cube-freeness scans (gated to i <= 12)."""
    if i < 5:
        raise ValueError(f"check_tm_identities: order {i} < 5")
    word = tm_word(i)
    t2 = tm_word(i - 2)
    t3 = tm_word(i - 3)
    t4 = tm_word(i - 4)
    f2, f3, f4 = flip_word(t2), flip_word(t3), flip_word(t4)
    claims = {
        "quarter_split": ClaimResult(word == t2 + f2 + f2 + t2),
        "five_block_split": ClaimResult(word == t2 + f3 + t2 + t3 + t2),
        "nine_block_split_a": ClaimResult(
            word == t3 + f4 + t4 + f3 + t2 + t4 + f3 + f4 + f3
        ),
        "nine_block_split_b": ClaimResult(
            word == t3 + f4 + t3 + t4 + t2 + t4 + f4 + t3 + f3
        ),
    }
    if i <= 12:
        claims["overlap_free"] = ClaimResult(is_overlap_free(word))
        claims["cube_free"] = ClaimResult(is_cube_free(word))
    return claims


# --- smallest factorizations -------------------------------------------------


@dataclass(frozen=True)
class SmallestFactorization:
    """A factorization of tm_word(i) in which every occurrence of the target
    word (tm_word(i-j) for kind A, its flip for kind B) is a whole factor,
    with the fewest factors possible."""

    factorization: Factorization
    kind: str
    i: int
    j: int

    def target_word(self) -> str:
        base = tm_word(self.i - self.j)
        return base if self.kind == "A" else flip_word(base)

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "i": self.i,
            "j": self.j,
            "factors": self.factorization.to_json_list(),
        }


def _next_factor(ref: FactorRef) -> FactorRef:
    if ref.kind not in ("TM", "TMflip") or ref.order < 2:
        raise ValueError(f"order-decrement undefined for {ref}")
    return FactorRef(ref.kind, order=ref.order - 1)


def _next_factors(refs: tuple[FactorRef, ...]) -> tuple[FactorRef, ...]:
    return tuple(_next_factor(r) for r in refs)


def _flip_factors(refs: tuple[FactorRef, ...]) -> tuple[FactorRef, ...]:
    return tuple(r.flipped() for r in refs)


def _splice(x: tuple[FactorRef, ...], y: tuple[FactorRef, ...], i: int, j: int) -> tuple[FactorRef, ...]:
    """Join two factor lists whose touching factors both resolve to the
    flipped order-(i-j) word, replacing that pair by three factors that
    spell the same letters with the target word in the middle."""
    boundary = flip_word(tm_word(i - j))
    if not x or not y or x[-1].resolve() != boundary or y[0].resolve() != boundary:
        raise ValueError("splice: touching factors are not both the flipped target")
    middle = (tm_flip_ref(i - j - 1), tm_ref(i - j), tm_ref(i - j - 1))
    return x[:-1] + middle + y[1:]


def _single_letter_ref(ch: str) -> FactorRef:
    return tm_ref(1) if ch == "a" else tm_flip_ref(1)


def _letterwise_factors(i: int, target: str) -> tuple[FactorRef, ...]:
    """Fallback construction when the target is a single letter: one factor
    per target letter, one factor per maximal gap run."""
    word = tm_word(i)
    factors: list[FactorRef] = []
    pos = 0
    while pos < len(word):
        if word[pos] == target:
            factors.append(_single_letter_ref(target))
            pos += 1
            continue
        run = pos
        while run < len(word) and word[run] != target:
            run += 1
        gap = word[pos:run]
        factors.append(_single_letter_ref(gap) if len(gap) == 1 else lit_ref(gap))
        pos = run
    return tuple(factors)


@lru_cache(maxsize=None)
def _factor_list(i: int, j: int, kind: str) -> tuple[FactorRef, ...]:
    if j == 0:
        return (tm_ref(i),) if kind == "A" else ()
    if j == 1:
        return (tm_ref(i - 1), tm_flip_ref(i - 1))
    if j == i - 1:
        # The recurrence would need order-0 factors here; build directly
        # from the letter positions instead.
        target = "a" if kind == "A" else "b"
        return _letterwise_factors(i, target)
    a_prev = _factor_list(i, j - 1, "A")
    b_prev = _factor_list(i, j - 1, "B")
    if kind == "B":
        return _next_factors(b_prev) + _flip_factors(_next_factors(a_prev))
    x = _next_factors(a_prev)
    y = _flip_factors(_next_factors(b_prev))
    if j % 2 == 0:
        return _splice(x, y, i, j)
    return x + y


def smallest_factorization(i: int, j: int, kind: str) -> SmallestFactorization:
    """Build the smallest factorization of tm_word(i) containing every
    occurrence of the order-(i-j) target word (kind A) or its flip (kind B)
    as a whole factor. Kind B at offset 0 is the degenerate empty
    factorization: the flipped whole word never occurs."""
    if kind not in ("A", "B"):
        raise ValueError(f"smallest_factorization: kind {kind!r} not in A/B")
    if i < 2:
        raise ValueError(f"smallest_factorization: order {i} out of domain")
    if not 0 <= j <= i - 1:
        raise ValueError(f"smallest_factorization: offset {j} out of domain for order {i}")
    factors = _factor_list(i, j, kind)
    target = tm_word(i) if factors else ""
    return SmallestFactorization(
        factorization=Factorization(factors, target), kind=kind, i=i, j=j
    )


def validate_smallest_factorization(i: int, j: int, kind: str, fac) -> bool:
    """True iff the factorization places a whole factor at every occurrence
    of the target word and never has two adjacent non-target factors."""
    factorization = fac.factorization if isinstance(fac, SmallestFactorization) else fac
    word = tm_word(i)
    if factorization.flatten() != word:
        raise ValueError("validate_smallest_factorization: input does not flatten to the host word")
    base = tm_word(i - j)
    target = base if kind == "A" else flip_word(base)
    texts = [f.resolve() for f in factorization.factors]
    starts = factorization.factor_starts()
    placed = {starts[k] for k, t in enumerate(texts) if t == target}
    if placed != set(find_occurrences(target, word) if target in word else ()):
        return False
    return all(
        t1 == target or t2 == target for t1, t2 in zip(texts, texts[1:])
    )


def factorization_basis_ok(fac: SmallestFactorization) -> bool:
    """Every factor resolves to the order-(i-j) word, the order-(i-j-1)
    word, or one of their flips (only defined members count at the last
    offset, where the lower order would be 0)."""
    high = tm_word(fac.i - fac.j)
    basis = {high, flip_word(high)}
    if fac.i - fac.j - 1 >= 1:
        low = tm_word(fac.i - fac.j - 1)
        basis |= {low, flip_word(low)}
    return all(f.resolve() in basis for f in fac.factorization.factors)


def factorization_boundary_ok(fac: SmallestFactorization) -> bool:
    """First factor resolves to the order-(i-j) word; last factor resolves
    to the same word at even offsets and to its flip at odd offsets."""
    factors = fac.factorization.factors
    if not factors:
        return False
    head = tm_word(fac.i - fac.j)
    tail = head if fac.j % 2 == 0 else flip_word(head)
    return factors[0].resolve() == head and factors[-1].resolve() == tail
