"""Binary words over {a, b}: Fibonacci and Thue-Morse generators and factorizations.

Words are plain Python strings restricted to the letters 'a' and 'b'.
All positions exposed by this package are 1-based and inclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

ALPHABET = ("a", "b")

_FLIP = str.maketrans("ab", "ba")


def flip_word(w: str) -> str:
    """Exchange a <-> b letterwise. Length-preserving involution."""
    return w.translate(_FLIP)


def validate_word(w: str) -> str:
    """Reject any character outside the two-letter alphabet."""
    if w.strip("ab"):
        bad = sorted(set(w) - set(ALPHABET))
        raise ValueError(f"word contains letters outside {{a, b}}: {bad}")
    return w


@lru_cache(maxsize=None)
def fib_word(order: int) -> str:
    """Fibonacci word of the given order: 'b', 'a', then each word is the
    previous one followed by the one before it."""
    if order < 1:
        raise ValueError(f"fib_word: order must be >= 1, got {order}")
    if order == 1:
        return "b"
    if order == 2:
        return "a"
    return fib_word(order - 1) + fib_word(order - 2)


def fib_length(order: int) -> int:
    """Length of the Fibonacci word of the given order."""
    if order < 1:
        raise ValueError(f"fib_length: order must be >= 1, got {order}")
    a, b = 1, 1  # lengths at orders 1 and 2
    for _ in range(order - 2):
        a, b = b, a + b
    return b if order > 1 else a


def fib_length_ext(order: int) -> int:
    """fib_length extended by the two convention values used in counting
    formulas: order -1 -> 1 and order 0 -> 0."""
    if order == -1:
        return 1
    if order == 0:
        return 0
    return fib_length(order)


@lru_cache(maxsize=None)
def tm_word(order: int) -> str:
    """Thue-Morse word of the given order: 'a', then each word is the
    previous one followed by its flip. Length doubles per order."""
    if order < 1:
        raise ValueError(f"tm_word: order must be >= 1, got {order}")
    if order == 1:
        return "a"
    prev = tm_word(order - 1)
    return prev + flip_word(prev)


def tm_length(order: int) -> int:
    """Length of the Thue-Morse word of the given order: 2**(order-1)."""
    if order < 1:
        raise ValueError(f"tm_length: order must be >= 1, got {order}")
    return 1 << (order - 1)


def q_word(order: int) -> str:
    """Descending concatenation of Fibonacci words from order-5 down to 2.

    Defined for order >= 7 (the product would be empty or ill-formed below);
    its length is fib_length(order-3) - 2.
    """
    if order < 7:
        raise ValueError(f"q_word: order must be >= 7, got {order}")
    return "".join(fib_word(k) for k in range(order - 5, 1, -1))


def delta(bit: int) -> str:
    """The two-letter closing words: delta(0) = 'ba', delta(1) = 'ab'."""
    if bit == 0:
        return "ba"
    if bit == 1:
        return "ab"
    raise ValueError(f"delta: bit must be 0 or 1, got {bit}")


@dataclass(frozen=True)
class FactorRef:
    """Symbolic reference to a word: a Fibonacci word, a Thue-Morse word,
    a flipped Thue-Morse word, or a literal string.

    kind is one of "Fib", "TM", "TMflip", "lit"; exactly one of order/text
    is set.
    """

    kind: str
    order: int | None = None
    text: str | None = None

    def __post_init__(self) -> None:
        if self.kind in ("Fib", "TM", "TMflip"):
            if self.order is None or self.order < 1 or self.text is not None:
                raise ValueError(f"FactorRef: {self.kind} needs order >= 1 only")
        elif self.kind == "lit":
            if self.text is None or self.order is not None:
                raise ValueError("FactorRef: lit needs text only")
            validate_word(self.text)
        else:
            raise ValueError(f"FactorRef: unknown kind {self.kind!r}")

    def resolve(self) -> str:
        if self.kind == "Fib":
            return fib_word(self.order)
        if self.kind == "TM":
            return tm_word(self.order)
        if self.kind == "TMflip":
            return flip_word(tm_word(self.order))
        return self.text

    def flipped(self) -> "FactorRef":
        """Flip the referenced word, staying symbolic where possible."""
        if self.kind == "TM":
            return FactorRef("TMflip", order=self.order)
        if self.kind == "TMflip":
            return FactorRef("TM", order=self.order)
        return FactorRef("lit", text=flip_word(self.resolve()))

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "order": self.order, "text": self.text}


def fib_ref(order: int) -> FactorRef:
    return FactorRef("Fib", order=order)


def tm_ref(order: int) -> FactorRef:
    return FactorRef("TM", order=order)


def tm_flip_ref(order: int) -> FactorRef:
    return FactorRef("TMflip", order=order)


def lit_ref(text: str) -> FactorRef:
    return FactorRef("lit", text=text)


@dataclass(frozen=True)
class Factorization:
    """Ordered factor list whose concatenation equals the target word.

    The factor list may be empty only for the degenerate empty target.
    """

    factors: tuple[FactorRef, ...]
    target: str

    def __post_init__(self) -> None:
        flat = self.flatten()
        if flat != self.target:
            raise ValueError(
                f"factorization does not flatten to its target "
                f"({len(flat)} letters vs {len(self.target)})"
            )
        if any(not f.resolve() for f in self.factors):
            raise ValueError("factorization contains an empty factor")

    def flatten(self) -> str:
        return "".join(f.resolve() for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def factor_starts(self) -> tuple[int, ...]:
        """1-based starting position of each factor inside the target."""
        starts = []
        pos = 1
        for f in self.factors:
            starts.append(pos)
            pos += len(f.resolve())
        return tuple(starts)

    def to_json_list(self) -> list[dict]:
        return [f.to_json_dict() for f in self.factors]


def _unfold_fib(factors: list[FactorRef], level: int) -> list[FactorRef]:
    # Expand the leftmost factor whose order exceeds level+1 until every
    # factor sits at level or level+1.
    while True:
        for idx, f in enumerate(factors):
            if f.order > level + 1:
                factors[idx : idx + 1] = [fib_ref(f.order - 1), fib_ref(f.order - 2)]
                break
        else:
            return factors


def fib_uniform_factorization(i: int, k: int) -> Factorization:
    """Factorization of the order-i Fibonacci word where every factor is the
    order-k or order-(k+1) Fibonacci word, by leftmost unfolding."""
    if not 1 <= k <= i:
        raise ValueError(f"fib_uniform_factorization: need 1 <= k <= i, got ({i}, {k})")
    factors = _unfold_fib([fib_ref(i)], k)
    return Factorization(tuple(factors), fib_word(i))


def _unfold_tm(factors: list[FactorRef], level: int) -> list[FactorRef]:
    # A flipped factor unfolds with its halves swapped and flipped.
    while True:
        for idx, f in enumerate(factors):
            if f.order > level:
                if f.kind == "TM":
                    pair = [tm_ref(f.order - 1), tm_flip_ref(f.order - 1)]
                else:
                    pair = [tm_flip_ref(f.order - 1), tm_ref(f.order - 1)]
                factors[idx : idx + 1] = pair
                break
        else:
            return factors


def tm_uniform_factorization(i: int, j: int) -> Factorization:
    """Factorization of the order-i Thue-Morse word where every factor is the
    order-(i-j+1) Thue-Morse word or its flip, by leftmost unfolding."""
    if not 1 <= j <= i:
        raise ValueError(f"tm_uniform_factorization: need 1 <= j <= i, got ({i}, {j})")
    factors = _unfold_tm([tm_ref(i)], i - (j - 1))
    return Factorization(tuple(factors), tm_word(i))


def read_word_file(path) -> str:
    """Read a one-line word file: ASCII a/b letters, optional trailing newline."""
    with open(path, "r", encoding="ascii") as fh:
        data = fh.read()
    if data.endswith("\n"):
        data = data[:-1]
    if "\n" in data:
        raise ValueError(f"{path}: expected a single line of a/b letters")
    if not data:
        raise ValueError(f"{path}: empty word")
    return validate_word(data)
