"""Permutations in one-line notation, symmetry maps, extensions and monotone patterns.

Values and positions are 1-based throughout, so ``Permutation("2413")[0] == 2``
is the first letter and ``extend_right(p, i)`` appends the value ``i``.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInputError

__all__ = [
    "Permutation",
    "PatternSpec",
    "parse_permutation",
    "format_permutation",
    "reduce",
    "reverse",
    "complement",
    "inverse",
    "extend_right",
    "extend_left",
    "extend_above",
    "extend_below",
    "longest_increasing_len",
    "longest_decreasing_len",
    "avoids",
]

_SEPARATORS = re.compile(r"[\s,]+")


class Permutation(tuple):
    """An immutable word containing each of 1..n exactly once.

    Accepts any iterable of integers or a text form (``"2 5 4 1 3"``,
    ``"2,5,4,1,3"`` or compact ``"25413"`` for n <= 9).
    """

    __slots__ = ()

    def __new__(cls, word: Iterable[int] | str = ()):
        if isinstance(word, str):
            return parse_permutation(word)
        try:
            word = tuple(int(x) for x in word)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"not a sequence of integers: {word!r}") from exc
        if sorted(word) != list(range(1, len(word) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(word)}: {word}")
        return super().__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"


def _make(word) -> Permutation:
    # Skips validation; callers guarantee a bijection on 1..n.
    return tuple.__new__(Permutation, word)


@dataclass(frozen=True)
class PatternSpec:
    """Prohibited increasing pattern of length ``k`` and decreasing pattern of length ``l``."""

    k: int
    l: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.l, int)):
            raise InvalidInputError(f"k and l must be integers, got {self.k!r}, {self.l!r}")
        if self.k < 2 or self.l < 2:
            raise InvalidInputError(f"need k >= 2 and l >= 2, got k={self.k}, l={self.l}")

    def swapped(self) -> "PatternSpec":
        return PatternSpec(self.l, self.k)

    @property
    def max_length(self) -> int:
        """Erdos-Szekeres bound: longest length of an avoiding permutation."""
        return (self.k - 1) * (self.l - 1)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if not text:
        return _make(())
    if _SEPARATORS.search(text):
        parts = [t for t in _SEPARATORS.split(text) if t]
    elif text.isdigit() and len(text) <= 9:
        parts = list(text)
    else:
        parts = [text]
    try:
        values = [int(t) for t in parts]
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse permutation {text!r}") from exc
    return Permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(str(x) for x in p)


def reduce(seq: Sequence[int]) -> Permutation:
    """Replace the i-th smallest entry by i (order-isomorphic standardization)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        raise InvalidInputError(f"entries must be distinct: {seq}")
    rank = {v: i for i, v in enumerate(sorted(seq), start=1)}
    return _make(rank[v] for v in seq)


def reverse(p: Sequence[int]) -> Permutation:
    return _make(reversed(tuple(p)))


def complement(p: Sequence[int]) -> Permutation:
    m = len(p) + 1
    return _make(m - v for v in p)


def inverse(p: Sequence[int]) -> Permutation:
    q = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        q[v - 1] = pos
    return _make(q)


def _check_index(i: int, n: int, what: str) -> None:
    if not 1 <= i <= n + 1:
        raise InvalidInputError(f"{what} must lie in 1..{n + 1}, got {i}")


def _shift(p: Sequence[int], i: int) -> list[int]:
    return [x + 1 if x >= i else x for x in p]


def extend_right(p: Sequence[int], i: int) -> Permutation:
    """Append value ``i``; old values >= i move up by one."""
    _check_index(i, len(p), "extension value")
    word = _shift(p, i)
    word.append(i)
    return _make(word)


def extend_left(p: Sequence[int], i: int) -> Permutation:
    """Prepend value ``i``; old values >= i move up by one."""
    _check_index(i, len(p), "extension value")
    return _make([i] + _shift(p, i))


def extend_above(p: Sequence[int], pos: int) -> Permutation:
    """Insert a new maximum n+1 so that it lands at position ``pos``."""
    _check_index(pos, len(p), "insertion position")
    word = list(p)
    word.insert(pos - 1, len(p) + 1)
    return _make(word)


def extend_below(p: Sequence[int], pos: int) -> Permutation:
    """Insert a new minimum 1 at position ``pos``, shifting every old value up."""
    _check_index(pos, len(p), "insertion position")
    word = [x + 1 for x in p]
    word.insert(pos - 1, 1)
    return _make(word)


def longest_increasing_len(p: Sequence[int]) -> int:
    tails: list[int] = []
    for x in p:
        j = bisect_left(tails, x)
        if j == len(tails):
            tails.append(x)
        else:
            tails[j] = x
    return len(tails)


def longest_decreasing_len(p: Sequence[int]) -> int:
    return longest_increasing_len([-x for x in p])


def _avoids(word: Sequence[int], k: int, l: int) -> bool:
    # Patience piles for both directions with an early exit; this is the hot loop
    # of every brute-force classification.
    inc: list[int] = []
    dec: list[int] = []
    for x in word:
        j = bisect_left(inc, x)
        if j == len(inc):
            if j + 1 >= k:
                return False
            inc.append(x)
        else:
            inc[j] = x
        y = -x
        j = bisect_left(dec, y)
        if j == len(dec):
            if j + 1 >= l:
                return False
            dec.append(y)
        else:
            dec[j] = y
    return True


def avoids(p: Sequence[int], spec: PatternSpec) -> bool:
    """True when ``p`` contains neither an increasing subsequence of length k nor a decreasing one of length l."""
    return _avoids(p, spec.k, spec.l)
