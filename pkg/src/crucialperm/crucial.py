"""The five crucial types, by direct extension and by RSK staircase conditions."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidInputError, UnsupportedError
from .perm import PatternSpec, Permutation, _avoids, _make, reduce, reverse
from .tableaux import Tableau, rsk

__all__ = [
    "TYPES",
    "DIRECTIONS",
    "CrucialClass",
    "is_right_crucial_direct",
    "is_left_crucial_direct",
    "is_top_crucial_direct",
    "is_bottom_crucial_direct",
    "classify_direct",
    "has_type",
    "staircase_top_right",
    "staircase_bottom_left",
    "classify_rsk",
    "rsk_flags",
    "minimal_length",
    "minimal_top_right",
    "minimal_quadrocrucial",
    "counterexample_quadrocrucial",
    "doublings",
    "insertions",
    "deletions",
    "is_non_extendable",
    "is_irreducible",
    "ending_witness",
    "has_minimal_crucial_structure",
    "has_minimal_bicrucial_structure",
]

TYPES = ("right", "left", "top", "bottom", "bi", "top_right", "tri", "quadro")

# Directional primitives that make up each type.
DIRECTIONS = {
    "right": ("right",),
    "left": ("left",),
    "top": ("top",),
    "bottom": ("bottom",),
    "bi": ("right", "left"),
    "top_right": ("right", "top"),
    "tri": ("right", "left", "top"),
    "quadro": ("right", "left", "top", "bottom"),
}


def _check_type(type_: str) -> None:
    if type_ not in DIRECTIONS:
        raise InvalidInputError(f"unknown type {type_!r}; expected one of {', '.join(TYPES)}")


@dataclass(frozen=True)
class CrucialClass:
    k: int
    l: int
    n: int
    right: bool
    left: bool
    top: bool
    bottom: bool

    @property
    def bicrucial(self) -> bool:
        return self.right and self.left

    @property
    def top_right(self) -> bool:
        return self.right and self.top

    @property
    def tricrucial(self) -> bool:
        return self.bicrucial and self.top

    @property
    def quadrocrucial(self) -> bool:
        return self.tricrucial and self.bottom

    def flags(self) -> dict[str, bool]:
        """All eight flags keyed by type name."""
        return {
            "right": self.right,
            "left": self.left,
            "top": self.top,
            "bottom": self.bottom,
            "bi": self.bicrucial,
            "top_right": self.top_right,
            "tri": self.tricrucial,
            "quadro": self.quadrocrucial,
        }

    def has(self, type_: str) -> bool:
        _check_type(type_)
        return self.flags()[type_]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "right": self.right,
            "left": self.left,
            "top": self.top,
            "bottom": self.bottom,
            "bicrucial": self.bicrucial,
            "top_right": self.top_right,
            "tricrucial": self.tricrucial,
            "quadrocrucial": self.quadrocrucial,
        }


# Direct checks: p is assumed to avoid (k, l) already. Each extension is
# re-tested from scratch.

def _right_blocked(p: Sequence[int], k: int, l: int) -> bool:
    for i in range(1, len(p) + 2):
        word = [x + 1 if x >= i else x for x in p]
        word.append(i)
        if _avoids(word, k, l):
            return False
    return True


def _left_blocked(p: Sequence[int], k: int, l: int) -> bool:
    for i in range(1, len(p) + 2):
        word = [i]
        word.extend(x + 1 if x >= i else x for x in p)
        if _avoids(word, k, l):
            return False
    return True


def _top_blocked(p: Sequence[int], k: int, l: int) -> bool:
    top = len(p) + 1
    for pos in range(len(p) + 1):
        word = list(p)
        word.insert(pos, top)
        if _avoids(word, k, l):
            return False
    return True


def _bottom_blocked(p: Sequence[int], k: int, l: int) -> bool:
    shifted = [x + 1 for x in p]
    for pos in range(len(p) + 1):
        word = shifted[:]
        word.insert(pos, 1)
        if _avoids(word, k, l):
            return False
    return True


_BLOCKED = {
    "right": _right_blocked,
    "left": _left_blocked,
    "top": _top_blocked,
    "bottom": _bottom_blocked,
}


def is_right_crucial_direct(p: Sequence[int], spec: PatternSpec) -> bool:
    return _avoids(p, spec.k, spec.l) and _right_blocked(p, spec.k, spec.l)


def is_left_crucial_direct(p: Sequence[int], spec: PatternSpec) -> bool:
    return _avoids(p, spec.k, spec.l) and _left_blocked(p, spec.k, spec.l)


def is_top_crucial_direct(p: Sequence[int], spec: PatternSpec) -> bool:
    return _avoids(p, spec.k, spec.l) and _top_blocked(p, spec.k, spec.l)


def is_bottom_crucial_direct(p: Sequence[int], spec: PatternSpec) -> bool:
    return _avoids(p, spec.k, spec.l) and _bottom_blocked(p, spec.k, spec.l)


def classify_direct(p: Sequence[int], spec: PatternSpec) -> CrucialClass:
    k, l = spec.k, spec.l
    if not _avoids(p, k, l):
        return CrucialClass(k, l, len(p), False, False, False, False)
    return CrucialClass(
        k,
        l,
        len(p),
        _right_blocked(p, k, l),
        _left_blocked(p, k, l),
        _top_blocked(p, k, l),
        _bottom_blocked(p, k, l),
    )


def has_type(p: Sequence[int], spec: PatternSpec, type_: str) -> bool:
    """Direct test for one type, stopping at the first direction that fails."""
    _check_type(type_)
    k, l = spec.k, spec.l
    if not _avoids(p, k, l):
        return False
    return all(_BLOCKED[d](p, k, l) for d in DIRECTIONS[type_])


def staircase_top_right(t: Tableau) -> bool:
    """Is there an increasing chain from the end of row 1 taking one entry per lower row?"""
    rows = t.rows
    if not rows:
        return True
    cur = rows[0][-1]
    for row in rows[1:]:
        # Greedy: the smallest admissible entry leaves the most room below.
        j = bisect_right(row, cur)
        if j == len(row):
            return False
        cur = row[j]
    return True


def staircase_bottom_left(t: Tableau) -> bool:
    """Column-wise mirror: chain from the start of the last row, one entry per later column."""
    rows = t.rows
    if not rows:
        return True
    cur = rows[-1][0]
    for j in range(1, len(rows[0])):
        col = [r[j] for r in rows if len(r) > j]
        i = bisect_right(col, cur)
        if i == len(col):
            return False
        cur = col[i]
    return True


def rsk_flags(P: Tableau, Q: Tableau, spec: PatternSpec) -> tuple[bool, bool, bool, bool]:
    """(right, left, top, bottom) from an RSK pair."""
    if P.ncols != spec.k - 1 or P.nrows != spec.l - 1:
        return (False, False, False, False)
    return (
        staircase_top_right(P),
        staircase_bottom_left(P),
        staircase_top_right(Q),
        staircase_bottom_left(Q),
    )


def classify_rsk(p: Sequence[int], spec: PatternSpec) -> CrucialClass:
    P, Q = rsk(p)
    return CrucialClass(spec.k, spec.l, len(p), *rsk_flags(P, Q, spec))


def minimal_length(spec: PatternSpec, type_: str) -> int:
    """Shortest length at which permutations of the type exist."""
    _check_type(type_)
    k, l = spec.k, spec.l
    if type_ in ("bi", "tri", "quadro"):
        return k + l - 3 + min(k, l) - 2
    return k + l - 3


def _require_at_least_3(spec: PatternSpec) -> None:
    if spec.k < 3 or spec.l < 3:
        raise UnsupportedError(f"construction needs k, l >= 3 (got k={spec.k}, l={spec.l})")


def minimal_top_right(spec: PatternSpec) -> Permutation:
    """The unique shortest top-right-crucial permutation: 1 2 .. k-2, then k+l-3 down to k-1."""
    _require_at_least_3(spec)
    k, l = spec.k, spec.l
    return _make(list(range(1, k - 1)) + list(range(k + l - 3, k - 2, -1)))


def minimal_quadrocrucial(spec: PatternSpec) -> Permutation:
    """Length k+2l-5: the l-1 smallest descending, k-3 middle ascending, l-1 largest descending.

    For k < l the reverse of the (l, k) word is returned, which has the minimal length 2k+l-5.
    """
    _require_at_least_3(spec)
    k, l = spec.k, spec.l
    if k < l:
        return _make(minimal_quadrocrucial(spec.swapped())[::-1])
    return _make(
        list(range(l - 1, 0, -1))
        + list(range(l, l + k - 3))
        + list(range(k + 2 * l - 5, k + l - 4, -1))
    )


def counterexample_quadrocrucial(spec: PatternSpec) -> Permutation:
    """A quadrocrucial permutation of length 2(k+l-4) with no quadrocrucial doubling."""
    _require_at_least_3(spec)
    k, l = spec.k, spec.l
    return _make(
        list(range(k + l - 4, k - 2, -1))
        + list(range(k + 2 * l - 5, 2 * k + 2 * l - 7))
        + list(range(1, k - 1))
        + list(range(k + 2 * l - 6, k + l - 4, -1))
    )


def doublings(p: Sequence[int]) -> Iterator[Permutation]:
    """Replace one element x by x(x+1) or (x+1)x, raising every larger element by one."""
    for pos, x in enumerate(p):
        head = [v + 1 if v > x else v for v in p[:pos]]
        tail = [v + 1 if v > x else v for v in p[pos + 1:]]
        yield _make(head + [x, x + 1] + tail)
        yield _make(head + [x + 1, x] + tail)


def insertions(p: Sequence[int]) -> Iterator[Permutation]:
    """Every permutation obtained by inserting one new element anywhere."""
    n = len(p)
    for v in range(1, n + 2):
        shifted = [x + 1 if x >= v else x for x in p]
        for pos in range(n + 1):
            yield _make(shifted[:pos] + [v] + shifted[pos:])


def deletions(p: Sequence[int]) -> Iterator[Permutation]:
    """Every reduced permutation obtained by deleting one element."""
    for pos in range(len(p)):
        yield reduce(list(p[:pos]) + list(p[pos + 1:]))


def _require_type(p, spec, type_):
    if not has_type(p, spec, type_):
        raise InvalidInputError(f"{Permutation(p)} is not ({spec.k},{spec.l})-{type_}-crucial")


def is_non_extendable(p: Sequence[int], spec: PatternSpec, type_: str) -> bool:
    _require_type(p, spec, type_)
    return not any(has_type(q, spec, type_) for q in insertions(p))


def is_irreducible(p: Sequence[int], spec: PatternSpec, type_: str) -> bool:
    _require_type(p, spec, type_)
    return not any(has_type(q, spec, type_) for q in deletions(p))


def _monotone_ending_at_last(p: Sequence[int], length: int, increasing: bool):
    n = len(p)
    if n == 0 or length < 1:
        return None
    before = (lambda a, b: a < b) if increasing else (lambda a, b: a > b)
    best = [1] * n
    for i in range(n):
        for j in range(i):
            if before(p[j], p[i]) and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
    if best[-1] < length:
        return None
    chain = [n - 1]
    need = length - 1
    while need:
        i = chain[-1]
        j = next(j for j in range(i - 1, -1, -1) if before(p[j], p[i]) and best[j] >= need)
        chain.append(j)
        need -= 1
    return tuple(p[i] for i in reversed(chain))


def ending_witness(p: Sequence[int], spec: PatternSpec):
    """Increasing (k-1) and decreasing (l-1) subsequences ending at the last letter, or None."""
    inc = _monotone_ending_at_last(p, spec.k - 1, True)
    dec = _monotone_ending_at_last(p, spec.l - 1, False)
    if inc is None or dec is None:
        return None
    return inc, dec


def has_minimal_crucial_structure(p: Sequence[int], spec: PatternSpec) -> bool:
    """Length k+l-3, ends in k-1, with 1..k-2 ascending and k..k+l-3 descending before it."""
    k, l = spec.k, spec.l
    n = k + l - 3
    if len(p) != n or p[-1] != k - 1:
        return False
    low = [x for x in p[:-1] if x <= k - 2]
    high = [x for x in p[:-1] if x >= k]
    return low == list(range(1, k - 1)) and high == list(range(k + l - 3, k - 1, -1))


def has_minimal_bicrucial_structure(p: Sequence[int], spec: PatternSpec) -> bool:
    """Shape of a shortest bicrucial permutation (stated for k >= l; mirrored otherwise)."""
    k, l = spec.k, spec.l
    if k < l:
        return has_minimal_bicrucial_structure(reverse(p), spec.swapped())
    n = k + 2 * l - 5
    if len(p) != n or p[0] != l - 1 or p[-1] != k + l - 3:
        return False
    small = [x for x in p if x <= l - 1]
    large = [x for x in p if x >= k + l - 3]
    middle = [x for x in p if l - 1 <= x <= k + l - 3]
    return (
        small == list(range(l - 1, 0, -1))
        and large == list(range(k + 2 * l - 5, k + l - 4, -1))
        and middle == list(range(l - 1, k + l - 2))
    )
