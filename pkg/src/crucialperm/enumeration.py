"""Counting crucial permutations: brute force, SYT characterizations and closed formulas."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, isqrt
from typing import Iterator

from .crucial import (
    DIRECTIONS,
    _BLOCKED,
    _check_type,
    minimal_length,
    staircase_bottom_left,
    staircase_top_right,
)
from .errors import BruteForceCapError, UnsupportedError
from .perm import PatternSpec, Permutation, _avoids, _make
from .tableaux import YoungShape, enumerate_shapes, enumerate_syt, format_shape, hook_length_count, rsk_inverse

__all__ = [
    "CountReport",
    "DEFAULT_BRUTE_CAP",
    "brute_cap",
    "count_brute",
    "list_brute",
    "count_syt",
    "list_syt",
    "count_formula",
    "shape_stats",
    "rectangle_syt_count",
    "formula_stanley_extremal",
    "formula_min_crucial",
    "formula_crucial_k3",
    "formula_crucial_k3_by_rank",
    "formula_top_right_k3",
    "formula_min_bicrucial",
    "formula_min_tricrucial_k3",
    "formula_min_quadrocrucial",
    "formula_next_min_top_right",
    "GrowthReport",
    "InequalityCheck",
    "verify_growth",
    "verify_inequalities",
    "deletion_closure_failures",
    "is_perfect_square",
]

DEFAULT_BRUTE_CAP = 10


@dataclass
class CountReport:
    n: int
    k: int
    l: int
    type: str
    count: int
    method: str
    per_shape: list[tuple[YoungShape, int]] | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "type": self.type,
            "method": self.method,
            "count": str(self.count),
        }
        if self.per_shape is not None:
            d["per_shape"] = [{"shape": format_shape(s), "m": str(m)} for s, m in self.per_shape]
        if self.note:
            d["note"] = self.note
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def brute_cap() -> int:
    """Longest n brute force will enumerate; ``CRUCIAL_BRUTE_CAP`` overrides the default."""
    value = os.environ.get("CRUCIAL_BRUTE_CAP")
    return int(value) if value else DEFAULT_BRUTE_CAP


def _type_test(k, l, type_):
    blocked = [_BLOCKED[d] for d in DIRECTIONS[type_]]

    def test(word):
        return _avoids(word, k, l) and all(b(word, k, l) for b in blocked)

    return test


def _scan_prefix(args) -> list[tuple[int, ...]]:
    n, k, l, type_, first = args
    test = _type_test(k, l, type_)
    rest = [v for v in range(1, n + 1) if v != first]
    return [(first,) + tail for tail in permutations(rest) if test((first,) + tail)]


def _count_prefix(args) -> int:
    n, k, l, type_, first = args
    test = _type_test(k, l, type_)
    rest = [v for v in range(1, n + 1) if v != first]
    return sum(1 for tail in permutations(rest) if test((first,) + tail))


def _brute_tasks(n, spec, type_, cap):
    _check_type(type_)
    cap = brute_cap() if cap is None else cap
    if n > cap:
        raise BruteForceCapError(f"brute force refuses n={n} > cap {cap}; use method 'syt'")
    return [(n, spec.k, spec.l, type_, first) for first in range(1, n + 1)]


def _run(fn, tasks, jobs):
    if jobs and jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, tasks))
    return [fn(t) for t in tasks]


def list_brute(
    n: int, spec: PatternSpec, type_: str, cap: int | None = None, jobs: int = 1
) -> Iterator[Permutation]:
    """All permutations of length n of the given type, in lexicographic order."""
    tasks = _brute_tasks(n, spec, type_, cap)
    if n == 0:
        if _type_test(spec.k, spec.l, type_)(()):
            yield _make(())
        return
    for chunk in _run(_scan_prefix, tasks, jobs):
        for word in chunk:
            yield _make(word)


def count_brute(
    n: int, spec: PatternSpec, type_: str, cap: int | None = None, jobs: int = 1
) -> CountReport:
    tasks = _brute_tasks(n, spec, type_, cap)
    if n == 0:
        total = int(_type_test(spec.k, spec.l, type_)(()))
    else:
        total = sum(_run(_count_prefix, tasks, jobs))
    return CountReport(n, spec.k, spec.l, type_, total, "brute")


@lru_cache(maxsize=None)
def shape_stats(shape: tuple[int, ...]) -> tuple[int, int, int, int]:
    """(f, a, c, b) for a shape.

    f is the number of SYT, a those with the top-right staircase, c those with
    the bottom-left staircase and b those with both.
    """
    if shape and all(r == shape[0] for r in shape):
        # In a rectangle the last column and the last row are both chains.
        f = hook_length_count(shape)
        return f, f, f, f
    f = a = c = b = 0
    for t in enumerate_syt(shape):
        f += 1
        tr = staircase_top_right(t)
        bl = staircase_bottom_left(t)
        a += tr
        c += bl
        b += tr and bl
    return f, a, c, b


def _contribution(type_: str, stats) -> int:
    f, a, c, b = stats
    return {
        "right": a * f,
        "left": c * f,
        "top": f * a,
        "bottom": f * c,
        "bi": b * f,
        "top_right": a * a,
        "tri": b * a,
        "quadro": b * b,
    }[type_]


_SQUARE_TYPES = {"top_right": 1, "quadro": 3}


def _full_shapes(n, spec):
    return list(enumerate_shapes(n, spec.k - 1, spec.l - 1, require_full=True))


def count_syt(n: int, spec: PatternSpec, type_: str, jobs: int = 1) -> CountReport:
    """Count via the tableau characterization: sum over full shapes of #P * #Q."""
    _check_type(type_)
    shapes = _full_shapes(n, spec)
    stats = _run(shape_stats, [tuple(s) for s in shapes], jobs)
    total = sum(_contribution(type_, st) for st in stats)
    per_shape = None
    if type_ in _SQUARE_TYPES:
        per_shape = [(s, st[_SQUARE_TYPES[type_]]) for s, st in zip(shapes, stats)]
    return CountReport(n, spec.k, spec.l, type_, total, "syt", per_shape)


def list_syt(n: int, spec: PatternSpec, type_: str) -> Iterator[Permutation]:
    """Same set as ``list_brute`` but generated from tableau pairs; lexicographic order."""
    _check_type(type_)
    dirs = DIRECTIONS[type_]
    p_tests = [t for d, t in (("right", staircase_top_right), ("left", staircase_bottom_left)) if d in dirs]
    q_tests = [t for d, t in (("top", staircase_top_right), ("bottom", staircase_bottom_left)) if d in dirs]
    found = []
    for shape in _full_shapes(n, spec):
        tableaux = list(enumerate_syt(shape))
        Ps = [t for t in tableaux if all(test(t) for test in p_tests)]
        Qs = [t for t in tableaux if all(test(t) for test in q_tests)]
        found.extend(rsk_inverse((P, Q)) for P in Ps for Q in Qs)
    found.sort()
    yield from found


# ---------------------------------------------------------------- formulas


def rectangle_syt_count(rows: int, cols: int) -> int:
    """Number of SYT of a rows x cols rectangle (1 for an empty rectangle)."""
    if rows <= 0 or cols <= 0:
        return 1
    return hook_length_count([cols] * rows)


def formula_stanley_extremal(spec: PatternSpec) -> int:
    """Number of (k,l)-avoiders of the maximal length (k-1)(l-1).

    Squared hook-length count of the (l-1) x (k-1) rectangle, with the hook
    product written out by multiplicity: hook h occurs min(h, k-1, l-1, k+l-2-h) times.
    """
    k, l = spec.k, spec.l
    denom = 1
    for h in range(1, k + l - 2):
        denom *= h ** min(h, k - 1, l - 1, k + l - 2 - h)
    root, rem = divmod(factorial((k - 1) * (l - 1)), denom)
    assert rem == 0, "hook product does not divide the factorial"
    return root * root


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UnsupportedError(message)


def formula_min_crucial(spec: PatternSpec) -> int:
    k, l = spec.k, spec.l
    _require(k >= 3 and l >= 3, f"minimal crucial count needs k, l >= 3 (got {k}, {l})")
    return comb(k + l - 4, k - 2)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{num} is not divisible by {den}"
    return q


def formula_crucial_k3(n: int, k: int) -> int:
    """Number of (k,3)-right-crucial permutations of length n."""
    _require(k >= 3, f"formula needs k >= 3 (got {k})")
    if n < k or n > 2 * (k - 1):
        return 0
    if n == k:
        return formula_min_crucial(PatternSpec(k, 3))
    num = (2 * k - n) * (2 * k - n - 1) * comb(n - 1, k) * comb(n, k)
    return _exact_div(num, (n - k) * (n - k + 1))


def formula_crucial_k3_by_rank(k: int, i: int) -> int:
    """(k,3)-right-crucial permutations of the i-th smallest length k+i-1, for i >= 2."""
    _require(k >= 3 and i >= 2, f"formula needs k >= 3 and i >= 2 (got k={k}, i={i})")
    if i >= k:
        return 0
    num = (k - i) * (k - i + 1) * comb(k + i - 2, k) * comb(k + i - 1, k)
    return _exact_div(num, i * (i - 1))


def formula_top_right_k3(n: int, k: int) -> int:
    """Number of (k,3)-top-right-crucial permutations of length n."""
    _require(k >= 3, f"formula needs k >= 3 (got {k})")
    if n < k or n > 2 * (k - 1):
        return 0
    if n == k:
        return 1
    root = _exact_div((2 * k - n) * comb(n - 1, k), n - k)
    return root * root


def formula_min_bicrucial(spec: PatternSpec) -> int:
    k, l = spec.k, spec.l
    _require(k >= l >= 3, f"minimal bicrucial count is stated for k >= l >= 3 (got {k}, {l}); swap k and l")
    delta = 1 if k == l else 0
    num = (1 + delta) * factorial(k + 2 * l - 5)
    den = (k + l - 3) * (k + l - 4) * factorial(l - 1) * factorial(l - 2) * factorial(k - 3)
    return _exact_div(num, den)


def formula_min_tricrucial_k3(k: int) -> int:
    _require(k >= 3, f"minimal (k,3)-tricrucial count needs k >= 3 (got {k})")
    return 4 if k == 3 else k - 1


def formula_min_quadrocrucial(spec: PatternSpec) -> int:
    k, l = spec.k, spec.l
    _require(k >= l >= 3, f"minimal quadrocrucial count is stated for k >= l >= 3 (got {k}, {l}); swap k and l")
    if k == 3:
        return 4
    if l == 3:
        return 1
    return 2 if k == l else 1


def formula_next_min_top_right(spec: PatternSpec) -> int:
    k, l = spec.k, spec.l
    _require(k >= 3 and l >= 3, f"next-minimal top-right count needs k, l >= 3 (got {k}, {l})")
    return (k + l - 4) ** 2


def count_formula(n: int, spec: PatternSpec, type_: str) -> CountReport:
    """Closed-form count where one is known; raises UnsupportedError otherwise.

    All four directional counts coincide (complement and inverse map the
    directions onto each other and swap k and l), and bi/tri/quadro counts are
    symmetric in (k, l) under reversal, so those formulas run on (max, min).
    """
    _check_type(type_)
    k, l = spec.k, spec.l
    note = None

    def report(value):
        return CountReport(n, k, l, type_, value, "formula", note=note)

    if n < minimal_length(spec, type_) or n > spec.max_length:
        return report(0)
    lo, hi = min(k, l), max(k, l)
    canon = PatternSpec(hi, lo)
    swapped = canon != spec
    if type_ in ("right", "left", "top", "bottom"):
        if n == k + l - 3 and lo >= 3:
            return report(formula_min_crucial(spec))
        if lo == 3:
            if swapped:
                note = f"evaluated at (k,l)=({hi},{lo}) by symmetry"
            return report(formula_crucial_k3(n, hi))
    elif type_ == "top_right":
        if n == k + l - 3 and lo >= 3:
            return report(1)
        if n == k + l - 2 and lo >= 3:
            return report(formula_next_min_top_right(spec))
        if l == 3:
            return report(formula_top_right_k3(n, k))
    elif n == minimal_length(spec, type_) and lo >= 3:
        if swapped:
            note = f"evaluated at (k,l)=({hi},{lo}) by reverse symmetry"
        if type_ == "bi":
            return report(formula_min_bicrucial(canon))
        if type_ == "quadro":
            return report(formula_min_quadrocrucial(canon))
        if type_ == "tri" and lo == 3:
            return report(formula_min_tricrucial_k3(hi))
    if n == spec.max_length:
        note = None
        return report(formula_stanley_extremal(spec))
    raise UnsupportedError(f"no closed formula for {type_} at n={n}, (k,l)=({k},{l})")


# ---------------------------------------------------------------- growth and inequalities


@dataclass
class GrowthReport:
    k: int
    l: int
    type: str
    rows: list[tuple[int, int, int, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r[3] for r in self.rows)


def verify_growth(spec: PatternSpec, type_: str) -> GrowthReport:
    """Check s_n < s_{n+1} from the type's minimal length up to the maximal one."""
    report = GrowthReport(spec.k, spec.l, type_)
    lo = minimal_length(spec, type_)
    counts = {n: count_syt(n, spec, type_).count for n in range(lo, spec.max_length + 1)}
    for n in range(lo, spec.max_length):
        report.rows.append((n, counts[n], counts[n + 1], counts[n] < counts[n + 1]))
    return report


@dataclass
class InequalityCheck:
    name: str
    n: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs


def _estimate_term(k: int, l: int) -> int:
    # I(a, b) counts SYT of the (b-1) x (a-1) rectangle.
    def I(a, b):
        return rectangle_syt_count(b - 1, a - 1)

    return I(k, l - 1) * sum(I(d + 1, l) * I(k - d, l - 1) for d in range(1, k - 1))


def verify_inequalities(spec: PatternSpec) -> list[InequalityCheck]:
    """Evaluate both sides of the refined growth bounds over their ranges.

    - ``casei``: s_n(k,l) + s_n(k,l-1) <= s_{n+1}(k,l) for k+l-3 <= n <= (k-1)(l-2)
    - ``estimate``: s_n(k,l) + I(k,l-1) sum_d I(d+1,l) I(k-d,l-1) <= s_{n+1}(k,l)
      for (k-1)(l-2) < n < (k-1)(l-1)
    - ``bicrucial``: 2 s^b_n(k,l) <= s^b_{n+1}(k,l) for k >= l, k+2l-5 <= n < (k-1)(l-1)
    """
    k, l = spec.k, spec.l
    checks: list[InequalityCheck] = []

    def s(n, sp, t="right"):
        return count_syt(n, sp, t).count

    if l >= 3:
        lower = PatternSpec(k, l - 1)
        for n in range(k + l - 3, (k - 1) * (l - 2) + 1):
            checks.append(InequalityCheck("casei", n, s(n, spec) + s(n, lower), s(n + 1, spec)))
        extra = _estimate_term(k, l)
        for n in range((k - 1) * (l - 2) + 1, (k - 1) * (l - 1)):
            checks.append(InequalityCheck("estimate", n, s(n, spec) + extra, s(n + 1, spec)))
    if k >= l:
        for n in range(k + 2 * l - 5, (k - 1) * (l - 1)):
            checks.append(InequalityCheck("bicrucial", n, 2 * s(n, spec, "bi"), s(n + 1, spec, "bi")))
    return checks


def deletion_closure_failures(spec: PatternSpec, type_: str = "right") -> list[Permutation]:
    """Permutations of the type that are not patterns of any maximal one.

    An empty result means every permutation of the type at this (k, l) arises
    by deleting elements from a maximal permutation of the type.
    """
    top = spec.max_length
    patterns: set[tuple[int, ...]] = set()
    for p in list_syt(top, spec, type_):
        _collect_patterns(p, patterns)
    missing = []
    for n in range(minimal_length(spec, type_), top):
        for p in list_syt(n, spec, type_):
            if tuple(p) not in patterns:
                missing.append(p)
    return missing


def _collect_patterns(p, out: set) -> None:
    n = len(p)
    for mask in range(1, 1 << n):
        sub = [p[i] for i in range(n) if mask >> i & 1]
        order = sorted(sub)
        rank = {v: r for r, v in enumerate(order, start=1)}
        out.add(tuple(rank[v] for v in sub))


def is_perfect_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x

