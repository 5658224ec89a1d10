"""Young shapes, standard Young tableaux and the RSK correspondence."""

from __future__ import annotations

import re
from bisect import bisect_left
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidInputError
from .perm import Permutation, _make

__all__ = [
    "YoungShape",
    "Tableau",
    "StandardTableau",
    "TableauPair",
    "row_insert",
    "rsk",
    "rsk_inverse",
    "transpose",
    "evacuation",
    "hook_length_count",
    "enumerate_syt",
    "enumerate_shapes",
    "parse_shape",
    "format_shape",
    "parse_tableau",
    "format_tableau",
    "parse_pair",
    "format_pair",
]


class YoungShape(tuple):
    """A partition lambda_1 >= lambda_2 >= ... > 0 (the empty shape is allowed)."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInputError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def nrows(self) -> int:
        return len(self)

    @property
    def ncols(self) -> int:
        return self[0] if self else 0

    def conjugate(self) -> "YoungShape":
        return YoungShape(sum(1 for r in self if r > c) for c in range(self.ncols))

    def __str__(self) -> str:
        return format_shape(self)

    def __repr__(self) -> str:
        return f"YoungShape(({', '.join(map(str, self))}))"


class Tableau:
    """Left-justified rows of distinct integers, increasing along rows and columns.

    Entries need not be 1..n; this is the object row insertion works on.
    ``t.entry(i, j)`` uses 1-based row/column indices.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]] = (), check: bool = True):
        self.rows = tuple(tuple(r) for r in rows)
        if check:
            self._validate()

    def _validate(self) -> None:
        rows = self.rows
        if any(len(r) == 0 for r in rows):
            raise InvalidInputError("tableau rows must be non-empty")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise InvalidInputError(f"row lengths must weakly decrease: {[len(r) for r in rows]}")
        flat = [x for r in rows for x in r]
        if len(set(flat)) != len(flat):
            raise InvalidInputError("tableau entries must be distinct")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise InvalidInputError(f"row not increasing: {r}")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise InvalidInputError(f"column not increasing between rows {upper} and {lower}")

    @property
    def shape(self) -> YoungShape:
        return tuple.__new__(YoungShape, (len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple[int, ...]:
        """Entries of column ``j`` (1-based), top to bottom."""
        return tuple(r[j - 1] for r in self.rows if len(r) >= j)

    def word(self) -> tuple[int, ...]:
        """Row-major reading, top row first."""
        return tuple(x for r in self.rows for x in r)

    def is_standard(self) -> bool:
        return sorted(self.word()) == list(range(1, self.size + 1))

    def transpose(self) -> "Tableau":
        return type(self)(([r[j] for r in self.rows if len(r) > j] for j in range(self.ncols)), check=False)

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self) -> str:
        return format_tableau(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[list(r) for r in self.rows]})"


class StandardTableau(Tableau):
    """A tableau whose entries are exactly 1..n."""

    __slots__ = ()

    def _validate(self) -> None:
        super()._validate()
        if not self.is_standard():
            raise InvalidInputError(f"entries are not 1..{self.size}: {sorted(self.word())}")


class TableauPair(NamedTuple):
    P: StandardTableau
    Q: StandardTableau


def _bump_insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x`` in place; return the index of the row that grew."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r
        row = rows[r]
        j = bisect_left(row, x)
        if j == len(row):
            row.append(x)
            return r
        row[j], x = x, row[j]
        r += 1


def row_insert(t: Tableau, x: int) -> Tableau:
    """``t <- x``: x bumps the smallest larger entry of each row in turn."""
    if any(x in r for r in t.rows):
        raise InvalidInputError(f"{x} is already an entry of the tableau")
    rows = [list(r) for r in t.rows]
    _bump_insert(rows, x)
    return Tableau(rows, check=False)


def rsk(p: Sequence[int]) -> TableauPair:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(p, start=1):
        r = _bump_insert(P, x)
        if r == len(Q):
            Q.append([step])
        else:
            Q[r].append(step)
    return TableauPair(StandardTableau(P, check=False), StandardTableau(Q, check=False))


def _as_standard(t) -> StandardTableau:
    if isinstance(t, StandardTableau):
        return t
    rows = t.rows if isinstance(t, Tableau) else t
    return StandardTableau(rows)


def rsk_inverse(pair) -> Permutation:
    """Recover the permutation whose RSK image is ``pair``.

    Works by reverse bumping: the cell holding n in Q is where the last
    insertion ended, so the entry of P in that cell is pushed back up one row
    at a time (each time displacing the largest smaller entry) and falls out of
    the first row as the last letter. Repeating for n-1, ..., 1 undoes every
    insertion; the bijectivity of RSK guarantees this is the unique preimage.
    """
    P, Q = (_as_standard(t) for t in pair)
    if P.shape != Q.shape:
        raise InvalidInputError(f"P and Q shapes differ: {P.shape} vs {Q.shape}")
    rows = [list(r) for r in P.rows]
    row_of = {}
    for i, r in enumerate(Q.rows):
        for v in r:
            row_of[v] = i
    n = P.size
    word = [0] * n
    for m in range(n, 0, -1):
        r = row_of[m]
        x = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        word[m - 1] = x
    return _make(word)


def transpose(t: Tableau) -> Tableau:
    return t.transpose()


def _rectify(grid: list[list[int | None]], inner: list[int]) -> None:
    """Jeu-de-taquin the skew filling in ``grid`` into straight shape, in place.

    ``inner[i]`` is the number of empty leading cells of row i; None marks
    both those holes and cells outside the filling.
    """
    nrows = len(grid)
    ncols = len(grid[0]) if grid else 0
    while any(inner):
        # An inner corner: last hole of a row whose lower neighbour is not a hole.
        i = max(r for r in range(nrows) if inner[r] and (r + 1 == nrows or inner[r + 1] < inner[r]))
        a, b = i, inner[i] - 1
        inner[i] -= 1
        while True:
            right = grid[a][b + 1] if b + 1 < ncols else None
            below = grid[a + 1][b] if a + 1 < nrows else None
            if right is None and below is None:
                grid[a][b] = None
                break
            if below is None or (right is not None and right < below):
                grid[a][b] = right
                b += 1
            else:
                grid[a][b] = below
                a += 1


def evacuation(t: Tableau) -> StandardTableau:
    """Schutzenberger evacuation.

    Complement every entry (j -> n+1-j), rotate the bounding rectangle by 180
    degrees, then slide the resulting skew tableau back to straight shape.
    """
    t = _as_standard(t)
    n = t.size
    nrows, ncols = t.nrows, t.ncols
    grid: list[list[int | None]] = [[None] * ncols for _ in range(nrows)]
    for i, row in enumerate(t.rows):
        for j, v in enumerate(row):
            grid[nrows - 1 - i][ncols - 1 - j] = n + 1 - v
    inner = [ncols - len(t.rows[nrows - 1 - i]) for i in range(nrows)]
    _rectify(grid, inner)
    rows = [[v for v in row if v is not None] for row in grid]
    return StandardTableau([r for r in rows if r], check=False)


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of ``shape`` (exact)."""
    shape = YoungShape(shape)
    conj = shape.conjugate()
    hooks = prod(
        (shape[i] - j - 1) + (conj[j] - i - 1) + 1
        for i in range(shape.nrows)
        for j in range(shape[i])
    )
    return factorial(shape.size) // hooks


def enumerate_syt(shape: Sequence[int]) -> Iterator[StandardTableau]:
    """Yield every SYT of ``shape`` in lexicographic order of the row-major word."""
    shape = YoungShape(shape)
    n = shape.size
    if n == 0:
        yield StandardTableau((), check=False)
        return
    cells = [(i, j) for i in range(shape.nrows) for j in range(shape[i])]
    # Cells weakly south-east of (i, j) must all hold values >= its own.
    below_right = {
        (i, j): sum(max(0, shape[a] - j) for a in range(i, shape.nrows)) for (i, j) in cells
    }
    rows = [[0] * r for r in shape]
    used = [False] * (n + 2)

    def fill(c: int):
        if c == len(cells):
            yield StandardTableau([tuple(r) for r in rows], check=False)
            return
        i, j = cells[c]
        lo = max(rows[i][j - 1] if j else 0, rows[i - 1][j] if i else 0) + 1
        hi = n - below_right[(i, j)] + 1
        for v in range(lo, hi + 1):
            if used[v]:
                continue
            used[v] = True
            rows[i][j] = v
            yield from fill(c + 1)
            used[v] = False
        rows[i][j] = 0

    yield from fill(0)


def enumerate_shapes(
    n: int, max_cols: int, max_rows: int, require_full: bool = False
) -> Iterator[YoungShape]:
    """Partitions of n fitting in a max_rows x max_cols box, largest parts first.

    With ``require_full`` only shapes with exactly ``max_cols`` columns and
    ``max_rows`` rows are produced.
    """

    def parts(remaining: int, cap: int, rows_left: int):
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * rows_left < remaining:
                break
            for rest in parts(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    if n < 0 or max_cols < 0 or max_rows < 0:
        return
    for p in parts(n, max_cols, max_rows):
        if require_full and (len(p) != max_rows or (p and p[0] != max_cols)):
            continue
        yield tuple.__new__(YoungShape, p)


def parse_shape(text: str) -> YoungShape:
    text = text.strip()
    if not text:
        return YoungShape(())
    try:
        return YoungShape(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse shape {text!r}") from exc


def format_shape(shape: Sequence[int]) -> str:
    return ",".join(str(x) for x in shape)


def format_tableau(t: Tableau) -> str:
    return "\n".join(" ".join(str(x) for x in r) for r in t.rows)


def parse_tableau(text: str, standard: bool = True) -> Tableau:
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError as exc:
            raise InvalidInputError(f"bad tableau row {line!r}") from exc
    return StandardTableau(rows) if standard else Tableau(rows)


def parse_pair(text: str) -> TableauPair:
    blocks = [b for b in re.split(r"\n\s*\n", text.strip()) if b.strip()]
    if len(blocks) != 2:
        raise InvalidInputError(f"expected two tableaux separated by a blank line, got {len(blocks)}")
    return TableauPair(parse_tableau(blocks[0]), parse_tableau(blocks[1]))


def format_pair(pair: TableauPair) -> str:
    return format_tableau(pair.P) + "\n\n" + format_tableau(pair.Q)
