"""Tableaux, the SSYT/SYT/QYT predicates, descent statistics and the
exhaustive generators that serve as the counting oracle for the rest of
the package.
"""
from __future__ import annotations

import os
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceededError,
    EmptyTableauError,
    NotStandardError,
    RangeError,
    TableauShapeError,
)
from .partitions import Cell, Partition, max_entry_range

DescentSet = tuple[int, ...]


class Tableau:
    """A filling of a partition shape by positive integers.

    ``rows`` are listed bottom-up, so ``rows[0]`` is the longest row.  No
    ordering is enforced here; use :func:`is_ssyt` and friends to classify.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows)
        try:
            shape = Partition(len(r) for r in rows)
        except ValueError as exc:
            raise TableauShapeError(f"row lengths of {rows} do not form a partition") from exc
        for r in rows:
            for x in r:
                if not isinstance(x, int) or x < 1:
                    raise TableauShapeError(f"entry {x!r} is not a positive integer")
        self.rows = rows
        self.shape = shape

    @classmethod
    def from_top_down(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        """Build from rows listed as they are drawn, top row first."""
        return cls(reversed([tuple(r) for r in rows]))

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]!r})"

    def __str__(self) -> str:
        return self.render()

    @property
    def size(self) -> int:
        return self.shape.size

    def __getitem__(self, cell: tuple[int, int]) -> int:
        col, row = cell
        return self.rows[row - 1][col - 1]

    def items(self) -> Iterator[tuple[Cell, int]]:
        for row, values in enumerate(self.rows, start=1):
            for col, x in enumerate(values, start=1):
                yield Cell(col, row), x

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def render(self) -> str:
        """Top row first, entries space separated and right aligned."""
        if not self.rows:
            return ""
        width = max(len(str(x)) for x in self.entries())
        return "\n".join(" ".join(str(x).rjust(width) for x in r)
                         for r in reversed(self.rows))

    def to_json(self) -> list[list[int]]:
        """Rows bottom-up as plain lists."""
        return [list(r) for r in self.rows]


def is_ssyt(t: Tableau) -> bool:
    rows = t.rows
    for j, r in enumerate(rows):
        for i in range(1, len(r)):
            if r[i] < r[i - 1]:
                return False
        if j:
            below = rows[j - 1]
            for i, x in enumerate(r):
                if x <= below[i]:
                    return False
    return True


def is_syt(t: Tableau) -> bool:
    return sorted(t.entries()) == list(range(1, t.size + 1)) and is_ssyt(t)


def _column_spans(t: Tableau) -> dict[int, tuple[int, int]]:
    """value -> (leftmost column, rightmost column)."""
    spans: dict[int, tuple[int, int]] = {}
    for (col, _), x in t.items():
        lo, hi = spans.get(x, (col, col))
        spans[x] = (min(lo, col), max(hi, col))
    return spans


def is_qyt(t: Tableau) -> bool:
    """Semistandard, and for every value ``i > 1`` present the leftmost
    ``i`` sits weakly left of some ``i - 1``."""
    if not is_ssyt(t):
        return False
    spans = _column_spans(t)
    for i, (leftmost, _) in spans.items():
        if i == 1:
            continue
        if i - 1 not in spans:
            return False
        if leftmost > spans[i - 1][1]:
            return False
    return True


def max_entry(t: Tableau) -> int:
    if not t.rows:
        raise EmptyTableauError("empty tableau has no largest entry")
    return max(t.entries())


def _require_standard(t: Tableau) -> None:
    if not is_syt(t):
        raise NotStandardError(f"{t!r} is not a standard Young tableau")


def positions(t: Tableau) -> dict[int, Cell]:
    """Entry -> cell, for fillings without repeated entries."""
    return {x: c for c, x in t.items()}


def descent_set(t: Tableau) -> DescentSet:
    """Entries ``i`` with ``i + 1`` weakly left of ``i``."""
    _require_standard(t)
    pos = positions(t)
    return tuple(i for i in range(1, t.size) if pos[i + 1].col <= pos[i].col)


def runs(t: Tableau) -> list[list[Cell]]:
    _require_standard(t)
    pos = positions(t)
    bounds = [0, *descent_set(t), t.size]
    return [[pos[x] for x in range(a + 1, b + 1)] for a, b in zip(bounds, bounds[1:])]


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceededError(
                f"search exceeded the budget of {self.limit} partial fillings"
            )


def default_max_states() -> int:
    """Budget from ``QYT_MAX_STATES``, or ten million."""
    return int(os.environ.get("QYT_MAX_STATES", 10_000_000))


def _unflatten(shape: Sequence[int], flat: Sequence[int]) -> Tableau:
    rows, k = [], 0
    for length in shape:
        rows.append(flat[k:k + length])
        k += length
    return Tableau(rows)


def enumerate_ssyt(p: Iterable[int], m: int, max_states: int | None = None) -> Iterator[Tableau]:
    """Every SSYT of shape ``p`` with entries at most ``m``.

    Cells are filled bottom row first, left to right, smallest value first,
    so tableaux come out in lexicographic order of that reading word.
    ``max_states`` bounds the number of partial fillings visited.
    """
    p = Partition(p)
    if m < len(p):
        return
    if not p:
        yield Tableau(())
        return
    budget = _Budget(max_states)
    cells = list(p.cells())
    n = len(cells)
    index = {c: k for k, c in enumerate(cells)}
    left = [index.get(Cell(c.col - 1, c.row), -1) for c in cells]
    below = [index.get(Cell(c.col, c.row - 1), -1) for c in cells]
    # leave room for the strictly larger entries stacked above each cell
    cap = [m - (p.column_height(c.col) - c.row) for c in cells]
    vals = [0] * n

    def lowest(k: int) -> int:
        lo = 1
        if left[k] >= 0:
            lo = vals[left[k]]
        if below[k] >= 0 and vals[below[k]] + 1 > lo:
            lo = vals[below[k]] + 1
        return lo

    k = 0
    vals[0] = lowest(0) - 1
    while k >= 0:
        v = vals[k] + 1
        if v > cap[k]:
            k -= 1
            continue
        vals[k] = v
        budget.spend()
        if k == n - 1:
            yield _unflatten(p, vals)
            continue
        k += 1
        vals[k] = lowest(k) - 1


def enumerate_syt(p: Iterable[int], max_states: int | None = None) -> Iterator[Tableau]:
    """Every SYT of shape ``p``; entry ``v`` goes into the lowest available
    row first."""
    p = Partition(p)
    n = p.size
    budget = _Budget(max_states)
    filled = [0] * len(p)
    grid = [[0] * x for x in p]

    def place(v: int) -> Iterator[Tableau]:
        if v > n:
            yield Tableau(grid)
            return
        for r in range(len(p)):
            c = filled[r]
            if c < p[r] and (r == 0 or filled[r - 1] > c):
                budget.spend()
                grid[r][c] = v
                filled[r] += 1
                yield from place(v + 1)
                filled[r] -= 1

    yield from place(1)


def _horizontal_strips(shape: Partition, mu: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Partitions ``nu`` inside ``shape`` with ``nu / mu`` a nonempty
    horizontal strip."""
    ranges = []
    for r, target in enumerate(shape):
        lo = mu[r]
        hi = target if r == 0 else min(target, mu[r - 1])
        ranges.append(range(lo, hi + 1))
    for nu in product(*ranges):
        if nu != mu:
            yield nu


def enumerate_qyt(p: Iterable[int], m: int, mode: str = "eq",
                  max_states: int | None = None) -> Iterator[Tableau]:
    """Quasi-Yamanouchi tableaux of shape ``p``.

    ``mode="eq"`` gives those whose largest entry is exactly ``m``,
    ``mode="le"`` those with every entry at most ``m``.

    A QYT is built one value at a time: the cells holding ``v`` form a
    nonempty horizontal strip whose leftmost cell is weakly left of the
    rightmost cell holding ``v - 1``.  Every QYT arises from exactly one
    such chain of strips; :func:`enumerate_qyt_by_filter` is the slow
    definition-level equivalent.
    """
    if mode not in ("eq", "le"):
        raise ValueError(f"mode must be 'eq' or 'le', got {mode!r}")
    p = Partition(p)
    if not p:
        if m == 0 or (mode == "le" and m >= 0):
            yield Tableau(())
        return
    lo, hi = max_entry_range(p)
    if m < lo or (mode == "eq" and m > hi):
        return
    budget = _Budget(max_states)
    target = tuple(p)
    grid = [[0] * x for x in p]

    def grow(mu: tuple[int, ...], v: int, prev_right: int) -> Iterator[Tableau]:
        if mu == target:
            if mode == "le" or v == m:
                yield Tableau(grid)
            return
        if v >= m:
            return
        for nu in _horizontal_strips(p, mu):
            added = [r for r in range(len(p)) if nu[r] > mu[r]]
            left = min(mu[r] + 1 for r in added)
            if v > 0 and left > prev_right:
                continue
            budget.spend()
            for r in added:
                for c in range(mu[r], nu[r]):
                    grid[r][c] = v + 1
            yield from grow(nu, v + 1, max(nu[r] for r in added))

    yield from grow((0,) * len(p), 0, 0)


def enumerate_qyt_by_filter(p: Iterable[int], m: int, mode: str = "eq",
                            max_states: int | None = None) -> Iterator[Tableau]:
    """Filter all of SSYT_m(p) through :func:`is_qyt`."""
    if mode not in ("eq", "le"):
        raise ValueError(f"mode must be 'eq' or 'le', got {mode!r}")
    for t in enumerate_ssyt(p, m, max_states=max_states):
        if not is_qyt(t):
            continue
        if mode == "eq" and (max_entry(t) if t.rows else 0) != m:
            continue
        yield t


def count_qyt(p: Iterable[int], m: int, mode: str = "eq",
              max_states: int | None = None) -> int:
    return sum(1 for _ in enumerate_qyt(p, m, mode, max_states=max_states))


def qyt_distribution(p: Iterable[int], max_states: int | None = None) -> dict[int, int]:
    """Largest entry -> number of QYT of shape ``p``, by enumeration."""
    p = Partition(p)
    counts: dict[int, int] = {}
    _, hi = max_entry_range(p)
    for t in enumerate_qyt(p, hi, "le", max_states=max_states):
        k = max(t.entries()) if t.rows else 0
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def _count_with_m_beyond(p: Iterable[int], m: int, first_col: int) -> int:
    total = 0
    for t in enumerate_qyt(p, m, "eq"):
        if any(x == m and c.col >= first_col for c, x in t.items()):
            total += 1
    return total


def count_qyt_outside_col1(p: Iterable[int], m: int) -> int:
    """QYT with largest entry ``m`` having some ``m`` outside column 1."""
    return _count_with_m_beyond(p, m, 2)


def count_qyt_outside_col12(p: Iterable[int], m: int) -> int:
    """QYT with largest entry ``m`` having some ``m`` in column 3 or later."""
    return _count_with_m_beyond(p, m, 3)


def count_qyt_right_of_row2(p: Iterable[int], m: int) -> int:
    """QYT with largest entry ``m`` having some ``m`` in row 1 strictly right
    of the last cell of row 2.

    Agrees with :func:`count_qyt_outside_col12` whenever row 2 has length 2.
    """
    p = Partition(p)
    second = p.part(2)
    total = 0
    for t in enumerate_qyt(p, m, "eq"):
        if any(x == m and c.col > second for c, x in t.items()):
            total += 1
    return total


def _column_tops(p: Partition) -> list[tuple[int, int]]:
    """(bottom value, top value) of each column in the chained filling."""
    heights = [p.column_height(c) for c in range(1, p[0] + 1)]
    spans, start = [], 1
    for h in heights:
        spans.append((start, start + h - 1))
        start += h - 1
    return spans


def _from_columns(p: Partition, columns: list[list[int]]) -> Tableau:
    return Tableau([[columns[c][r] for c in range(p[r])] for r in range(len(p))])


def witness_max(p: Iterable[int]) -> Tableau:
    """QYT of shape ``p`` with the largest possible maximum entry.

    Column 1 is filled 1, 2, ... upwards; each later column starts with the
    top value of the column to its left and keeps counting up.
    """
    p = Partition(p)
    if not p:
        raise EmptyTableauError("no witness for the empty shape")
    columns = [list(range(lo, hi + 1)) for lo, hi in _column_tops(p)]
    return _from_columns(p, columns)


def witness_for(p: Iterable[int], m: int) -> Tableau:
    """A member of QYT_{=m}(p) for any achievable ``m``.

    Follows the chained filling until the first column whose top would reach
    ``m``, shifts that column down so its top is ``m``, and copies it
    rightwards into every later column.
    """
    p = Partition(p)
    lo, hi = max_entry_range(p)
    if not p or not lo <= m <= hi:
        raise RangeError(f"m={m} is outside the valid range [{lo}, {hi}] for shape {p}")
    columns: list[list[int]] = []
    spans = _column_tops(p)
    for c, (bottom, top) in enumerate(spans):
        if top < m:
            columns.append(list(range(bottom, top + 1)))
            continue
        shift = top - m
        columns.append([x - shift for x in range(bottom, top + 1)])
        for later in range(c + 1, len(spans)):
            height = spans[later][1] - spans[later][0] + 1
            columns.append(columns[c][:height])
        break
    return _from_columns(p, columns)
