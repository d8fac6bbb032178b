"""Integer partitions, their diagrams and per-cell statistics.

Diagrams are drawn in French orientation: row 1 is the bottom (longest) row
and a cell is addressed as ``(col, row)``, both 1-based.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutOfShapeError,
    InvalidFrameError,
    PartitionParseError,
    PartitionValidationError,
)


class Cell(NamedTuple):
    col: int
    row: int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the empty partition.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise PartitionValidationError(f"part {x!r} is not an integer")
            if x <= 0:
                raise PartitionValidationError(f"part {x} is not positive")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise PartitionValidationError(
                    f"parts {parts} are not weakly decreasing"
                )
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "()"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, j: int) -> int:
        """Length of row ``j`` (1-based), 0 beyond the last row."""
        return self[j - 1] if 1 <= j <= len(self) else 0

    def column_height(self, i: int) -> int:
        return sum(1 for x in self if x >= i)

    def has_cell(self, c: tuple[int, int]) -> bool:
        col, row = c
        return 1 <= row <= len(self) and 1 <= col <= self[row - 1]

    def cells(self) -> Iterator[Cell]:
        """Cells row by row from the bottom, left to right within a row."""
        for row, length in enumerate(self, start=1):
            for col in range(1, length + 1):
                yield Cell(col, row)

    def conjugate(self) -> "Partition":
        return conjugate(self)


def parse_partition(text: str) -> Partition:
    """Read a shape such as ``"6,4,2^2,1"``.

    Parts are comma separated; ``a^k`` stands for ``k`` copies of ``a``.
    Surrounding parentheses and whitespace are ignored, and ``"()"`` or an
    empty string give the empty partition.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        return Partition()
    parts: list[int] = []
    for token in body.split(","):
        token = token.strip()
        m = re.fullmatch(r"([+-]?\d+)(?:\s*\^\s*(\d+))?", token)
        if m is None:
            raise PartitionParseError(f"cannot read {token!r} in shape {text!r}")
        value = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        parts.extend([value] * mult)
    return Partition(parts)


def conjugate(p: Iterable[int]) -> Partition:
    p = tuple(p)
    if not p:
        return Partition()
    return Partition(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def content(c: Cell) -> int:
    return c[0] - c[1]


def hook_length(p: Partition, c: Cell) -> int:
    """Arm plus leg plus one for a cell of ``p``."""
    col, row = c
    if not Partition(p).has_cell(c):
        raise CellOutOfShapeError(f"cell {tuple(c)} is not in shape {p}")
    arm = p[row - 1] - col
    leg = sum(1 for r in range(row, len(p)) if p[r] >= col)
    return arm + leg + 1


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook lengths laid out like the diagram, row 1 first."""
    return [[hook_length(p, Cell(col, row)) for col in range(1, p[row - 1] + 1)]
            for row in range(1, len(p) + 1)]


def contents(p: Partition) -> list[list[int]]:
    return [[col - row for col in range(1, p[row - 1] + 1)]
            for row in range(1, len(p) + 1)]


def durfee_size(p: Iterable[int]) -> int:
    d = 0
    for j, x in enumerate(p, start=1):
        if x >= j:
            d = j
        else:
            break
    return d


@dataclass(frozen=True)
class Durfee2Frame:
    """First/second row lengths and first/second column heights of a
    Durfee-size-2 shape ``(lambda1, lambda2, 2^(h2-2), 1^(h1-h2))``."""

    lambda1: int
    lambda2: int
    h1: int
    h2: int

    def __post_init__(self):
        values = (self.lambda1, self.lambda2, self.h1, self.h2)
        if any(not isinstance(v, int) or v < 2 for v in values):
            raise InvalidFrameError(f"frame entries must be integers >= 2, got {values}")
        if self.lambda1 < self.lambda2 or self.h1 < self.h2:
            raise InvalidFrameError(
                f"need lambda1 >= lambda2 and h1 >= h2, got {values}"
            )

    @property
    def size(self) -> int:
        return self.lambda1 + self.lambda2 + 2 * (self.h2 - 2) + (self.h1 - self.h2)

    @property
    def max_entry_bound(self) -> int:
        """Largest achievable maximum entry, ``n - (lambda1 - 1)``."""
        return self.size - self.lambda1 + 1

    def partition(self) -> Partition:
        return Partition(
            (self.lambda1, self.lambda2) + (2,) * (self.h2 - 2) + (1,) * (self.h1 - self.h2)
        )

    def conjugate(self) -> "Durfee2Frame":
        return Durfee2Frame(self.h1, self.h2, self.lambda1, self.lambda2)


def to_durfee2_frame(p: Iterable[int]) -> Durfee2Frame | None:
    p = Partition(p)
    if durfee_size(p) != 2:
        return None
    # Durfee size exactly 2 forces every part after the second to be 1 or 2.
    return Durfee2Frame(p[0], p[1], len(p), p.column_height(2))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


@cache
def table_order(n: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` arranged so that row ``k`` from the top and row
    ``k`` from the bottom are conjugate.

    Partitions that are lexicographically larger than their conjugate come
    first in reverse lexicographic order, then the self-conjugate ones, then
    the conjugates of the first block in mirrored order.
    """
    head, middle = [], []
    for p in partitions_of(n):
        q = conjugate(p)
        if p == q:
            middle.append(p)
        elif tuple(p) > tuple(q):
            head.append(p)
    tail = [conjugate(p) for p in reversed(head)]
    return tuple(head + middle + tail)


def max_entry_range(p: Partition) -> tuple[int, int]:
    """``(l(p), n - (p1 - 1))``: the achievable maximum entries of a
    quasi-Yamanouchi filling of ``p``."""
    if not p:
        return (0, 0)
    return (len(p), sum(p) - p[0] + 1)
