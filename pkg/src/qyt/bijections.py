"""Destandardization, its inverse on quasi-Yamanouchi tableaux, and the
conjugation-based symmetry between QYT_{=m}(shape) and
QYT_{=n+1-m}(conjugate shape).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

from .errors import (
    BudgetExceededError,
    NotQuasiYamanouchiError,
    NotSemistandardError,
    NotStandardError,
)
from .formulas import hook_content_count
from .partitions import Partition
from .tableaux import (
    Tableau,
    _column_spans,
    enumerate_qyt,
    enumerate_ssyt,
    is_qyt,
    is_ssyt,
    is_syt,
)


def destandardize(t: Tableau) -> Tableau:
    """Merge value classes until the filling is quasi-Yamanouchi.

    While some ``i > 1`` has its leftmost occurrence strictly right of the
    rightmost ``i - 1`` (or no ``i - 1`` at all), every ``i`` becomes
    ``i - 1``.
    """
    if not is_ssyt(t):
        raise NotSemistandardError(f"{t!r} is not semistandard")
    spans = _column_spans(t)
    label = {v: v for v in spans}
    changed = True
    while changed:
        changed = False
        for i in sorted(spans):
            if i == 1:
                continue
            below = spans.get(i - 1)
            if below is not None and spans[i][0] <= below[1]:
                continue
            lo, hi = spans.pop(i)
            if below is not None:
                lo, hi = min(lo, below[0]), max(hi, below[1])
            spans[i - 1] = (lo, hi)
            for v, current in label.items():
                if current == i:
                    label[v] = i - 1
            changed = True
            break
    return Tableau([[label[x] for x in r] for r in t.rows])


def restandardize(q: Tableau) -> Tableau:
    """Number the cells 1..n visiting the 1s left to right, then the 2s,
    and so on."""
    if not is_qyt(q):
        raise NotQuasiYamanouchiError(f"{q!r} is not quasi-Yamanouchi")
    order = sorted(q.items(), key=lambda item: (item[1], item[0].col))
    rows = [[0] * len(r) for r in q.rows]
    for k, (cell, _) in enumerate(order, start=1):
        rows[cell.row - 1][cell.col - 1] = k
    return Tableau(rows)


def conjugate_syt(t: Tableau) -> Tableau:
    """Transpose a standard tableau onto the conjugate shape."""
    if not is_syt(t):
        raise NotStandardError(f"{t!r} is not a standard Young tableau")
    shape = t.shape
    if not shape:
        return t
    return Tableau(
        [[t.rows[r][c] for r in range(shape.column_height(c + 1))] for c in range(shape[0])]
    )


def symmetry_bijection(q: Tableau) -> Tableau:
    """QYT_{=m}(shape) -> QYT_{=n+1-m}(conjugate shape)."""
    return destandardize(conjugate_syt(restandardize(q)))


@dataclass(frozen=True)
class FiberReport:
    shape: Partition
    m: int
    ssyt_count: int
    qyt_count: int
    surjective: bool
    injective: bool
    max_fiber_size: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["shape"] = list(self.shape)
        return d


def verify_dst_fibers(p, m: int, budget: int = 10**6) -> FiberReport:
    """Apply destandardization to all of SSYT_m(p) and describe its fibers
    over QYT_{<=m}(p).

    Raises :class:`BudgetExceededError` when SSYT_m(p) has more than
    ``budget`` members.
    """
    p = Partition(p)
    expected = hook_content_count(p, m)
    if expected > budget:
        raise BudgetExceededError(
            f"SSYT_{m}({p}) has {expected} members, over the budget of {budget}"
        )
    fibers: Counter[Tableau] = Counter()
    ssyt_count = 0
    for t in enumerate_ssyt(p, m):
        fibers[destandardize(t)] += 1
        ssyt_count += 1
    qyt = set(enumerate_qyt(p, m, "le"))
    return FiberReport(
        shape=p,
        m=m,
        ssyt_count=ssyt_count,
        qyt_count=len(qyt),
        surjective=set(fibers) == qyt,
        injective=all(k == 1 for k in fibers.values()),
        max_fiber_size=max(fibers.values(), default=0),
    )
