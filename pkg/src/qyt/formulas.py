"""Exact closed-form counts.

Hook-length and hook-content formulas, the product formula for
quasi-Yamanouchi tableaux of Durfee size 2, its conjugation symmetry and
two rearrangements in terms of SSYT counts, plus a dispatcher that falls
back to exhaustive enumeration for every other shape.

All arithmetic is on Python integers or :class:`fractions.Fraction`;
nothing here ever touches floating point.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .errors import (
    DivisibilityError,
    InvalidFrameError,
    MethodInapplicableError,
    RangeError,
    WrongDurfeeError,
)
from .partitions import (
    Durfee2Frame,
    Partition,
    content,
    durfee_size,
    hook_length,
    max_entry_range,
    to_durfee2_frame,
)
from .primes import factorize
from .tableaux import enumerate_qyt

log = logging.getLogger(__name__)

METHODS = ("auto", "formula", "brute")


def binom(a: int, b: int) -> int:
    """``C(a, b)``, taken to be 0 whenever ``b < 0``, ``b > a`` or ``a < 0``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise DivisibilityError(f"{num} is not divisible by {den}")
    return q


def hook_content_count(p: Iterable[int], m: int) -> int:
    """|SSYT_m(p)| as the product over cells of (m + content) / hook."""
    p = Partition(p)
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    num = den = 1
    for cell in p.cells():
        num *= m + content(cell)
        den *= hook_length(p, cell)
    if num <= 0:
        # a cell of content -m sits in the first column whenever m < l(p)
        return 0
    return _exact_div(num, den)


def hook_length_count(p: Iterable[int]) -> int:
    """|SYT(p)| = n! / product of hook lengths."""
    p = Partition(p)
    den = 1
    for cell in p.cells():
        den *= hook_length(p, cell)
    return _exact_div(math.factorial(p.size), den)


def _as_frame(f) -> Durfee2Frame:
    if isinstance(f, Durfee2Frame):
        return f
    try:
        return Durfee2Frame(*f)
    except TypeError as exc:
        raise InvalidFrameError(f"cannot read {f!r} as a frame") from exc


def qyt_count_durfee2(f: Durfee2Frame, m: int) -> int:
    """|QYT_{=m}| for the Durfee-size-2 shape described by ``f``."""
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    if not h1 <= m <= f.max_entry_bound:
        return 0
    num = (
        (l1 - l2 + 1)
        * binom(l1 + h1 - 2, m - h2)
        * binom(l2 + h1 - 3, m - h2)
        * binom(m - h2, m - h1)
        * binom(l2 + h2 - 4, h2 - 2)
        * binom(l1 + h2 - 3, h2 - 2)
    )
    den = (m - h2 + 1) * binom(h1 - 1, h2 - 2)
    return _exact_div(num, den)


def qyt_count_durfee1(p: Iterable[int], m: int) -> int:
    """|QYT_{=m}| for a hook shape ``(a, 1^b)``.

    Here QYT with entries at most ``h1 = b + 1`` are exactly the SSYT with
    entries at most ``h1``.
    """
    p = Partition(p)
    if durfee_size(p) != 1:
        raise WrongDurfeeError(f"{p} does not have Durfee size 1")
    h1 = len(p)
    if not len(p) <= m <= h1:
        return 0
    return hook_content_count(p, m) - hook_content_count(p, m - 1)


def resolve_method(p: Iterable[int], method: str = "auto") -> str:
    """Name of the route :func:`qyt_count` takes: ``"empty"``,
    ``"durfee1"``, ``"durfee2"`` or ``"brute"``."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    d = durfee_size(p)
    if method == "brute":
        return "brute"
    if d > 2:
        if method == "formula":
            raise MethodInapplicableError(
                f"no closed form for Durfee size {d} (shape {Partition(p)})"
            )
        return "brute"
    return ("empty", "durfee1", "durfee2")[d]


def _eq_by_method(p: Partition, m: int, route: str, max_states: int | None) -> int:
    if route == "empty":
        return 1 if m == 0 else 0
    if route == "durfee1":
        return qyt_count_durfee1(p, m)
    if route == "durfee2":
        return qyt_count_durfee2(to_durfee2_frame(p), m)
    return sum(1 for _ in enumerate_qyt(p, m, "eq", max_states=max_states))


def qyt_count(p: Iterable[int], m: int, mode: str = "eq", method: str = "auto",
              max_states: int | None = None) -> int:
    """|QYT_{=m}(p)| (``mode="eq"``) or |QYT_{<=m}(p)| (``mode="le"``).

    Closed forms are used for Durfee size at most 2 unless ``method`` is
    ``"brute"``; anything else is counted by enumeration.
    """
    if mode not in ("eq", "le"):
        raise ValueError(f"mode must be 'eq' or 'le', got {mode!r}")
    p = Partition(p)
    route = resolve_method(p, method)
    log.debug("qyt_count %s %s %d via %s", p, mode, m, route)
    if mode == "eq":
        return _eq_by_method(p, m, route, max_states)
    lo, hi = max_entry_range(p)
    if route == "brute":
        return sum(1 for _ in enumerate_qyt(p, m, "le", max_states=max_states))
    return sum(_eq_by_method(p, k, route, max_states) for k in range(lo, min(m, hi) + 1))


def symmetry_identity_sides(f: Durfee2Frame, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the conjugation symmetry of the Durfee-2 product,
    written out term by term.

    The right side is the product for the conjugate frame at
    ``m' = l1 + l2 + h1 + h2 - 3 - m``.
    """
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    if not h1 <= m <= h1 + h2 + l2 - 3:
        raise RangeError(f"m={m} outside [{h1}, {h1 + h2 + l2 - 3}]")
    mp = l1 + l2 + h1 + h2 - 3 - m
    lhs = (
        Fraction(l1 - l2 + 1, m - h2 + 1)
        * binom(l1 + h1 - 2, m - h2)
        * binom(l2 + h1 - 3, m - h2)
        * binom(m - h2, m - h1)
        * binom(l2 + h2 - 4, h2 - 2)
        * binom(l1 + h2 - 3, h2 - 2)
        / binom(h1 - 1, h2 - 2)
    )
    rhs = (
        Fraction(h1 - h2 + 1, mp - l2 + 1)
        * binom(h1 + l1 - 2, mp - l2)
        * binom(h2 + l1 - 3, mp - l2)
        * binom(mp - l2, mp - l1)
        * binom(h1 + l2 - 3, l2 - 2)
        * binom(h2 + l2 - 4, l2 - 2)
        / binom(l1 - 1, l2 - 2)
    )
    return lhs, rhs


def check_symmetry_identity(f: Durfee2Frame, m: int) -> bool:
    lhs, rhs = symmetry_identity_sides(f, m)
    return lhs == rhs


def rearranged_identity_a_sides(f: Durfee2Frame, m: int) -> tuple[int, int]:
    """``C(m-h2+1, h1-h2+1) Q_m`` and ``C(l1+h2-2, m-h1) C(l2+h2-3, m-h1) SSYT_h1``."""
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    shape = f.partition()
    lhs = binom(m - h2 + 1, h1 - h2 + 1) * qyt_count_durfee2(f, m)
    rhs = binom(l1 + h2 - 2, m - h1) * binom(l2 + h2 - 3, m - h1) * hook_content_count(shape, h1)
    return lhs, rhs


def rearranged_identity_b_sides(f: Durfee2Frame, m: int) -> tuple[int, int]:
    """``C(m+l1-1, m-h1) C(m+l2-2, m-h1) Q_m`` and
    ``C(l1+h2-2, m-h1) C(l2+h2-3, m-h1) SSYT_m``."""
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    shape = f.partition()
    lhs = binom(m + l1 - 1, m - h1) * binom(m + l2 - 2, m - h1) * qyt_count_durfee2(f, m)
    rhs = (binom(l1 + h2 - 2, m - h1) * binom(l2 + h2 - 3, m - h1)
           * hook_content_count(shape, max(m, 0)))
    return lhs, rhs


def check_rearranged_identity_a(f: Durfee2Frame, m: int) -> bool:
    lhs, rhs = rearranged_identity_a_sides(f, m)
    return lhs == rhs


def check_rearranged_identity_b(f: Durfee2Frame, m: int) -> bool:
    lhs, rhs = rearranged_identity_b_sides(f, m)
    return lhs == rhs


@dataclass(frozen=True)
class PrimeReport:
    shape: Partition
    mode: str
    m: int
    count: int
    factors: tuple[tuple[int, int], ...]
    largest_prime: int | None
    method: str

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "mode": self.mode,
            "m": self.m,
            "count": self.count,
            "factors": [{"prime": p, "exponent": e} for p, e in self.factors],
            "largest_prime": self.largest_prime,
        }

    def describe(self) -> str:
        if self.count == 0:
            return "0"
        if self.count == 1:
            return "1 (unit)"
        body = " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)
        suffix = " (prime)" if self.is_prime else ""
        return f"{self.count} = {body}{suffix}"


def prime_evidence(p: Iterable[int], m: int, mode: str = "eq", method: str = "auto",
                   max_states: int | None = None) -> PrimeReport:
    """Count QYT and factor the result."""
    p = Partition(p)
    route = resolve_method(p, method)
    count = qyt_count(p, m, mode, method, max_states=max_states)
    factors = tuple(factorize(count)) if count > 0 else ()
    return PrimeReport(
        shape=p,
        mode=mode,
        m=m,
        count=count,
        factors=factors,
        largest_prime=factors[-1][0] if factors else None,
        method=route,
    )


def boundary_values(f: Durfee2Frame) -> dict[str, tuple[int, int]]:
    """Formula value against the hook-content count at both ends of the
    range of ``m``: ``SSYT_h1(shape)`` at ``m = h1`` and
    ``SSYT_l1(conjugate)`` at ``m = n - (l1 - 1)``."""
    f = _as_frame(f)
    shape = f.partition()
    return {
        "min": (qyt_count_durfee2(f, f.h1), hook_content_count(shape, f.h1)),
        "max": (qyt_count_durfee2(f, f.max_entry_bound),
                hook_content_count(shape.conjugate(), f.lambda1)),
    }


def _frame_shape(l1: int, l2: int, twos: int, ones: int) -> Partition:
    return Partition((l1, l2) + (2,) * twos + (1,) * ones)


CountFn = Callable[[Partition, int], int]


def strip_recurrence(f: Durfee2Frame, m: int, count: CountFn, count_a: CountFn,
                     count_b: CountFn) -> int:
    """Right-hand side of the four-sum recurrence for |QYT_{=m}|, splitting
    on where the entries ``m`` sit in the first two columns.

    Requires every frame entry to be at least 3 with ``lambda1 > lambda2``
    and ``h1 > h2``.  ``count(shape, k)`` is |QYT_{=k}(shape)|,
    ``count_a`` counts those with some ``k`` outside column 1 and
    ``count_b`` those with some ``k`` in row 1 strictly right of the end of
    row 2 (see :func:`qyt.tableaux.count_qyt_right_of_row2`).  The last
    sum starts at ``i = 1``: with no ``m`` in the first two columns at least
    one ``m`` must end row 2.
    """
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    if min(l1, l2, h1, h2) < 3 or not (l1 > l2 and h1 > h2):
        raise InvalidFrameError(f"recurrence needs all entries >= 3, l1 > l2, h1 > h2: {f}")
    total = 0
    for i in range(l2 - 1):
        for j in range(l1 - l2 + 1):
            a, b = l1 - j, l2 - i
            total += count(_frame_shape(a, b, h2 - 2, h1 - 1 - h2), m - 1)
            total += count(_frame_shape(a, b, h2 - 3, h1 - h2), m - 1)
            total += count_a(_frame_shape(a, b, h2 - 3, h1 - h2 + 1), m - 1)
            if i >= 1:
                total += count_b(_frame_shape(a, b, h2 - 2, h1 - h2), m - 1)
    return total


def collapsed_recurrence(f: Durfee2Frame, m: int, count: CountFn) -> int:
    """The eight-term recurrence for |QYT_{=m}| in the case
    ``lambda1 > lambda2``, ``h1 > h2``, all entries at least 3."""
    f = _as_frame(f)
    l1, l2, h1, h2 = f.lambda1, f.lambda2, f.h1, f.h2
    if min(l1, l2, h1, h2) < 3 or not (l1 > l2 and h1 > h2):
        raise InvalidFrameError(f"recurrence needs all entries >= 3, l1 > l2, h1 > h2: {f}")
    return (
        count(_frame_shape(l1 - 1, l2, h2 - 2, h1 - h2), m)
        + count(_frame_shape(l1, l2 - 1, h2 - 2, h1 - h2), m)
        - count(_frame_shape(l1 - 1, l2 - 1, h2 - 2, h1 - h2), m)
        + count(_frame_shape(l1, l2, h2 - 2, h1 - 1 - h2), m - 1)
        + count(_frame_shape(l1, l2, h2 - 3, h1 - h2), m - 1)
        + count(_frame_shape(l1, l2, h2 - 3, h1 - h2 + 1), m - 1)
        - count(_frame_shape(l1, l2, h2 - 3, h1 - h2), m - 2)
        + count(_frame_shape(l1 - 1, l2 - 1, h2 - 2, h1 - h2), m - 1)
    )


def formula_count(shape: Partition, m: int) -> int:
    """|QYT_{=m}(shape)| from the closed forms, 0 for shapes they reject."""
    frame = to_durfee2_frame(shape)
    if frame is not None:
        return qyt_count_durfee2(frame, m)
    if durfee_size(shape) == 1:
        return qyt_count_durfee1(shape, m)
    raise MethodInapplicableError(f"no closed form for {shape}")
