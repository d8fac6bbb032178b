"""Property sweeps over all small shapes.

Each suite expands into independent cases ordered by size, so the first
failure reported is a smallest counterexample.  Cases are plain
module-level functions returning a list of failure messages, which lets
them run in a process pool.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import formulas
from .bijections import (
    conjugate_syt,
    destandardize,
    restandardize,
    symmetry_bijection,
    verify_dst_fibers,
)
from .partitions import (
    Durfee2Frame,
    Partition,
    conjugate,
    durfee_size,
    max_entry_range,
    partitions_of,
    to_durfee2_frame,
)
from .schur import nonzero_term_census, schur_via_fundamental, schur_via_ssyt
from .tableaux import (
    count_qyt,
    count_qyt_outside_col1,
    count_qyt_right_of_row2,
    descent_set,
    enumerate_qyt,
    enumerate_syt,
    is_qyt,
    max_entry,
    qyt_distribution,
    runs,
    witness_for,
)

DEFAULT_MAX_N = {
    "formula": 12,
    "bijection": 8,
    "symmetry": 8,
    "schur": 6,
    "recurrence": 12,
    "range": 10,
    "dst": 7,
    "identities": 6,
}
SUITES = tuple(DEFAULT_MAX_N)


@dataclass
class SuiteResult:
    name: str
    max_n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "max_n": self.max_n,
            "cases": self.checked,
            "passed": self.passed,
            "counterexample": self.failures[0] if self.failures else None,
            "failures": len(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _shapes(max_n: int, min_n: int = 1) -> Iterator[Partition]:
    for n in range(min_n, max_n + 1):
        yield from partitions_of(n)


# --- individual cases -------------------------------------------------------

def case_formula(p: Partition) -> list[str]:
    """Closed forms against enumeration for every m, plus the endpoint
    reductions to hook-content counts."""
    dist = qyt_distribution(p)
    n = p.size
    out = []
    d = durfee_size(p)
    for m in range(0, n + 2):
        brute = dist.get(m, 0)
        if d == 2:
            value = formulas.qyt_count_durfee2(to_durfee2_frame(p), m)
        elif d == 1:
            value = formulas.qyt_count_durfee1(p, m)
        else:
            continue
        if value != brute:
            out.append(f"shape {p} m={m}: formula {value} != enumeration {brute}")
    if sum(dist.values()) != formulas.hook_length_count(p):
        out.append(f"shape {p}: QYT total {sum(dist.values())} != SYT count")
    frame = to_durfee2_frame(p)
    if frame is not None:
        for end, (got, want) in formulas.boundary_values(frame).items():
            if got != want:
                out.append(f"shape {p}: {end} endpoint {got} != hook-content {want}")
    return out


def case_bijection(p: Partition) -> list[str]:
    out = []
    by_runs: dict[int, int] = {}
    for t in enumerate_syt(p):
        q = destandardize(t)
        k = len(runs(t))
        by_runs[k] = by_runs.get(k, 0) + 1
        if not is_qyt(q):
            out.append(f"dst({t.to_json()}) = {q.to_json()} is not QYT")
        if max_entry(q) != k:
            out.append(f"dst({t.to_json()}) has max {max_entry(q)}, runs {k}")
        if restandardize(q) != t:
            out.append(f"restandardize(dst({t.to_json()})) != itself")
    lo, hi = max_entry_range(p)
    for q in enumerate_qyt(p, hi, "le"):
        if destandardize(restandardize(q)) != q:
            out.append(f"dst(restandardize({q.to_json()})) != itself")
    if by_runs != qyt_distribution(p):
        out.append(f"shape {p}: SYT by runs {by_runs} != QYT by max {qyt_distribution(p)}")
    if count_qyt(p, hi, "le") != formulas.hook_length_count(p):
        out.append(f"shape {p}: |QYT_<={hi}| != |SYT|")
    return out


def case_symmetry(p: Partition) -> list[str]:
    out = []
    n = p.size
    pc = conjugate(p)
    lo, hi = max_entry_range(p)
    for m in range(lo, hi + 1):
        source = list(enumerate_qyt(p, m, "eq"))
        target = set(enumerate_qyt(pc, n + 1 - m, "eq"))
        image = [symmetry_bijection(q) for q in source]
        if set(image) != target or len(set(image)) != len(source):
            out.append(f"shape {p} m={m}: image is not QYT_={n + 1 - m}({pc})")
            continue
        for q, r in zip(source, image):
            if symmetry_bijection(r) != q:
                out.append(f"shape {p} m={m}: map is not an involution at {q.to_json()}")
                break
    for t in enumerate_syt(p):
        full = set(range(1, n))
        if set(descent_set(conjugate_syt(t))) != full - set(descent_set(t)):
            out.append(f"conjugate of {t.to_json()} lacks complementary descents")
    return out


def case_prop42(frame: Durfee2Frame) -> list[str]:
    out = []
    hi = frame.h1 + frame.h2 + frame.lambda2 - 3
    for m in range(frame.h1, hi + 1):
        if not formulas.check_symmetry_identity(frame, m):
            out.append(f"symmetry identity fails at {frame} m={m}")
        mirrored = formulas.qyt_count_durfee2(frame.conjugate(), frame.size + 1 - m)
        if formulas.qyt_count_durfee2(frame, m) != mirrored:
            out.append(f"formula not symmetric at {frame} m={m}")
    return out


def case_schur(p: Partition, m: int) -> list[str]:
    out = []
    if schur_via_ssyt(p, m) != schur_via_fundamental(p, m):
        out.append(f"Schur expansions differ for {p}, m={m}")
    nonzero, total = nonzero_term_census(p, m)
    if nonzero != count_qyt(p, m, "le"):
        out.append(f"{p}, m={m}: {nonzero} nonzero terms != |QYT_<={m}|")
    if total != formulas.hook_length_count(p):
        out.append(f"{p}: census total {total} != SYT count")
    return out


def case_recurrence(frame: Durfee2Frame) -> list[str]:
    out = []
    p = frame.partition()
    lo, hi = max_entry_range(p)
    for m in range(lo, hi + 1):
        want = count_qyt(p, m)
        got = formulas.strip_recurrence(frame, m, count_qyt, count_qyt_outside_col1,
                                        count_qyt_right_of_row2)
        if got != want:
            out.append(f"strip recurrence {got} != {want} at {p} m={m}")
        got = formulas.collapsed_recurrence(frame, m, count_qyt)
        if got != want:
            out.append(f"collapsed recurrence {got} != {want} at {p} m={m}")
    return out


def case_collapsed_formula(frame: Durfee2Frame) -> list[str]:
    out = []
    for m in range(frame.h1, frame.max_entry_bound + 1):
        want = formulas.qyt_count_durfee2(frame, m)
        got = formulas.collapsed_recurrence(frame, m, formulas.formula_count)
        if got != want:
            out.append(f"formula violates collapsed recurrence at {frame} m={m}")
    return out


def case_range(p: Partition) -> list[str]:
    out = []
    lo, hi = max_entry_range(p)
    dist = qyt_distribution(p)
    for m in range(0, p.size + 2):
        if (dist.get(m, 0) > 0) != (lo <= m <= hi):
            out.append(f"shape {p}: |QYT_={m}| = {dist.get(m, 0)} against range [{lo}, {hi}]")
    for m in range(lo, hi + 1):
        w = witness_for(p, m)
        if w.shape != p or not is_qyt(w) or max_entry(w) != m:
            out.append(f"witness for {p}, m={m} is invalid: {w.to_json()}")
    return out


def case_dst(p: Partition, m: int) -> list[str]:
    report = verify_dst_fibers(p, m)
    out = []
    if not report.surjective:
        out.append(f"dst not onto QYT_<={m}({p})")
    if report.injective != (m <= len(p)):
        out.append(f"dst on SSYT_{m}({p}) injective={report.injective}, l={len(p)}")
    return out


def case_identities(frame: Durfee2Frame) -> list[str]:
    out = []
    for m in range(0, frame.size + 3):
        if not formulas.check_rearranged_identity_a(frame, m):
            out.append(f"first rearranged identity fails at {frame} m={m}")
        if not formulas.check_rearranged_identity_b(frame, m):
            out.append(f"second rearranged identity fails at {frame} m={m}")
    return out


# --- suite assembly -----------------------------------------------------------

def _frames(max_first: int, max_height: int) -> Iterator[Durfee2Frame]:
    for l1 in range(2, max_first + 1):
        for l2 in range(2, l1 + 1):
            for h1 in range(2, max_height + 1):
                for h2 in range(2, h1 + 1):
                    yield Durfee2Frame(l1, l2, h1, h2)


def suite_cases(name: str, max_n: int) -> list[tuple[Callable[..., list[str]], tuple]]:
    if name == "formula":
        return [(case_formula, (p,)) for p in _shapes(max_n) if durfee_size(p) <= 2]
    if name == "bijection":
        return [(case_bijection, (p,)) for p in _shapes(max_n)]
    if name == "symmetry":
        cases = [(case_symmetry, (p,)) for p in _shapes(max_n)]
        return cases + [(case_prop42, (f,)) for f in _frames(9, 9)]
    if name == "schur":
        return [(case_schur, (p, m)) for p in _shapes(max_n) for m in range(1, 5)]
    if name == "recurrence":
        frames = sorted(
            (f for f in _frames(max_n, max_n)
             if min(f.lambda1, f.lambda2, f.h1, f.h2) >= 3
             and f.lambda1 > f.lambda2 and f.h1 > f.h2 and f.size <= max_n),
            key=lambda f: f.size,
        )
        algebraic = [f for f in _frames(9, 9)
                     if min(f.lambda2, f.h2) >= 3 and f.lambda1 > f.lambda2 and f.h1 > f.h2]
        return ([(case_recurrence, (f,)) for f in frames]
                + [(case_collapsed_formula, (f,)) for f in algebraic])
    if name == "range":
        return [(case_range, (p,)) for p in _shapes(max_n)]
    if name == "dst":
        return [(case_dst, (p, m)) for p in _shapes(max_n) for m in range(1, p.size + 1)]
    if name == "identities":
        return [(case_identities, (f,)) for f in _frames(max_n, max_n)]
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")


def _call(task: tuple[Callable[..., list[str]], tuple]) -> list[str]:
    fn, args = task
    return fn(*args)


def run_suite(name: str, max_n: int | None = None, jobs: int = 1,
              stop_early: bool = False) -> SuiteResult:
    """Run one suite; ``jobs > 1`` spreads cases over worker processes."""
    if max_n is None:
        max_n = DEFAULT_MAX_N[name]
    start = time.perf_counter()
    cases = suite_cases(name, max_n)
    result = SuiteResult(name, max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(_call, cases, chunksize=4)
            for failures in outcomes:
                result.checked += 1
                result.failures.extend(failures)
    else:
        for task in cases:
            result.checked += 1
            result.failures.extend(_call(task))
            if stop_early and result.failures:
                break
    result.seconds = time.perf_counter() - start
    return result


def run(names: str | list[str], max_n: int | None = None, jobs: int = 1) -> list[SuiteResult]:
    if names == "all":
        names = list(SUITES)
    elif isinstance(names, str):
        names = [names]
    return [run_suite(n, max_n, jobs) for n in names]
