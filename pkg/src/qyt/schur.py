"""Schur polynomials in finitely many variables, computed two ways: as a
sum of monomials over semistandard tableaux and as a sum of Gessel's
fundamental quasisymmetric polynomials over standard tableaux.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .partitions import Partition
from .tableaux import descent_set, enumerate_ssyt, enumerate_syt


class SparsePolynomial:
    """Integer polynomial in ``x1..x_nvars`` stored as exponent vector ->
    coefficient, with no zero coefficients kept."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            self.add_term(exps, coeff)

    def add_term(self, exps: Iterable[int], coeff: int = 1) -> None:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError(f"exponent vector {exps} does not have length {self.nvars}")
        c = self.terms.get(exps, 0) + coeff
        if c:
            self.terms[exps] = c
        else:
            self.terms.pop(exps, None)

    def __iadd__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if other.nvars != self.nvars:
            raise ValueError("polynomials in different numbers of variables")
        for exps, coeff in other.terms.items():
            self.add_term(exps, coeff)
        return self

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = SparsePolynomial(self.nvars, self.terms)
        out += other
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePolynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def total_mass(self) -> int:
        """Sum of all coefficients (the value at x = 1)."""
        return sum(self.terms.values())

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        """Monomials in decreasing lexicographic order of exponent vector,
        e.g. ``x1^2*x2 + x1*x2^2``."""
        if not self.terms:
            return "0"
        out = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}"
                       for i, e in enumerate(exps, start=1) if e]
            mono = "*".join(factors)
            if not mono:
                out.append(str(coeff))
            elif coeff == 1:
                out.append(mono)
            else:
                out.append(f"{coeff}*{mono}")
        return " + ".join(out).replace("+ -", "- ")


def schur_via_ssyt(p: Iterable[int], m: int) -> SparsePolynomial:
    poly = SparsePolynomial(m)
    for t in enumerate_ssyt(p, m):
        weight = [0] * m
        for x in t.entries():
            weight[x - 1] += 1
        poly.add_term(weight)
    return poly


def _words(n: int, descents: frozenset[int], m: int) -> Iterator[list[int]]:
    """Weakly increasing words in 1..m of length n, strictly increasing
    after each position in ``descents``."""
    word = [0] * n

    def extend(k: int, low: int) -> Iterator[list[int]]:
        if k == n:
            yield word
            return
        for v in range(low, m + 1):
            word[k] = v
            yield from extend(k + 1, v + 1 if (k + 1) in descents else v)

    yield from extend(0, 1)


def fundamental_qsym(n: int, d: Iterable[int], m: int) -> SparsePolynomial:
    """Gessel's fundamental quasisymmetric polynomial ``F_{n,d}(x1..xm)``."""
    d = frozenset(d)
    if any(not 1 <= i < n for i in d):
        raise ValueError(f"descent set {sorted(d)} is not inside 1..{n - 1}")
    poly = SparsePolynomial(m)
    for w in _words(n, d, m):
        weight = [0] * m
        for x in w:
            weight[x - 1] += 1
        poly.add_term(weight)
    return poly


def schur_via_fundamental(p: Iterable[int], m: int) -> SparsePolynomial:
    p = Partition(p)
    poly = SparsePolynomial(m)
    for t in enumerate_syt(p):
        poly += fundamental_qsym(p.size, descent_set(t), m)
    return poly


def nonzero_term_census(p: Iterable[int], m: int) -> tuple[int, int]:
    """``(number of SYT whose fundamental term is nonzero, number of SYT)``."""
    p = Partition(p)
    nonzero = total = 0
    for t in enumerate_syt(p):
        total += 1
        if fundamental_qsym(p.size, descent_set(t), m):
            nonzero += 1
    return nonzero, total
