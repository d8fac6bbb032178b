from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions
from qyt.formulas import hook_content_count, hook_length_count
from qyt.partitions import partitions_of
from qyt.schur import (
    SparsePolynomial,
    fundamental_qsym,
    nonzero_term_census,
    schur_via_fundamental,
    schur_via_ssyt,
)
from qyt.tableaux import count_qyt


def poly(nvars, *terms):
    out = SparsePolynomial(nvars)
    for exps, c in terms:
        out.add_term(exps, c)
    return out


def test_polynomial_basics():
    p = poly(2, ((2, 1), 1), ((1, 2), 1))
    assert str(p) == "x1^2*x2 + x1*x2^2"
    assert str(SparsePolynomial(3)) == "0"
    assert not SparsePolynomial(3)
    q = p + poly(2, ((2, 1), -1))
    assert q == poly(2, ((1, 2), 1))
    assert q.coefficient((2, 1)) == 0
    assert str(poly(2, ((0, 0), 3), ((1, 0), 2))) == "2*x1 + 3"
    assert p.total_mass() == 2


def test_polynomial_rejects_wrong_length():
    with pytest.raises(ValueError):
        SparsePolynomial(2).add_term((1, 0, 0))


def test_schur_examples():
    s = schur_via_ssyt((2, 2), 3)
    assert len(s) == 6 and s.total_mass() == 6
    assert s.coefficient((1, 2, 1)) == 1
    assert schur_via_ssyt((1,), 3) == poly(3, ((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1))
    assert not schur_via_ssyt((2, 2), 1)


def test_fundamental_examples():
    assert fundamental_qsym(2, (), 2) == poly(2, ((2, 0), 1), ((1, 1), 1), ((0, 2), 1))
    assert fundamental_qsym(2, {1}, 2) == poly(2, ((1, 1), 1))
    assert not fundamental_qsym(3, {1, 2}, 2)
    with pytest.raises(ValueError):
        fundamental_qsym(3, {3}, 2)


def test_fundamental_matches_word_brute_force():
    for n in range(1, 5):
        for m in range(1, 4):
            for k in range(n):
                for d in combinations(range(1, n), k):
                    d = set(d)
                    want = SparsePolynomial(m)
                    for w in combinations_with_replacement(range(1, m + 1), n):
                        if all(w[i - 1] < w[i] for i in d):
                            want.add_term([w.count(v) for v in range(1, m + 1)])
                    got = fundamental_qsym(n, d, m)
                    assert got == want
                    assert bool(got) == (len(d) < m)


def test_schur_expansions_agree():
    for n in range(1, 7):
        for p in partitions_of(n):
            for m in range(1, 5):
                s = schur_via_ssyt(p, m)
                assert s == schur_via_fundamental(p, m)
                assert s.total_mass() == hook_content_count(p, m)


def test_census_examples():
    assert nonzero_term_census((2, 2), 2) == (1, 2)
    assert nonzero_term_census((2, 2, 1), 3) == (3, 5)
    assert nonzero_term_census((3, 2), 4) == (5, 5)
    assert nonzero_term_census((1, 1, 1), 2) == (0, 1)


@settings(max_examples=40, deadline=None)
@given(partitions(max_n=8), st.integers(min_value=1, max_value=9))
def test_census_counts_qyt(p, m):
    nonzero, total = nonzero_term_census(p, m)
    assert total == hook_length_count(p)
    assert nonzero == count_qyt(p, m, "le")
