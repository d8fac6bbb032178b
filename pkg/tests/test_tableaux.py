from itertools import product
from math import factorial, prod

import pytest
from hypothesis import given, settings

from conftest import partitions, standard_tableaux
from qyt.errors import (
    BudgetExceededError,
    EmptyTableauError,
    NotStandardError,
    RangeError,
    TableauShapeError,
)
from qyt.partitions import Cell, Partition, hook_length, max_entry_range, partitions_of
from qyt.tableaux import (
    Tableau,
    count_qyt,
    count_qyt_outside_col1,
    count_qyt_outside_col12,
    count_qyt_right_of_row2,
    descent_set,
    enumerate_qyt,
    enumerate_qyt_by_filter,
    enumerate_ssyt,
    enumerate_syt,
    is_qyt,
    is_ssyt,
    is_syt,
    max_entry,
    qyt_distribution,
    runs,
    witness_for,
    witness_max,
)


def brute_fillings(p, m):
    """Every map from cells to 1..m, as tableaux."""
    p = Partition(p)
    for flat in product(range(1, m + 1), repeat=p.size):
        rows, k = [], 0
        for length in p:
            rows.append(flat[k:k + length])
            k += length
        yield Tableau(rows)


def brute_is_ssyt(t):
    cells = dict(t.items())
    for (c, r), x in cells.items():
        if (c + 1, r) in cells and cells[(c + 1, r)] < x:
            return False
        if (c, r + 1) in cells and cells[(c, r + 1)] <= x:
            return False
    return True


def brute_is_qyt(t):
    """The defining condition, read cell by cell."""
    if not brute_is_ssyt(t):
        return False
    cells = dict(t.items())
    values = set(cells.values())
    for i in values:
        if i == 1:
            continue
        left_i = min(c for (c, _), x in cells.items() if x == i)
        cols_prev = [c for (c, _), x in cells.items() if x == i - 1]
        if not cols_prev or left_i > max(cols_prev):
            return False
    return True


def small_shapes(max_n):
    for n in range(1, max_n + 1):
        yield from partitions_of(n)


# --- construction and rendering ----------------------------------------------

def test_tableau_basics():
    t = Tableau([[1, 1, 2, 3], [2, 2, 3], [3, 4]])
    assert t.shape == Partition((4, 3, 2))
    assert t[Cell(2, 3)] == 4
    assert t[(1, 1)] == 1
    assert t.to_json() == [[1, 1, 2, 3], [2, 2, 3], [3, 4]]
    assert t.render() == "3 4\n2 2 3\n1 1 2 3"
    assert Tableau.from_top_down([[3, 4], [2, 2, 3], [1, 1, 2, 3]]) == t
    assert hash(t) == hash(Tableau(t.to_json()))


def test_render_aligns_wide_entries():
    t = Tableau([[1, 2, 3, 4, 5, 6, 7, 8, 9, 10], [11]])
    assert t.render().splitlines()[0] == "11"
    assert t.render().splitlines()[1].startswith(" 1  2")


@pytest.mark.parametrize("rows", [[[1], [2, 3]], [[1, 0]], [[1, "a"]]])
def test_bad_tableau(rows):
    with pytest.raises(TableauShapeError):
        Tableau(rows)


def test_empty_tableau():
    t = Tableau([])
    assert t.shape == Partition(())
    assert is_ssyt(t) and is_qyt(t)
    with pytest.raises(EmptyTableauError):
        max_entry(t)


# --- predicates ----------------------------------------------------------------

def test_predicates_on_dst_pair(dst_pair):
    syt, qyt = dst_pair
    assert is_syt(syt) and is_ssyt(syt) and not is_qyt(syt)
    assert is_qyt(Tableau([[1], [2], [3]])) and not is_qyt(Tableau([[1, 3], [2, 4]]))
    assert is_ssyt(qyt) and is_qyt(qyt) and not is_syt(qyt)


def test_qyt_rejects_gap_and_right_shift():
    # A 3 with no 2.
    assert not is_qyt(Tableau([[1, 1, 3]]))
    # Single row 1 1 2: the 2 sits right of every 1.
    assert not is_qyt(Tableau([[1, 1, 2]]))
    # Column (1, 2) with a 2 left of the only 1 is fine.
    assert is_qyt(Tableau([[1, 1], [2]]))
    assert not is_qyt(Tableau([[2, 1]]))


def test_predicates_match_brute_force():
    for p in small_shapes(5):
        for m in range(1, 5):
            for t in brute_fillings(p, m):
                assert is_ssyt(t) == brute_is_ssyt(t)
                assert is_qyt(t) == brute_is_qyt(t)


# --- enumeration -----------------------------------------------------------------

def test_ssyt_enumeration_matches_brute_force():
    for p in small_shapes(5):
        for m in range(0, 5):
            got = list(enumerate_ssyt(p, m))
            want = [t for t in brute_fillings(p, m) if brute_is_ssyt(t)] if m else []
            assert got == sorted(got, key=lambda t: t.entries())
            assert set(got) == set(want)
            assert len(got) == len(want)


def test_syt_count_matches_hook_product():
    for p in small_shapes(9):
        expected = factorial(p.size) // prod(hook_length(p, c) for c in p.cells())
        got = list(enumerate_syt(p))
        assert len(got) == len(set(got)) == expected
        assert all(is_syt(t) for t in got)


def test_qyt_generator_matches_ssyt_filter():
    for p in small_shapes(7):
        _, hi = max_entry_range(p)
        for m in range(0, hi + 2):
            for mode in ("eq", "le"):
                got = list(enumerate_qyt(p, m, mode))
                assert len(got) == len(set(got))
                assert set(got) == set(enumerate_qyt_by_filter(p, m, mode))


def test_qyt_matches_brute_force_definition():
    for p in small_shapes(5):
        for m in range(1, p.size + 1):
            want = {t for t in brute_fillings(p, m) if brute_is_qyt(t) and max(t.entries()) == m}
            assert set(enumerate_qyt(p, m, "eq")) == want


def test_le_mode_is_cumulative_eq():
    for p in small_shapes(8):
        for m in range(0, p.size + 2):
            assert count_qyt(p, m, "le") == sum(count_qyt(p, k, "eq") for k in range(m + 1))


def test_known_counts():
    assert count_qyt((3, 3, 3, 3), 6, "eq") == 113
    assert count_qyt((3, 3, 3, 2), 6, "le") == 241
    assert qyt_distribution((2, 2)) == {2: 1, 3: 1}
    assert qyt_distribution(()) == {0: 1}


def test_empty_shape_counts():
    assert count_qyt((), 0, "eq") == 1
    assert count_qyt((), 3, "le") == 1
    assert count_qyt((), 3, "eq") == 0


def test_budget_exhaustion():
    with pytest.raises(BudgetExceededError):
        list(enumerate_ssyt((4, 4, 2, 2), 8, max_states=1000))
    with pytest.raises(BudgetExceededError):
        list(enumerate_qyt((4, 4, 2, 2), 8, "le", max_states=100))


# --- descents and runs --------------------------------------------------------

def test_descents_and_runs(five_run_syt):
    t = five_run_syt
    assert descent_set(t) == (3, 6, 8, 11)
    r = runs(t)
    assert len(r) == 5
    assert {t[c] for c in r[0]} == {1, 2, 3}
    assert {t[c] for c in r[3]} == {9, 10, 11}
    assert [len(x) for x in r] == [3, 3, 2, 3, 1]


def test_trivial_descent_sets():
    assert descent_set(Tableau([[1, 2, 3, 4]])) == ()
    assert descent_set(Tableau([[1], [2], [3], [4]])) == (1, 2, 3)


def test_descent_requires_standard(dst_pair):
    with pytest.raises(NotStandardError):
        descent_set(dst_pair[1])


@given(standard_tableaux(max_n=10))
def test_runs_partition_the_entries(t):
    cells = [c for r in runs(t) for c in r]
    assert len(cells) == t.size == len(set(cells))
    assert len(runs(t)) == len(descent_set(t)) + 1


# --- A and B counters -----------------------------------------------------------

@pytest.mark.parametrize("p, m, a, b", [
    ((2, 2), 2, 1, 0),
    ((3, 2), 3, 3, 1),
    ((4, 2), 3, 6, 3),
    ((3, 2), 2, 2, 1),
    ((4, 2), 2, 3, 2),
])
def test_outside_column_counters(p, m, a, b):
    assert count_qyt_outside_col1(p, m) == a
    assert count_qyt_outside_col12(p, m) == b


def test_right_of_row2_agrees_with_col12_for_row2_of_length2():
    for p in small_shapes(8):
        if len(p) >= 2 and p[1] == 2:
            for m in range(1, p.size + 1):
                assert count_qyt_right_of_row2(p, m) == count_qyt_outside_col12(p, m)


# --- witnesses -----------------------------------------------------------------

def test_witness_max_example():
    t = witness_max((4, 4, 3))
    assert t.to_json() == [[1, 3, 5, 7], [2, 4, 6, 8], [3, 5, 7]]
    assert is_qyt(t) and max_entry(t) == 8


def test_witness_for_example():
    t = witness_for((5, 5, 4, 2), 8)
    assert t.shape == Partition((5, 5, 4, 2))
    assert is_qyt(t) and max_entry(t) == 8


def test_witness_out_of_range_message():
    with pytest.raises(RangeError, match=r"\[1, 1\]"):
        witness_for((3,), 2)
    with pytest.raises(EmptyTableauError):
        witness_max(())


@settings(max_examples=60, deadline=None)
@given(partitions(max_n=14))
def test_witnesses_cover_the_range(p):
    lo, hi = max_entry_range(p)
    assert max_entry(witness_max(p)) == hi
    for m in range(lo, hi + 1):
        w = witness_for(p, m)
        assert w.shape == p and is_qyt(w) and max_entry(w) == m
