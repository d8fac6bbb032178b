from collections import Counter
from pathlib import Path

import pytest
from hypothesis import strategies as st

from qyt.partitions import Partition
from qyt.tableaux import Tableau

GOLDEN = Path(__file__).parent / "golden"


@st.composite
def partitions(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=max(n, 1)))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return Partition(sorted(Counter(bins).values(), reverse=True))


@st.composite
def standard_tableaux(draw, max_n=8):
    """A uniformly-ish random SYT built by adding cells to random corners."""
    shape = draw(partitions(max_n=max_n))
    filled = [0] * len(shape)
    rows = [[] for _ in shape]
    for v in range(1, shape.size + 1):
        choices = [r for r in range(len(shape))
                   if filled[r] < shape[r] and (r == 0 or filled[r - 1] > filled[r])]
        r = draw(st.sampled_from(choices))
        rows[r].append(v)
        filled[r] += 1
    return Tableau(rows)


@pytest.fixture
def dst_pair():
    syt = Tableau([[1, 2, 5, 8], [3, 4, 7], [6, 9]])
    qyt = Tableau([[1, 1, 2, 3], [2, 2, 3], [3, 4]])
    return syt, qyt


@pytest.fixture
def five_run_syt():
    return Tableau([[1, 2, 3, 6, 8], [4, 5, 7, 11], [9, 10, 12]])


# Acceptance criteria register one line each here; printed after the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
