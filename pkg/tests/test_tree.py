import math

import pytest

from evengap.core import from_gap_set, from_generators, naturals
from evengap.errors import BudgetExceeded
from evengap.tree import (
    StratumRow,
    census,
    count_stratum,
    enumerate_genus,
    iter_genus,
    iter_stratum,
    monotonicity_report,
    n_sequence,
    root,
    stratum_row,
    walk,
)
from evengap.verify import brute_force_gap_census

KNOWN_TOTALS = (1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592)

KNOWN_ROWS = {
    3: (1, 2, 1),
    4: (1, 2, 4),
    5: (1, 2, 6, 3),
    9: (1, 2, 7, 23, 51, 33, 1),
    10: (1, 2, 7, 23, 62, 91, 18),
}


def test_totals_small():
    assert tuple(n_sequence(12)) == KNOWN_TOTALS


def test_stratum_rows_small():
    rows = census(10)
    for g, counts in KNOWN_ROWS.items():
        assert rows[g].counts == counts
        assert rows[g].total == sum(counts)
    assert stratum_row(4).counts == (1, 2, 4)
    assert stratum_row(0).counts == (1,)


def test_unique_smallest_two_even_gap_semigroup():
    assert [s for s in iter_stratum(2, 3)] == [from_generators([3, 5, 7])]


def test_stratum_row_validation():
    with pytest.raises(ValueError):
        StratumRow(3, (1, 2, 1), 5)
    with pytest.raises(ValueError):
        StratumRow(3, (1, 2), 3)


def test_tree_equals_bruteforce_census():
    for g in range(8):
        assert {s.gaps for s in iter_genus(g)} == brute_force_gap_census(g)


def test_tree_node_reference_walk_agrees():
    def reference_nodes(node, depth):
        yield node.semigroup
        if depth:
            for child in node.children():
                yield from reference_nodes(child, depth - 1)

    got = []
    walk(7, got.append)
    assert got == list(reference_nodes(root(), 7))


def test_children_are_valid_and_unique():
    seen = set()

    def visit(s):
        assert s not in seen
        seen.add(s)
        assert from_gap_set(s.gaps) == s

    walk(8, visit)
    node = root()
    for x in node.effective_generators:
        assert x > node.semigroup.frobenius
    for child in node.children():
        assert child.semigroup.genus == node.semigroup.genus + 1


def test_visit_order_is_lexicographic_on_removals():
    assert [s.gaps for s in iter_genus(2)] == [(1, 2), (1, 3)]
    assert [s.gaps for s in iter_genus(3)] == [
        (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 5),
    ]


def test_enumerate_genus():
    seen = []
    assert enumerate_genus(0, seen.append) == 1
    assert seen == [naturals()]
    assert enumerate_genus(10, lambda s: None) == 204


def test_worker_count_does_not_change_results():
    assert census(12, workers=2) == census(12, workers=1)
    assert census(13, workers=3, split_depth=5) == census(13)


def test_budget_exhaustion():
    with pytest.raises(BudgetExceeded):
        census(10, budget=5)
    with pytest.raises(BudgetExceeded):
        list(iter_genus(9, budget=10))
    with pytest.raises(BudgetExceeded):
        count_stratum(2, 9, budget=10)
    # a parallel run observes per-task budgets as well
    with pytest.raises(BudgetExceeded):
        census(12, workers=2, budget=100)


def test_count_stratum_matches_census_rows():
    rows = census(10)
    for g in range(11):
        counts = [count_stratum(k, g) for k in range(2 * g // 3 + 1)]
        assert tuple(counts) == rows[g].counts
    assert count_stratum(5, 10) == 91
    assert count_stratum(9, 10) == 0


def test_iter_stratum_profiles():
    for k, g in [(1, 5), (2, 7), (3, 6)]:
        members = list(iter_stratum(k, g))
        assert len(members) == count_stratum(k, g)
        for s in members:
            assert s.genus == g and s.gamma == k


def test_catalan_bound():
    for g, total in enumerate(n_sequence(12)):
        assert total <= math.comb(2 * g, g) // (g + 1)


def test_monotonicity_report():
    report = monotonicity_report(12)
    assert [row.genus for row in report] == list(range(1, 12))
    assert all(row.total_growing and row.window_positive for row in report)
    row1 = report[0]
    assert row1.window_deltas == () and row1.total_delta == 1
    row9 = report[8]
    assert row9.genus == 9
    assert row9.window_deltas == ((4, 11), (5, 58), (6, 17))
