"""Exhaustive enumeration of numerical semigroups by genus.

The enumeration walks the rooted tree on all numerical semigroups: the root
is the full set of naturals, and the children of a node S are the sets
S \\ {x} for each minimal generator x exceeding the Frobenius number of S.
Removing such an x yields a numerical semigroup of genus + 1, each semigroup
is reached exactly once, and x becomes the new Frobenius number.  Children
are explored in increasing removed-generator order, so the visit order is
the lexicographic order of removed-generator sequences and is stable across
runs.

Two encodings are used.  The counting kernel works on raw tuples
``(mask, m, genus, gamma, gens)`` where ``mask`` is a membership bitmask
wide enough for every query at the target depth, ``m`` the multiplicity,
``gamma`` the running number of even gaps, and ``gens`` the sorted minimal
generators above the Frobenius number.  The object walkers wrap the same
recurrence and yield :class:`~evengap.core.Semigroup` values; the two paths
are cross-checked in the test suite.

The child recurrence never rescans the mask: removing generator x from a
non-ordinary S keeps the carried generators above x, and the only candidate
new minimal generator is x + m, which is minimal iff x + m has no
decomposition a + b with a, b members in the open interval (m, x).
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import Semigroup, naturals
from .errors import BudgetExceeded

__all__ = [
    "MonotonicityRow",
    "StratumRow",
    "TreeNode",
    "census",
    "count_stratum",
    "enumerate_genus",
    "iter_genus",
    "iter_stratum",
    "monotonicity_report",
    "n_sequence",
    "root",
    "stratum_row",
    "walk",
]

_UNLIMITED = 1 << 62
_DEFAULT_SPLIT_DEPTH = 7


@dataclass(frozen=True)
class StratumRow:
    """Census of one genus: counts[k] semigroups with exactly k even gaps."""

    genus: int
    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.counts) != 2 * self.genus // 3 + 1:
            raise ValueError(
                f"genus {self.genus} needs {2 * self.genus // 3 + 1} buckets"
            )
        if self.total != sum(self.counts):
            raise ValueError("total must equal the sum of the bucket counts")

    @classmethod
    def from_counts(cls, genus: int, counts) -> "StratumRow":
        counts = tuple(counts)
        return cls(genus, counts, sum(counts))


@dataclass(frozen=True)
class MonotonicityRow:
    """Growth data between genus g and g + 1.

    ``window_deltas`` holds (k, N_k(g + 1) - N_k(g)) for the even-gap counts
    k in [g // 3 + 1, 2g // 3], the only columns not yet stabilized at
    genus g; positivity of the window plus stabilization of the lower
    columns forces n_{g+1} > n_g.
    """

    genus: int
    total_delta: int
    window_deltas: tuple[tuple[int, int], ...]

    @property
    def total_growing(self) -> bool:
        return self.total_delta > 0

    @property
    def window_positive(self) -> bool:
        return all(d > 0 for _, d in self.window_deltas)


@dataclass(frozen=True)
class TreeNode:
    """Reference form of an enumeration node; slow but direct.

    The production walkers carry generators incrementally; this class
    recomputes them from scratch and exists so tests can pit one against
    the other.
    """

    semigroup: Semigroup
    effective_generators: tuple[int, ...]

    @classmethod
    def of(cls, s: Semigroup) -> "TreeNode":
        gens = tuple(x for x in s.minimal_generators() if x > s.frobenius)
        return cls(s, gens)

    def children(self) -> tuple["TreeNode", ...]:
        from .core import _from_gap_tuple

        out = []
        for x in self.effective_generators:
            child = _from_gap_tuple(self.semigroup.gaps + (x,))
            out.append(TreeNode.of(child))
        return tuple(out)


def root() -> TreeNode:
    return TreeNode.of(naturals())


# -- counting kernel ---------------------------------------------------------


def _kernel_width(max_genus: int) -> int:
    # removed generators reach F + 2m <= 4g + 1 at the deepest parents
    return 4 * max_genus + 4


def _root_state(width: int):
    return ((1 << width) - 1, 1, 0, 0, [1])


def _child_states(state):
    """Children of a kernel state, in increasing removed-generator order."""
    mask, m, g, gamma, gens = state
    out = []
    cg = g + 1
    for idx, x in enumerate(gens):
        cgamma = gamma + 1 - (x & 1)
        cmask = mask ^ (1 << x)
        if x == m:
            # ordinary semigroup: removing the multiplicity slides it up
            out.append((cmask, m + 1, cg, cgamma, list(range(m + 1, 2 * m + 2))))
        else:
            z = x + m
            sub = (mask >> (m + 1)) & ((1 << (z // 2 - m)) - 1)
            minimal = True
            while sub:
                lsb = sub & -sub
                a = m + lsb.bit_length()
                if (mask >> (z - a)) & 1:
                    minimal = False
                    break
                sub ^= lsb
            cgens = gens[idx + 1 :]
            if minimal:
                cgens = cgens + [z]
            out.append((cmask, m, cg, cgamma, cgens))
    return out


def _count_tree(seed_states, max_genus: int, budget: int):
    """DFS below the seeds, bucketing every visited node by genus and
    even-gap count.  Returns (counts, visited)."""
    counts = [[0] * (2 * g // 3 + 1) for g in range(max_genus + 1)]
    visited = 0
    stack = list(seed_states)
    while stack:
        mask, m, g, gamma, gens = stack.pop()
        cg = g + 1
        if cg > max_genus:
            continue
        push = cg < max_genus
        row = counts[cg]
        for idx, x in enumerate(gens):
            cgamma = gamma + 1 - (x & 1)
            row[cgamma] += 1
            visited += 1
            if visited > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted")
            if not push:
                continue
            cmask = mask ^ (1 << x)
            if x == m:
                stack.append(
                    (cmask, m + 1, cg, cgamma, list(range(m + 1, 2 * m + 2)))
                )
            else:
                z = x + m
                sub = (mask >> (m + 1)) & ((1 << (z // 2 - m)) - 1)
                minimal = True
                while sub:
                    lsb = sub & -sub
                    a = m + lsb.bit_length()
                    if (mask >> (z - a)) & 1:
                        minimal = False
                        break
                    sub ^= lsb
                cgens = gens[idx + 1 :]
                if minimal:
                    cgens = cgens + [z]
                stack.append((cmask, m, cg, cgamma, cgens))
    return counts, visited


def _census_serial(max_genus: int, budget: int):
    counts, _ = _count_tree([_root_state(_kernel_width(max_genus))], max_genus, budget)
    counts[0][0] = 1
    return counts


def _subtree_counts(args):
    state, max_genus, budget = args
    return _count_tree([state], max_genus, budget)


def _merge_counts(target, other):
    for g, row in enumerate(other):
        trow = target[g]
        for k, v in enumerate(row):
            trow[k] += v


def _census_parallel(max_genus: int, workers: int, split_depth: int, budget: int):
    # enumerate the shallow forest serially, then farm out the subtrees
    width = _kernel_width(max_genus)
    shallow, visited = _count_tree([_root_state(width)], split_depth, _UNLIMITED)
    shallow[0][0] = 1
    if visited > budget:
        raise BudgetExceeded(f"node budget {budget} exhausted")

    frontier = []
    stack = [_root_state(width)]
    while stack:
        state = stack.pop()
        for child in _child_states(state):
            if child[2] == split_depth:
                frontier.append(child)
            else:
                stack.append(child)

    counts = [[0] * (2 * g // 3 + 1) for g in range(max_genus + 1)]
    _merge_counts(counts, shallow)
    tasks = [(state, max_genus, budget) for state in frontier]
    with multiprocessing.Pool(workers) as pool:
        for sub, nodes in pool.imap_unordered(_subtree_counts, tasks, chunksize=1):
            visited += nodes
            _merge_counts(counts, sub)
    if visited > budget:
        raise BudgetExceeded(f"node budget {budget} exhausted")
    return counts


def census(
    max_genus: int,
    *,
    workers: int | None = 1,
    split_depth: int = _DEFAULT_SPLIT_DEPTH,
    budget: int | None = None,
) -> list[StratumRow]:
    """Stratified census rows for every genus in [0, max_genus].

    With ``workers > 1`` the forest below ``split_depth`` is enumerated as
    independent subtree tasks whose counts are merged by addition, so the
    result does not depend on the worker count.  ``budget`` caps the number
    of tree nodes visited (per task when parallel) and raises
    :class:`BudgetExceeded` when exhausted.
    """
    if max_genus < 0:
        raise ValueError("max_genus must be >= 0")
    nworkers = os.cpu_count() or 1 if workers is None else workers
    cap = _UNLIMITED if budget is None else budget
    if nworkers > 1 and max_genus > split_depth + 3:
        counts = _census_parallel(max_genus, nworkers, split_depth, cap)
    else:
        counts = _census_serial(max_genus, cap)
    return [StratumRow.from_counts(g, row) for g, row in enumerate(counts)]


def stratum_row(genus: int, **kwargs) -> StratumRow:
    """The census row for a single genus."""
    return census(genus, **kwargs)[genus]


def n_sequence(max_genus: int, **kwargs) -> list[int]:
    """Totals n_g for g in [0, max_genus]."""
    return [row.total for row in census(max_genus, **kwargs)]


def count_stratum(gamma: int, genus: int, *, budget: int | None = None) -> int:
    """Number of genus-``genus`` semigroups with exactly ``gamma`` even gaps.

    Walks the tree with two prunes: the even-gap count never decreases
    toward the leaves, and it grows by at most one per level.
    """
    if genus < 0 or gamma < 0:
        raise ValueError("genus and gamma must be >= 0")
    if genus == 0:
        return 1 if gamma == 0 else 0
    cap = _UNLIMITED if budget is None else budget
    visited = 0
    found = 0
    stack = [_root_state(_kernel_width(genus))]
    while stack:
        state = stack.pop()
        for child in _child_states(state):
            visited += 1
            if visited > cap:
                raise BudgetExceeded(f"node budget {cap} exhausted")
            cgamma, cg = child[3], child[2]
            if cgamma > gamma or cgamma + (genus - cg) < gamma:
                continue
            if cg == genus:
                found += 1
            else:
                stack.append(child)
    return found


# -- object walkers ----------------------------------------------------------


def _object_root_state(width: int):
    return ((1 << width) - 1, 1, -1, 0, 0, [1])


def _object_children(state):
    mask, m, _, g, gamma, gens = state
    out = []
    for kstate, x in zip(_child_states((mask, m, g, gamma, gens)), gens):
        cmask, cm, cg, cgamma, cgens = kstate
        out.append((cmask, cm, x, cg, cgamma, cgens))
    return out


def _state_semigroup(state) -> Semigroup:
    mask, m, frob, g, _, _ = state
    canonical = mask & ((1 << (frob + 3)) - 1)
    gaps = tuple(q for q in range(1, frob + 1) if not (mask >> q) & 1)
    return Semigroup(canonical, frob, m if g > 0 else 1, g, gaps)


def _iter_nodes(max_genus: int, budget: int, keep) -> Iterator:
    """Preorder walk in lexicographic removed-generator order.

    ``keep(state)`` decides whether a child subtree is entered at all.
    """
    visited = 0
    stack = [_object_root_state(_kernel_width(max_genus))]
    while stack:
        state = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"node budget {budget} exhausted")
        yield state
        if state[3] < max_genus:
            for child in reversed(_object_children(state)):
                if keep(child):
                    stack.append(child)


def walk(
    max_genus: int,
    visitor: Callable[[Semigroup], None],
    *,
    budget: int | None = None,
) -> int:
    """Visit every semigroup of genus <= max_genus once; returns the count.

    Visitation is serialized; counting work that wants parallelism should go
    through :func:`census` or :func:`count_stratum` instead.
    """
    cap = _UNLIMITED if budget is None else budget
    n = 0
    for state in _iter_nodes(max_genus, cap, lambda child: True):
        visitor(_state_semigroup(state))
        n += 1
    return n


def iter_genus(genus: int, *, budget: int | None = None) -> Iterator[Semigroup]:
    """All semigroups of the given genus, in deterministic tree order."""
    cap = _UNLIMITED if budget is None else budget
    for state in _iter_nodes(genus, cap, lambda child: True):
        if state[3] == genus:
            yield _state_semigroup(state)


def enumerate_genus(
    genus: int,
    visitor: Callable[[Semigroup], None],
    *,
    budget: int | None = None,
) -> int:
    """Invoke ``visitor`` once per semigroup of the genus; returns the count."""
    n = 0
    for s in iter_genus(genus, budget=budget):
        visitor(s)
        n += 1
    return n


def iter_stratum(
    gamma: int, genus: int, *, budget: int | None = None
) -> Iterator[Semigroup]:
    """All genus-``genus`` semigroups with exactly ``gamma`` even gaps.

    Subtrees whose running even-gap count can no longer land on ``gamma``
    are pruned, which makes low strata cheap even at large genus.
    """
    cap = _UNLIMITED if budget is None else budget

    def keep(child) -> bool:
        cgamma, cg = child[4], child[3]
        return cgamma <= gamma and cgamma + (genus - cg) >= gamma

    for state in _iter_nodes(genus, cap, keep):
        if state[3] == genus and state[4] == gamma:
            yield _state_semigroup(state)


def monotonicity_report(max_genus: int, **kwargs) -> list[MonotonicityRow]:
    """Growth rows for g in [1, max_genus - 1]."""
    if max_genus < 1:
        raise ValueError("max_genus must be >= 1")
    rows = census(max_genus, **kwargs)
    out = []
    for g in range(1, max_genus):
        cur, nxt = rows[g], rows[g + 1]
        window = tuple(
            (k, nxt.counts[k] - cur.counts[k])
            for k in range(g // 3 + 1, 2 * g // 3 + 1)
        )
        out.append(MonotonicityRow(g, nxt.total - cur.total, window))
    return out
