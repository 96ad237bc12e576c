"""Closed subsets under a semigroup action, and the stable stratum counts.

A finite set B containing 0 is closed for a semigroup S when adding any
member of S to any element of B lands back in B or beyond max(B).  The
number of such sets of size g + 1 over all semigroups S of genus g equals
the size at which the even-gap stratum columns stabilize, and this module
computes that sequence by three independent routes:

* summing closed-set counts over the genus-g family,
* a direct census of the stratum at genus 3g, and
* summing fiber sizes of the halving map, fiber by fiber.

The closed-set enumerator walks candidates in increasing order keeping a
"reach" mask of sums already forced; a candidate above the smallest pending
forced sum would strand it, so the frontier is capped there.  Every element
of a valid set also bounds its maximum by size + genus - 1, which prunes
the walk to the useful window.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass
from typing import Iterator

from .core import Semigroup, from_gap_set, naturals
from .errors import BudgetExceeded, NotInFiber
from .strata import one_half
from .tree import count_stratum, iter_genus, n_sequence

__all__ = [
    "BoundsRow",
    "ClosedSet",
    "FiberReport",
    "bounds",
    "chain_fiber_total",
    "closed_set_from_fiber",
    "closed_sets",
    "count_closed_sets",
    "fiber_from_closed_set",
    "fiber_report",
    "is_closed_set",
    "iter_fiber",
    "punctured_ordinary",
    "punctured_ordinary_fiber_bucket",
    "punctured_ordinary_fiber_count",
    "stable_count",
    "stable_count_by_census",
    "stable_count_by_closed_sets",
    "stable_count_by_fibers",
]

# default route caps; callers may raise them explicitly
DIRECT_CENSUS_CAP = 9
CLOSED_SETS_CAP = 14
FIBER_CAP = 9

_UNLIMITED = 1 << 62


@dataclass(frozen=True)
class ClosedSet:
    """A finite closed set (ascending elements, 0 first) over ``ambient``."""

    elements: tuple[int, ...]
    ambient: Semigroup

    @property
    def max(self) -> int:
        return self.elements[-1]


def is_closed_set(s: Semigroup, elements) -> bool:
    """Direct definition check; the enumerators are tested against this."""
    chosen = set(elements)
    if 0 not in chosen:
        return False
    top = max(chosen)
    for b in chosen:
        for step in s.members(top - b + 1):
            if step and (b + step) not in chosen:
                return False
    return True


def _positive_member_mask(s: Semigroup, cap: int) -> int:
    mask = 0
    for x in range(1, cap + 1):
        if x in s:
            mask |= 1 << x
    return mask


def _closed_set_walk(pos: int, size: int, cap: int, budget: int, collect: bool):
    """Shared DFS behind counting and enumeration of closed sets."""
    window = (1 << (cap + 1)) - 1
    pos &= window
    count = 0
    out: list[tuple[int, ...]] = []
    if size == 1:
        return 1, [(0,)] if collect else []
    visited = 0
    stack = [((0,), 0, pos)]
    while stack:
        elems, curmax, reach = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"closed-set node budget {budget} exhausted")
        pending = reach & ~_mask_of(elems)
        hi = (pending & -pending).bit_length() - 1 if pending else cap
        if hi > cap:
            hi = cap
        if cap - curmax < size - len(elems):
            continue
        for e in range(curmax + 1, hi + 1):
            nxt = elems + (e,)
            if len(nxt) == size:
                count += 1
                if collect:
                    out.append(nxt)
            else:
                stack.append((nxt, e, (reach | (pos << e)) & window))
    if collect:
        out.sort()
    return count, out


def _mask_of(elems: tuple[int, ...]) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def _count_closed_mask(pos: int, size: int, cap: int, budget: int) -> int:
    """Counting fast path: same walk as above on masks only."""
    if size == 1:
        return 1
    window = (1 << (cap + 1)) - 1
    pos &= window
    count = 0
    visited = 0
    stack = [(1, 0, 1, pos)]
    while stack:
        chosen, curmax, n, reach = stack.pop()
        visited += 1
        if visited > budget:
            raise BudgetExceeded(f"closed-set node budget {budget} exhausted")
        pending = reach & ~chosen
        hi = (pending & -pending).bit_length() - 1 if pending else cap
        if hi > cap:
            hi = cap
        if cap - curmax < size - n:
            continue
        if n + 1 == size:
            count += max(0, hi - curmax)
            continue
        for e in range(curmax + 1, hi + 1):
            stack.append((chosen | (1 << e), e, n + 1, (reach | (pos << e)) & window))
    return count


def _element_cap(s: Semigroup, size: int) -> int:
    # every member of S up to max(B) must sit inside B, so
    # max(B) <= size + genus - 1
    return size + s.genus - 1


def closed_sets(
    s: Semigroup, size: int, *, max_element: int | None = None,
    budget: int | None = None,
) -> list[ClosedSet]:
    """All closed sets of the given size containing 0, sorted."""
    if size < 1:
        raise ValueError("size must be >= 1")
    cap = _element_cap(s, size) if max_element is None else max_element
    pos = _positive_member_mask(s, cap)
    _, sets = _closed_set_walk(
        pos, size, cap, _UNLIMITED if budget is None else budget, True
    )
    return [ClosedSet(elems, s) for elems in sets]


def count_closed_sets(
    s: Semigroup, size: int, *, max_element: int | None = None,
    budget: int | None = None,
) -> int:
    if size < 1:
        raise ValueError("size must be >= 1")
    cap = _element_cap(s, size) if max_element is None else max_element
    pos = _positive_member_mask(s, cap)
    return _count_closed_mask(pos, size, cap, _UNLIMITED if budget is None else budget)


# -- the halving-fiber bijection ---------------------------------------------


def fiber_from_closed_set(b: ClosedSet) -> Semigroup:
    """The fiber element matching a closed set of size gamma + 1.

    The base T of genus gamma doubles to the even part; the set B supplies
    the odd members 2b - 2*max(B) + 6*gamma + 1.  The result has genus
    3*gamma, gamma even gaps, and halves back to T.
    """
    t = b.ambient
    gamma = t.genus
    if len(b.elements) != gamma + 1:
        raise ValueError(f"need a closed set of size {gamma + 1}")
    if not is_closed_set(t, b.elements):
        raise ValueError(f"{b.elements} is not closed for {t}")
    top = b.max
    width = max(1, 6 * gamma)
    members = {2 * u for u in t.members((width + 1) // 2)}
    for e in b.elements:
        o = 2 * e - 2 * top + 6 * gamma + 1
        if o < width:
            members.add(o)
    s = from_gap_set(x for x in range(1, width) if x not in members)
    if s.genus != 3 * gamma or s.gamma != gamma:
        raise ValueError(f"{b.elements} does not produce a stratum member")
    return s


def closed_set_from_fiber(s: Semigroup, base: Semigroup) -> ClosedSet:
    """Inverse of :func:`fiber_from_closed_set`.

    Raises NotInFiber unless ``s`` has genus 3 * genus(base) and halves to
    ``base``.
    """
    gamma = base.genus
    if s.genus != 3 * gamma:
        raise NotInFiber(f"{s} does not have genus {3 * gamma}")
    if one_half(s) != base:
        raise NotInFiber(f"{s} halves to {one_half(s)}, not {base}")
    if gamma == 0:
        return ClosedSet((0,), base)
    profile = s.even_gap_profile()
    odds = profile.odd_nongaps + (6 * gamma + 1,)
    smallest = profile.smallest_odd_nongap
    elements = tuple(sorted((o - smallest) // 2 for o in odds))
    return ClosedSet(elements, base)


@dataclass(frozen=True)
class FiberReport:
    """Fiber of the halving map over ``base``, bucketed by the smallest odd
    member 2*gamma + 2i + 1 of the fiber element."""

    base: Semigroup
    per_i: tuple[int, ...]
    total: int

    def __post_init__(self):
        if self.total != sum(self.per_i):
            raise ValueError("total must equal the sum of the buckets")


def fiber_report(t: Semigroup, *, budget: int | None = None) -> FiberReport:
    """Decompose the fiber over ``t`` via the closed-set bijection."""
    gamma = t.genus
    per = [0] * (gamma + 1)
    for b in closed_sets(t, gamma + 1, budget=budget):
        s = fiber_from_closed_set(b)
        if gamma == 0:
            i = 0
        else:
            i = (s.even_gap_profile().smallest_odd_nongap - 2 * gamma - 1) // 2
        per[i] += 1
    return FiberReport(t, tuple(per), sum(per))


def iter_fiber(t: Semigroup) -> Iterator[Semigroup]:
    """Enumerate the fiber over ``t`` directly, without the bijection.

    Fiber elements are exactly the sets (doubled t) + O + [6*gamma, ..)
    where O picks gamma odd numbers o = 2*gamma + 2j + 1, j in [0, 2*gamma),
    subject to: j + step lands in O or at 6*gamma and beyond, for every
    positive member ``step`` of t.  Choosing indices downward makes each
    constraint point into already-decided territory, so one mask test per
    candidate suffices.
    """
    gamma = t.genus
    if gamma == 0:
        yield naturals()
        return
    span = 2 * gamma
    window = (1 << span) - 1
    steps = 0
    for v in t.members(span):
        if v:
            steps |= 1 << v

    def emit(chosen: int) -> Semigroup:
        width = 6 * gamma
        members = {2 * u for u in t.members((width + 1) // 2)}
        for j in range(span):
            if (chosen >> j) & 1:
                members.add(2 * gamma + 2 * j + 1)
        return from_gap_set(x for x in range(1, width) if x not in members)

    stack = [(0, span - 1, 0)]
    while stack:
        chosen, cursor, n = stack.pop()
        if n == gamma:
            yield emit(chosen)
            continue
        for j in range(cursor, gamma - n - 2, -1):
            if ((steps << j) & window) & ~chosen:
                continue
            stack.append((chosen | (1 << j), j - 1, n + 1))


# -- the stable stratum counts -----------------------------------------------


def stable_count_by_closed_sets(
    gamma: int, *, workers: int | None = 1, budget: int | None = None,
    cap: int = CLOSED_SETS_CAP,
) -> int:
    """Sum of closed-set counts of size gamma + 1 over the genus-gamma
    family; parallelizes over the family members."""
    if gamma > cap:
        raise BudgetExceeded(f"closed-set route capped at gamma <= {cap}")
    if gamma == 0:
        return 1
    node_budget = _UNLIMITED if budget is None else budget
    elem_cap = 2 * gamma
    tasks = [
        (_positive_member_mask(s, elem_cap), gamma + 1, elem_cap, node_budget)
        for s in iter_genus(gamma)
    ]
    nworkers = multiprocessing.cpu_count() if workers is None else workers
    if nworkers > 1 and gamma >= 10:
        with multiprocessing.Pool(nworkers) as pool:
            return sum(pool.imap_unordered(_count_task, tasks, chunksize=64))
    return sum(_count_task(task) for task in tasks)


def _count_task(args) -> int:
    pos, size, cap, budget = args
    return _count_closed_mask(pos, size, cap, budget)


def stable_count_by_census(
    gamma: int, *, budget: int | None = None, cap: int = DIRECT_CENSUS_CAP
) -> int:
    """The stratum count at genus 3 * gamma, straight off the tree."""
    if gamma > cap:
        raise BudgetExceeded(f"direct census route capped at gamma <= {cap}")
    return count_stratum(gamma, 3 * gamma, budget=budget)


def stable_count_by_fibers(
    gamma: int, *, budget: int | None = None, cap: int = FIBER_CAP
) -> int:
    """Sum of the fiber sizes of the halving map over the genus-gamma
    family."""
    if gamma > cap:
        raise BudgetExceeded(f"fiber route capped at gamma <= {cap}")
    return sum(fiber_report(t, budget=budget).total for t in iter_genus(gamma))


_ROUTES = {
    "closed-sets": stable_count_by_closed_sets,
    "direct": stable_count_by_census,
    "fibers": stable_count_by_fibers,
}


def stable_count(gamma: int, *, method: str = "closed-sets", **kwargs) -> int:
    try:
        route = _ROUTES[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; use one of {sorted(_ROUTES)}")
    return route(gamma, **kwargs)


# -- the punctured-ordinary family and bounds --------------------------------


def punctured_ordinary(gamma: int, k: int) -> Semigroup:
    """The genus-gamma semigroup missing 1..gamma-1 and gamma+k."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if not 0 <= k <= gamma - 1:
        raise ValueError("k must lie in [0, gamma - 1]")
    return from_gap_set(list(range(1, gamma)) + [gamma + k])


def punctured_ordinary_fiber_count(gamma: int, k: int) -> int:
    """Closed form 2**(gamma-1-k) * (2**k + 1) for the fiber size over
    :func:`punctured_ordinary`."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if not 0 <= k <= gamma - 1:
        raise ValueError("k must lie in [0, gamma - 1]")
    return 2 ** (gamma - 1 - k) * (2 ** k + 1)


def punctured_ordinary_fiber_bucket(gamma: int, k: int, i: int) -> int:
    """Closed form for one bucket of the fiber over punctured_ordinary."""
    if not 0 <= i <= gamma:
        raise ValueError("i must lie in [0, gamma]")
    if k == 0:
        return math.comb(gamma, i)
    below = math.comb(gamma - 1, i - 1) if i >= 1 else 0
    if i + k <= gamma - 1:
        return math.comb(gamma - k - 1, i) + below
    return below


def chain_fiber_total(gamma: int) -> int:
    """Total fiber size over the whole punctured-ordinary family:
    2**(gamma-1) * (gamma + 2) - 1."""
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    return 2 ** (gamma - 1) * (gamma + 2) - 1


@dataclass(frozen=True)
class BoundsRow:
    """Exact bracketing of the stable stratum count at one gamma.

    The simple bounds are family-size times gamma + 1 and times 2**gamma;
    the refined ones replace the punctured-ordinary members' contribution
    with its exact total.
    """

    gamma: int
    simple_lower: int
    simple_upper: int
    refined_lower: int
    refined_upper: int


def bounds(gamma: int, *, family_size: int | None = None) -> BoundsRow:
    """Lower and upper bounds for the stable count at ``gamma``.

    ``family_size`` (the number of genus-gamma semigroups) is computed from
    the tree when not supplied.
    """
    if gamma < 0:
        raise ValueError("gamma must be >= 0")
    if gamma == 0:
        return BoundsRow(0, 1, 1, 1, 1)
    n = n_sequence(gamma)[gamma] if family_size is None else family_size
    simple_lower = n * (gamma + 1)
    simple_upper = n * 2 ** gamma
    total = chain_fiber_total(gamma)
    refined_lower = simple_lower + total - gamma * (gamma + 1)
    refined_upper = simple_upper - (gamma * 2 ** gamma - total)
    return BoundsRow(gamma, simple_lower, simple_upper, refined_lower, refined_upper)
