"""Exhaustive verification of the structural facts the engine relies on.

Each family re-derives one fact from scratch over every semigroup in a
desk-scale range and reports a pass/fail result with a minimal
counterexample (rendered in doubled-half + odd part + tail form).  The
ranges scale with the caller's genus and gamma caps; the defaults cover
genus up to 14 and even-gap counts up to 6 in well under a minute.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from . import reference
from .closedsets import (
    bounds,
    chain_fiber_total,
    closed_sets,
    fiber_from_closed_set,
    fiber_report,
    iter_fiber,
    punctured_ordinary,
    punctured_ordinary_fiber_bucket,
    punctured_ordinary_fiber_count,
    stable_count_by_census,
    stable_count_by_closed_sets,
    stable_count_by_fibers,
)
from .core import Semigroup, from_gap_set
from .errors import NotASemigroup
from .strata import (
    canonical_form,
    decompose,
    double_with_tail,
    one_half,
    reassemble,
    stratum_translation_check,
    symmetric_double,
)
from .tree import census, iter_genus, walk

__all__ = ["CheckResult", "run_all", "brute_force_gap_census"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    counterexample: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" [{self.counterexample}]" if self.counterexample else ""
        return f"{status} {self.name}: {self.detail}{extra}"


class _Family:
    """Accumulates per-item verdicts for one named check."""

    def __init__(self, name: str, detail: str):
        self.name = name
        self.detail = detail
        self.checked = 0
        self.failure: str | None = None

    def check(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = witness() if callable(witness) else str(witness)

    def result(self) -> CheckResult:
        return CheckResult(
            self.name,
            self.failure is None,
            f"{self.detail} ({self.checked} checks)",
            self.failure,
        )


def brute_force_gap_census(genus: int) -> set[tuple[int, ...]]:
    """Oracle census: every size-``genus`` subset of [1, 2*genus - 1] whose
    complement is additively closed.  Independent of the tree walker."""
    if genus == 0:
        return {()}
    found = set()
    for gaps in combinations(range(1, 2 * genus), genus):
        gap_set = set(gaps)
        ok = True
        for a in range(1, 2 * genus):
            if a in gap_set:
                continue
            for b in range(a, 2 * genus - a):
                if b not in gap_set and (a + b) in gap_set:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(gaps)
    return found


def _per_semigroup_families(max_genus: int) -> list[CheckResult]:
    g_all = min(12, max_genus)
    g_closure = min(9, max_genus)

    closure = _Family("pair-closure", f"all member sums close, genus <= {g_closure}")
    tail = _Family("tail-membership", f"everything from 2g on is a member, genus <= {g_all}")
    parity = _Family("gap-parity-count", f"even + odd gap split is consistent, genus <= {g_all}")
    odd_upper = _Family("odd-nongap-upper", f"i-th odd nongap <= 2g - 2i + 1, genus <= {g_all}")
    even_upper = _Family("even-gap-upper", f"largest even gap <= min(4k - 2, 4g - 4k), genus <= {g_all}")
    band = _Family("stratum-band", f"2g >= 3 * even-gap count, genus <= {g_all}")
    odd_lower = _Family("min-odd-nongap-lower", f"smallest odd nongap >= max(|2g - 4k| + 1, 3), genus <= {g_all}")
    roundtrip = _Family("gap-set-roundtrip", f"rebuilding from the gap set is the identity, genus <= {g_all}")
    decomp = _Family("decomposition-roundtrip", f"doubled-half + odd part + tail rebuilds exactly, genus <= {g_all}")
    half_genus = _Family("half-genus", f"genus of the half equals the even-gap count, genus <= {g_all}")
    gap_free = _Family("even-gap-free-shape", f"no even gaps means exactly the odd numbers below 2g are missing, genus <= {g_all}")

    def visit(s: Semigroup) -> None:
        g = s.genus
        witness = lambda: canonical_form(s)
        profile = s.even_gap_profile()
        gamma = profile.gamma

        if g <= g_closure:
            top = 2 * s.frobenius + 1 if s.frobenius > 0 else 2
            members = [x for x in s.members(top)]
            closure.check(
                all((a + b) in s for i, a in enumerate(members) for b in members[i:]),
                witness,
            )
        tail.check(
            all(x in s for x in range(2 * g, 2 * g + 5))
            and (g == 0 or s.frobenius <= 2 * g - 1),
            witness,
        )
        odd_members = [x for x in range(1, 2 * g + 1) if x % 2 and x in s]
        parity.check(
            len(profile.even_gaps) + sum(1 for q in s.gaps if q % 2) == g
            and len(odd_members) == gamma
            and list(profile.odd_nongaps) == sorted(odd_members, reverse=True),
            witness,
        )
        odd_upper.check(
            all(
                o <= 2 * g - 2 * i + 1
                for i, o in enumerate(profile.odd_nongaps, start=1)
            ),
            witness,
        )
        if gamma >= 1:
            even_upper.check(
                max(profile.even_gaps) <= min(4 * gamma - 2, 4 * g - 4 * gamma),
                witness,
            )
            odd_lower.check(
                profile.smallest_odd_nongap >= max(abs(2 * g - 4 * gamma) + 1, 3),
                witness,
            )
        band.check(2 * g >= 3 * gamma, witness)
        roundtrip.check(from_gap_set(s.gaps) == s, witness)
        decomp.check(reassemble(decompose(s)) == s, witness)
        half_genus.check(one_half(s).genus == gamma, witness)
        gap_free.check(
            (gamma == 0) == (s.gaps == tuple(range(1, 2 * g, 2))), witness
        )

    walk(g_all, visit)
    return [
        fam.result()
        for fam in (
            closure, tail, parity, odd_upper, even_upper, band, odd_lower,
            roundtrip, decomp, half_genus, gap_free,
        )
    ]


def _census_families(max_genus: int, max_gamma: int, workers, budget) -> list[CheckResult]:
    rows = census(max_genus, workers=workers, budget=budget)
    out = []

    fam = _Family("reference-census", f"stratified counts match stored goldens, genus <= {max_genus}")
    for row in rows:
        want = reference.STRATA.get(row.genus)
        if want is None:
            continue
        fam.check(
            row.counts == want,
            f"genus {row.genus}: computed {row.counts} != reference {want}",
        )
    out.append(fam.result())

    fam = _Family("catalan-bound", "n_g never exceeds the Catalan number")
    for row in rows:
        g = row.genus
        fam.check(
            row.total <= math.comb(2 * g, g) // (g + 1),
            f"genus {g}: {row.total}",
        )
    out.append(fam.result())

    fam = _Family("monotonicity", f"totals grow and open columns grow, genus < {max_genus}")
    for g in range(1, max_genus):
        cur, nxt = rows[g], rows[g + 1]
        window_ok = all(
            nxt.counts[k] > cur.counts[k] for k in range(g // 3 + 1, 2 * g // 3 + 1)
        )
        fam.check(
            nxt.total > cur.total and window_ok,
            f"between genus {g} and {g + 1}",
        )
    out.append(fam.result())

    def cell(g: int, k: int) -> int:
        return rows[g].counts[k] if k < len(rows[g].counts) else 0

    fam = _Family("column-stabilization", "columns freeze at genus 3k and are smaller before")
    for k in range(1, min(max_gamma, max_genus // 3) + 1):
        stable = cell(3 * k, k)
        for g in range(3 * k, max_genus + 1):
            fam.check(cell(g, k) == stable, f"column {k} at genus {g}")
        for g in range((3 * k + 1) // 2, 3 * k):
            fam.check(cell(g, k) < stable, f"column {k} at genus {g}")
    out.append(fam.result())

    fam = _Family("family-counts", "small strata match their classifications")
    expected = {(2, 1): 1, (3, 2): 1, (4, 2): 4, (5, 2): 6}
    for (g, k), want in expected.items():
        if g <= max_genus:
            fam.check(cell(g, k) == want, f"stratum ({k}, {g})")
    for g in range(3, max_genus + 1):
        fam.check(cell(g, 1) == 2, f"stratum (1, {g})")
    for g in range(6, max_genus + 1):
        fam.check(cell(g, 2) == 7, f"stratum (2, {g})")
    for k in range(1, 2 * max_genus // 3 + 1):
        g = (3 * k + 1) // 2
        if g > max_genus:
            break
        # even k and k = 1 admit a single semigroup; odd k >= 3 admit (k+3)/2
        want = 1 if k % 2 == 0 or k == 1 else (k + 3) // 2
        fam.check(cell(g, k) == want, f"minimal-genus stratum ({k}, {g})")
    out.append(fam.result())

    fam = _Family("tree-vs-bruteforce", f"tree census equals subset-filter census, genus <= {min(max_genus, 9)}")
    for g in range(0, min(max_genus, 9) + 1):
        tree_sets = {s.gaps for s in iter_genus(g)}
        fam.check(
            tree_sets == brute_force_gap_census(g),
            f"genus {g}",
        )
    out.append(fam.result())
    return out


def _strata_families(max_genus: int, max_gamma: int) -> list[CheckResult]:
    out = []

    fam = _Family("translation-roundtrip", "strata translate bijectively onto genus 3k")
    for k in range(1, max_gamma + 1):
        for g in range(3 * k, min(3 * k + 4, max_genus) + 1):
            check = stratum_translation_check(k, g)
            fam.check(
                check.bijective and check.verified,
                f"stratum ({k}, {g}): {check.source_count} vs {check.target_count}",
            )
    out.append(fam.result())

    fam = _Family("translation-witness", "below genus 3k the translation provably misses <4, 2k+1>")
    for k in range(1, min(max_gamma, max_genus // 3) + 1):
        for g in range((3 * k + 1) // 2, 3 * k):
            check = stratum_translation_check(k, g)
            fam.check(
                (not check.bijective) and check.verified,
                f"stratum ({k}, {g}): {check.source_count} vs {check.target_count}",
            )
    out.append(fam.result())

    fam = _Family("doubling-section", "doubling with a tail is a section of halving at genus 3k")
    for k in range(0, min(max_gamma, 8) + 1):
        for t in iter_genus(k):
            s = double_with_tail(t, 3 * k)
            fam.check(
                s.genus == 3 * k and s.gamma == k and one_half(s) == t,
                lambda s=s: canonical_form(s),
            )
    out.append(fam.result())

    fam = _Family("symmetric-doubles", "symmetric construction lands in the right stratum")
    for k in range(0, min(max_gamma, 6) + 1):
        for g in (3 * k, 3 * k + 1, 3 * k + 5):
            seen = set()
            for t in iter_genus(k):
                s = symmetric_double(t, g)
                seen.add(s)
                fam.check(
                    s.is_symmetric()
                    and s.genus == g
                    and s.gamma == k
                    and one_half(s) == t,
                    lambda s=s: canonical_form(s),
                )
            fam.check(
                len(seen) == reference.TOTALS[k],
                f"{len(seen)} distinct symmetric semigroups for k={k}, genus {g}",
            )
    out.append(fam.result())
    return out


def _closed_set_families(max_gamma: int) -> list[CheckResult]:
    out = []

    fam = _Family("closed-set-max-bound", "size k+1 closed sets stay within [0, 2k]")
    for k in range(1, min(max_gamma, 10) + 1):
        for t in iter_genus(k):
            for b in closed_sets(t, k + 1, max_element=3 * k):
                fam.check(b.max <= 2 * k, f"{b.elements} over {t}")
    out.append(fam.result())

    fam = _Family("fiber-buckets", "fiber bucket sizes are 1 at the ends and binomially bounded")
    for k in range(0, min(max_gamma, 8) + 1):
        for t in iter_genus(k):
            report = fiber_report(t)
            ok = report.per_i[0] == 1 and report.per_i[k] == 1 and all(
                1 <= report.per_i[i] <= math.comb(k, i) for i in range(k + 1)
            )
            fam.check(ok, f"{report.per_i} over {t}")
    out.append(fam.result())

    fam = _Family("fiber-enumerator-equivalence",
                  "constraint walk = bijection image = filtered odd subsets")
    for k in range(1, min(max_gamma, 6) + 1):
        for t in iter_genus(k):
            direct = {s for s in iter_fiber(t)}
            via_bijection = {
                fiber_from_closed_set(b) for b in closed_sets(t, k + 1)
            }
            brute = set()
            width = 6 * k
            evens = {2 * u for u in t.members((width + 1) // 2)}
            for odds in combinations(range(2 * k + 1, 6 * k, 2), k):
                members = evens | set(odds)
                try:
                    s = from_gap_set(
                        x for x in range(1, width) if x not in members
                    )
                except NotASemigroup:
                    continue
                if s.genus == 3 * k and one_half(s) == t:
                    brute.add(s)
            fam.check(
                direct == via_bijection == brute,
                f"{len(direct)}/{len(via_bijection)}/{len(brute)} over {t}",
            )
    out.append(fam.result())

    fam = _Family("closure-propagation",
                  "an odd gap forces the smaller odd gaps its base reaches")
    for k in range(1, min(max_gamma, 6) + 1):
        for t in iter_genus(k):
            for s in iter_fiber(t):
                if s.genus == 0:
                    continue
                o = s.even_gap_profile().smallest_odd_nongap
                gap_set = set(s.gaps)
                ok = True
                for q in t.gaps:
                    for qb in t.gaps:
                        if qb <= q or (qb - q) not in t:
                            continue
                        if o + 2 * qb < 6 * k and (o + 2 * qb) in gap_set:
                            ok = ok and (o + 2 * q) in gap_set
                fam.check(ok, lambda s=s: canonical_form(s))
    out.append(fam.result())

    caps = min(max_gamma, 9)
    fam = _Family("triple-agreement", f"three routes to the stable counts agree, k <= {caps}")
    for k in range(0, caps + 1):
        a = stable_count_by_closed_sets(k)
        b = stable_count_by_census(k)
        c = stable_count_by_fibers(k)
        want = reference.STABLE_COUNTS[k] if k < len(reference.STABLE_COUNTS) else a
        fam.check(a == b == c == want, f"k={k}: {a}/{b}/{c}/{want}")
    out.append(fam.result())

    fam = _Family("chain-fiber-forms", "punctured-ordinary fibers match their closed forms")
    for k in range(1, min(max_gamma, 10) + 1):
        total = 0
        for j in range(k):
            report = fiber_report(punctured_ordinary(k, j))
            want = tuple(
                punctured_ordinary_fiber_bucket(k, j, i) for i in range(k + 1)
            )
            fam.check(
                report.per_i == want
                and report.total == punctured_ordinary_fiber_count(k, j),
                f"k={k}, puncture {j}: {report.per_i} != {want}",
            )
            total += report.total
        fam.check(total == chain_fiber_total(k), f"k={k} family total {total}")
    out.append(fam.result())

    fam = _Family("bounds-ordering", "refined bounds tighten the simple ones and bracket the value")
    for k in range(0, max_gamma + 1):
        row = bounds(k)
        value = stable_count_by_closed_sets(k) if k <= 14 else None
        ok = (
            row.refined_lower >= row.simple_lower
            and row.refined_upper <= row.simple_upper
            and (value is None or row.refined_lower <= value <= row.refined_upper)
        )
        fam.check(ok, f"k={k}: {row}")
    out.append(fam.result())
    return out


def run_all(
    max_genus: int = 14,
    max_gamma: int = 6,
    *,
    workers: int | None = 1,
    budget: int | None = None,
) -> list[CheckResult]:
    """Run every family; results in a fixed order."""
    results = _per_semigroup_families(max_genus)
    results += _census_families(max_genus, max_gamma, workers, budget)
    results += _strata_families(max_genus, max_gamma)
    results += _closed_set_families(max_gamma)
    return results
