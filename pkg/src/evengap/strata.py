"""Structure maps between even-gap strata.

The stratum of genus-g semigroups with k even gaps is tied to the family of
genus-k semigroups by halving: S/2 = {x : 2x in S} always has genus equal to
the even-gap count of S.  This module implements that map, its canonical
sections (doubling with an integer tail, and a symmetric variant), the
parity-preserving translation that slides a stratum to its minimal genus
3k, and the unique decomposition of a semigroup into doubled half, odd part
and tail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Semigroup, _from_window, from_gap_set, from_generators
from .errors import GenusTooSmall, NotASemigroup
from .tree import count_stratum, iter_stratum

__all__ = [
    "HalfDecomposition",
    "TranslationCheck",
    "canonical_form",
    "decompose",
    "double_with_tail",
    "one_half",
    "reassemble",
    "stratum_translation_check",
    "symmetric_double",
    "translate",
]


def one_half(s: Semigroup) -> Semigroup:
    """{x : 2x in S}; a numerical semigroup whose genus is the even-gap
    count of S."""
    width = max(1, s.genus)
    mask = 0
    for x in range(width):
        if 2 * x in s:
            mask |= 1 << x
    # 2x >= 2g is always a member, so the window [0, g) is complete
    return _from_window(mask, width)


def double_with_tail(t: Semigroup, genus: int) -> Semigroup:
    """The canonical genus-``genus`` preimage of ``t`` under halving:
    doubled ``t`` plus every integer above 2*(genus - gamma).

    Exists iff genus >= gamma + F(t) (and the stratum itself requires
    2*genus >= 3*gamma); GenusTooSmall otherwise.
    """
    gamma = t.genus
    if 2 * genus < 3 * gamma:
        raise GenusTooSmall(
            f"no genus-{genus} semigroup has {gamma} even gaps (needs 2g >= 3*{gamma})"
        )
    if genus < gamma + t.frobenius:
        raise GenusTooSmall(
            f"tail construction over {t} needs genus >= {gamma + t.frobenius}"
        )
    tail_start = 2 * genus - 2 * gamma + 1
    mask = 0
    for u in t.members((tail_start + 1) // 2):
        mask |= 1 << (2 * u)
    return _from_window(mask, tail_start)


def translate(s: Semigroup, t: int) -> Semigroup:
    """Shift every odd member down by ``t`` (even members stay put).

    ``t`` must be even.  The image is validated: a negative image element or
    a closure failure raises NotASemigroup rather than being patched up.
    """
    if t % 2 != 0:
        raise ValueError(f"translation amount must be even, got {t}")
    for o in range(1, max(t, 0), 2):
        if o in s:
            raise NotASemigroup(f"odd member {o} would map to {o - t}")
    g = s.genus
    width = max(2 * g, 2 * g - t) + 2

    def in_image(y: int) -> bool:
        return (y in s) if y % 2 == 0 else ((y + t) in s)

    gaps = [y for y in range(1, width) if not in_image(y)]
    return from_gap_set(gaps)


@dataclass(frozen=True)
class TranslationCheck:
    """Outcome of checking the stratum translation toward genus 3*gamma.

    ``verified`` reports whether the regime's claim held on every element:
    bijectivity for genus >= 3*gamma, and otherwise injectivity plus the
    existence of the unreached ``witness`` <4, 2*gamma + 1>.
    """

    gamma: int
    genus: int
    translation: int
    bijective: bool
    verified: bool
    source_count: int
    target_count: int
    witness: Semigroup | None


def stratum_translation_check(gamma: int, genus: int) -> TranslationCheck:
    """Check how translating by 2*genus - 6*gamma maps the (gamma, genus)
    stratum into the (gamma, 3*gamma) stratum.

    Every image must land in the target stratum and roundtrip through the
    inverse translation.  For genus >= 3*gamma the map must additionally be
    onto (equal counts); for smaller genus it must miss the witness
    <4, 2*gamma + 1> and the source stratum must be strictly smaller.
    """
    if gamma < 1:
        raise ValueError("gamma must be >= 1")
    if 2 * genus < 3 * gamma:
        raise GenusTooSmall(f"stratum ({gamma}, {genus}) is empty")
    t = 2 * genus - 6 * gamma
    target_count = count_stratum(gamma, 3 * gamma)
    source_count = 0
    roundtrips = True
    images = []
    for s in iter_stratum(gamma, genus):
        source_count += 1
        image = translate(s, t)
        images.append(image)
        if not (
            image.genus == 3 * gamma
            and image.gamma == gamma
            and translate(image, -t) == s
        ):
            roundtrips = False
    bijective = genus >= 3 * gamma
    if bijective:
        verified = roundtrips and source_count == target_count
        witness = None
    else:
        witness = from_generators([4, 2 * gamma + 1])
        missed = all(image != witness for image in images)
        verified = roundtrips and missed and source_count < target_count
    return TranslationCheck(
        gamma, genus, t, bijective, verified, source_count, target_count, witness
    )


def symmetric_double(t: Semigroup, genus: int) -> Semigroup:
    """The symmetric genus-``genus`` semigroup doubling to ``t``: doubled
    ``t`` plus the odd numbers 2*genus - 1 - 2q for q outside ``t``.

    Requires genus >= 3 * gamma; the output pairs x with F - x across the
    whole Frobenius window.
    """
    gamma = t.genus
    if genus < 3 * gamma:
        raise GenusTooSmall(f"symmetric doubling needs genus >= {3 * gamma}")
    width = max(1, 2 * genus)
    members = set()
    for u in t.members((width + 1) // 2):
        members.add(2 * u)
    for q in t.gaps:
        o = 2 * genus - 1 - 2 * q
        if 0 <= o < width:
            members.add(o)
    gaps = [x for x in range(1, width) if x not in members]
    return from_gap_set(gaps)


@dataclass(frozen=True)
class HalfDecomposition:
    """Unique splitting of S into doubled half, odd part, and tail.

    ``odd_part`` holds the odd members of S below 2*genus, ascending; the
    tail is every integer from 2*genus on.
    """

    half: Semigroup
    odd_part: tuple[int, ...]
    genus: int


def decompose(s: Semigroup) -> HalfDecomposition:
    odd_part = tuple(x for x in range(1, 2 * s.genus, 2) if x in s)
    return HalfDecomposition(one_half(s), odd_part, s.genus)


def reassemble(d: HalfDecomposition) -> Semigroup:
    """Rebuild the semigroup from its decomposition, validating closure."""
    width = max(1, 2 * d.genus)
    members = {2 * u for u in d.half.members((width + 1) // 2)}
    members.update(d.odd_part)
    gaps = [x for x in range(1, width) if x not in members]
    return from_gap_set(gaps)


def canonical_form(s: Semigroup) -> str:
    """Render as doubled-half + odd part + tail, e.g. ``2<2,3> + {5} + [8..)``."""
    d = decompose(s)
    odds = "{" + ",".join(str(o) for o in d.odd_part) + "}"
    return f"2{d.half} + {odds} + [{2 * d.genus}..)"
