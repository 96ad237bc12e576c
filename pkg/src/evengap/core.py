"""Numerical semigroups as immutable bitmask values.

A numerical semigroup is an additively closed subset of the nonnegative
integers that contains 0 and has finite complement (the gap set).  Membership
is stored as a bitmask over ``[0, F + 2]`` where ``F`` is the Frobenius
number, the largest gap; every integer above ``F`` is a member, so that
window answers any membership query.  The whole set of naturals is encoded
with ``F = -1`` and an empty gap set.

Values are frozen after construction and safe to share across threads and
processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GcdNotOne, NotASemigroup

__all__ = [
    "EvenGapProfile",
    "Semigroup",
    "from_gap_set",
    "from_generators",
    "naturals",
]


@dataclass(frozen=True)
class EvenGapProfile:
    """Even-gap data of a semigroup of genus g.

    ``odd_nongaps`` lists the odd members of ``S ∩ [1, 2g - 1]`` in
    descending order; there are exactly ``gamma`` of them.  The smallest one
    is absent (``None``) when ``gamma == 0``.
    """

    gamma: int
    even_gaps: tuple[int, ...]
    odd_nongaps: tuple[int, ...]
    smallest_odd_nongap: int | None


@dataclass(frozen=True)
class Semigroup:
    """An immutable numerical semigroup.

    ``membership`` has bit ``i`` set iff ``i`` is a member, for ``i`` in
    ``[0, frobenius + 2]``; higher integers are members without a lookup.
    """

    membership: int
    frobenius: int
    multiplicity: int
    genus: int
    gaps: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return bool((self.membership >> x) & 1)

    def members(self, stop: int) -> Iterator[int]:
        """Members in ``[0, stop)``, ascending."""
        return (x for x in range(stop) if x in self)

    @property
    def gamma(self) -> int:
        """Number of even gaps."""
        return sum(1 for q in self.gaps if q % 2 == 0)

    def even_gap_profile(self) -> EvenGapProfile:
        evens = tuple(q for q in self.gaps if q % 2 == 0)
        odd_nongaps = tuple(
            x for x in range(2 * self.genus - 1, 0, -2) if x in self
        )
        smallest = odd_nongaps[-1] if odd_nongaps else None
        return EvenGapProfile(len(evens), evens, odd_nongaps, smallest)

    def minimal_generators(self) -> tuple[int, ...]:
        """The unique minimal generating set, ascending.

        A member x > 0 is a minimal generator iff it is not the sum of two
        positive members; all of them lie in [m, F + m].
        """
        if self.genus == 0:
            return (1,)
        m, frob = self.multiplicity, self.frobenius
        out = []
        for x in range(m, frob + m + 1):
            if x not in self:
                continue
            if any(a in self and (x - a) in self for a in range(m, x - m + 1)):
                continue
            out.append(x)
        return tuple(out)

    def is_symmetric(self) -> bool:
        """True iff every x in [0, F] has exactly one of x, F - x a member."""
        frob = self.frobenius
        return all((x in self) != ((frob - x) in self) for x in range(frob + 1))

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.minimal_generators()) + ">"


def _from_gap_tuple(gaps: tuple[int, ...]) -> Semigroup:
    """Build a Semigroup from a validated, sorted gap tuple."""
    if not gaps:
        return _NATURALS
    frob = gaps[-1]
    width = frob + 3
    mask = (1 << width) - 1
    for q in gaps:
        mask ^= 1 << q
    mult = next(x for x in range(1, frob + 2) if (mask >> x) & 1)
    return Semigroup(mask, frob, mult, len(gaps), gaps)


def _from_window(mask: int, width: int) -> Semigroup:
    """Build from a bitmask valid on [0, width); integers >= width are members."""
    gaps = tuple(q for q in range(1, width) if not (mask >> q) & 1)
    return _from_gap_tuple(gaps)


def naturals() -> Semigroup:
    """The semigroup of all nonnegative integers."""
    return _NATURALS


_NATURALS = Semigroup(0b11, -1, 1, 0, ())


def from_generators(gens: Iterable[int]) -> Semigroup:
    """The semigroup generated by ``gens`` under addition.

    Raises GcdNotOne unless gcd(gens) == 1; otherwise the complement would
    be infinite.  Membership is filled in by a shift-or dynamic program over
    a window that doubles until the tail of the window is all members.
    """
    seq = sorted({int(a) for a in gens})
    if not seq:
        raise ValueError("at least one generator required")
    if seq[0] < 1:
        raise ValueError(f"generators must be positive, got {seq[0]}")
    if math.gcd(*seq) != 1:
        raise GcdNotOne(f"gcd{tuple(seq)} != 1")
    if seq[0] == 1:
        return _NATURALS
    amin, amax = seq[0], seq[-1]
    width = amin * amax + 2
    while True:
        window = (1 << width) - 1
        mask = 1
        grown = True
        while grown:
            prev = mask
            for a in seq:
                mask |= (mask << a) & window
            grown = mask != prev
        # amin consecutive members at the top imply everything beyond is one
        if mask >> (width - amin) == (1 << amin) - 1:
            break
        width *= 2
    return _from_window(mask, width)


def from_gap_set(gaps: Iterable[int]) -> Semigroup:
    """The semigroup whose gap set is exactly ``gaps``.

    Raises NotASemigroup, with a witness pair (a, b) of members summing to a
    gap, when the complement is not additively closed.
    """
    gs = sorted({int(q) for q in gaps})
    if not gs:
        return _NATURALS
    if gs[0] < 1:
        raise ValueError(f"gaps must be positive, got {gs[0]}")
    gap_set = set(gs)

    def member(x: int) -> bool:
        return x not in gap_set

    for q in gs:
        for a in range(1, q // 2 + 1):
            if member(a) and member(q - a):
                raise NotASemigroup(
                    f"members {a} + {q - a} sum to the stated gap {q}",
                    witness=(a, q - a),
                )
    return _from_gap_tuple(tuple(gs))
