import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from evengap.core import from_gap_set, from_generators, naturals
from evengap.errors import GenusTooSmall, NotASemigroup
from evengap.strata import (
    canonical_form,
    decompose,
    double_with_tail,
    one_half,
    reassemble,
    symmetric_double,
    stratum_translation_check,
    translate,
)
from evengap.tree import iter_genus, iter_stratum


def half_oracle(s):
    """Halving straight off the definition, element by element."""
    width = max(1, s.genus) + 5
    return from_gap_set([x for x in range(1, width) if (2 * x) not in s])


def test_one_half_examples():
    assert one_half(from_generators([2, 11])) == naturals()
    assert one_half(from_generators([3, 5, 7])) == from_generators([3, 4, 5])
    assert one_half(naturals()) == naturals()


def test_one_half_matches_oracle_and_genus():
    for g in range(9):
        for s in iter_genus(g):
            half = one_half(s)
            assert half == half_oracle(s)
            assert half.genus == s.gamma


def test_double_with_tail_examples():
    assert double_with_tail(naturals(), 5) == from_generators([2, 11])
    t = from_generators([2, 3])
    s = double_with_tail(t, 4)
    assert s == from_generators([4, 6, 7, 9])
    # literal construction: doubled t plus every integer above 2g - 2*gamma
    expected = {2 * u for u in t.members(4)} | set(range(7, 12))
    assert {x for x in s.members(12)} == expected
    s = double_with_tail(from_generators([3, 4, 5]), 5)
    assert (s.genus, s.gamma) == (5, 2)
    assert one_half(s) == from_generators([3, 4, 5])


def test_double_with_tail_is_section_of_halving():
    for k in range(6):
        for t in iter_genus(k):
            s = double_with_tail(t, 3 * k)
            assert (s.genus, s.gamma) == (3 * k, k)
            assert one_half(s) == t


def test_double_with_tail_rejects_small_genus():
    with pytest.raises(GenusTooSmall):
        double_with_tail(from_generators([3, 4, 5]), 2)  # 2g < 3*gamma
    with pytest.raises(GenusTooSmall):
        double_with_tail(from_generators([2, 5]), 4)  # tail misses the half


def test_translate_identity_and_examples():
    for g in range(7):
        for s in iter_genus(g):
            assert translate(s, 0) == s
    image = translate(from_generators([4, 6, 15]), 12)
    assert image == from_generators([3, 4])
    assert (image.genus, image.gamma) == (3, 1)


def test_translate_rejects_bad_shifts():
    with pytest.raises(ValueError):
        translate(from_generators([2, 3]), 1)
    with pytest.raises(NotASemigroup):
        translate(from_generators([3, 4]), 4)  # 3 would map to -1
    with pytest.raises(NotASemigroup):
        translate(from_generators([3, 5, 7]), 2)  # image not closed


def test_translate_roundtrip_on_strata():
    for k in range(1, 4):
        for g in range(3 * k, 3 * k + 3):
            t = 2 * g - 6 * k
            for s in iter_stratum(k, g):
                image = translate(s, t)
                assert (image.genus, image.gamma) == (3 * k, k)
                assert translate(image, -t) == s


def test_stratum_translation_check_results():
    check = stratum_translation_check(1, 3)
    assert check.bijective and check.verified and check.source_count == 2
    check = stratum_translation_check(2, 6)
    assert check.bijective and check.verified and check.target_count == 7
    check = stratum_translation_check(4, 7)
    assert not check.bijective and check.verified
    assert (check.source_count, check.target_count) == (10, 68)
    assert check.witness == from_generators([4, 9])
    with pytest.raises(GenusTooSmall):
        stratum_translation_check(4, 5)


def test_symmetric_double_examples():
    assert symmetric_double(naturals(), 3) == from_generators([2, 7])
    t = from_generators([2, 3])
    s = symmetric_double(t, 4)
    assert s.is_symmetric() and (s.genus, s.gamma) == (4, 1)
    assert one_half(s) == t
    with pytest.raises(GenusTooSmall):
        symmetric_double(from_generators([3, 4, 5]), 5)


def test_symmetric_double_distinct_per_base():
    for k in range(4):
        for g in (3 * k, 3 * k + 1, 3 * k + 5):
            images = {symmetric_double(t, g) for t in iter_genus(k)}
            assert len(images) == sum(1 for _ in iter_genus(k))
            assert all(s.is_symmetric() and s.genus == g for s in images)


def test_decompose_reassemble():
    s = from_generators([3, 5, 7])
    d = decompose(s)
    assert d.half == from_generators([3, 4, 5])
    assert d.odd_part == (3, 5)
    assert reassemble(d) == s
    for g in range(9):
        for s in iter_genus(g):
            assert reassemble(decompose(s)) == s


def test_odd_part_window():
    for g in range(10):
        for s in iter_genus(g):
            d = decompose(s)
            k = s.gamma
            assert len(d.odd_part) == k
            if k:
                floor = max(abs(2 * g - 4 * k) + 1, 3)
                assert d.odd_part[0] >= floor
                assert d.odd_part[-1] <= 2 * g - 1


def test_canonical_form_rendering():
    assert canonical_form(from_generators([3, 5, 7])) == "2<3,4,5> + {3,5} + [6..)"
    assert canonical_form(naturals()) == "2<1> + {} + [0..)"


gap_subsets = st.sets(st.integers(1, 14), max_size=7)


@settings(max_examples=80, deadline=None)
@given(gap_subsets)
def test_random_decomposition_roundtrip(gaps):
    try:
        s = from_gap_set(gaps)
    except NotASemigroup:
        return
    assert reassemble(decompose(s)) == s
    assert one_half(s).genus == s.gamma
