from itertools import product

import pytest
from hypothesis import given, strategies as st

from luckypark.bijections import (OrderedSetPartition, composition_to_ufr_inc,
                                  fr_to_osp, fr_to_upf, osp_to_fr,
                                  ufr_inc_to_composition, upf_to_fr)
from luckypark.counting import binary_compositions, fubini
from luckypark.families import (Family, fr_lucky_set, is_fubini_ranking,
                                is_member, is_weakly_increasing)
from luckypark.parking import ParkingRule, park


def space(n):
    return product(range(1, n + 1), repeat=n)


def members(family, n):
    return [t for t in space(n) if is_member(t, family)]


# -- ordered set partitions ------------------------------------------------

def test_fr_to_osp_example():
    osp = fr_to_osp((8, 1, 2, 5, 6, 2, 2, 6))
    assert osp == OrderedSetPartition(
        8, ((2,), (3, 6, 7), (4,), (5, 8), (1,)))
    assert osp_to_fr(osp) == (8, 1, 2, 5, 6, 2, 2, 6)


def test_block_sizes_recover_ranks():
    osp = fr_to_osp((2, 2, 1))
    assert osp.blocks == ((3,), (1, 2))


@pytest.mark.parametrize("n", range(6))
def test_osp_round_trip(n):
    for prefs in members(Family.FR, n):
        osp = fr_to_osp(prefs)
        assert osp_to_fr(osp) == prefs


@pytest.mark.parametrize("n", range(1, 6))
def test_osp_image_is_all_ordered_set_partitions(n):
    images = {fr_to_osp(t) for t in members(Family.FR, n)}
    assert len(images) == len(members(Family.FR, n)) == fubini(n)
    for osp in images:
        flat = sorted(c for block in osp.blocks for c in block)
        assert flat == list(range(1, n + 1))


def test_osp_validation():
    with pytest.raises(ValueError):
        OrderedSetPartition(3, ((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        OrderedSetPartition(3, ((1,), (3,)))
    with pytest.raises(ValueError):
        OrderedSetPartition(2, ((2, 1),))
    with pytest.raises(ValueError):
        osp_to_fr(OrderedSetPartition(0, ((),)))


def test_fr_to_osp_rejects_non_members():
    with pytest.raises(ValueError):
        fr_to_osp((1, 1, 2))


# -- the tie-breaking rewrite and its inverse ------------------------------

def test_rewrite_example():
    prefs = (8, 1, 2, 5, 6, 2, 2, 6)
    image = fr_to_upf(prefs)
    assert image == (8, 1, 2, 5, 6, 2, 3, 6)
    assert fr_lucky_set(prefs) == park(image, ParkingRule.UNIT).lucky
    assert upf_to_fr(image) == prefs


def test_rewrite_spreads_largest_tie_block():
    assert fr_to_upf((1, 1, 1, 1)) == (1, 1, 2, 3)
    assert upf_to_fr((1, 1, 2, 3)) == (1, 1, 1, 1)


@pytest.mark.parametrize("n", range(6))
def test_rewrite_is_a_bijection_onto_unit_parking_functions(n):
    frs = members(Family.FR, n)
    images = [fr_to_upf(t) for t in frs]
    assert sorted(images) == members(Family.UPF, n)
    for prefs, image in zip(frs, images):
        assert upf_to_fr(image) == prefs


@pytest.mark.parametrize("n", range(6))
def test_rewrite_preserves_lucky_cars(n):
    for prefs in members(Family.FR, n):
        image = fr_to_upf(prefs)
        assert park(image, ParkingRule.UNIT).lucky == fr_lucky_set(prefs)


@pytest.mark.parametrize("n", range(6))
def test_rewrite_restricts_to_weakly_increasing(n):
    inc_images = sorted(
        fr_to_upf(t) for t in members(Family.FR_INC, n))
    assert inc_images == members(Family.UPF_INC, n)


def test_rewrite_fixes_unit_members():
    # tuples already obeying the unit rule rewrite to themselves
    for n in range(6):
        for prefs in members(Family.UFR, n):
            assert fr_to_upf(prefs) == prefs


def test_inverse_rejects_non_members():
    with pytest.raises(ValueError):
        upf_to_fr((2, 1, 1))


UPF_POOL = [t for n in range(6) for t in members(Family.UPF, n)]


@given(st.sampled_from(UPF_POOL))
def test_inverse_then_rewrite_is_identity(prefs):
    assert fr_to_upf(upf_to_fr(prefs)) == prefs


# -- weakly increasing unit members and binary compositions ----------------

def test_composition_example():
    prefs = (1, 1, 3, 4, 4, 6, 6, 8)
    assert ufr_inc_to_composition(prefs) == (2, 1, 2, 2, 1)
    assert composition_to_ufr_inc((2, 1, 2, 2, 1)) == prefs


@pytest.mark.parametrize("n", range(8))
def test_composition_round_trips(n):
    seen = set()
    for comp in binary_compositions(n):
        prefs = composition_to_ufr_inc(comp)
        assert is_member(prefs, Family.UFR_INC)
        assert ufr_inc_to_composition(prefs) == comp
        seen.add(prefs)
    if n <= 5:
        assert sorted(seen) == members(Family.UFR_INC, n)


@pytest.mark.parametrize("bad", [
    (1, 1, 1, 4),   # a rank shared by three cars
    (1, 3, 1, 3),   # not weakly increasing
    (1, 1, 2),      # not a Fubini ranking
])
def test_composition_rejects_non_members(bad):
    with pytest.raises(ValueError):
        ufr_inc_to_composition(bad)


@pytest.mark.parametrize("bad", [(3, 1), (1, 0, 1), (-1,)])
def test_composition_rejects_bad_parts(bad):
    with pytest.raises(ValueError):
        composition_to_ufr_inc(bad)


def test_empty_street_round_trips():
    assert fr_to_upf(()) == ()
    assert upf_to_fr(()) == ()
    assert ufr_inc_to_composition(()) == ()
    assert composition_to_ufr_inc(()) == ()
