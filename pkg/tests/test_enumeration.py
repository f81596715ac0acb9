"""Degenerate-tuple discovery: admissibility walk, slot families, trees,
and the closed-form leaf catalogue."""

import itertools
from fractions import Fraction

import pytest

from fareygaps import (DEGENERATE, LIVE, REJECTED, CongruenceSpec,
                       admissibility_check, area, build_tree, continuant,
                       degenerate_set, degenerate_table, is_empty, leaf_area,
                       leaf_tuple, pentagon_witness, region, slot_families)
from fareygaps import reference
from fareygaps.enumeration import c_leaf_entries

F = Fraction
SPEC3 = CongruenceSpec(3, 0, 1)
SPEC2 = CongruenceSpec(2, 0, 1)


def test_congruence_spec_validation():
    assert SPEC3.delta == 3
    assert CongruenceSpec(6, 3, 1).delta == 3
    with pytest.raises(ValueError):
        CongruenceSpec(1, 0, 0)
    with pytest.raises(ValueError):
        CongruenceSpec(3, 0, 3)
    with pytest.raises(ValueError):
        CongruenceSpec(4, 0, 2)     # gcd(D, c0, c1) = 2
    with pytest.raises(ValueError):
        CongruenceSpec(3, 1, 1)     # c1 = c0


def test_hits():
    # with c0 = 0 the walk returns exactly when the continuant is divisible
    assert SPEC3.hits(3, 1) and SPEC3.hits(0, 5) and not SPEC3.hits(4, 3)
    c = CongruenceSpec(5, 2, 3)
    assert c.hits(4, 5)             # 3*4 - 2*5 - 2 = 0
    assert not c.hits(4, 4)


@pytest.mark.parametrize("t, status", [
    ((3,), DEGENERATE),
    ((2, 2), DEGENERATE),
    ((2, 2, 1), REJECTED),
    ((2, 4), LIVE),
    ((1, 2, 2, 3, 2), DEGENERATE),
    ((2, 1, 7, 1, 2), DEGENERATE),
    ((1, 5, 1), DEGENERATE),
    ((1, 5, 1, 1), REJECTED),       # anything past a return is rejected
])
def test_admissibility(t, status):
    assert admissibility_check(t, SPEC3) == status


def test_admissibility_needs_indices():
    with pytest.raises(ValueError):
        admissibility_check((), SPEC3)


def _family_fields(fams):
    return sorted((f.prefix, f.suffix, f.residue, f.modulus, f.k_min, f.offset)
                  for f in fams)


def test_catalogue_d3():
    table = degenerate_table(7, SPEC3)
    for r in range(1, 8):
        ds = table[r]
        want_finite = {t for t, _ in reference.DEGENERATE_FINITE_D3[r]}
        assert set(ds.finite) == want_finite, r
        for t, kont in reference.DEGENERATE_FINITE_D3[r]:
            assert continuant(t) == kont
        want_fams = _family_fields(reference.DEGENERATE_FAMILIES_D3.get(r, []))
        assert _family_fields(ds.families) == want_fams, r


def test_catalogue_d2():
    table = degenerate_table(6, SPEC2)
    for r in range(1, 7):
        ds = table[r]
        assert set(ds.finite) == {t for t, _ in reference.finite_rows_d2(r)}, r
        want_fams = _family_fields(reference.DEGENERATE_FAMILIES_D2.get(r, []))
        assert _family_fields(ds.families) == want_fams, r


def test_family_membership_and_areas():
    ds = degenerate_set(5, SPEC3)
    (fam,) = ds.families
    assert fam.member(7) == (2, 1, 7, 1, 2)
    assert fam.template() == "2,1,k,1,2"
    assert fam.progression() == "1 mod 3"
    assert fam.area_of(7) == F(1, 616)            # below the stable threshold
    assert fam.area_of(10) == F(4, 10 * 11 * 12)
    assert fam.area_of(7) == area(fam.member(7))  # against the pipeline
    assert fam.area_of(10) == area(fam.member(10))
    assert fam.final_continuant(7) == continuant(fam.member(7)) == 3
    with pytest.raises(ValueError):
        fam.member(8)                              # wrong residue
    assert list(fam.members_below(16)) == [7, 10, 13, 16]
    assert fam.contains((2, 1, 13, 1, 2)) and not fam.contains((2, 1, 12, 1, 2))


def test_members_with_entries_below():
    ds = degenerate_set(4, SPEC3)
    members = ds.members_with_entries_below(9)
    assert (1, 3, 1, 8) in members and (2, 1, 9, 1) in members
    for t in members:
        assert admissibility_check(t, SPEC3) == DEGENERATE
        assert not is_empty(t)


def test_slot_family_final_continuants():
    for r, rows in reference.DEGENERATE_FAMILIES_D3.items():
        fams = slot_families(r, SPEC3)
        assert len(fams) == len(rows)
        for fam in fams:
            for k in itertools.islice(fam.members_below(fam.k_min + 9), 4):
                assert continuant(fam.member(k)) == k - fam.offset


def test_bounded_search_matches_brute_force():
    cap = 12
    table = degenerate_table(3, SPEC3, k_max=cap)
    for r in range(1, 4):
        brute = set()
        for t in itertools.product(range(1, cap + 1), repeat=r):
            if admissibility_check(t, SPEC3) == DEGENERATE and not is_empty(t):
                brute.add(t)
        ds = table[r]
        assert ds.bounded and not ds.families
        assert set(ds.finite) == brute, r


def test_bounded_search_general_modulus():
    ds = degenerate_set(2, CongruenceSpec(5, 1, 2), k_max=25)
    assert ds.bounded and ds.finite
    for t in ds.finite:
        assert admissibility_check(t, CongruenceSpec(5, 1, 2)) == DEGENERATE


def test_exact_mode_needs_supported_congruence():
    with pytest.raises(ValueError, match="k_max"):
        degenerate_set(3, CongruenceSpec(5, 1, 2))


def test_agreement_between_both_successor_residues():
    # the two admissible successor classes give identical degenerate sets
    alt = CongruenceSpec(3, 0, 2)
    t1 = degenerate_table(6, SPEC3)
    t2 = degenerate_table(6, alt)
    for r in range(1, 7):
        assert set(t1[r].finite) == set(t2[r].finite)
        assert _family_fields(t1[r].families) == _family_fields(t2[r].families)


def test_tree_small():
    tree = build_tree((2, 4), SPEC3, 8)
    assert tree.root.area == F(1, 210)
    assert tree.conservation_violations() == []
    node = tree.find("2,4,1,3,2,1")
    assert node is not None and node.status == DEGENERATE
    assert node.area == F(1, 910)
    for leaf in tree.degenerate_leaves():
        assert admissibility_check(leaf.indices, SPEC3) == DEGENERATE
        assert not leaf.children
    assert tree.find((9, 9, 9)) is None


def test_tree_seed_validation():
    with pytest.raises(ValueError, match="degenerate"):
        build_tree((3,), SPEC3, 4)
    with pytest.raises(ValueError, match="depth"):
        build_tree((2, 4), SPEC3, 1)


def test_tree_unbounded_guard():
    # (1, m) stays non-empty for every m >= 2, so the child scan cannot close
    with pytest.raises(ValueError, match="max_index"):
        build_tree((1,), SPEC3, 2)
    tree = build_tree((1,), SPEC3, 2, max_index=30)
    assert not tree.root.expanded
    assert tree.root.children[-1].indices == (1, 30)


def test_tree_renderings():
    tree = build_tree((2, 4), SPEC3, 7)
    dot = tree.to_dot()
    assert dot.startswith("digraph") and "n0 -> n1" in dot
    svg = tree.to_svg()
    assert svg.startswith("<svg") and "</svg>" in svg


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("w", range(1, 6))
def test_leaf_forms_a(n, w):
    t = leaf_tuple("A", n, w)
    assert admissibility_check(t, SPEC3) == DEGENERATE
    assert leaf_area("A", n, w) == area(t)


@pytest.mark.parametrize("n, w", [(n, w) for n in range(1, 4) for w in range(3, 9)] + [(0, 8)])
def test_leaf_forms_b(n, w):
    t = leaf_tuple("B", n, w)
    assert admissibility_check(t, SPEC3) == DEGENERATE
    assert leaf_area("B", n, w) == area(t)


def test_leaf_forms_c_stalk_one_is_empty():
    # every block exponent would be negative: no catalogued leaf there
    assert c_leaf_entries(1) == []


@pytest.mark.parametrize("stalk", range(2, 11))
def test_leaf_forms_c(stalk):
    entries = c_leaf_entries(stalk)
    assert entries
    for t, a, level in entries:
        assert len(t) == level
        assert admissibility_check(t, SPEC3) == DEGENERATE
        assert area(t) == a
        assert leaf_tuple("C", stalk, level).indices == t
        assert leaf_area("C", stalk, level) == a


def test_leaf_validation():
    with pytest.raises(ValueError):
        leaf_tuple("A", 1, 6)
    with pytest.raises(ValueError):
        leaf_tuple("B", 0, 3)
    with pytest.raises(ValueError):
        leaf_tuple("C", 3, 99)
    with pytest.raises(ValueError):
        leaf_tuple("Z", 1, 1)


@pytest.mark.parametrize("n", range(1, 4))
def test_pentagon_witness(n):
    reg = region(pentagon_witness(n))
    assert len(reg.vertices) == 5


def test_degenerate_set_json():
    js = degenerate_set(5, SPEC3).as_json()
    assert js["finite"] == ["1,2^2,3,2", "1,2,3,1,5", "1,3,1,6,1",
                            "1,6,1,3,1", "2,3,2^2,1", "5,1,3,2,1"]
    assert js["families"][0]["template"] == "2,1,k,1,2"
    assert js["families"][0]["k_min"] == 7
