"""Exact polygon machinery: clipping, index regions, areas, transfer map."""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fareygaps import (FAREY_TRIANGLE, ConvexRegion, HalfPlane, Point2Q,
                       area, bcz_index, bcz_map, continuant, is_empty,
                       region, single_slice_area)
from fareygaps import reference
from fareygaps.geometry import reverse_map_check

F = Fraction


def test_point_basics():
    p = Point2Q(F(1, 2), F(2, 3))
    assert p.in_triangle()
    assert not Point2Q(F(1, 4), F(1, 4)).in_triangle()   # x + y <= 1
    assert not Point2Q(0, 1).in_triangle()               # boundary x = 0
    assert Point2Q("1/2", "3/4").as_pair() == (F(1, 2), F(3, 4))
    assert Point2Q(1, 1).as_json() == ["1", "1"]


def test_halfplane():
    hp = HalfPlane(-1, -1, -1)        # x + y >= 1, in the a*x + b*y <= c form
    assert hp.contains(Point2Q(1, 0))
    assert hp.contains(Point2Q(F(1, 2), F(1, 2)))
    assert not hp.contains(Point2Q(F(1, 4), F(1, 4)))
    assert hp.evaluate(Point2Q(1, 1)) == -1
    strict = HalfPlane(-1, -1, -1, strict=True)
    assert not strict.contains(Point2Q(1, 0))   # boundary excluded
    with pytest.raises(ValueError):
        HalfPlane(0, 0, 1)


def test_region_canonical_form():
    ccw = ConvexRegion([(0, 0), (1, 0), (1, 1)])
    cw = ConvexRegion([(1, 1), (1, 0), (0, 0)])
    assert ccw == cw
    assert ccw.vertices[0].as_pair() == (F(0), F(0))      # lex-min first
    assert ccw.area == F(1, 2)
    # collinear interior points are dropped
    with_mid = ConvexRegion([(0, 0), (F(1, 2), 0), (1, 0), (1, 1)])
    assert len(with_mid.vertices) == 3 and with_mid == ccw
    with_mid.validate()


def test_degenerate_inputs_are_empty():
    assert ConvexRegion([]).empty
    assert ConvexRegion([(0, 0)]).area == 0
    assert ConvexRegion([(0, 0), (1, 1)]).area == 0
    # a "polygon" of three collinear points has no interior
    assert ConvexRegion([(0, 0), (F(1, 2), F(1, 2)), (1, 1)]).area == 0


def test_clip():
    square = ConvexRegion([(0, 0), (1, 0), (1, 1), (0, 1)])
    tri = square.clip(HalfPlane(1, 1, 1))     # keep x + y <= 1
    assert tri.area == F(1, 2)
    assert square.clip(HalfPlane(-1, 0, -2)).empty     # x >= 2 misses it
    assert square.clip(HalfPlane(0, -1, 0)) == square  # y >= 0 is slack


def test_farey_triangle():
    assert FAREY_TRIANGLE.area == F(1, 2)
    assert FAREY_TRIANGLE.contains(Point2Q(F(2, 3), F(3, 4)))
    assert FAREY_TRIANGLE.contains(Point2Q(1, 1))     # closure includes corners


def test_region_example():
    reg = region("2,4,1")
    assert [v.as_pair() for v in reg.vertices] == [
        (F(4, 5), F(3, 5)), (F(1), F(2, 3)), (F(1), F(5, 7))]
    assert reg.area == F(1, 210)
    assert area("2,4,1") == F(1, 210)
    assert area(reg) == F(1, 210)


@pytest.mark.parametrize("k", range(1, 13))
def test_single_index_slices(k):
    assert area((k,)) == single_slice_area(k)


def test_slice_partition_prefix():
    # the first K slices tile the triangle up to an explicit remainder
    total = sum(single_slice_area(k) for k in range(1, 41))
    assert F(1, 2) - total == F(2, 41 * 42)


def test_emptiness_witnesses():
    # non-empty continuant values do not certify non-empty regions
    assert is_empty((3, 2, 2, 2, 2, 1, 6)) and continuant((3, 2, 2, 2, 2, 1, 6)) == 1
    assert is_empty((3, 2, 2, 2, 2, 2, 1, 6)) and continuant((3, 2, 2, 2, 2, 2, 1, 6)) == -1


def test_pair_catalogue_small():
    for k in range(1, 9):
        for m in range(1, 9):
            assert is_empty((k, m)) == reference.empty_pair(k, m), (k, m)


def test_triple_catalogue_spot():
    for k, m, n in [(2, 1, 5), (2, 1, 6), (3, 1, 4), (3, 1, 3), (1, 2, 2),
                    (1, 2, 5), (4, 2, 1), (4, 2, 2), (9, 1, 2), (9, 1, 3)]:
        assert is_empty((k, m, n)) == reference.empty_triple(k, m, n), (k, m, n)


def test_bcz_map():
    p = Point2Q(F(1, 2), F(2, 3))
    assert bcz_index(p) == 2
    assert bcz_map(p) == Point2Q(F(2, 3), F(5, 6))
    with pytest.raises(ValueError):
        bcz_index(Point2Q(F(1, 4), F(1, 4)))


coords = st.tuples(st.integers(min_value=1, max_value=96),
                   st.integers(min_value=2, max_value=97))


@given(coords, coords)
def test_transfer_orbit_lands_in_its_region(xc, yc):
    x, y = F(xc[0], xc[1]), F(yc[0], yc[1])
    assume(x + y > 1 and x < 1 and y < 1)
    p = Point2Q(x, y)
    ks = []
    q = p
    for _ in range(4):
        ks.append(bcz_index(q))
        q = bcz_map(q)
        assert FAREY_TRIANGLE.contains(q)
    assert region(tuple(ks)).contains(p)


@given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=7))
def test_area_reversal(ks):
    a, b = reverse_map_check(tuple(ks))
    assert a == b


def test_region_validation_and_serialization():
    reg = region((2, 4, 1))
    reg.validate()
    js = reg.to_json((2, 4, 1))
    assert js["area"] == "1/210" and js["empty"] is False
    assert js["vertices"][0] == ["4/5", "3/5"]
    svg = reg.to_svg()
    assert svg.startswith("<svg") and "polygon" in svg


def test_region_rejects_bad_tuples():
    with pytest.raises(ValueError):
        region(())
    with pytest.raises(ValueError):
        single_slice_area(0)
