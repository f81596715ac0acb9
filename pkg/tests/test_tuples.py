"""Run-notation parsing and rendering."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fareygaps import TupleSpec, TupleSyntaxError, as_indices


@pytest.mark.parametrize("text, expanded", [
    ("2,4,1", (2, 4, 1)),
    ("3,2^4,1,6", (3, 2, 2, 2, 2, 1, 6)),
    ("(1,4)^2,1,3", (1, 4, 1, 4, 1, 3)),
    ("2,(4,1)^3,3,2^7,1", (2, 4, 1, 4, 1, 4, 1, 3, 2, 2, 2, 2, 2, 2, 2, 1)),
    ("5", (5,)),
    ("7^1", (7,)),
    (" 1 , 2 ^ 2 ", (1, 2, 2)),
    ("2 3", (23,)),  # whitespace is ignored outright, even inside a number
    ("((1,2)^2)^2", (1, 2, 1, 2, 1, 2, 1, 2)),
])
def test_parse(text, expanded):
    assert TupleSpec.parse(text).indices == expanded


@pytest.mark.parametrize("bad", [
    "", "2,,3", "(1,2", "1,2)", "2^0", "0", "a,b", "2^", "(1,2)^",
    "^3", ",", "2,", "(1,2)3",
])
def test_parse_rejects(bad):
    with pytest.raises(TupleSyntaxError):
        TupleSpec.parse(bad)


def test_render_is_canonical():
    assert TupleSpec.parse("2,2,2").render() == "2^3"
    assert TupleSpec.parse("2^3").render() == "2^3"
    assert TupleSpec.parse("(2,2)^3").render() == "2^6"
    assert TupleSpec.from_indices([3, 2, 2, 2, 2, 1, 6]).render() == "3,2^4,1,6"
    # grouped repeats with distinct values expand; render never re-groups
    assert TupleSpec.parse("(1,4)^2").render() == "1,4,1,4"


def test_value_semantics():
    a = TupleSpec.parse("2,2,3")
    b = TupleSpec.from_indices((2, 2, 3))
    assert a == b and hash(a) == hash(b)
    assert a.r == len(a) == 3
    assert list(a) == [2, 2, 3] and a[0] == 2 and a[-1] == 3
    assert a.runs == ((2, 2), (3, 1))
    assert a.reversed().indices == (3, 2, 2)
    assert (a + [1]).indices == (2, 2, 3, 1)
    assert (a + TupleSpec.parse("4")).indices == (2, 2, 3, 4)
    assert str(a) == "2^2,3"


def test_from_indices_validates():
    with pytest.raises(TupleSyntaxError):
        TupleSpec.from_indices([2, 0, 1])


def test_as_indices_coercions():
    assert as_indices("2^2,3") == (2, 2, 3)
    assert as_indices(TupleSpec.parse("1,5,1")) == (1, 5, 1)
    assert as_indices([4, 1]) == (4, 1)
    assert as_indices(iter((9,))) == (9,)


@given(st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=30))
def test_render_parse_round_trip(ks):
    spec = TupleSpec.from_indices(ks)
    again = TupleSpec.parse(spec.render())
    assert again == spec
    assert again.expand() == ks
