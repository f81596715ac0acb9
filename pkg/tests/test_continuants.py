"""Modified-continuant recurrence, identities, and the closed-form registry."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fareygaps import (CLOSED_FORMS, closed_form, closed_form_tuple,
                       continuant, continuant_pair, continuant_prefixes)

entries = st.lists(st.integers(min_value=1, max_value=60), max_size=24)
nonempty = st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=24)


def test_base_cases():
    assert continuant(()) == 1
    assert continuant((7,)) == 7
    assert continuant((3, 5)) == 14          # k1*k2 - 1
    assert continuant((1, 1)) == 0
    assert continuant((2, 2, 2)) == 4        # all-2 run of length n gives n+1
    assert continuant("2^9") == 10           # string notation accepted


@given(nonempty)
def test_pair_and_prefixes_consistency(ks):
    prefixes = continuant_prefixes(ks)
    assert len(prefixes) == len(ks) + 1 and prefixes[0] == 1
    assert prefixes[-1] == continuant(ks)
    assert continuant_pair(ks) == (continuant(ks), continuant(ks[:-1]))
    for i in range(1, len(ks) + 1):
        assert prefixes[i] == continuant(ks[:i])


@given(nonempty)
def test_increment_identity(ks):
    # raising the last entry by one adds the next-shorter prefix value
    bumped = ks[:-1] + [ks[-1] + 1]
    assert continuant(bumped) == continuant(ks) + continuant(ks[:-1])


@given(entries)
def test_mirror_identity(ks):
    assert continuant(ks[::-1]) == continuant(ks)


@given(nonempty, nonempty)
def test_splitting_identity(xs, ys):
    assert continuant(xs + ys) == (continuant(xs) * continuant(ys)
                                   - continuant(xs[:-1]) * continuant(ys[1:]))


@given(st.lists(st.integers(min_value=1, max_value=60), min_size=2, max_size=24))
def test_determinant_identity(ks):
    lhs = continuant(ks[:-1]) * continuant(ks[1:])
    rhs = continuant(ks[1:-1]) * continuant(ks)
    assert lhs - rhs == 1


def _param_grid(names):
    pools = {"a": (1, 2, 3, 5), "b": (1, 2, 4, 7), "c": (1, 3, 5),
             "m": (0, 1, 2, 4), "n": (0, 1, 3, 6)}
    keys = list(names)
    for combo in itertools.product(*(pools[k] for k in keys)):
        yield dict(zip(keys, combo))


def test_closed_form_registry_against_recurrence():
    checked = 0
    for family, spec in CLOSED_FORMS.items():
        for params in _param_grid(spec["params"]):
            t = closed_form_tuple(family, **params)
            assert closed_form(family, **params) == continuant(t), (family, params)
            checked += 1
    assert checked > 1000


def test_closed_form_examples():
    assert closed_form("a,2^n", a=3, n=4) == continuant((3, 2, 2, 2, 2)) == 11
    assert closed_form("(4,1)^n", n=3) == 7
    assert closed_form("2^m,1,a,1,2^n", a=20, m=2, n=3) == 20 - 7
    assert closed_form_tuple("(1,4)^n,1,3,2^m", n=1, m=2).render() == "1,4,1,3,2^2"


def test_closed_form_validation():
    with pytest.raises(ValueError, match="unknown closed-form family"):
        closed_form("definitely-not-a-family", n=1)
    with pytest.raises(ValueError, match="takes parameters"):
        closed_form("2^n", a=1)
    with pytest.raises(ValueError, match="repeat count"):
        closed_form("2^n", n=-1)
    with pytest.raises(ValueError, match="index value"):
        closed_form_tuple("a,2^n", a=0, n=2)
