import itertools

import pytest

from covrough import Scheme, Universe, UniverseMismatch, build_covering, lower_approx, upper_approx
from covrough.oracle import approx

from .helpers import brute_neighborhoods

ELEMS = list("abcdef")
BLOCKS = [set("ab"), set("acd"), set("abcd"), set("def")]


def S(x):
    return set(x.members)


@pytest.mark.parametrize(
    "x, expected",
    [
        ("a", "abcd"),
        ("ab", "abcd"),
        ("abc", "abcd"),
        ("def", "acdef"),
        ("adef", "abcdef"),
    ],
)
def test_sixth_upper_table(example, x, expected):
    assert S(upper_approx(example, example.universe.subset(x), "sixth")) == set(expected)


@pytest.mark.parametrize(
    "x, expected",
    [
        ("a", "a"),
        ("ab", "ab"),
        ("abc", "ab"),
        ("abcd", "abcd"),
        ("abdef", "abdef"),
        ("abcdef", "abcdef"),
    ],
)
def test_sixth_lower_table(example, x, expected):
    assert S(lower_approx(example, example.universe.subset(x), "sixth")) == set(expected)


def test_fifth_upper_singleton(example):
    nb = brute_neighborhoods(ELEMS, BLOCKS)
    expected = {x for x in ELEMS if nb[x] & {"a"}}
    assert expected == {"a", "b", "c"}
    assert S(upper_approx(example, example.universe.subset("a"), Scheme.FIFTH)) == expected


def test_dual_lower_differs(example):
    x = example.universe.subset("abc")
    assert S(lower_approx(example, x, "sixth")) == {"a", "b"}
    assert S(lower_approx(example, x, "sixth_dual")) == {"b"}


@pytest.mark.parametrize("scheme", list(Scheme))
def test_empty_and_full(example, scheme):
    u = example.universe
    assert upper_approx(example, u.empty(), scheme) == u.empty()
    assert lower_approx(example, u.full(), scheme) == u.full()


def test_universe_mismatch(example):
    with pytest.raises(UniverseMismatch):
        upper_approx(example, Universe("abc").full(), "second")


def test_second_against_brute_force(example):
    for r in range(7):
        for combo in itertools.combinations(ELEMS, r):
            xs = set(combo)
            sh = set().union(*[b for b in BLOCKS if b & xs])
            comp = set(ELEMS) - xs
            sl = set(ELEMS) - set().union(*[b for b in BLOCKS if b & comp])
            x = example.universe.subset(combo)
            assert S(approx(example, x, "second", "upper")) == sh
            assert S(approx(example, x, "second", "lower")) == sl


def test_monotone_on_example(example):
    subsets = list(example.universe.all_subsets())
    for scheme in Scheme:
        up = {x.mask: upper_approx(example, x, scheme) for x in subsets}
        lo = {x.mask: lower_approx(example, x, scheme) for x in subsets}
        for x in subsets:
            for y in subsets:
                if x <= y:
                    assert up[x.mask] <= up[y.mask]
                    assert lo[x.mask] <= lo[y.mask]


def test_partition_sixth_equals_dual():
    u = Universe("abcde")
    cov = build_covering(u, [["a", "b"], ["c"], ["d", "e"]])
    for x in u.all_subsets():
        assert lower_approx(cov, x, "sixth") == lower_approx(cov, x, "sixth_dual")
