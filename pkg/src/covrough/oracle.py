"""Reference approximation operators computed directly from their set definitions.

Everything here works on plain frozensets of element names and recomputes
neighborhoods from the blocks, so it shares no code path with the bitmask
and matrix machinery it is used to check. Dual lower approximations are
always obtained as complement-of-upper-of-complement.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .covering import Covering, ElementSet
from .errors import UniverseMismatch


class Scheme(str, Enum):
    SECOND = "second"
    FIFTH = "fifth"
    SIXTH = "sixth"
    SIXTH_DUAL = "sixth_dual"

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        return cls(text.replace("-", "_").lower())


class Bound(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


@lru_cache(maxsize=512)
def _granules(cov: Covering) -> tuple[frozenset, tuple[frozenset, ...], dict]:
    universe = frozenset(cov.universe.elements)
    blocks = tuple(b.members for b in cov.blocks)
    nbhd = {}
    for x in cov.universe.elements:
        containing = [b for b in blocks if x in b]
        nbhd[x] = frozenset.intersection(*containing)
    return universe, blocks, nbhd


def _upper(cov: Covering, xs: frozenset, scheme: Scheme) -> frozenset:
    universe, blocks, nbhd = _granules(cov)
    if scheme is Scheme.SECOND:
        out = frozenset()
        for c in blocks:
            if c & xs:
                out |= c
        return out
    if scheme is Scheme.FIFTH:
        return frozenset(x for x in universe if nbhd[x] & xs)
    # sixth and sixth_dual share the same upper operator
    out = frozenset()
    for n in nbhd.values():
        if n & xs:
            out |= n
    return out


def _lower(cov: Covering, xs: frozenset, scheme: Scheme) -> frozenset:
    universe, _, nbhd = _granules(cov)
    if scheme is Scheme.SECOND or scheme is Scheme.SIXTH_DUAL:
        return universe - _upper(cov, universe - xs, scheme)
    if scheme is Scheme.FIFTH:
        return frozenset(x for x in universe if nbhd[x] <= xs)
    out = frozenset()
    for n in nbhd.values():
        if n <= xs:
            out |= n
    return out


def _check(cov: Covering, x: ElementSet) -> None:
    if x.universe != cov.universe:
        raise UniverseMismatch("set and covering are over different universes")


def upper_approx(cov: Covering, x: ElementSet, scheme: Scheme | str) -> ElementSet:
    _check(cov, x)
    return cov.universe.subset(_upper(cov, x.members, Scheme(scheme)))


def lower_approx(cov: Covering, x: ElementSet, scheme: Scheme | str) -> ElementSet:
    _check(cov, x)
    return cov.universe.subset(_lower(cov, x.members, Scheme(scheme)))


def approx(cov: Covering, x: ElementSet, scheme: Scheme | str, bound: Bound | str) -> ElementSet:
    if Bound(bound) is Bound.UPPER:
        return upper_approx(cov, x, scheme)
    return lower_approx(cov, x, scheme)
