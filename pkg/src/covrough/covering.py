"""Universes, element subsets, coverings and neighborhoods.

A :class:`Universe` fixes an element order; every subset is stored both as a
frozenset of names and as a bitmask under that order, so the matrix layer and
the set-theoretic layer agree on indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

from .boolmat import BoolMatrix
from .errors import (
    DuplicateElement,
    EmptyBlock,
    EmptyUniverse,
    NotACovering,
    UniverseMismatch,
    UnknownElement,
)

Element = Hashable


@dataclass(frozen=True)
class Universe:
    elements: tuple[Element, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[Element]):
        elems = tuple(elements)
        if not elems:
            raise EmptyUniverse("a universe needs at least one element")
        index = {}
        for i, x in enumerate(elems):
            if x in index:
                raise DuplicateElement(f"element {x!r} listed twice")
            index[x] = i
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x: Element) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x) from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def subset(self, members: Iterable[Element]) -> "ElementSet":
        """Validated subset; raises :class:`UnknownElement` for foreign names."""
        mask = 0
        for x in members:
            mask |= 1 << self.index(x)
        return self.from_mask(mask)

    def from_mask(self, mask: int) -> "ElementSet":
        if mask < 0 or mask > self.full_mask:
            raise ValueError(f"mask {mask:#x} out of range for universe of size {len(self)}")
        return ElementSet(self, mask)

    def empty(self) -> "ElementSet":
        return ElementSet(self, 0)

    def full(self) -> "ElementSet":
        return ElementSet(self, self.full_mask)

    def all_subsets(self) -> Iterator["ElementSet"]:
        """Every subset, in increasing bitmask order."""
        for mask in range(1 << len(self.elements)):
            yield ElementSet(self, mask)


@dataclass(frozen=True)
class ElementSet:
    """A subset of a universe. Bit ``i`` of ``mask`` means ``elements[i]`` is a member."""

    universe: Universe
    mask: int

    @cached_property
    def members(self) -> frozenset:
        elems = self.universe.elements
        return frozenset(elems[i] for i in range(len(elems)) if (self.mask >> i) & 1)

    def ordered(self) -> tuple[Element, ...]:
        """Members in universe order."""
        elems = self.universe.elements
        return tuple(elems[i] for i in range(len(elems)) if (self.mask >> i) & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self) -> Iterator[Element]:
        return iter(self.ordered())

    def __contains__(self, x) -> bool:
        return x in self.members

    def __bool__(self) -> bool:
        return self.mask != 0

    def _same_universe(self, other: "ElementSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch("sets belong to different universes")

    def complement(self) -> "ElementSet":
        return ElementSet(self.universe, self.universe.full_mask & ~self.mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._same_universe(other)
        return ElementSet(self.universe, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._same_universe(other)
        return ElementSet(self.universe, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._same_universe(other)
        return ElementSet(self.universe, self.mask & ~other.mask)

    def issubset(self, other: "ElementSet") -> bool:
        self._same_universe(other)
        return self.mask & ~other.mask == 0

    __le__ = issubset

    def __repr__(self) -> str:
        return f"ElementSet({format_set(self)})"


def format_set(x: ElementSet) -> str:
    """``{a, b, c}`` in universe order; ``{}`` for the empty set."""
    return "{" + ", ".join(str(e) for e in x.ordered()) + "}"


@dataclass(frozen=True)
class Covering:
    universe: Universe
    blocks: tuple[ElementSet, ...]

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return len(self.universe)

    def same_blocks(self, other: "Covering") -> bool:
        """Equality of block families as sets, ignoring order."""
        return self.universe == other.universe and {b.mask for b in self.blocks} == {
            b.mask for b in other.blocks
        }

    @cached_property
    def neighborhoods(self) -> tuple[ElementSet, ...]:
        """``N(x_i)`` for every element, indexed like the universe."""
        full = self.universe.full_mask
        out = []
        for i in range(self.n):
            acc = full
            for b in self.blocks:
                if (b.mask >> i) & 1:
                    acc &= b.mask
            out.append(ElementSet(self.universe, acc))
        return tuple(out)


def build_covering(universe: Universe, raw_blocks: Sequence[Iterable[Element]]) -> Covering:
    """Validate ``raw_blocks`` as a covering of ``universe``.

    Duplicate blocks are dropped (first occurrence kept, order preserved).
    Empty blocks, unknown elements and uncovered elements are errors.
    """
    if len(raw_blocks) == 0:
        raise NotACovering(universe.elements)
    seen: set[int] = set()
    blocks = []
    covered = 0
    for j, raw in enumerate(raw_blocks):
        mask = 0
        for x in raw:
            if x not in universe:
                raise UnknownElement(x, f"block {j + 1}")
            mask |= 1 << universe.index(x)
        if mask == 0:
            raise EmptyBlock(f"block {j + 1} is empty")
        covered |= mask
        if mask in seen:
            continue
        seen.add(mask)
        blocks.append(ElementSet(universe, mask))
    if covered != universe.full_mask:
        missing = universe.from_mask(universe.full_mask & ~covered)
        raise NotACovering(missing.ordered())
    return Covering(universe, tuple(blocks))


def neighborhood(cov: Covering, x: Element) -> ElementSet:
    """Intersection of all blocks containing ``x``."""
    return cov.neighborhoods[cov.universe.index(x)]


def induced_covering(cov: Covering) -> Covering:
    """The covering formed by the distinct neighborhoods, in universe order of first appearance."""
    seen = set()
    blocks = []
    for nb in cov.neighborhoods:
        if nb.mask not in seen:
            seen.add(nb.mask)
            blocks.append(nb)
    return Covering(cov.universe, tuple(blocks))


def star_neighborhood(cov: Covering, x: Element) -> ElementSet:
    """Neighborhood of ``x`` taken inside the induced covering."""
    return neighborhood(induced_covering(cov), x)


def membership_matrix(cov: Covering) -> BoolMatrix:
    """``n x m`` matrix with entry (i, j) = 1 iff ``x_i`` is in block ``j``."""
    rows = []
    for i in range(cov.n):
        r = 0
        for j, b in enumerate(cov.blocks):
            if (b.mask >> i) & 1:
                r |= 1 << j
        rows.append(r)
    return BoolMatrix(cov.n, cov.m, tuple(rows))
