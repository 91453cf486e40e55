"""Dense Boolean matrices with word-packed rows.

Each row is stored as a Python ``int`` used as a bitset: bit ``j`` of
``rows[i]`` is entry ``(i, j)``.  Python integers are arbitrary precision, so
a row is packed into as many machine words as it needs and the row-level
``&``/``|``/``~`` operations run word-parallel inside the interpreter.

Two products are provided:

* :func:`bool_product` -- the max-min (exists-AND) product ``A • B``;
* :func:`impl_product` -- the implication product ``A ⊙ B`` whose entry
  ``(i, j)`` is 1 iff ``A[i, k] <= B[k, j]`` for every ``k``.

Vectors are column vectors, i.e. ``n x 1`` matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import DimensionMismatch

if TYPE_CHECKING:
    from .covering import ElementSet, Universe


@dataclass(frozen=True)
class BoolMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatch("negative dimension")
        if len(self.rows) != self.nrows:
            raise DimensionMismatch(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionMismatch(f"row value {r:#x} does not fit in {self.ncols} columns")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> "BoolMatrix":
        """Build from nested 0/1 sequences (row-major)."""
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise DimensionMismatch(f"row {i} has length {len(row)}, expected {ncols}")
            bits = 0
            for j, v in enumerate(row):
                if v not in (0, 1, True, False):
                    raise ValueError(f"entry ({i}, {j}) = {v!r} is not 0/1")
                if v:
                    bits |= 1 << j
            rows.append(bits)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BoolMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "BoolMatrix":
        full = (1 << ncols) - 1
        return cls(nrows, ncols, (full,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def column(cls, bits: Iterable[int]) -> "BoolMatrix":
        """A column vector from a sequence of 0/1 values."""
        rows = tuple(1 if b else 0 for b in bits)
        return cls(len(rows), 1, rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> j) & 1

    def row_bits(self, i: int) -> list[int]:
        r = self.rows[i]
        return [(r >> j) & 1 for j in range(self.ncols)]

    def to_lists(self) -> list[list[int]]:
        return [self.row_bits(i) for i in range(self.nrows)]

    def columns(self) -> tuple[int, ...]:
        """Columns packed as bitsets over the row index."""
        return transpose(self).rows

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == transpose(self)

    def diagonal(self) -> list[int]:
        return [(self.rows[i] >> i) & 1 for i in range(min(self.nrows, self.ncols))]

    @property
    def T(self) -> "BoolMatrix":
        return transpose(self)

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        return bool_product(self, other)

    def dump(self) -> str:
        """Debug text: one row per line, entries separated by single spaces."""
        return "\n".join(" ".join(str(b) for b in self.row_bits(i)) for i in range(self.nrows))


def transpose(a: BoolMatrix) -> BoolMatrix:
    cols = [0] * a.ncols
    for i, r in enumerate(a.rows):
        bit = 1 << i
        j = 0
        while r:
            if r & 1:
                cols[j] |= bit
            r >>= 1
            j += 1
    return BoolMatrix(a.ncols, a.nrows, tuple(cols))


def _check_conformable(a: BoolMatrix, b: BoolMatrix, op: str) -> None:
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"{op}: inner dimensions differ ({a.nrows}x{a.ncols} vs {b.nrows}x{b.ncols})")


def bool_product(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """``A • B``: entry (i, j) is 1 iff some k has A[i,k] = B[k,j] = 1."""
    _check_conformable(a, b, "bool_product")
    # Row i of the result is the OR of the B-rows selected by row i of A.
    out = []
    brows = b.rows
    for r in a.rows:
        acc = 0
        k = 0
        while r:
            if r & 1:
                acc |= brows[k]
            r >>= 1
            k += 1
        out.append(acc)
    return BoolMatrix(a.nrows, b.ncols, tuple(out))


def impl_product(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """``A ⊙ B``: entry (i, j) is 1 iff row i of A is contained in column j of B.

    This is the Boolean reading of ``min_k (B[k,j] - A[i,k] + 1)`` clamped to
    ``{0, 1}``.
    """
    _check_conformable(a, b, "impl_product")
    bcols = b.columns()
    out = []
    for r in a.rows:
        acc = 0
        for j, c in enumerate(bcols):
            if r & ~c == 0:
                acc |= 1 << j
        out.append(acc)
    return BoolMatrix(a.nrows, b.ncols, tuple(out))


def vector_mask(v: BoolMatrix) -> int:
    """Pack a column vector into a bitset over its row index."""
    if v.ncols != 1:
        raise DimensionMismatch(f"expected a column vector, got shape {v.shape}")
    mask = 0
    for i, r in enumerate(v.rows):
        if r:
            mask |= 1 << i
    return mask


def mask_vector(mask: int, n: int) -> BoolMatrix:
    return BoolMatrix(n, 1, tuple((mask >> i) & 1 for i in range(n)))


def from_set(x: "ElementSet") -> BoolMatrix:
    """Characteristic vector of ``x`` under its universe's element order."""
    return mask_vector(x.mask, len(x.universe))


def to_set(v: BoolMatrix, universe: "Universe") -> "ElementSet":
    if v.ncols != 1 or v.nrows != len(universe):
        raise DimensionMismatch(
            f"vector of shape {v.shape} does not match a universe of size {len(universe)}"
        )
    return universe.from_mask(vector_mask(v))


def format_vector(v: BoolMatrix) -> str:
    """Render a column vector the way tables print it: ``[1 0 1]^T``."""
    return "[" + " ".join(str(r) for r in v.rows) + "]^T"
