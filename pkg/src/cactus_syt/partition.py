"""Integer partitions (Young diagrams) and the shape predicates used by the
cactus-group case analysis.

Boxes are addressed as 1-based ``(row, col)`` pairs throughout the public API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt
from typing import Iterable, Iterator, Sequence, Union


@dataclass(frozen=True, order=True)
class Partition:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return sum(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __str__(self):
        return ",".join(map(str, self.rows))

    def __repr__(self):
        return f"Partition({self.rows})"

    def row(self, i: int) -> int:
        """Length of 1-based row ``i`` (0 past the last row)."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def col(self, j: int) -> int:
        """Length of 1-based column ``j``."""
        return sum(1 for r in self.rows if r >= j)

    def cells(self) -> list[tuple[int, int]]:
        """All boxes in row-major order."""
        return [(i + 1, j + 1) for i, r in enumerate(self.rows) for j in range(r)]

    def __contains__(self, box):
        i, j = box
        return 1 <= j <= self.row(i)

    def remove(self, box: tuple[int, int]) -> "Partition":
        """The shape with the corner ``box`` removed."""
        if box not in corners(self):
            raise ValueError(f"{box} is not a corner of {self}")
        rows = list(self.rows)
        rows[box[0] - 1] -= 1
        return Partition(tuple(r for r in rows if r))

    def to_json(self) -> str:
        return json.dumps(list(self.rows))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"`` or a JSON array ``"[4,2,1]"``."""
        text = text.strip()
        if text.startswith("["):
            return cls(tuple(json.loads(text)))
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None


PartitionLike = Union[Partition, Sequence[int], str]


def as_partition(p: PartitionLike) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return Partition.parse(p)
    return Partition(tuple(p))


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in decreasing lexicographic order: (n), (n-1,1), ..."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for rows in rec(n, n):
        yield Partition(rows)


def transpose(p: PartitionLike) -> Partition:
    p = as_partition(p)
    if not p.rows:
        return p
    return Partition(tuple(p.col(j) for j in range(1, p.rows[0] + 1)))


def is_hook(p: PartitionLike) -> bool:
    """No box at (2,2)."""
    p = as_partition(p)
    return p.row(2) <= 1


def is_almost_hook(p: PartitionLike) -> bool:
    """A hook plus the box (2,2).

    Row and column orientation collapse to the same test: the second row has
    exactly two boxes and every later row at most one.
    """
    p = as_partition(p)
    return p.row(2) == 2 and p.row(3) <= 1


def is_self_transpose(p: PartitionLike) -> bool:
    p = as_partition(p)
    return transpose(p) == p


def fits_in_grid(p: PartitionLike, c_squared: Fraction | int) -> bool:
    """True iff both the first row and first column are at most c*sqrt(n).

    Lengths are integers, so ``a <= floor(c*sqrt(n))`` iff ``a**2 <= c**2 * n``;
    the comparison is done exactly.
    """
    p = as_partition(p)
    bound = Fraction(c_squared) * p.n
    return p.row(1) ** 2 <= bound and len(p) ** 2 <= bound


def is_generic(p: PartitionLike) -> bool:
    """Fits in a 2*sqrt(2)*sqrt(n) square grid."""
    return fits_in_grid(p, 8)


def generic_bound(n: int) -> int:
    """floor(2*sqrt(2)*sqrt(n)) = floor(sqrt(8n))."""
    return isqrt(8 * n)


def corners(p: PartitionLike) -> list[tuple[int, int]]:
    """Removable boxes, by increasing row."""
    p = as_partition(p)
    rows = p.rows
    return [(i + 1, r) for i, r in enumerate(rows)
            if i + 1 == len(rows) or rows[i + 1] < r]


def addable(p: PartitionLike) -> list[tuple[int, int]]:
    """Boxes that can be added to give a partition, by increasing row."""
    p = as_partition(p)
    rows = p.rows
    out = [(i + 1, r + 1) for i, r in enumerate(rows) if i == 0 or rows[i - 1] > r]
    out.append((len(rows) + 1, 1))
    return out


def extended_corners(p: PartitionLike) -> list[tuple[int, int]]:
    """Corners (i,j) that can hold n while n-1 sits at (i-1,j) or (i,j-1).

    That happens exactly when one of those two neighbours is a corner of the
    shape left after deleting (i,j): n-1 can then occupy it in some filling.
    """
    p = as_partition(p)
    if p.n < 2:
        raise ValueError("extended corners need at least two boxes")
    out = []
    for box in corners(p):
        i, j = box
        rest = corners(p.remove(box))
        if (i - 1, j) in rest or (i, j - 1) in rest:
            out.append(box)
    return out


def hook_lengths(p: PartitionLike) -> list[int]:
    p = as_partition(p)
    t = transpose(p)
    return [(r - j) + (t.rows[j] - i) - 1
            for i, r in enumerate(p.rows) for j in range(r)]


@lru_cache(maxsize=1 << 16)
def _syt_count(rows: tuple[int, ...]) -> int:
    n = sum(rows)
    prod = 1
    for h in hook_lengths(Partition(rows)):
        prod *= h
    return factorial(n) // prod


def syt_count(p: PartitionLike) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    return _syt_count(as_partition(p).rows)


def contains(big: PartitionLike, small: PartitionLike) -> bool:
    big, small = as_partition(big), as_partition(small)
    return len(small) <= len(big) and all(s <= b for s, b in zip(small.rows, big.rows))


def subpartitions(p: PartitionLike, size: int) -> Iterator[Partition]:
    """Partitions of ``size`` contained in ``p``."""
    p = as_partition(p)
    rows = p.rows

    def rec(i, remaining, cap):
        if remaining == 0:
            yield ()
            return
        if i == len(rows):
            return
        for a in range(min(cap, rows[i], remaining), 0, -1):
            for rest in rec(i + 1, remaining - a, a):
                yield (a,) + rest

    for r in rec(0, size, rows[0] if rows else 0):
        yield Partition(r)


def parse_shapes(text: str) -> list[Partition]:
    """Parse ``"3,1;3,1"`` into a list of partitions."""
    return [Partition.parse(s) for s in text.split(";") if s.strip()]


def format_rows(rows: Iterable[int]) -> str:
    return ",".join(map(str, rows))
