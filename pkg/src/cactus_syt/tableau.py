"""Standard Young tableaux: validation, canonical enumeration and indexing.

A tableau is stored as its row-major reading word (a flat tuple) together with
its shape. The canonical order on SYT(shape) is lexicographic on that word,
and a tableau's index is its position in this order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Sequence

from .errors import CapExceeded
from .partition import Partition, PartitionLike, as_partition, syt_count, transpose

DEFAULT_ENUM_CAP = 5_000_000


@lru_cache(maxsize=None)
def row_offsets(rows: tuple[int, ...]) -> tuple[int, ...]:
    return (0,) + tuple(accumulate(rows))


@lru_cache(maxsize=None)
def cell_coords(rows: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """0-based (row, col) of each flat position."""
    return tuple((i, j) for i, r in enumerate(rows) for j in range(r))


@dataclass(frozen=True, order=True)
class StandardTableau:
    shape: Partition
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        validate(self.shape, self.entries)

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def rows(self) -> list[list[int]]:
        off = row_offsets(self.shape.rows)
        return [list(self.entries[off[i]:off[i + 1]]) for i in range(len(self.shape))]

    def entry(self, i: int, j: int) -> int:
        """Value in 1-based box (i, j)."""
        if (i, j) not in self.shape:
            raise IndexError((i, j))
        return self.entries[row_offsets(self.shape.rows)[i - 1] + j - 1]

    def position(self, value: int) -> tuple[int, int]:
        """1-based box holding ``value``."""
        r, c = cell_coords(self.shape.rows)[self.entries.index(value)]
        return r + 1, c + 1

    def __str__(self):
        return "/".join(" ".join(map(str, row)) for row in self.rows)

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.rows), "rows": self.rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "StandardTableau":
        shape = Partition(tuple(len(r) for r in rows if len(r)))
        return cls(shape, tuple(v for r in rows for v in r))

    @classmethod
    def from_dict(cls, d: dict) -> "StandardTableau":
        t = cls.from_rows(d["rows"])
        if "shape" in d and tuple(d["shape"]) != t.shape.rows:
            raise ValueError(f"shape {d['shape']} does not match rows {d['rows']}")
        return t

    @classmethod
    def from_json(cls, text: str) -> "StandardTableau":
        d = json.loads(text)
        if isinstance(d, list):
            return cls.from_rows(d)
        return cls.from_dict(d)


def is_standard(rows: tuple[int, ...], word: Sequence[int]) -> bool:
    n = sum(rows)
    if len(word) != n or sorted(word) != list(range(1, n + 1)):
        return False
    off = row_offsets(rows)
    for i, r in enumerate(rows):
        base = off[i]
        for j in range(r):
            v = word[base + j]
            if j and word[base + j - 1] >= v:
                return False
            if i and word[off[i - 1] + j] >= v:
                return False
    return True


def validate(shape: Partition, word: Sequence[int]) -> None:
    if not isinstance(shape, Partition):
        raise TypeError("shape must be a Partition")
    if not is_standard(shape.rows, word):
        raise ValueError(f"not a standard Young tableau of shape {shape}: {tuple(word)}")


def _check_cap(p: Partition, cap: int | None) -> int:
    count = syt_count(p)
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if count > cap:
        raise CapExceeded(f"SYT({p})", count, cap)
    return count


def _generate_words(rows: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All row-major words of SYT(rows), unsorted."""
    n = sum(rows)
    if n == 0:
        return [()]
    off = row_offsets(rows)
    k = len(rows)
    filled = [0] * k
    word = [0] * n
    out = []

    def rec(v):
        if v > n:
            out.append(tuple(word))
            return
        for i in range(k):
            f = filled[i]
            if f < rows[i] and (i == 0 or filled[i - 1] > f):
                word[off[i] + f] = v
                filled[i] = f + 1
                rec(v + 1)
                filled[i] = f

    rec(1)
    return out


@lru_cache(maxsize=64)
def words(rows: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Row-major words of SYT(rows) in canonical (lexicographic) order."""
    return tuple(sorted(_generate_words(rows)))


@lru_cache(maxsize=64)
def word_index(rows: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    return {w: i for i, w in enumerate(words(rows))}


def enumerate_syt(p: PartitionLike, cap: int | None = None) -> list[StandardTableau]:
    """All SYT of shape ``p`` in canonical order.

    Raises CapExceeded when the count exceeds ``cap`` (default 5e6).
    """
    p = as_partition(p)
    _check_cap(p, cap)
    return [StandardTableau(p, w) for w in words(p.rows)]


def syt_words(p: PartitionLike, cap: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Cap-checked access to the canonical word list (no object wrapping)."""
    p = as_partition(p)
    _check_cap(p, cap)
    return words(p.rows)


def superstandard(p: PartitionLike) -> StandardTableau:
    """The row-reading tableau: row i holds the next r_i consecutive integers."""
    p = as_partition(p)
    return StandardTableau(p, tuple(range(1, p.n + 1)))


def transpose_word(rows: tuple[int, ...], word: Sequence[int]) -> tuple[int, ...]:
    t = transpose(Partition(rows)).rows
    off = row_offsets(rows)
    return tuple(word[off[i] + j] for j, r in enumerate(t) for i in range(r))


def transpose_tableau(t: StandardTableau) -> StandardTableau:
    return StandardTableau(transpose(t.shape), transpose_word(t.shape.rows, t.entries))


def restrict(t: StandardTableau) -> StandardTableau:
    """Delete the box holding n."""
    if t.n == 0:
        raise ValueError("cannot restrict the empty tableau")
    i, _ = t.position(t.n)
    rows = list(t.shape.rows)
    rows[i - 1] -= 1
    shape = Partition(tuple(r for r in rows if r))
    return StandardTableau(shape, tuple(v for v in t.entries if v != t.n))


def index_of(t: StandardTableau, cap: int | None = None) -> int:
    _check_cap(t.shape, cap)
    return word_index(t.shape.rows)[t.entries]


def tableau_at(p: PartitionLike, i: int, cap: int | None = None) -> StandardTableau:
    p = as_partition(p)
    ws = syt_words(p, cap)
    if not 0 <= i < len(ws):
        raise IndexError(f"tableau index {i} out of range [0, {len(ws)})")
    return StandardTableau(p, ws[i])
