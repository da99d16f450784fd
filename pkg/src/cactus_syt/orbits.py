"""Orbits of the diagonal cactus action on pairs and triples of tableaux.

Tuples are encoded as single integers (mixed radix, first shape most
significant) and orbits are found by a flat min-label union-find driven by the
Bender-Knuth generators t_2..t_{n-1}. Every orbit is labelled by its smallest
encoded member, and orbit ids are dense in increasing order of that member.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb, prod
from typing import Sequence

import numpy as np

from .cactus import bk_images, bk_on_word
from .errors import CapExceeded
from .partition import (
    Partition,
    PartitionLike,
    as_partition,
    is_hook,
    syt_count,
    transpose,
)
from .tableau import (
    StandardTableau,
    superstandard,
    syt_words,
    transpose_word,
    word_index,
)

DEFAULT_PAIR_CAP = 10_000_000
DEFAULT_TRIPLE_CAP = 10_000_000


# tableau predicates -----------------------------------------------------------


def first_row(t: StandardTableau) -> frozenset[int]:
    return frozenset(t.entries[:t.shape.row(1)])


def shared_first_row(a: StandardTableau, b: StandardTableau) -> frozenset[int]:
    """Values lying in the first row of both hook-shaped tableaux."""
    if not (is_hook(a.shape) and is_hook(b.shape)):
        raise ValueError("shared_first_row needs hook-shaped tableaux")
    if a.n != b.n:
        raise ValueError("tableaux have different sizes")
    return first_row(a) & first_row(b)


def _same_or_transposed(a: StandardTableau, b: StandardTableau) -> bool:
    if a == b:
        return True
    return (transpose(a.shape) == b.shape
            and transpose_word(a.shape.rows, a.entries) == b.entries)


def is_viable_shapes(*shapes: PartitionLike) -> bool:
    """At most one of the shapes is a hook."""
    return sum(is_hook(p) for p in shapes) <= 1


def is_viable_pair(a: StandardTableau, b: StandardTableau) -> bool:
    if a.n != b.n:
        raise ValueError("tableaux have different sizes")
    return is_viable_shapes(a.shape, b.shape) and not _same_or_transposed(a, b)


def is_viable_triple(a: StandardTableau, b: StandardTableau, c: StandardTableau) -> bool:
    if not a.n == b.n == c.n:
        raise ValueError("tableaux have different sizes")
    if not is_viable_shapes(a.shape, b.shape, c.shape):
        return False
    return not (_same_or_transposed(a, b) or _same_or_transposed(a, c)
                or _same_or_transposed(b, c))


# union-find ------------------------------------------------------------------


def min_label_components(size: int, image_fns) -> np.ndarray:
    """labels[x] = smallest element in the component of x.

    ``image_fns`` is a sequence of callables returning the image array of a
    generator on the whole state space (recomputed on demand to bound memory).
    Alternates hooking (each root adopts the smaller of the two labels across
    an edge) with pointer jumping until every edge joins equal labels.
    """
    dtype = np.int64 if size > np.iinfo(np.int32).max else np.int32
    labels = np.arange(size, dtype=dtype)
    if size == 0:
        return labels
    while True:
        stable = True
        for fn in image_fns:
            img = fn()
            lu = labels
            lv = labels[img]
            diff = lu != lv
            if not diff.any():
                continue
            stable = False
            lu, lv = lu[diff], lv[diff]
            lo = np.minimum(lu, lv)
            hi = np.maximum(lu, lv)
            np.minimum.at(labels, hi, lo)
            while True:
                nxt = labels[labels]
                if np.array_equal(nxt, labels):
                    break
                labels = nxt
        if stable:
            return labels


# decompositions --------------------------------------------------------------


@dataclass
class OrbitDecomposition:
    shapes: list[Partition]
    orbit_id: np.ndarray
    sizes: list[int]
    representatives: list[tuple[int, ...]]
    labels: list[dict] = field(default_factory=list)

    @property
    def num_orbits(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return prod(syt_count(p) for p in self.shapes)

    def viable_orbits(self) -> list[int]:
        return [k for k, lab in enumerate(self.labels) if lab.get("viable")]

    def viable_single_orbit(self) -> bool:
        """All viable tuples (if any) lie in one orbit."""
        return len(self.viable_orbits()) <= 1

    def decode(self, x: int) -> tuple[int, ...]:
        return _decode(x, [syt_count(p) for p in self.shapes])

    def to_dict(self) -> dict:
        return {
            "shapes": [list(p.rows) for p in self.shapes],
            "arity": len(self.shapes),
            "total": self.total,
            "num_orbits": self.num_orbits,
            "sizes": list(self.sizes),
            "orbits": [dict(lab, id=k, size=s, representative=list(r))
                       for k, (lab, s, r) in enumerate(zip(self.labels, self.sizes,
                                                            self.representatives))],
            "viable_single_orbit": self.viable_single_orbit(),
        }


def _decode(x: int, radices: Sequence[int]) -> tuple[int, ...]:
    out = []
    for r in reversed(radices):
        x, d = divmod(x, r)
        out.append(d)
    return tuple(reversed(out))


def _product_images(perms: list[np.ndarray], radices: list[int]):
    """Image of the encoded tuple space under the diagonal action of one generator."""
    total = prod(radices)
    codes = np.arange(total, dtype=np.int64)
    out = np.zeros(total, dtype=np.int64)
    stride = 1
    for perm, r in zip(reversed(perms), reversed(radices)):
        digit = (codes // stride) % r
        out += perm.astype(np.int64)[digit] * stride
        stride *= r
    return out


def _transpose_map(p: Partition, q: Partition) -> np.ndarray | None:
    """tmap[a] = index in SYT(q) of the transpose of tableau a of SYT(p), if q = p^T."""
    if transpose(p) != q:
        return None
    idx = word_index(q.rows)
    return np.array([idx[transpose_word(p.rows, w)] for w in syt_words(p)], dtype=np.int64)


def _first_row_masks(p: Partition) -> np.ndarray:
    r = p.row(1)
    return np.array([sum(1 << (v - 1) for v in w[:r]) for w in syt_words(p)], dtype=np.int64)


def _popcount(x: np.ndarray) -> np.ndarray:
    x = x.astype(np.uint64)
    count = np.zeros(x.shape, dtype=np.int64)
    while x.any():
        count += (x & np.uint64(1)).astype(np.int64)
        x >>= np.uint64(1)
    return count


def _per_orbit_range(orbit_id, values, k):
    lo = np.full(k, np.iinfo(np.int64).max)
    hi = np.full(k, np.iinfo(np.int64).min)
    np.minimum.at(lo, orbit_id, values)
    np.maximum.at(hi, orbit_id, values)
    return lo, hi


def orbit_decompose(shapes: Sequence[PartitionLike], cap: int | None = None) -> OrbitDecomposition:
    """Orbits of the diagonal action on SYT(shapes[0]) x ... x SYT(shapes[-1]).

    Per-orbit labels: ``equal_pairs`` / ``transposed_pairs`` list the index
    pairs (a, b) whose components are equal or transposed throughout the
    orbit; ``shared_first_row`` is |S_{A,B}| for two hook shapes; ``viable``
    is the tuple viability. A label that is not constant on an orbit is
    reported under ``inconsistent``.
    """
    shapes = [as_partition(p) for p in shapes]
    if not shapes:
        raise ValueError("need at least one shape")
    n = shapes[0].n
    if any(p.n != n for p in shapes):
        raise ValueError("all shapes must have the same number of boxes")
    radices = [syt_count(p) for p in shapes]
    total = prod(radices)
    if cap is None:
        cap = DEFAULT_PAIR_CAP if len(shapes) <= 2 else DEFAULT_TRIPLE_CAP
    if total > cap:
        raise CapExceeded(f"tuple space {' x '.join(map(str, shapes))}", total, cap)

    gens = [[bk_images(p, i).astype(np.int64) for p in shapes] for i in range(2, n)]
    fns = [(lambda g=g: _product_images(g, radices)) for g in gens]
    roots = min_label_components(total, fns)
    reps, orbit_id, sizes = np.unique(roots, return_inverse=True, return_counts=True)
    orbit_id = orbit_id.reshape(-1)
    k = len(reps)

    codes = np.arange(total, dtype=np.int64)
    digits = []
    stride = total
    for r in radices:
        stride //= r
        digits.append((codes // stride) % r)

    labels = [{"equal_pairs": [], "transposed_pairs": [], "inconsistent": []}
              for _ in range(k)]
    related_any = np.zeros(total, dtype=bool)
    for a in range(len(shapes)):
        for b in range(a + 1, len(shapes)):
            p, q = shapes[a], shapes[b]
            for kind, mask in (
                ("equal_pairs", (digits[a] == digits[b]) if p == q else None),
                ("transposed_pairs", None if _transpose_map(p, q) is None
                 else _transpose_map(p, q)[digits[a]] == digits[b]),
            ):
                if mask is None:
                    continue
                related_any |= mask
                hits = np.bincount(orbit_id[mask], minlength=k)
                for o in range(k):
                    if hits[o] == sizes[o]:
                        labels[o][kind].append([a, b])
                    elif hits[o]:
                        labels[o]["inconsistent"].append(kind)

    viable_shapes = is_viable_shapes(*shapes)
    rel_hits = np.bincount(orbit_id[related_any], minlength=k)
    for o in range(k):
        if rel_hits[o] and rel_hits[o] != sizes[o]:
            labels[o]["inconsistent"].append("viable")
        labels[o]["viable"] = bool(viable_shapes and rel_hits[o] == 0)

    if len(shapes) == 2 and all(is_hook(p) for p in shapes):
        ma, mb = _first_row_masks(shapes[0]), _first_row_masks(shapes[1])
        shared = _popcount(ma[digits[0]] & mb[digits[1]])
        lo, hi = _per_orbit_range(orbit_id, shared, k)
        for o in range(k):
            labels[o]["shared_first_row"] = int(lo[o])
            if lo[o] != hi[o]:
                labels[o]["inconsistent"].append("shared_first_row")

    return OrbitDecomposition(
        shapes=shapes,
        orbit_id=orbit_id,
        sizes=[int(s) for s in sizes],
        representatives=[_decode(int(r), radices) for r in reps],
        labels=labels,
    )


def orbit_decompose_pairs(p1: PartitionLike, p2: PartitionLike,
                          cap: int | None = None) -> OrbitDecomposition:
    return orbit_decompose([p1, p2], cap=cap if cap is not None else DEFAULT_PAIR_CAP)


def orbit_decompose_triples(p1: PartitionLike, p2: PartitionLike, p3: PartitionLike,
                            cap: int | None = None) -> OrbitDecomposition:
    return orbit_decompose([p1, p2, p3], cap=cap if cap is not None else DEFAULT_TRIPLE_CAP)


def single_orbit_check(p: PartitionLike, cap: int | None = None) -> bool:
    """BFS from the superstandard tableau under t_2..t_{n-1} reaches all of SYT(p)."""
    p = as_partition(p)
    total = len(syt_words(p, cap))
    rows = p.rows
    start = superstandard(p).entries
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(2, p.n):
            v = bk_on_word(rows, w, i)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == total


def hook_pair_orbit_count(p1: PartitionLike, p2: PartitionLike) -> int:
    """min(r1(p1), c1(p1), r1(p2), c1(p2)) for two hook shapes."""
    p1, p2 = as_partition(p1), as_partition(p2)
    return min(p1.row(1), p1.col(1), p2.row(1), p2.col(1))


def hook_orbit_sizes(p: PartitionLike) -> list[int]:
    """Orbit lengths on SYT(p) x SYT(p) for a hook p: N * C(k-1, i) * C(l-1, i)."""
    p = as_partition(p)
    k = min(p.row(1), p.col(1))
    l = max(p.row(1), p.col(1))
    N = syt_count(p)
    return [N * comb(k - 1, i) * comb(l - 1, i) for i in range(k)]
