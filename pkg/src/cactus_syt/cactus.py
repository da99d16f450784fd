"""The cactus group action on standard Young tableaux.

Generators are Bender-Knuth involutions ``t_i`` and interval involutions
``s_[i,j]``. ``s_[1,i]`` is the Schutzenberger involution (evacuation) of the
subtableau holding 1..i; a general ``s_[i,j]`` is the conjugate
``s_[1,j] s_[1,j-i+1] s_[1,j]``.

Words act left to right: the first letter is applied first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .partition import Partition, PartitionLike, as_partition
from .tableau import (
    StandardTableau,
    cell_coords,
    row_offsets,
    syt_words,
    word_index,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class BK:
    i: int

    def __str__(self):
        return f"t{self.i}"


@dataclass(frozen=True)
class S:
    i: int
    j: int

    def __str__(self):
        return f"s{self.i}:{self.j}"


Letter = Union[BK, S]


@dataclass(frozen=True)
class GeneratorWord:
    letters: tuple[Letter, ...] = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        return GeneratorWord(self.letters + tuple(other))

    def __str__(self):
        return " ".join(map(str, self.letters))

    def check(self, n: int) -> None:
        for a in self.letters:
            if isinstance(a, BK):
                if not 1 <= a.i <= n - 1:
                    raise ValueError(f"{a} out of range for n={n}")
            elif not 1 <= a.i < a.j <= n:
                raise ValueError(f"{a} is not an interval inside [1,{n}]")


_TOKEN = re.compile(r"t(\d+)|s(\d+):(\d+)")


def parse_word(text: str) -> GeneratorWord:
    """Parse atoms ``tK`` and ``sI:J``; whitespace between atoms is optional."""
    letters = []
    compact = "".join(text.split())
    pos = 0
    while pos < len(compact):
        m = _TOKEN.match(compact, pos)
        if not m:
            raise ValueError(f"bad generator word {text!r} at {compact[pos:]!r}")
        if m.group(1) is not None:
            if int(m.group(1)) < 1:
                raise ValueError(f"bad generator t{m.group(1)}")
            letters.append(BK(int(m.group(1))))
        else:
            i, j = int(m.group(2)), int(m.group(3))
            if not 1 <= i < j:
                raise ValueError(f"bad interval s{i}:{j}")
            letters.append(S(i, j))
        pos = m.end()
    return GeneratorWord(tuple(letters))


def bk_prefix_word(i: int) -> GeneratorWord:
    """t1 (t2 t1) (t3 t2 t1) ... (t_{i-1} ... t1), which realises s_[1,i]."""
    letters = []
    for k in range(1, i):
        letters.extend(BK(m) for m in range(k, 0, -1))
    return GeneratorWord(tuple(letters))


# word-level kernels -------------------------------------------------------


def bk_on_word(rows: tuple[int, ...], word: Word, i: int) -> Word:
    a = word.index(i)
    b = word.index(i + 1)
    coords = cell_coords(rows)
    (ra, ca), (rb, cb) = coords[a], coords[b]
    if ra == rb or ca == cb:
        return word
    w = list(word)
    w[a], w[b] = i + 1, i
    return tuple(w)


def bk_moves(coords, inv: Sequence[int], i: int) -> bool:
    """Whether t_i moves the tableau with inverse array ``inv`` (inv[v] = flat position of v)."""
    ra, ca = coords[inv[i]]
    rb, cb = coords[inv[i + 1]]
    return ra != rb and ca != cb


def evacuate_prefix(rows: tuple[int, ...], word: Word, m: int) -> Word:
    """Evacuate the subtableau holding 1..m, leaving larger values in place.

    Repeatedly remove the value at (1,1), slide the hole out by jeu de taquin
    (smaller of the right and lower neighbours moves in), and write
    ``m + 1 - removed`` into the box where the hole comes to rest.
    """
    if m <= 1:
        return word
    off = row_offsets(rows)
    k = len(rows)
    live = [[v if v <= m else 0 for v in word[off[r]:off[r + 1]]] for r in range(k)]
    out = list(word)
    for _ in range(m):
        removed = live[0][0]
        r = c = 0
        while True:
            row = live[r]
            right = row[c + 1] if c + 1 < len(row) else 0
            down = live[r + 1][c] if r + 1 < k and c < len(live[r + 1]) else 0
            if not right and not down:
                break
            if not down or (right and right < down):
                row[c] = right
                c += 1
            else:
                row[c] = down
                r += 1
        live[r][c] = 0
        out[off[r] + c] = m + 1 - removed
    return tuple(out)


def interval_on_word(rows: tuple[int, ...], word: Word, i: int, j: int) -> Word:
    if j <= i:
        return word
    if i == 1:
        return evacuate_prefix(rows, word, j)
    w = evacuate_prefix(rows, word, j)
    w = evacuate_prefix(rows, w, j - i + 1)
    return evacuate_prefix(rows, w, j)


def apply_letters(rows: tuple[int, ...], word: Word, letters: Iterable[Letter]) -> Word:
    for a in letters:
        if isinstance(a, BK):
            word = bk_on_word(rows, word, a.i)
        else:
            word = interval_on_word(rows, word, a.i, a.j)
    return word


# public tableau-level operations -------------------------------------------


def bender_knuth(t: StandardTableau, i: int) -> StandardTableau:
    """Swap i and i+1 unless they share a row or a column."""
    if not 1 <= i <= t.n - 1:
        raise ValueError(f"t{i} out of range for n={t.n}")
    return StandardTableau(t.shape, bk_on_word(t.shape.rows, t.entries, i))


def evacuate(t: StandardTableau) -> StandardTableau:
    """Schutzenberger involution of the whole tableau."""
    return StandardTableau(t.shape, evacuate_prefix(t.shape.rows, t.entries, t.n))


def partial_schutzenberger(t: StandardTableau, i: int) -> StandardTableau:
    """s_[1,i]: evacuate the subtableau on values 1..i."""
    if not 1 <= i <= t.n:
        raise ValueError(f"s_[1,{i}] out of range for n={t.n}")
    return StandardTableau(t.shape, evacuate_prefix(t.shape.rows, t.entries, i))


def cactus_generator(t: StandardTableau, i: int, j: int) -> StandardTableau:
    """s_[i,j] for 1 <= i < j <= n."""
    if not 1 <= i < j <= t.n:
        raise ValueError(f"[{i},{j}] is not an interval inside [1,{t.n}]")
    return StandardTableau(t.shape, interval_on_word(t.shape.rows, t.entries, i, j))


def apply_word(t: StandardTableau, w: GeneratorWord | str) -> StandardTableau:
    if isinstance(w, str):
        w = parse_word(w)
    w.check(t.n)
    return StandardTableau(t.shape, apply_letters(t.shape.rows, t.entries, w))


# permutations on the canonical index space ---------------------------------


def index_dtype(size: int) -> np.dtype:
    """Smallest unsigned dtype holding indices in [0, size)."""
    return np.min_scalar_type(max(size - 1, 0))


def action_images(p: PartitionLike, fn: Callable[[tuple[int, ...], Word], Word],
                  cap: int | None = None) -> np.ndarray:
    """images[k] = index of fn(rows, k-th tableau word)."""
    p = as_partition(p)
    ws = syt_words(p, cap)
    idx = word_index(p.rows)
    rows = p.rows
    out = np.fromiter((idx[fn(rows, w)] for w in ws), dtype=np.int64, count=len(ws))
    return out.astype(index_dtype(len(ws)))


def word_images(p: PartitionLike, w: GeneratorWord, cap: int | None = None) -> np.ndarray:
    p = as_partition(p)
    w.check(p.n)
    letters = tuple(w)
    return action_images(p, lambda rows, word: apply_letters(rows, word, letters), cap)


def bk_images(p: PartitionLike, i: int, cap: int | None = None) -> np.ndarray:
    return action_images(p, lambda rows, word: bk_on_word(rows, word, i), cap)


def interval_images(p: PartitionLike, i: int, j: int, cap: int | None = None) -> np.ndarray:
    return action_images(p, lambda rows, word: interval_on_word(rows, word, i, j), cap)


# exhaustive checks ---------------------------------------------------------


@dataclass
class RelationReport:
    shape: Partition
    ok: bool = True
    checks: int = 0
    counterexample: dict | None = None

    def fail(self, **info):
        self.ok = False
        self.counterexample = info

    def to_dict(self) -> dict:
        return {"shape": list(self.shape.rows), "ok": self.ok,
                "checks": self.checks, "counterexample": self.counterexample}


def _first_diff(a: np.ndarray, b: np.ndarray) -> int:
    return int(np.flatnonzero(a != b)[0])


def verify_cactus_relations(p: PartitionLike, cap: int | None = None) -> RelationReport:
    """Check involutivity, disjoint commutation and the nesting relation
    s_[i,j] s_[k,l] s_[i,j] = s_[i+j-l, i+j-k] as permutations of SYT(p)."""
    p = as_partition(p)
    n = p.n
    rep = RelationReport(p)
    N = len(syt_words(p, cap))
    ident = np.arange(N)
    ivs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    s = {iv: interval_images(p, *iv, cap=cap).astype(np.int64) for iv in ivs}

    def get(i, j):
        return s[(i, j)] if i < j else ident

    for iv in ivs:
        rep.checks += 1
        sq = s[iv][s[iv]]
        if not np.array_equal(sq, ident):
            rep.fail(relation="involution", interval=list(iv), index=_first_diff(sq, ident))
            return rep
    for a in ivs:
        for b in ivs:
            x, y = s[a], s[b]
            if a[1] < b[0] or b[1] < a[0]:
                rep.checks += 1
                xy, yx = y[x], x[y]
                if not np.array_equal(xy, yx):
                    rep.fail(relation="commute", intervals=[list(a), list(b)],
                             index=_first_diff(xy, yx))
                    return rep
            elif a[0] <= b[0] and b[1] <= a[1]:
                rep.checks += 1
                i, j = a
                k, l = b
                lhs = x[y[x]]
                rhs = get(i + j - l, i + j - k)
                if not np.array_equal(lhs, rhs):
                    rep.fail(relation="nesting", intervals=[list(a), list(b)],
                             index=_first_diff(lhs, rhs))
                    return rep
    return rep


def verify_bk_identity(p: PartitionLike, cap: int | None = None) -> RelationReport:
    """Check s_[1,i] = t1 (t2 t1) ... (t_{i-1} ... t1) on every tableau, every i <= n."""
    p = as_partition(p)
    rep = RelationReport(p)
    rows = p.rows
    for w in syt_words(p, cap):
        for i in range(1, p.n + 1):
            rep.checks += 1
            lhs = evacuate_prefix(rows, w, i)
            rhs = apply_letters(rows, w, bk_prefix_word(i))
            if lhs != rhs:
                rep.fail(relation="bk_identity", i=i, tableau=list(w))
                return rep
    return rep
