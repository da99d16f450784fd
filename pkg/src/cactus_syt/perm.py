"""Permutations of SYT(shape) induced by cactus-group elements.

Permutations are numpy index arrays: ``images[k]`` is the index of the image
of the k-th tableau in canonical order. ``compose(p, q)`` applies ``p`` first.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial

import numpy as np

from .cactus import BK, GeneratorWord, index_dtype, parse_word, word_images
from .errors import CapExceeded
from .partition import Partition, PartitionLike, as_partition, syt_count

DEFAULT_GROUP_CAP = 200
DEFAULT_SEED = 20240917


@dataclass(frozen=True, eq=False)
class TableauPermutation:
    shape: Partition
    images: np.ndarray

    def __post_init__(self):
        imgs = np.asarray(self.images)
        if imgs.ndim != 1 or not np.array_equal(np.sort(imgs), np.arange(len(imgs))):
            raise ValueError("images is not a permutation")
        object.__setattr__(self, "images", imgs.astype(index_dtype(len(imgs)), copy=False))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __eq__(self, other):
        return (isinstance(other, TableauPermutation) and self.shape == other.shape
                and np.array_equal(self.images, other.images))

    def __hash__(self):
        return hash((self.shape, self.images.tobytes()))

    def __mul__(self, other: "TableauPermutation") -> "TableauPermutation":
        """``self * other`` applies self first, then other."""
        return compose(self, other)

    def inverse(self) -> "TableauPermutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=self.images.dtype)
        return TableauPermutation(self.shape, inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def cycles(self) -> list[list[int]]:
        return _cycles(self.images)


def compose(p: TableauPermutation, q: TableauPermutation) -> TableauPermutation:
    if p.shape != q.shape:
        raise ValueError("permutations act on different shapes")
    return TableauPermutation(p.shape, q.images[p.images])


def identity(p: PartitionLike) -> TableauPermutation:
    p = as_partition(p)
    return TableauPermutation(p, np.arange(syt_count(p)))


def permutation_of_word(p: PartitionLike, w: GeneratorWord | str,
                        cap: int | None = None) -> TableauPermutation:
    p = as_partition(p)
    if isinstance(w, str):
        w = parse_word(w)
    return TableauPermutation(p, word_images(p, w, cap))


def _cycles(images) -> list[list[int]]:
    imgs = np.asarray(images).tolist()
    seen = bytearray(len(imgs))
    out = []
    for start in range(len(imgs)):
        if seen[start]:
            continue
        cyc = []
        k = start
        while not seen[k]:
            seen[k] = 1
            cyc.append(k)
            k = imgs[k]
        out.append(cyc)
    return out


def fixed_points(perm: TableauPermutation) -> int:
    return int(np.count_nonzero(perm.images == np.arange(perm.degree)))


def cycle_type(perm: TableauPermutation) -> list[int]:
    """Cycle lengths, largest first (fixed points included)."""
    return sorted((len(c) for c in perm.cycles()), reverse=True)


def parity(perm: TableauPermutation) -> str:
    """'even' or 'odd': sign via cycle traversal (N - #cycles)."""
    return parity_of_images(perm.images)


def parity_of_images(images) -> str:
    n_cycles = len(_cycles(images))
    return "odd" if (len(images) - n_cycles) % 2 else "even"


def involution_parity(n_points: int, n_fixed: int) -> str:
    """Parity of an involution from its fixed-point count: (N - F)/2 transpositions."""
    moved = n_points - n_fixed
    if moved % 2:
        raise ValueError("an involution moves an even number of points")
    return "odd" if (moved // 2) % 2 else "even"


# stabilizer chain ------------------------------------------------------------


class StabilizerChain:
    """Schreier-Sims stabilizer chain for a permutation group on range(degree).

    Strong generators are found by sifting random group elements (product
    replacement) and the chain is then completed deterministically by sifting
    Schreier generators, unless its order already meets ``upper_bound``.
    Base points are chosen at random among the points a new generator moves;
    everything is driven by one seeded RNG, so results are reproducible.
    """

    def __init__(self, gens, degree: int, seed: int = DEFAULT_SEED,
                 upper_bound: int | None = None, patience: int = 40):
        self.degree = degree
        self.rng = random.Random(seed)
        self.ident = np.arange(degree, dtype=np.int64)
        self.gens = [np.asarray(g, dtype=np.int64) for g in gens]
        self.gens = [g for g in self.gens if not np.array_equal(g, self.ident)]
        self.base: list[int] = []
        self.strong: list[list[np.ndarray]] = []
        # transversal[i][beta] = element mapping base[i] to beta
        self.transversal: list[dict[int, np.ndarray]] = []
        self.certified = False
        for g in self.gens:
            self._add(g)
        if self.gens:
            self._random_phase(upper_bound, patience)
        if upper_bound is not None and self.order() == upper_bound:
            self.certified = True
        else:
            self._complete()
            self.certified = True

    def order(self) -> int:
        out = 1
        for t in self.transversal:
            out *= len(t)
        return out

    def sift(self, g: np.ndarray):
        """Return (residue, level): residue is identity iff g is in the group."""
        h = g
        for lvl, b in enumerate(self.base):
            beta = int(h[b])
            u = self.transversal[lvl].get(beta)
            if u is None:
                return h, lvl
            uinv = np.empty_like(u)
            uinv[u] = self.ident
            h = uinv[h]
        return h, len(self.base)

    def contains(self, g) -> bool:
        h, _ = self.sift(np.asarray(g, dtype=np.int64))
        return bool(np.array_equal(h, self.ident))

    def _add(self, g: np.ndarray) -> bool:
        h, lvl = self.sift(g)
        if np.array_equal(h, self.ident):
            return False
        if lvl == len(self.base):
            moved = np.flatnonzero(h != self.ident).tolist()
            b = self.rng.choice(moved)
            self.base.append(b)
            self.strong.append([])
            self.transversal.append({b: self.ident})
        for j in range(lvl + 1):
            self.strong[j].append(h)
            self._extend_orbit(j, h)
        return True

    def _extend_orbit(self, lvl: int, new: np.ndarray) -> None:
        trans = self.transversal[lvl]
        gens = self.strong[lvl]
        frontier = []
        for beta, u in list(trans.items()):
            gamma = int(new[beta])
            if gamma not in trans:
                trans[gamma] = new[u]
                frontier.append(gamma)
        while frontier:
            nxt = []
            for beta in frontier:
                u = trans[beta]
                for s in gens:
                    gamma = int(s[beta])
                    if gamma not in trans:
                        trans[gamma] = s[u]
                        nxt.append(gamma)
            frontier = nxt

    def _random_phase(self, upper_bound, patience):
        # product replacement state
        state = [g.copy() for g in self.gens]
        while len(state) < 10:
            state.append(self.gens[len(state) % len(self.gens)].copy())
        acc = self.ident.copy()

        def step():
            nonlocal acc
            i, j = self.rng.sample(range(len(state)), 2)
            if self.rng.random() < 0.5:
                state[i] = state[j][state[i]]
            else:
                state[i] = state[i][state[j]]
            acc = state[i][acc]
            return acc

        for _ in range(50):
            step()
        quiet = 0
        while quiet < patience:
            if upper_bound is not None and self.order() == upper_bound:
                return
            if self._add(step()):
                quiet = 0
            else:
                quiet += 1

    def _complete(self) -> None:
        """Deterministic Schreier-Sims: every Schreier generator must sift."""
        changed = True
        while changed:
            changed = False
            for lvl in range(len(self.base) - 1, -1, -1):
                trans = self.transversal[lvl]
                for beta in sorted(trans):
                    u = trans[beta]
                    for s in list(self.strong[lvl]):
                        su = s[u]
                        v = trans[int(su[self.base[lvl]])]
                        vinv = np.empty_like(v)
                        vinv[v] = self.ident
                        schreier = vinv[su]
                        if self._add(schreier):
                            changed = True
                            break
                    if changed:
                        break
                if changed:
                    break


def generated_group_order(gens, degree: int, seed: int = DEFAULT_SEED,
                          upper_bound: int | None = None) -> int:
    return StabilizerChain(gens, degree, seed=seed, upper_bound=upper_bound).order()


def bk_generators(p: PartitionLike, cap: int | None = None) -> list[TableauPermutation]:
    """Permutations of t_2, ..., t_{n-1} on SYT(p) (t_1 is always trivial)."""
    p = as_partition(p)
    return [permutation_of_word(p, GeneratorWord((BK(i),)), cap) for i in range(2, p.n)]


def exact_group_order(p: PartitionLike, cap: int = DEFAULT_GROUP_CAP,
                      seed: int = DEFAULT_SEED) -> int:
    """Order of the group generated by t_2..t_{n-1} acting on SYT(p)."""
    p = as_partition(p)
    N = syt_count(p)
    if N > cap:
        raise CapExceeded(f"group order of SYT({p})", N, cap)
    gens = bk_generators(p)
    if not gens:
        return 1
    bound = factorial(N)
    if all(parity(g) == "even" for g in gens):
        bound //= 2
    return generated_group_order([g.images for g in gens], N, seed=seed, upper_bound=bound)
