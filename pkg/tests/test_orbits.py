from itertools import product

import numpy as np
import pytest

from cactus_syt.errors import CapExceeded
from cactus_syt.orbits import (
    hook_orbit_sizes,
    hook_pair_orbit_count,
    is_viable_pair,
    is_viable_triple,
    min_label_components,
    orbit_decompose,
    shared_first_row,
    single_orbit_check,
)
from cactus_syt.partition import is_hook, partitions
from cactus_syt.tableau import StandardTableau, enumerate_syt

import oracles


def canonical_space(shape):
    ts = oracles.syt_by_removal(shape)
    return sorted(ts, key=lambda t: tuple(v for row in t for v in row))


def oracle_partition(shapes):
    n = sum(shapes[0])
    spaces = [canonical_space(s) for s in shapes]
    index = [{t: k for k, t in enumerate(sp)} for sp in spaces]
    radices = [len(sp) for sp in spaces]
    out = []
    for orb in oracles.orbits_bfs(spaces, n):
        codes = set()
        for x in orb:
            c = 0
            for k, t in enumerate(x):
                c = c * radices[k] + index[k][t]
            codes.add(c)
        out.append(sorted(codes))
    return out


def ours_partition(dec):
    groups = [[] for _ in range(dec.num_orbits)]
    for code, o in enumerate(dec.orbit_id.tolist()):
        groups[o].append(code)
    return groups


def test_examples():
    dec = orbit_decompose([(3, 1), (3, 1)])
    assert dec.sizes == [3, 6]
    assert [lab["shared_first_row"] for lab in dec.labels] == [3, 2]
    dec = orbit_decompose([(3, 2, 1), (3, 2, 1)])
    assert dec.sizes == [16, 224, 16]
    assert dec.labels[0]["equal_pairs"] == [[0, 1]]
    assert dec.labels[2]["transposed_pairs"] == [[0, 1]]
    assert dec.viable_orbits() == [1]
    dec = orbit_decompose([(3, 2)] * 3)
    assert dec.sizes == [5, 20, 20, 20, 60]
    assert dec.viable_single_orbit() and dec.viable_orbits() == [4]
    assert dec.to_dict()["num_orbits"] == 5


def test_union_find_matches_bfs_pairs():
    for n in range(2, 7):
        parts = [p.rows for p in partitions(n)]
        for a, b in product(parts, repeat=2):
            assert ours_partition(orbit_decompose([a, b])) == oracle_partition([a, b]), (a, b)


def test_union_find_matches_bfs_triples():
    for shapes in ([(3, 1), (2, 2), (2, 1, 1)], [(3, 2)] * 3, [(3, 2), (2, 2, 1), (4, 1)],
                   [(2, 2, 1, 1), (3, 2, 1), (4, 2)], [(2, 2)] * 3):
        assert ours_partition(orbit_decompose(shapes)) == oracle_partition(shapes), shapes


def test_min_label_components():
    # two cycles 0-2-4 and 1-3, plus a fixed point 5
    g = np.array([2, 3, 4, 1, 0, 5])
    labels = min_label_components(6, [lambda: g])
    assert labels.tolist() == [0, 1, 0, 1, 0, 5]
    assert min_label_components(0, []).size == 0


def test_hook_invariant_is_complete():
    for n in range(3, 8):
        hooks = [p for p in partitions(n) if is_hook(p)]
        for a, b in product(hooks, repeat=2):
            dec = orbit_decompose([a, b])
            values = [lab["shared_first_row"] for lab in dec.labels]
            assert all(not lab["inconsistent"] for lab in dec.labels)
            assert len(set(values)) == len(values) == hook_pair_orbit_count(a, b)


def test_hook_orbit_sizes_formula():
    assert hook_orbit_sizes((3, 1)) == [3, 6]
    assert hook_orbit_sizes((5,)) == [1]
    assert sum(hook_orbit_sizes((4, 1, 1, 1))) == 20 ** 2


def test_tableau_predicates():
    a = StandardTableau.from_rows([[1, 2, 4], [3]])
    b = StandardTableau.from_rows([[1, 3, 4], [2]])
    assert shared_first_row(a, b) == frozenset({1, 4})
    with pytest.raises(ValueError):
        shared_first_row(StandardTableau.from_rows([[1, 2], [3, 4]]), a)
    p, q = enumerate_syt((3, 2, 1))[:2]
    assert is_viable_pair(p, q) and not is_viable_pair(p, p)
    t = StandardTableau.from_rows([[1, 2], [3, 4]])
    u = StandardTableau.from_rows([[1, 3], [2, 4]])
    assert not is_viable_pair(t, u)
    r = enumerate_syt((3, 2, 1))[2]
    assert is_viable_triple(p, q, r)
    assert not is_viable_triple(a, b, t)
    with pytest.raises(ValueError):
        is_viable_pair(p, a)


def test_labels_are_orbit_invariants():
    for shapes in ([(3, 3), (2, 2, 2)], [(4, 2), (4, 2)], [(3, 2, 1), (3, 2, 1), (4, 1, 1)]):
        dec = orbit_decompose(shapes)
        assert all(not lab["inconsistent"] for lab in dec.labels)


def test_single_orbit_check():
    for n in range(1, 9):
        for p in partitions(n):
            assert single_orbit_check(p)


def test_caps_and_validation():
    with pytest.raises(CapExceeded):
        orbit_decompose([(3, 2, 1)] * 2, cap=100)
    with pytest.raises(ValueError):
        orbit_decompose([(3, 1), (2, 1)])
    with pytest.raises(ValueError):
        orbit_decompose([])
