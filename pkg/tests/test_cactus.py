import pytest
from hypothesis import given, strategies as st

from cactus_syt.cactus import (
    BK,
    S,
    apply_word,
    bender_knuth,
    bk_prefix_word,
    cactus_generator,
    evacuate,
    interval_images,
    parse_word,
    partial_schutzenberger,
    verify_bk_identity,
    verify_cactus_relations,
)
from cactus_syt.partition import partitions, syt_count
from cactus_syt.tableau import StandardTableau, enumerate_syt, tableau_at, transpose_tableau

import oracles


def as_tuple(t):
    return tuple(map(tuple, t.rows))


def test_parse_word():
    assert parse_word("t2 t3 s1:4").letters == (BK(2), BK(3), S(1, 4))
    assert parse_word("t2t4").letters == (BK(2), BK(4))
    assert str(parse_word("t2 s1:3")) == "t2 s1:3"
    assert parse_word("").letters == ()
    for bad in ("x1", "t0", "s3:2", "t2 q"):
        with pytest.raises(ValueError):
            parse_word(bad)
    with pytest.raises(ValueError):
        parse_word("t5").check(5)


def test_bender_knuth_examples():
    t = StandardTableau.from_rows([[1, 2], [3]])
    assert bender_knuth(t, 2).rows == [[1, 3], [2]]
    assert bender_knuth(t, 1) == t
    u = StandardTableau.from_rows([[1, 2, 4], [3, 5]])
    assert bender_knuth(u, 3).rows == [[1, 2, 3], [4, 5]]
    assert bender_knuth(u, 4).rows == [[1, 2, 5], [3, 4]]
    assert bender_knuth(u, 2).rows == [[1, 3, 4], [2, 5]]
    assert bender_knuth(u, 1) == u


def test_bender_knuth_matches_oracle():
    for n in range(2, 9):
        for p in partitions(n):
            for t in enumerate_syt(p):
                for i in range(1, n):
                    assert as_tuple(bender_knuth(t, i)) == oracles.bk(as_tuple(t), i)


def test_evacuate_examples():
    t = StandardTableau.from_rows([[1, 2], [3, 4]])
    assert evacuate(t) == t
    # [DERIVED] frozen from the brute-force evacuation oracle
    assert evacuate(StandardTableau.from_rows([[1, 2, 4], [3, 5]])).rows == [[1, 3, 5], [2, 4]]
    assert evacuate(StandardTableau.from_rows([[1, 2, 3], [4, 5]])).rows == [[1, 2, 5], [3, 4]]


def test_evacuation_matches_oracle():
    for n in range(1, 9):
        for p in partitions(n):
            for t in enumerate_syt(p):
                assert as_tuple(evacuate(t)) == oracles.evacuation(as_tuple(t))


def test_partial_schutzenberger_matches_oracle():
    for n in range(1, 8):
        for p in partitions(n):
            for t in enumerate_syt(p):
                for k in range(1, n + 1):
                    assert as_tuple(partial_schutzenberger(t, k)) == \
                        oracles.prefix_evacuation(as_tuple(t), k)


def test_generator_words():
    assert str(bk_prefix_word(3)) == "t1 t2 t1"
    assert str(bk_prefix_word(4)) == "t1 t2 t1 t3 t2 t1"
    assert bk_prefix_word(1).letters == ()


def test_interval_generator_locality_and_involution():
    for n in range(2, 9):
        for p in partitions(n):
            for t in enumerate_syt(p):
                for i in range(1, n + 1):
                    for j in range(i + 1, n + 1):
                        u = cactus_generator(t, i, j)
                        assert cactus_generator(u, i, j) == t
                        for v in list(range(1, i)) + list(range(j + 1, n + 1)):
                            assert u.position(v) == t.position(v)
                        if i == 1:
                            assert u == partial_schutzenberger(t, j)
                        if j == i + 1:
                            # a two-box skew piece rectifies to a shape that
                            # evacuation fixes, so s_[i,i+1] is trivial
                            assert u == t


def test_interval_generator_is_skew_reversal():
    # rectify the skew subtableau on i..j, evacuate, slide back
    for n in range(2, 8):
        for p in partitions(n):
            for t in enumerate_syt(p):
                for i in range(1, n + 1):
                    for j in range(i + 1, n + 1):
                        assert as_tuple(cactus_generator(t, i, j)) == \
                            oracles.skew_reversal(as_tuple(t), i, j)


def test_shifted_bk_word_is_not_an_interval_generator():
    # t2 (t3 t2) on 1 2 4 / 3 differs from s_[2,4]
    t = StandardTableau.from_rows([[1, 2, 4], [3]])
    assert apply_word(t, "t2 t3 t2") != cactus_generator(t, 2, 4)


def test_apply_word_left_to_right():
    t = StandardTableau.from_rows([[1, 2, 3], [4, 5]])
    step = bender_knuth(bender_knuth(t, 3), 2)
    assert apply_word(t, "t3 t2") == step
    assert apply_word(t, "") == t
    with pytest.raises(ValueError):
        apply_word(t, "t5")


def test_transpose_equivariance():
    for n in range(2, 8):
        for p in partitions(n):
            for t in enumerate_syt(p):
                tt = transpose_tableau(t)
                assert transpose_tableau(evacuate(t)) == evacuate(tt)
                for i in range(1, n):
                    assert transpose_tableau(bender_knuth(t, i)) == bender_knuth(tt, i)


def test_interval_images_are_involutions():
    import numpy as np
    for p in partitions(6):
        ident = np.arange(syt_count(p))
        for i in range(1, 7):
            for j in range(i + 1, 7):
                img = interval_images(p, i, j).astype(np.int64)
                assert np.array_equal(img[img], ident)


def test_verifiers():
    for n in range(1, 7):
        for p in partitions(n):
            assert verify_bk_identity(p).ok
            assert verify_cactus_relations(p).ok
    rep = verify_cactus_relations((3, 2))
    assert rep.checks > 0 and rep.to_dict()["counterexample"] is None


@given(st.integers(3, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))), st.data())
def test_involutions_random(p, data):
    t = tableau_at(p, data.draw(st.integers(0, syt_count(p) - 1)))
    i = data.draw(st.integers(1, p.n - 1))
    assert bender_knuth(bender_knuth(t, i), i) == t
    assert evacuate(evacuate(t)) == t
    assert evacuate(t).shape == t.shape
    # reversing a BK word gives its inverse
    w = bk_prefix_word(p.n)
    rev = " ".join(reversed(str(w).split()))
    assert apply_word(apply_word(t, w), rev) == t


def test_identity_under_both_composition_orders():
    for n in range(1, 8):
        for p in partitions(n):
            for t in enumerate_syt(p):
                for i in range(1, n + 1):
                    w = str(bk_prefix_word(i))
                    rev = " ".join(reversed(w.split()))
                    s = partial_schutzenberger(t, i)
                    assert apply_word(t, w) == s == apply_word(t, rev)
                if n > 1:
                    assert apply_word(t, f"s1:{n}") == evacuate(t)
