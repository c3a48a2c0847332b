import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from braidloop.braid import BraidError, BraidWord, parse_word, reverse
from braidloop.conjugacy import (DISTINGUISHED, INCONCLUSIVE, distinguish, invertibility_test,
                                 tables_equivalent)
from braidloop.invariants import CharacterTable, analyze, character_table_deg1
from conftest import knot_words, rewrite

KNOT_8_9 = "-1 2 -1 -1 -1 2 2 2"


def rename(table, perm):
    entries = {k[:3] + tuple(perm.get(x, x) for x in k[3:]): v for k, v in table.entries.items()}
    circles = [(perm.get(name, name), m, h, p) for name, m, h, p in table.circles]
    return CharacterTable(entries, circles)


def brute_force(table_a, table_b):
    # every class-preserving bijection, tried exhaustively
    names_a = [c[0] for c in table_a.circles]
    cls_a = {c[0]: (c[1], tuple(c[2])) for c in table_a.circles}
    cls_b = {c[0]: (c[1], tuple(c[2])) for c in table_b.circles}
    for image in itertools.permutations([c[0] for c in table_b.circles]):
        m = dict(zip(names_a, image))
        if any(cls_a[x] != cls_b[m[x]] for x in names_a):
            continue
        if rename(table_a, m).nonzero() == table_b.nonzero():
            return m
    return None


def test_knot_8_9_pipeline():
    w = parse_word(KNOT_8_9, 3)
    for l_max in (1, 2):
        v = invertibility_test(w, l_max)
        assert v.outcome == INCONCLUSIVE and v.l == l_max
    v = invertibility_test(w, 3)
    assert v.outcome == DISTINGUISHED and v.l == 3 and v.witness
    assert "bijection" in v.witness
    a, b = analyze(w, 3), analyze(reverse(w), 3)
    ta, tb = character_table_deg1(a), character_table_deg1(b)
    assert tables_equivalent(ta, tb) is None
    assert brute_force(ta, tb) is None


def test_identity_bijection():
    t = character_table_deg1(analyze(parse_word("2 -1", 3), 2))
    assert tables_equivalent(t, t) == {c[0]: c[0] for c in t.circles}


def test_permuted_names_found():
    t = character_table_deg1(analyze(parse_word("2 -1", 3), 3))
    groups = {}
    for name, m, h, _ in t.circles:
        groups.setdefault((m, tuple(h)), []).append(name)
    rng = random.Random(1)
    perm = {}
    for names in groups.values():
        shuffled = names[:]
        rng.shuffle(shuffled)
        perm.update(zip(names, shuffled))
    moved = rename(t, perm)
    bij = tables_equivalent(t, moved)
    assert bij is not None
    assert rename(t, bij).nonzero() == moved.nonzero()
    assert brute_force(t, moved) is not None


@settings(max_examples=8)
@given(knot_words(n_min=3, n_max=4, c_max=6), knot_words(n_min=3, n_max=4, c_max=6))
def test_search_agrees_with_brute_force(w1, w2):
    if w1.n != w2.n:
        return
    ta = character_table_deg1(analyze(w1, 2))
    tb = character_table_deg1(analyze(w2, 2))
    if len(ta.circles) > 7 or len(ta.circles) != len(tb.circles):
        return
    assert (tables_equivalent(ta, tb) is None) == (brute_force(ta, tb) is None)


@settings(max_examples=10)
@given(knot_words(n_min=3, n_max=4, c_max=6), knot_words(n_min=3, n_max=4, c_max=6))
def test_symmetric_outcome(w1, w2):
    if w1.n != w2.n:
        return
    a, b = distinguish(w1, w2, 2), distinguish(w2, w1, 2)
    assert (a.outcome, a.l) == (b.outcome, b.l)


def test_self_is_inconclusive():
    for text in ("1 -2 -3", KNOT_8_9):
        w = parse_word(text, None)
        assert distinguish(w, w, 2).outcome == INCONCLUSIVE


def test_trivial_reverses():
    assert invertibility_test(BraidWord(2, (1,)), 3).outcome == INCONCLUSIVE
    assert invertibility_test(parse_word("2 -1", 3), 3).outcome == INCONCLUSIVE


def test_mismatched_strands():
    with pytest.raises(BraidError):
        distinguish(parse_word("1"), parse_word("1 -2 -3"), 1)


def test_different_knots_distinguished():
    v = distinguish(parse_word("1 1 1"), parse_word("-1 -1 -1"), 1)
    assert v.distinguished and v.l == 1 and v.witness


@settings(max_examples=8)
@given(knot_words(n_min=3, n_max=5, c_max=8), st.integers(0, 2**32 - 1))
def test_rewrites_never_distinguished(w, seed):
    rng = random.Random(seed)
    w2 = w
    for _ in range(3):
        w2, _ = rewrite(w2, rng)
    assert distinguish(w, w2, 2).outcome == INCONCLUSIVE


def test_deterministic():
    w = parse_word(KNOT_8_9, 3)
    a, b = invertibility_test(w, 3), invertibility_test(w, 3)
    assert (a.outcome, a.l, a.witness, a.details) == (b.outcome, b.l, b.witness, b.details)
