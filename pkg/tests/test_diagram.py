import random

import pytest
from hypothesis import given, strategies as st

from braidloop.braid import BraidWord, parse_word, transform
from braidloop.diagram import (NotAKnotError, build_diagram, gauss_diagram, gauss_from_tokens,
                               homological_marking, smoothing_marking, w_invariant, w_vector)
from braidloop.loop import r3_apply, r3_valid
from conftest import knot_words, rewrite


def test_build_diagram():
    d = build_diagram(parse_word("2 -1", 3))
    assert len(d.ids) == 2
    assert len(build_diagram(parse_word("1 -2 -3")).ids) == 3
    with pytest.raises(NotAKnotError, match="closure is a link"):
        build_diagram(parse_word("1 2 1"))


def test_single_crossing():
    g = gauss_diagram(build_diagram(BraidWord(2, (1,))))
    (a,) = g.arrows
    assert a.writhe == 1 and a.marking == 1 and a.foot_time != a.head_time
    assert w_invariant(g, 1) == 1


def test_two_letter_three_braid_markings():
    # both crossings of this closure lie on one component loop of marking 2;
    # the two markings 1 and 2 show up only on the trace circles of the loop
    d = build_diagram(parse_word("2 -1", 3))
    assert [homological_marking(d, x) for x in d.ids] == [2, 2]
    assert w_vector(d.word) == (0, 0)


def test_odd_powers_in_b2():
    for k in range(4):
        d = build_diagram(BraidWord(2, (1,) * (2 * k + 1)))
        assert all(homological_marking(d, x) == 1 for x in d.ids)


def test_w_of_four_strand_word():
    w = parse_word("1 -2 -3")
    g = gauss_diagram(build_diagram(w))
    recount = {}
    for k, t in enumerate(w.letters):
        m = smoothing_marking(w.letters, w.n, k)
        recount[m] = recount.get(m, 0) + (1 if t > 0 else -1)
    assert w_invariant(g, 1) == recount.get(1, 0) == 0
    assert w_invariant(g, 2) == recount.get(2, 0) == -1


@given(knot_words(n_min=2, n_max=6, c_max=10))
def test_timestamps_and_marking_range(w):
    g = gauss_from_tokens(w.letters, w.n)
    times = sorted(t for a in g.arrows for t in (a.foot_time, a.head_time))
    assert times == list(range(2 * len(w)))
    for a in g.arrows:
        assert 1 <= a.marking <= w.n - 1
        assert a.writhe == (1 if w.letters[a.letter] > 0 else -1)


@given(knot_words(n_min=2, n_max=6, c_max=10))
def test_marking_matches_smoothing(w):
    g = gauss_from_tokens(w.letters, w.n)
    for a in g.arrows:
        assert a.marking == smoothing_marking(w.letters, w.n, a.letter)


@given(knot_words(n_min=2, n_max=6, c_max=10))
def test_w_symmetry(w):
    v = w_vector(w)
    assert all(v[a - 1] == v[w.n - a - 1] for a in range(1, w.n))


@given(knot_words(n_min=2, n_max=5), st.integers(0, 2**32 - 1))
def test_w_invariant_under_rewrites(w, seed):
    rng = random.Random(seed)
    w2 = w
    for _ in range(4):
        w2, _ = rewrite(w2, rng)
    assert w_vector(w2) == w_vector(w)
    assert w_vector(transform(w, "flip")) == w_vector(w)


@given(knot_words(n_min=2, n_max=5), st.integers(0, 50), st.integers(0, 2**32 - 1))
def test_r2_pair_has_equal_markings(w, p, seed):
    rng = random.Random(seed)
    p = p % (len(w) + 1)
    k = rng.choice((1, -1)) * rng.randint(1, w.n - 1)
    letters = w.letters[:p] + (k, -k) + w.letters[p:]
    g = gauss_from_tokens(letters, w.n)
    assert g.arrows[p].marking == g.arrows[p + 1].marking


@given(knot_words(n_min=3, n_max=5, c_max=10), st.integers(0, 2**32 - 1))
def test_markings_survive_moves(w, seed):
    rng = random.Random(seed)
    letters = list(w.letters)
    ids = list(range(len(letters)))
    before = gauss_from_tokens(letters, w.n, ids).markings()
    triangles = [p for p in range(len(letters) - 2) if r3_valid(letters[p:p + 3])]
    distant = [p for p in range(len(letters) - 1) if abs(abs(letters[p]) - abs(letters[p + 1])) >= 2]
    if triangles:
        p = rng.choice(triangles)
        letters[p:p + 3] = r3_apply(letters[p:p + 3])
        ids[p:p + 3] = ids[p:p + 3][::-1]
    elif distant:
        p = rng.choice(distant)
        letters[p], letters[p + 1] = letters[p + 1], letters[p]
        ids[p], ids[p + 1] = ids[p + 1], ids[p]
    after = gauss_from_tokens(letters, w.n, ids).markings()
    assert before == after


def test_seam_independence():
    w = parse_word("1 -2 -3 2 2 -1 -2", 4)
    for s in range(len(w)):
        shifted = transform(w, "shift", s)
        ids = list(range(s, len(w))) + list(range(s))
        m = gauss_from_tokens(shifted.letters, w.n, ids).markings()
        assert m == gauss_from_tokens(w.letters, w.n).markings()
