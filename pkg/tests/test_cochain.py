import random

import pytest
from hypothesis import given, settings, strategies as st

from braidloop.braid import parse_word, random_knot
from braidloop.cochain import (ANY_ARROW, TRIANGLE_ONLY, Arrow, Cochain, CochainError,
                               adjacent_configs, check_conditions, evaluate_cochain,
                               format_cochain, naive_evaluate, normalize, parse_cochain,
                               symmetrize)
from braidloop.invariants import MINUS, analyze, gamma_table, possible_types
from conftest import knot_words

DEGREE_ONE = "cochain-v1\ndegree 1; n 4; type -; 1 2\neps 1\nlayout b m t\n"


def random_config(rng, key, degree, n):
    k = degree - 1
    rest = ["m", "t"] + [(i, "foot") for i in range(k)] + [(i, "head") for i in range(k)]
    rng.shuffle(rest)
    return normalize(*key, ["b"] + rest, [Arrow(rng.randint(1, n - 1)) for _ in range(k)])


def random_cochain(rng, key, degree, n, size=3):
    entries = [(rng.choice((1, -1)), random_config(rng, key, degree, n)) for _ in range(size)]
    return Cochain(n, *key, degree, entries)


def test_degree_one_is_gamma():
    a = analyze(parse_word("1 -2 -3"), 1)
    assert evaluate_cochain(a.events, parse_cochain(DEGREE_ONE)) == -1
    g = gamma_table(a)
    for key in possible_types(4):
        for layout in ("b m t", "b t m"):
            c = parse_cochain(f"cochain-v1\ndegree 1; n 4; type {key[0]}; {key[1]} {key[2]}\n"
                              f"eps 1\nlayout {layout}\n")
            total = evaluate_cochain(a.events, c)
            other = "b t m" if layout == "b m t" else "b m t"
            c2 = parse_cochain(f"cochain-v1\ndegree 1; n 4; type {key[0]}; {key[1]} {key[2]}\n"
                               f"eps 1\nlayout {other}\n")
            assert total + evaluate_cochain(a.events, c2) == g[key]


@settings(max_examples=10)
@given(knot_words(n_min=3, n_max=4, c_max=6), st.integers(0, 2**32 - 1))
def test_matches_naive_oracle(w, seed):
    rng = random.Random(seed)
    a = analyze(w, 1)
    for key in possible_types(w.n):
        for d in (2, 3):
            c = random_cochain(rng, key, d, w.n)
            assert evaluate_cochain(a.events, c) == naive_evaluate(a.events, c)


def test_named_arrows_match_naive_oracle():
    rng = random.Random(4)
    a = analyze(parse_word("2 -1 2 -1", 3), 2)
    names = sorted({n for e in a.events for n in e.role_names})
    for key in possible_types(3):
        for _ in range(5):
            cfg = random_config(rng, key, 2, 3)
            arrows = [Arrow(x.marking, rng.choice(names)) for x in cfg.arrows]
            cfg = normalize(cfg.kind, cfg.a, cfg.b, cfg.layout, arrows)
            c = Cochain(3, *key, 2, [(1, cfg)])
            circ = a.trace.circle_of
            assert evaluate_cochain(a.events, c, circ) == naive_evaluate(a.events, c, circ)


def test_high_degree_vanishes():
    rng = random.Random(8)
    for _ in range(5):
        w = random_knot(rng, rng.randint(3, 4), rng.randint(2, 4))
        a = analyze(w, 1)
        d = len(w) + w.n ** 2 - w.n - 1
        for key in possible_types(w.n):
            assert evaluate_cochain(a.events, random_cochain(rng, key, d, w.n, 1)) == 0


def test_round_trip():
    rng = random.Random(2)
    for key in possible_types(4):
        c = random_cochain(rng, key, 3, 4)
        c2 = parse_cochain(format_cochain(c))
        assert c2.entries == c.entries and (c2.kind, c2.a, c2.b, c2.degree) == (c.kind, c.a, c.b, 3)
    named = "cochain-v1\ndegree 2; n 3; type -; 1 1\nnames x1 x1 x2\neps -1\n" \
            "layout b 1 m 1 t\narrow 1 marking 2 from 1 to 3 name x2\n"
    c = parse_cochain(named)
    assert c.role_names == ("x1", "x1", "x2")
    assert c.entries[0][1].arrows[0].name == "x2"
    assert parse_cochain(format_cochain(c)).entries == c.entries


@pytest.mark.parametrize("text, msg", [
    ("degree 1; n 4; type -; 1 2\neps 1\nlayout b m t\n", "header"),
    ("cochain-v1\ndegree x; n 4; type -; 1 2\n", "bad header"),
    ("cochain-v1\ndegree 1; n 4; type *; 1 2\n", "type"),
    ("cochain-v1\ndegree 1; n 4; type -; 1 2\nlayout b m t\n", "before eps"),
    ("cochain-v1\ndegree 1; n 4; type -; 1 2\neps 1\nlayout b m\n", "b, m and t"),
    ("cochain-v1\ndegree 2; n 4; type -; 1 2\neps 1\nlayout b 1 m 1 t\n", "no arrow line"),
    ("cochain-v1\ndegree 2; n 4; type -; 1 2\neps 1\nlayout b 1 m 1 t\n"
     "arrow 1 marking 2 from 0 to 3\n", "endpoints"),
    ("cochain-v1\ndegree 2; n 4; type -; 1 2\neps 1\nlayout b m t\n", "degree"),
    ("cochain-v1\ndegree 1; n 4; type -; 1 2\neps 2\nlayout b m t\n", "coefficients"),
    ("cochain-v1\ndegree 1; n 4; type -; 1 2\nfoo\n", "unknown line"),
])
def test_parse_errors(text, msg):
    with pytest.raises(CochainError, match=msg):
        parse_cochain(text)


def test_adjacency():
    one = parse_cochain(DEGREE_ONE).entries[0][1]
    assert adjacent_configs(one) == set()
    two = parse_cochain("cochain-v1\ndegree 2; n 4; type -; 1 2\neps 1\nlayout b 1 m 1 t\n"
                        "arrow 1 marking 3 from 1 to 3\n").entries[0][1]
    tri = adjacent_configs(two, TRIANGLE_ONLY)
    assert len(tri) == 4
    assert tri <= adjacent_configs(two, ANY_ARROW)
    assert all(c.degree == 2 and c.layout[0] == "b" for c in tri)


def test_conditions():
    text = ("cochain-v1\ndegree 2; n 4; type -; 1 2\neps 1\nlayout b 1 m 1 t\n"
            "arrow 1 marking 3 from 1 to 3\n")
    single = parse_cochain(text)
    rep = check_conditions(single)
    assert not rep.tri and rep.tri_witnesses and rep.t == "unchecked"
    assert check_conditions(symmetrize(single)).tri
    pair = parse_cochain("cochain-v1\ndegree 3; n 4; type -; 1 2\neps 1\n"
                         "layout b 1 2 m 1 2 t\narrow 1 marking 2 from 1 to 4\n"
                         "arrow 2 marking 2 from 2 to 5\n")
    rep = check_conditions(pair)
    assert not rep.tan and rep.tan_witnesses[0][1:] == (0, 1)


def test_symmetrize_is_closed():
    rng = random.Random(6)
    c = symmetrize(random_cochain(rng, (MINUS, 1, 2), 2, 4, 1))
    found = {cfg for _, cfg in c.entries}
    for cfg in found:
        assert adjacent_configs(cfg, ANY_ARROW) <= found
