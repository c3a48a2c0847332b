"""Score every candidate sign rule for R3 events against reference values.

A rule is (base, use_order): sign = base * direction, negated when
use_order is set and the traversal meets the strands out of entry order.
Only one candidate passes every check; that one is frozen in classify.py.

    python3 scripts/calibrate_signs.py
"""

import itertools
import random

from braidloop.braid import parse_word, random_knot
from braidloop.diagram import w_vector
from braidloop.invariants import MINUS, PLUS, possible_types
from braidloop.loop import canonical_loop
from braidloop.classify import triple_events


def gamma(word, options, l=1):
    table = {k: 0 for k in possible_types(word.n)}
    for e in triple_events(canonical_loop(word, l), sign_options=options):
        table[e.key] += e.sign
    return table


def checks(options, rng):
    out = {}
    g = gamma(parse_word("1 -2 -3"), options)
    out["four-strand values"] = (g[(MINUS, 1, 2)], g[(PLUS, 2, 3)], g[(MINUS, 2, 1)],
                                 g[(PLUS, 3, 2)]) == (-1, -1, 1, 1)
    g1 = gamma(parse_word("3 2 1 2 2"), options)
    g2 = gamma(parse_word("-3 2 -1 -2 -2"), options)
    out["cabled values"] = (g1[(MINUS, 2, 1)], g2[(MINUS, 2, 1)]) == (1, -3)
    words = [random_knot(rng, rng.choice((4, 5)), rng.randint(3, 10)) for _ in range(20)]
    tables = [gamma(w, options) for w in words]
    out["antisymmetry"] = all(v + t[(k, b, a)] == 0 for t in tables for (k, a, b), v in t.items())
    out["bridge to W"] = all(t[(MINUS, 2, 1)] == w_vector(w)[0] - w_vector(w)[1]
                             for w, t in zip(words, tables) if w.n == 4)
    inv = True
    for w, t in zip(words[:8], tables):
        k = rng.choice((1, -1)) * rng.randint(1, w.n - 1)
        inv &= gamma(w.with_letters((k,) + w.letters + (-k,)), options) == t
    out["conjugation invariance"] = inv
    return out


def main():
    rows = []
    for base, use_order in itertools.product((1, -1), (False, True)):
        opts = {"base": base, "use_order": use_order}
        res = checks(opts, random.Random(0))
        rows.append((base, use_order, res))
    names = list(rows[0][2])
    print("base  order  " + "  ".join(names))
    for base, use_order, res in rows:
        marks = "  ".join(("yes" if res[k] else "no").ljust(len(k)) for k in names)
        print(f"{base:+d}    {str(use_order):<5}  {marks}")
    winners = [(b, u) for b, u, r in rows if all(r.values())]
    print(f"passing rules: {winners}")


if __name__ == "__main__":
    main()
