"""Non-invertibility of the 3-braid closure -1 2 -1 -1 -1 2 2 2 (knot 8_9).

Prints the trace circles and the verdict for l = 1, 2, 3.

    python3 scripts/invertibility_8_9.py
"""

from collections import Counter

from braidloop.braid import parse_word, reverse
from braidloop.conjugacy import invertibility_test
from braidloop.invariants import analyze, character_table_deg1

WORD = parse_word("-1 2 -1 -1 -1 2 2 2", 3)


def main():
    print(f"word {WORD}, reverse {reverse(WORD)}")
    for l in (1, 2, 3):
        a, b = analyze(WORD, l), analyze(reverse(WORD), l)
        marks = Counter(c.marking for c in a.trace.circles)
        ta, tb = character_table_deg1(a), character_table_deg1(b)
        print(f"l={l}: circles by marking {dict(sorted(marks.items()))}, "
              f"nonzero characters {len(ta.nonzero())} vs {len(tb.nonzero())}")
        verdict = invertibility_test(WORD, l)
        print(f"  verdict {verdict}" + (f": {verdict.witness}" if verdict.witness else ""))


if __name__ == "__main__":
    main()
