"""Refuting conjugacy by comparing loop invariants of two braids.

For each rotation count l the data are compared cheapest first: circle
counts per (marking, homology), the W_a, the degree-one cocycles, and finally
the character tables up to a bijection of circle names that preserves
markings and homology classes.  Any mismatch proves the closures are not
isotopic in the solid torus.  Agreement proves nothing.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .braid import BraidError, BraidWord, reverse
from .diagram import w_vector
from .invariants import Analysis, CharacterTable, analyze, character_table_deg1, gamma_table

DISTINGUISHED = "Distinguished"
INCONCLUSIVE = "Inconclusive"


@dataclass
class Verdict:
    outcome: str
    l: int
    witness: str = ""
    details: list[dict] = field(default_factory=list)

    @property
    def distinguished(self) -> bool:
        return self.outcome == DISTINGUISHED

    def __str__(self) -> str:
        return f"{self.outcome}({self.l})"


def _groups(circles) -> dict[str, tuple]:
    return {name: (mark, tuple(hom)) for name, mark, hom, _ in circles}


def tables_equivalent(table_a: CharacterTable, table_b: CharacterTable) -> dict[str, str] | None:
    """A class-preserving renaming of circles carrying one table onto the other."""
    cls_a, cls_b = _groups(table_a.circles), _groups(table_b.circles)
    if Counter(cls_a.values()) != Counter(cls_b.values()):
        return None
    ent_a, ent_b = table_a.nonzero(), table_b.nonzero()
    if Counter(ent_a.values()) != Counter(ent_b.values()):
        return None

    def signatures(entries, names):
        sig = {x: Counter() for x in names}
        for key, v in entries.items():
            head, slots = key[:3], key[3:]
            for x in set(slots):
                sig[x][(head, tuple(s == x for s in slots), v)] += 1
        return sig

    sig_a, sig_b = signatures(ent_a, cls_a), signatures(ent_b, cls_b)
    order = sorted(cls_a, key=lambda x: (cls_a[x], x))
    candidates = {x: [y for y in sorted(cls_b) if cls_b[y] == cls_a[x] and sig_b[y] == sig_a[x]]
                  for x in order}
    by_name: dict[str, list] = {x: [] for x in cls_a}
    for key in ent_a:
        for x in set(key[3:]):
            by_name[x].append(key)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def consistent(x: str) -> bool:
        for key in by_name[x]:
            if all(s in mapping for s in key[3:]):
                image = key[:3] + tuple(mapping[s] for s in key[3:])
                if ent_b.get(image) != ent_a[key]:
                    return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in candidates[x]:
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            if consistent(x) and rec(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if rec(0) else None


def _compare(a: Analysis, b: Analysis) -> tuple[str, dict]:
    record: dict = {"l": a.l}
    ca = Counter((c.marking, c.homology) for c in a.trace.circles)
    cb = Counter((c.marking, c.homology) for c in b.trace.circles)
    record["circles"] = [len(a.trace.circles), len(b.trace.circles)]
    if ca != cb:
        return (f"circle classes differ: {sorted(ca.items())} vs {sorted(cb.items())}", record)
    wa, wb = w_vector(a.word), w_vector(b.word)
    if wa != wb:
        return f"W_a differ: {list(wa)} vs {list(wb)}", record
    ga, gb = gamma_table(a), gamma_table(b)
    if ga != gb:
        diff = sorted(k for k in ga if ga[k] != gb.get(k, 0))
        return f"degree-one cocycles differ at {diff}", record
    ta, tb = character_table_deg1(a), character_table_deg1(b)
    record["characters"] = [len(ta.nonzero()), len(tb.nonzero())]
    bij = tables_equivalent(ta, tb)
    if bij is None:
        va = sorted(ta.nonzero().values())
        vb = sorted(tb.nonzero().values())
        return (f"no marking and homology preserving bijection of circle names identifies the "
                f"character tables (values {va} vs {vb})", record)
    record["bijection"] = bij
    return "", record


def distinguish(word_a: BraidWord, word_b: BraidWord, l_max: int = 1) -> Verdict:
    if word_a.n != word_b.n:
        raise BraidError(f"strand counts differ: {word_a.n} vs {word_b.n}")
    details = []
    for l in range(1, l_max + 1):
        witness, record = _compare(analyze(word_a, l), analyze(word_b, l))
        details.append(record)
        if witness:
            return Verdict(DISTINGUISHED, l, witness, details)
    return Verdict(INCONCLUSIVE, l_max, "", details)


def invertibility_test(word: BraidWord, l_max: int = 1) -> Verdict:
    """Distinguished means the closure together with the axis is not invertible."""
    return distinguish(word, reverse(word), l_max)
