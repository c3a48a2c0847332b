"""Closed braid diagrams and their Gauss diagrams.

Crossing convention: at sigma_i the strand at the lower position i passes
over, at sigma_i^-1 the strand at position i+1 passes over.  The writhe of a
crossing is the sign of its letter.

The closure is traversed from strand position 1 just after the seam, which
sits between the last and the first letter.  Each crossing is visited twice,
once over and once under; the visits get timestamps 0..2m-1.  The marking of
a crossing is the number of seam passages on the way from its under visit to
its over visit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid import BraidError, BraidWord, is_knot, permutation


class NotAKnotError(BraidError):
    pass


@dataclass(frozen=True)
class ClosedBraidDiagram:
    word: BraidWord
    ids: tuple[int, ...]

    def __post_init__(self):
        if len(self.ids) != len(self.word):
            raise ValueError("one crossing id per letter is required")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("crossing ids must be unique")

    @property
    def n(self) -> int:
        return self.word.n

    def index_of(self, crossing: int) -> int:
        return self.ids.index(crossing)


@dataclass(frozen=True)
class GaussArrow:
    crossing: int
    letter: int       # position of the crossing in the word
    foot_time: int    # under visit
    head_time: int    # over visit
    writhe: int
    marking: int


@dataclass(frozen=True)
class Visit:
    time: int
    letter: int
    position: int     # strand position entering the crossing
    over: bool
    seams: int        # seam passages since the start of the traversal


@dataclass(frozen=True)
class GaussDiagram:
    n: int
    arrows: tuple[GaussArrow, ...]
    visits: tuple[Visit, ...]

    @property
    def length(self) -> int:
        return len(self.visits)

    def arrow(self, crossing: int) -> GaussArrow:
        for a in self.arrows:
            if a.crossing == crossing:
                return a
        raise KeyError(crossing)

    def markings(self) -> dict[int, int]:
        return {a.crossing: a.marking for a in self.arrows}


def build_diagram(word: BraidWord, ids: Sequence[int] | None = None) -> ClosedBraidDiagram:
    if not is_knot(word):
        raise NotAKnotError("closure is a link, not a knot")
    if ids is None:
        ids = range(len(word))
    return ClosedBraidDiagram(word, tuple(ids))


def is_over(token: int, position: int) -> bool:
    """Whether the strand entering ``token`` at ``position`` passes over."""
    i = abs(token)
    return (position == i) == (token > 0)


def traverse(tokens: Sequence[int], n: int) -> list[Visit]:
    visits: list[Visit] = []
    pos, seams = 1, 0
    m = len(tokens)
    while True:
        for k, t in enumerate(tokens):
            i = abs(t)
            if pos == i or pos == i + 1:
                visits.append(Visit(len(visits), k, pos, is_over(t, pos), seams))
                pos = i + 1 if pos == i else i
        seams += 1
        if pos == 1:
            break
        if seams > n:
            raise NotAKnotError("closure is a link, not a knot")
    if seams != n or len(visits) != 2 * m:
        raise NotAKnotError("closure is a link, not a knot")
    return visits


def _passages(visits: Sequence[Visit], n: int, start: int, end: int) -> int:
    s, e = visits[start].seams, visits[end].seams
    return e - s if end > start else n - s + e


def gauss_from_tokens(tokens: Sequence[int], n: int, ids: Sequence[int] | None = None) -> GaussDiagram:
    if ids is None:
        ids = range(len(tokens))
    ids = tuple(ids)
    visits = traverse(tokens, n)
    over_t: dict[int, int] = {}
    under_t: dict[int, int] = {}
    for v in visits:
        (over_t if v.over else under_t)[v.letter] = v.time
    arrows = []
    for k, t in enumerate(tokens):
        foot, head = under_t[k], over_t[k]
        arrows.append(GaussArrow(ids[k], k, foot, head, 1 if t > 0 else -1,
                                 _passages(visits, n, foot, head)))
    return GaussDiagram(n, tuple(arrows), tuple(visits))


def gauss_diagram(diagram: ClosedBraidDiagram) -> GaussDiagram:
    return gauss_from_tokens(diagram.word.letters, diagram.n, diagram.ids)


def homological_marking(diagram: ClosedBraidDiagram, crossing: int) -> int:
    return gauss_diagram(diagram).arrow(crossing).marking


def w_invariant(diagram: ClosedBraidDiagram | GaussDiagram, a: int) -> int:
    g = diagram if isinstance(diagram, GaussDiagram) else gauss_diagram(diagram)
    if not 1 <= a <= g.n - 1:
        raise ValueError(f"marking {a} outside 1..{g.n - 1}")
    return sum(x.writhe for x in g.arrows if x.marking == a)


def w_vector(word: BraidWord) -> tuple[int, ...]:
    """(W_1, ..., W_{n-1}) of the closure."""
    g = gauss_from_tokens(word.letters, word.n)
    out = [0] * max(word.n - 1, 0)
    for x in g.arrows:
        out[x.marking - 1] += x.writhe
    return tuple(out)


def smoothing_marking(tokens: Sequence[int], n: int, k: int) -> int:
    """Marking of letter ``k`` recomputed by smoothing the crossing.

    Removing the letter is the oriented smoothing.  The component through the
    incoming over strand is the loop from the under visit to the over visit;
    the number of braid strands it uses is the marking.
    """
    t = tokens[k]
    rest = list(tokens[k + 1:]) + list(tokens[:k])
    i = abs(t)
    start = i if t > 0 else i + 1
    perm = permutation(BraidWord(n, tuple(rest)))
    p, size = start, 0
    while True:
        p = perm[p - 1]
        size += 1
        if p == start:
            return size
