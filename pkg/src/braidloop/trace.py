"""Trace circles of a loop transcript.

Crossing ids are glued along R2 births and deaths and through the final
positional identification with the initial word.  Each class is a circle in
the torus swept out by the loop.  Its homology class is recorded as
(phi-degree, t-degree):

* t-degree: signed count of its crossings in the initial word (sign = writhe),
  the intersection number with the section t = 0;
* phi-degree: signed count of its seam passages, each weighted by the writhe.

``periods`` is the number of rotations the circle runs through before it
closes up, which is the orbit length under one extra rotation of the loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from networkx.utils import UnionFind

from .diagram import gauss_from_tokens
from .loop import R2_BIRTH, R2_DEATH, LoopTranscript


@dataclass(frozen=True)
class TraceCircle:
    name: str
    members: frozenset[int]
    marking: int
    homology: tuple[int, int]
    periods: int
    first: int

    @property
    def phi_degree(self) -> int:
        return self.homology[0]

    @property
    def t_degree(self) -> int:
        return self.homology[1]


@dataclass
class Trace:
    transcript: LoopTranscript
    circles: list[TraceCircle]
    circle_of: dict[int, str]
    marking_of: dict[int, int]
    action: dict[str, str]

    def by_name(self, name: str) -> TraceCircle:
        return next(c for c in self.circles if c.name == name)

    def summary(self) -> list[tuple[str, int, tuple[int, int], int]]:
        return [(c.name, c.marking, c.homology, c.periods) for c in self.circles]


def crossing_markings(transcript: LoopTranscript) -> dict[int, int]:
    """Marking of every crossing id, read off when the crossing first appears."""
    n = transcript.n
    marks: dict[int, int] = {}
    if len(transcript.word):
        g = gauss_from_tokens(transcript.word.letters, n, transcript.initial_ids)
        marks.update(g.markings())
    for e in transcript.events:
        if e.kind == R2_BIRTH:
            ids = [x for x, _ in e.after]
            g = gauss_from_tokens(e.word_after, n, ids)
            for x in e.ids:
                marks[x] = g.arrow(x).marking
    return marks


def _deck_shift(transcript: LoopTranscript) -> dict[int, int]:
    l = transcript.l
    shift: dict[int, int] = {}
    for r in range(l):
        nxt = (r + 1) % l
        for a, b in zip(transcript.rotation_start[r], transcript.rotation_start[nxt]):
            shift[a] = b
        for a, b in zip(transcript.rotation_born[r], transcript.rotation_born[nxt]):
            shift[a] = b
    return shift


def trace_circles(transcript: LoopTranscript) -> Trace:
    uf = UnionFind()
    all_ids = set(transcript.initial_ids)
    for e in transcript.events:
        all_ids.update(e.ids)
    for x in all_ids:
        uf[x]
    for e in transcript.events:
        if e.kind in (R2_BIRTH, R2_DEATH):
            uf.union(*e.ids)
    for a, b in zip(transcript.final_ids, transcript.initial_ids):
        uf.union(a, b)

    marks = crossing_markings(transcript)
    writhe = transcript.writhe
    initial = set(transcript.initial_ids)
    groups: dict[int, list[int]] = {}
    for x in sorted(all_ids):
        groups.setdefault(uf[x], []).append(x)

    raw = []
    for members in groups.values():
        ms = {marks[x] for x in members}
        if len(ms) != 1:
            raise AssertionError(f"circle with mixed markings {ms}")
        t_deg = sum(writhe[x] for x in members if x in initial)
        phi = sum(writhe[x] * s for x in members for s in transcript.seam_log.get(x, ()))
        raw.append((ms.pop(), (phi, t_deg), min(members), frozenset(members)))
    raw.sort(key=lambda r: (r[0], r[1], r[2]))

    root_name = {}
    for k, (_, _, first, members) in enumerate(raw):
        root_name[uf[first]] = f"x{k + 1}"
    circle_of = {x: root_name[uf[x]] for x in all_ids}

    shift = _deck_shift(transcript)
    action: dict[str, str] = {}
    for a, b in shift.items():
        na, nb = circle_of[a], circle_of[b]
        if action.setdefault(na, nb) != nb:
            raise AssertionError("rotation does not act on circles")

    circles = []
    for k, (mark, hom, first, members) in enumerate(raw):
        name = f"x{k + 1}"
        orbit, cur = 1, action.get(name, name)
        while cur != name:
            cur = action.get(cur, cur)
            orbit += 1
        circles.append(TraceCircle(name, members, mark, hom, transcript.l // orbit, first))
    for c in circles:
        action.setdefault(c.name, c.name)
    return Trace(transcript, circles, circle_of, marks, action)


def homology_class(circle: TraceCircle) -> tuple[int, int]:
    return circle.homology


def local_system_action(trace: Trace) -> dict[str, str]:
    return dict(trace.action)
