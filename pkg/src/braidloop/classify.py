"""Classification of R3 events into marked triple points.

The three strands of a triangle are ranked by height into bottom, middle and
top.  The crossing of bottom and top is the distinguished one.  When the
traversal meets the branches in the cyclic order bottom, middle, top the
markings satisfy m(bm) + m(mt) = m(bt) and the type is Minus; otherwise
m(bm) + m(mt) - n = m(bt) and the type is Plus.  The role slots (a, b) are
(m(bm), m(mt)).

The sign of an event is read from a small table over the local data of the
move, see ``stratum_sign``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import GaussDiagram, gauss_from_tokens, is_over
from .loop import R3, LoopTranscript, MoveEvent

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True)
class LocalTriangle:
    """Geometry of three consecutive letters forming a triangle."""

    strands: tuple[int, int, int]        # entering positions ordered bottom, middle, top
    crossing: dict                       # frozenset of two strands -> crossing id
    branch_time: dict                    # strand -> first timestamp of its branch
    cyclic_bmt: bool                     # traversal meets b, m, t in this cyclic order
    cyclic_abc: bool                     # traversal meets the strands in position order


@dataclass(frozen=True)
class TripleEvent:
    time: int
    sign: int
    type: str
    a: int
    b: int
    distinguished: int
    role_ids: tuple[int, int, int]
    role_names: tuple[str, str, str]
    pattern: str
    snapshot: GaussDiagram
    vertex_times: tuple[int, int, int]   # first timestamps of the b, m, t branches

    @property
    def key(self) -> tuple:
        return (self.type, self.a, self.b)


def local_triangle(event: MoveEvent, snapshot: GaussDiagram) -> LocalTriangle:
    k = event.position
    tokens = event.word_before[k:k + 3]
    ids = [x for x, _ in event.before[k:k + 3]]
    lo = min(abs(t) for t in tokens)
    at = {lo: 0, lo + 1: 1, lo + 2: 2}   # position -> strand label (0 enters lowest)
    over: set[tuple[int, int]] = set()
    crossing = {}
    strand_at_visit = {}
    for q, t in enumerate(tokens):
        p = abs(t)
        x, y = at[p], at[p + 1]
        crossing[frozenset((x, y))] = ids[q]
        over.add((x, y) if is_over(t, p) else (y, x))
        strand_at_visit[(k + q, p)] = x
        strand_at_visit[(k + q, p + 1)] = y
        at[p], at[p + 1] = y, x
    height = {s: sum(1 for (hi, _) in over if hi == s) for s in range(3)}
    order = tuple(sorted(range(3), key=lambda s: height[s]))
    if sorted(height.values()) != [0, 1, 2]:
        raise AssertionError("heights of the triangle are cyclic")
    times: dict[int, int] = {}
    for v in snapshot.visits:
        s = strand_at_visit.get((v.letter, v.position))
        if s is not None:
            times[s] = min(times.get(s, v.time), v.time)
    length = snapshot.length

    def cyclic(x, y, z):
        return (times[y] - times[x]) % length < (times[z] - times[x]) % length

    return LocalTriangle(order, crossing, times, cyclic(*order), cyclic(0, 1, 2))


# Sign table: (direction, cyclic position order) -> factor, frozen after
# calibration against the reference values (see scripts/calibrate_signs.py).
SIGN_BASE = -1
SIGN_USES_POSITION_ORDER = True


def stratum_sign(event: MoveEvent, n: int, tri: LocalTriangle | None = None,
                 base: int = SIGN_BASE, use_order: bool = SIGN_USES_POSITION_ORDER) -> int:
    """Sign of an R3 event: -direction, negated when the traversal meets the
    three strands against their order of entry positions."""
    if event.kind != R3:
        raise ValueError("stratum sign is defined for R3 events only")
    if tri is None:
        snap = gauss_from_tokens(event.word_before, n, [x for x, _ in event.before])
        tri = local_triangle(event, snap)
    s = base * event.direction
    if use_order and not tri.cyclic_abc:
        s = -s
    return s


def classify_triple(event: MoveEvent, n: int, circle_of: dict[int, str] | None = None,
                    sign_options: dict | None = None) -> TripleEvent:
    ids = [x for x, _ in event.before]
    snap = gauss_from_tokens(event.word_before, n, ids)
    tri = local_triangle(event, snap)
    b, m, t = tri.strands
    x_bm = tri.crossing[frozenset((b, m))]
    x_mt = tri.crossing[frozenset((m, t))]
    x_bt = tri.crossing[frozenset((b, t))]
    marks = snap.markings()
    ma, mb, md = marks[x_bm], marks[x_mt], marks[x_bt]
    if tri.cyclic_bmt:
        kind = MINUS
        ok = ma + mb == md
    else:
        kind = PLUS
        ok = ma + mb - n == md
    if not ok:
        raise AssertionError(f"marking relation fails: {ma}, {mb}, {md} ({kind})")
    sign = stratum_sign(event, n, tri, **(sign_options or {}))
    role_ids = (x_bm, x_mt, x_bt)
    names = tuple(circle_of[x] for x in role_ids) if circle_of else ("", "", "")
    vt = tuple(tri.branch_time[s] for s in (b, m, t))
    return TripleEvent(event.time, sign, kind, ma, mb, md, role_ids, names,
                       event.pattern, snap, vt)


def triple_events(transcript: LoopTranscript, circle_of: dict[int, str] | None = None,
                  sign_options: dict | None = None) -> list[TripleEvent]:
    return [classify_triple(e, transcript.n, circle_of, sign_options)
            for e in transcript.events if e.kind == R3]
