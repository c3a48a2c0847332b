"""Gauss-sum cochains of higher degree evaluated on triple events.

A configuration is a cyclic word in the triangle vertices ``b``, ``m``, ``t``
and the endpoints of d-1 extra arrows.  Each extra arrow carries a marking
(mod n), a direction (foot = under visit, head = over visit) and optionally a
circle name.  At a triple event the three branches of the triangle are
collapsed to single vertices; a match is an injective assignment of the
configuration arrows to the remaining arrows of the Gauss diagram that
respects markings, directions, names and the joint cyclic order.

The value of a cochain on a transcript is

    sum over events s of sign(s) * sum over entries eps * sum over matches prod writhe

File format::

    cochain-v1
    degree 2; n 4; type -; 1 2
    names x1 x2 x3            (optional, role names of the triangle)
    eps 1
    layout b 1 m 1 t
    arrow 1 marking 2 from 1 to 3 [name x2]
    eps -1
    ...

``from`` and ``to`` are 0-based positions in the layout of the foot and the
head of the arrow.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .classify import MINUS, PLUS, TripleEvent

VERTICES = ("b", "m", "t")


class CochainError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    marking: int
    name: str | None = None


@dataclass(frozen=True)
class Configuration:
    """Normalized configuration: starts at ``b``, arrows numbered by first appearance.

    ``layout`` holds ``"b"``, ``"m"``, ``"t"`` or ``(k, end)`` with end in
    ``{"foot", "head"}``.
    """

    kind: str
    a: int
    b: int
    layout: tuple
    arrows: tuple[Arrow, ...]
    role_names: tuple[str, str, str] | None = None

    @property
    def degree(self) -> int:
        return len(self.arrows) + 1

    def endpoints(self, k: int) -> tuple[int, int]:
        foot = self.layout.index((k, "foot"))
        head = self.layout.index((k, "head"))
        return foot, head


def normalize(kind, a, b, layout: Sequence, arrows: Sequence[Arrow], role_names=None) -> Configuration:
    layout = list(layout)
    if sorted(x for x in layout if isinstance(x, str)) != sorted(VERTICES):
        raise CochainError("layout must contain b, m and t exactly once")
    counts: dict[int, list[str]] = {}
    for x in layout:
        if not isinstance(x, str):
            counts.setdefault(x[0], []).append(x[1])
    if set(counts) != set(range(len(arrows))) or any(sorted(v) != ["foot", "head"] for v in counts.values()):
        raise CochainError("every arrow needs exactly one foot and one head in the layout")
    s = layout.index("b")
    layout = layout[s:] + layout[:s]
    relabel: dict[int, int] = {}
    for x in layout:
        if not isinstance(x, str) and x[0] not in relabel:
            relabel[x[0]] = len(relabel)
    new_layout = tuple(x if isinstance(x, str) else (relabel[x[0]], x[1]) for x in layout)
    new_arrows = [None] * len(arrows)
    for old, new in relabel.items():
        new_arrows[new] = arrows[old]
    return Configuration(kind, a, b, new_layout, tuple(new_arrows),
                         tuple(role_names) if role_names else None)


@dataclass
class Cochain:
    n: int
    kind: str
    a: int
    b: int
    degree: int
    entries: list[tuple[int, Configuration]] = field(default_factory=list)
    role_names: tuple[str, str, str] | None = None

    def __post_init__(self):
        for eps, cfg in self.entries:
            if (cfg.kind, cfg.a, cfg.b) != (self.kind, self.a, self.b):
                raise CochainError("all configurations must share the triple type")
            if cfg.degree != self.degree:
                raise CochainError("all configurations must have the cochain degree")
            if eps not in (1, -1):
                raise CochainError("coefficients must be +1 or -1")


# ---------------------------------------------------------------- parsing

def parse_cochain(text: str) -> Cochain:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != "cochain-v1":
        raise CochainError("missing cochain-v1 header")
    header: dict[str, str] = {}
    ab: list[str] = []
    for part in lines[1].split(";"):
        words = part.split()
        if len(words) == 2 and words[0] in ("degree", "n", "type"):
            header[words[0]] = words[1]
        else:
            ab = words
    try:
        degree = int(header["degree"])
        n = int(header["n"])
        kind = header["type"]
        a, b = (int(x) for x in ab)
    except (KeyError, ValueError):
        raise CochainError(f"bad header line {lines[1]!r}") from None
    if kind not in (PLUS, MINUS):
        raise CochainError(f"type must be + or -, got {kind!r}")
    role_names = None
    blocks: list[dict] = []
    for ln in lines[2:]:
        words = ln.split()
        if words[0] == "names":
            if len(words) != 4:
                raise CochainError("names needs three circle names")
            role_names = tuple(words[1:])
        elif words[0] == "eps":
            blocks.append({"eps": int(words[1]), "layout": None, "arrows": {}})
        elif words[0] == "layout":
            if not blocks:
                raise CochainError("layout before eps")
            blocks[-1]["layout"] = words[1:]
        elif words[0] == "arrow":
            if not blocks:
                raise CochainError("arrow before eps")
            try:
                label = words[1]
                fields = dict(zip(words[2::2], words[3::2]))
                blocks[-1]["arrows"][label] = (int(fields["marking"]), int(fields["from"]),
                                               int(fields["to"]), fields.get("name"))
            except (KeyError, ValueError, IndexError):
                raise CochainError(f"bad arrow line {ln!r}") from None
        else:
            raise CochainError(f"unknown line {ln!r}")
    entries = []
    for blk in blocks:
        entries.append((blk["eps"], _build(kind, a, b, n, blk, role_names)))
    return Cochain(n, kind, a, b, degree, entries, role_names)


def _build(kind, a, b, n, blk, role_names) -> Configuration:
    raw = blk["layout"]
    if raw is None:
        raise CochainError("configuration without layout")
    labels = list(blk["arrows"])
    index = {lab: k for k, lab in enumerate(labels)}
    layout: list = []
    for p, tok in enumerate(raw):
        if tok in VERTICES:
            layout.append(tok)
            continue
        if tok not in index:
            raise CochainError(f"layout token {tok!r} has no arrow line")
        marking, frm, to, _ = blk["arrows"][tok]
        if p == frm:
            layout.append((index[tok], "foot"))
        elif p == to:
            layout.append((index[tok], "head"))
        else:
            raise CochainError(f"arrow {tok} endpoints do not match its layout positions")
    arrows = [Arrow(blk["arrows"][lab][0] % n, blk["arrows"][lab][3]) for lab in labels]
    return normalize(kind, a, b, layout, arrows, role_names)


def format_cochain(cochain: Cochain) -> str:
    out = ["cochain-v1",
           f"degree {cochain.degree}; n {cochain.n}; type {cochain.kind}; {cochain.a} {cochain.b}"]
    if cochain.role_names:
        out.append("names " + " ".join(cochain.role_names))
    for eps, cfg in cochain.entries:
        out.append(f"eps {eps}")
        toks = [x if isinstance(x, str) else str(x[0] + 1) for x in cfg.layout]
        out.append("layout " + " ".join(toks))
        for k, arr in enumerate(cfg.arrows):
            foot, head = cfg.endpoints(k)
            line = f"arrow {k + 1} marking {arr.marking} from {foot} to {head}"
            if arr.name:
                line += f" name {arr.name}"
            out.append(line)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- matching

@dataclass(frozen=True)
class _Snapshot:
    """Cyclic sequence of a triple event's Gauss diagram starting at vertex b."""

    seq: tuple                      # "b" | "m" | "t" | (arrow index, end)
    markings: tuple[int, ...]
    writhes: tuple[int, ...]
    names: tuple[str, ...]
    where: tuple[tuple[int, int], ...]   # arrow index -> (foot pos, head pos)
    vertex: dict


def snapshot_sequence(event: TripleEvent, circle_of: dict[int, str] | None = None) -> _Snapshot:
    snap = event.snapshot
    tri_ids = set(event.role_ids)
    x_bm, x_mt, x_bt = event.role_ids
    times = dict(zip(event.vertex_times, VERTICES))
    others = [a for a in snap.arrows if a.crossing not in tri_ids]
    points: list[tuple[int, object]] = [(t, lab) for t, lab in times.items()]
    for k, a in enumerate(others):
        points.append((a.foot_time, (k, "foot")))
        points.append((a.head_time, (k, "head")))
    points.sort()
    seq = [p for _, p in points]
    s = seq.index("b")
    seq = seq[s:] + seq[:s]
    where = [[0, 0] for _ in others]
    vertex = {}
    for pos, x in enumerate(seq):
        if isinstance(x, str):
            vertex[x] = pos
        else:
            where[x[0]][0 if x[1] == "foot" else 1] = pos
    names = tuple((circle_of or {}).get(a.crossing, "") for a in others)
    return _Snapshot(tuple(seq), tuple(a.marking % snap.n for a in others),
                     tuple(a.writhe for a in others), names,
                     tuple(tuple(w) for w in where), vertex)


def _type_matches(cfg: Configuration, event: TripleEvent) -> bool:
    if (cfg.kind, cfg.a, cfg.b) != (event.type, event.a, event.b):
        return False
    if cfg.role_names and tuple(cfg.role_names) != tuple(event.role_names):
        return False
    return True


def matches(cfg: Configuration, snap: _Snapshot, n: int) -> list[tuple[int, ...]]:
    """All order-preserving injective assignments of cfg arrows to snapshot arrows."""
    found: list[tuple[int, ...]] = []
    need = Counter(a.marking % n for a in cfg.arrows)
    have = Counter(snap.markings)
    if any(have[mk] < c for mk, c in need.items()):
        return found
    assign: list[int | None] = [None] * len(cfg.arrows)
    used: set[int] = set()
    layout = cfg.layout

    def ok(k: int, x: int) -> bool:
        arr = cfg.arrows[k]
        if snap.markings[x] != arr.marking % n:
            return False
        return arr.name is None or arr.name == snap.names[x]

    def rec(i: int, last: int):
        if i == len(layout):
            found.append(tuple(assign))
            return
        tok = layout[i]
        if isinstance(tok, str):
            p = snap.vertex[tok]
            if p > last:
                rec(i + 1, p)
            return
        k, end = tok
        e = 0 if end == "foot" else 1
        if assign[k] is not None:
            p = snap.where[assign[k]][e]
            if p > last:
                rec(i + 1, p)
            return
        for x in range(len(snap.markings)):
            if x in used or not ok(k, x):
                continue
            p = snap.where[x][e]
            if p <= last:
                continue
            assign[k] = x
            used.add(x)
            rec(i + 1, p)
            used.discard(x)
            assign[k] = None

    rec(0, -1)
    unique = {frozenset(m): m for m in found}
    return list(unique.values())


def evaluate_cochain(events: Iterable[TripleEvent], cochain: Cochain,
                     circle_of: dict[int, str] | None = None) -> int:
    total = 0
    for ev in events:
        if (ev.type, ev.a, ev.b) != (cochain.kind, cochain.a, cochain.b):
            continue
        snap = snapshot_sequence(ev, circle_of)
        inner = 0
        for eps, cfg in cochain.entries:
            if not _type_matches(cfg, ev):
                continue
            for m in matches(cfg, snap, cochain.n):
                w = 1
                for x in m:
                    w *= snap.writhes[x]
                inner += eps * w
        total += ev.sign * inner
    return total


def naive_evaluate(events: Iterable[TripleEvent], cochain: Cochain,
                   circle_of: dict[int, str] | None = None) -> int:
    """Brute force over all arrow tuples, comparing sorted endpoint sequences."""
    total = 0
    for ev in events:
        if (ev.type, ev.a, ev.b) != (cochain.kind, cochain.a, cochain.b):
            continue
        snap = ev.snapshot
        tri = set(ev.role_ids)
        others = [a for a in snap.arrows if a.crossing not in tri]
        vt = dict(zip(VERTICES, ev.vertex_times))
        for eps, cfg in cochain.entries:
            if cfg.role_names and tuple(cfg.role_names) != tuple(ev.role_names):
                continue
            d1 = len(cfg.arrows)
            seen = set()
            for combo in combinations(range(len(others)), d1):
                for perm in permutations(combo):
                    good = True
                    for k, x in enumerate(perm):
                        arr = cfg.arrows[k]
                        if others[x].marking % cochain.n != arr.marking % cochain.n:
                            good = False
                        if arr.name is not None and (circle_of or {}).get(others[x].crossing) != arr.name:
                            good = False
                    if not good:
                        continue
                    pts = [(vt[v], v) for v in VERTICES]
                    for k, x in enumerate(perm):
                        pts.append((others[x].foot_time, (k, "foot")))
                        pts.append((others[x].head_time, (k, "head")))
                    pts.sort()
                    seq = [p for _, p in pts]
                    s = seq.index("b")
                    if tuple(seq[s:] + seq[:s]) != cfg.layout:
                        continue
                    key = frozenset(perm)
                    if key in seen:
                        continue
                    seen.add(key)
                    w = 1
                    for x in perm:
                        w *= others[x].writhe
                    total += ev.sign * eps * w
    return total


# ---------------------------------------------------------------- adjacency

TRIANGLE_ONLY = "TriangleOnly"
ANY_ARROW = "AnyArrow"


def adjacent_configs(cfg: Configuration, mode: str = TRIANGLE_ONLY) -> set[Configuration]:
    """Configurations obtained by sliding one extra-arrow endpoint over a neighbour."""
    out: set[Configuration] = set()
    lay = list(cfg.layout)
    size = len(lay)
    if not cfg.arrows:
        return out
    for p in range(size):
        q = (p + 1) % size
        x, y = lay[p], lay[q]
        xv, yv = isinstance(x, str), isinstance(y, str)
        if xv and yv:
            continue
        if not xv and not yv and x[0] == y[0]:
            continue
        if mode == TRIANGLE_ONLY and not (xv or yv):
            continue
        new = list(lay)
        new[p], new[q] = y, x
        out.add(normalize(cfg.kind, cfg.a, cfg.b, new, cfg.arrows, cfg.role_names))
    return out


@dataclass
class ConditionReport:
    tri: bool
    tri_witnesses: list = field(default_factory=list)
    tan: bool = True
    tan_witnesses: list = field(default_factory=list)
    t: str = "unchecked"


def _adjacent(p: int, q: int, size: int) -> bool:
    return (p - q) % size in (1, size - 1)


def check_conditions(cochain: Cochain) -> ConditionReport:
    present = {cfg: eps for eps, cfg in cochain.entries}
    tri_w = []
    for eps, cfg in cochain.entries:
        for adj in sorted(adjacent_configs(cfg, ANY_ARROW), key=repr):
            if present.get(adj) != eps:
                tri_w.append((cfg, adj))
    tan_w = []
    for eps, cfg in cochain.entries:
        size = len(cfg.layout)
        for i in range(len(cfg.arrows)):
            for j in range(i + 1, len(cfg.arrows)):
                if cfg.arrows[i].marking != cfg.arrows[j].marking:
                    continue
                fi, hi = cfg.endpoints(i)
                fj, hj = cfg.endpoints(j)
                if _adjacent(fi, fj, size) and _adjacent(hi, hj, size):
                    tan_w.append((cfg, i, j))
    return ConditionReport(not tri_w, tri_w, not tan_w, tan_w)


def symmetrize(cochain: Cochain) -> Cochain:
    """Close the entries under AnyArrow adjacency, copying coefficients."""
    present: dict[Configuration, int] = {}
    queue = list(cochain.entries)
    while queue:
        eps, cfg = queue.pop()
        if cfg in present:
            continue
        present[cfg] = eps
        for adj in adjacent_configs(cfg, ANY_ARROW):
            if adj not in present:
                queue.append((eps, adj))
    entries = sorted(((e, c) for c, e in present.items()), key=lambda ec: repr(ec[1]))
    return Cochain(cochain.n, cochain.kind, cochain.a, cochain.b, cochain.degree, entries,
                   cochain.role_names)


__all__ = [
    "ANY_ARROW", "Arrow", "Cochain", "CochainError", "ConditionReport", "Configuration",
    "TRIANGLE_ONLY", "adjacent_configs", "check_conditions", "evaluate_cochain",
    "format_cochain", "matches", "naive_evaluate", "normalize", "parse_cochain",
    "snapshot_sequence", "symmetrize",
]
