"""The canonical rotation loop as a stream of elementary diagram moves.

One half rotation of a word gamma:

    gamma -> D D^-1 gamma      (nested R2 births, outermost pair first)
          -> D^-1 gamma D      (cyclic shift of D across the seam)
          -> D^-1 D gamma'     (D pushed leftwards through gamma)
          -> gamma'            (R2 deaths, innermost pair first)

where D is the half twist and gamma' the flipped word.  Two half rotations
bring the word back letter for letter; l full rotations are chained and the
final crossings are identified with the initial ones by position.

Pushing D through a single letter uses a recipe of window moves computed once
per (n, j, sign) and cached.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .braid import BraidWord, garside_word, is_knot
from .diagram import NotAKnotError, is_over

R2_BIRTH = "R2Birth"
R2_DEATH = "R2Death"
R3 = "R3"
SHIFT = "CyclicShift"
COMMUTE = "DistantCommute"


@dataclass(frozen=True)
class MoveEvent:
    time: int
    kind: str
    ids: tuple[int, ...]
    position: int                 # index of the first letter touched in word_before
    before: tuple[tuple[int, int], ...]   # (id, token) pairs
    after: tuple[tuple[int, int], ...]
    pattern: str = ""             # R3 only: "up" for (i, i+1, i), "down" for (i+1, i, i+1)
    offset: int = 0               # CyclicShift only
    rotation: int = 0

    @property
    def word_before(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.before)

    @property
    def word_after(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.after)

    @property
    def direction(self) -> int:
        """+1 for an up-to-down R3, -1 for down-to-up."""
        return 1 if self.pattern == "up" else -1


@dataclass
class LoopTranscript:
    word: BraidWord
    l: int
    initial_ids: tuple[int, ...]
    final_ids: tuple[int, ...]
    events: list[MoveEvent]
    # crossing id -> list of signed seam passages (+1 front to back)
    seam_log: dict[int, list[int]] = field(default_factory=dict)
    writhe: dict[int, int] = field(default_factory=dict)
    # per rotation: ids present at its start and ids born during it, in order
    rotation_start: list[tuple[int, ...]] = field(default_factory=list)
    rotation_born: list[tuple[int, ...]] = field(default_factory=list)
    half_words: list[tuple[int, ...]] = field(default_factory=list)
    max_length: int = 0

    @property
    def n(self) -> int:
        return self.word.n

    def count(self, kind: str) -> int:
        return sum(1 for e in self.events if e.kind == kind)

    def r3_events(self) -> list[MoveEvent]:
        return [e for e in self.events if e.kind == R3]

    @property
    def final_word(self) -> tuple[int, ...]:
        if self.events:
            return self.events[-1].word_after
        return self.word.letters

    def monodromy(self) -> dict[int, int]:
        return dict(zip(self.final_ids, self.initial_ids))

    def dump(self) -> str:
        lines = []
        for e in self.events:
            ids = ",".join(str(i) for i in e.ids)
            word = " ".join(str(t) for t in e.word_after)
            lines.append(f"{e.time} {e.kind} {ids} {word}")
        return "\n".join(lines)


# ---------------------------------------------------------------- recipes

def r3_valid(tokens: Sequence[int]) -> bool:
    """Three consecutive letters forming an R3 triangle with acyclic heights."""
    a, b, c = tokens
    i, j, k = abs(a), abs(b), abs(c)
    if not (i == k and abs(i - j) == 1):
        return False
    lo = min(i, j)
    strands = {lo: "A", lo + 1: "B", lo + 2: "C"}
    above = set()
    for t in tokens:
        p = abs(t)
        x, y = strands[p], strands[p + 1]
        above.add((x, y) if is_over(t, p) else (y, x))
        strands[p], strands[p + 1] = y, x
    for x, y in above:
        for y2, z in above:
            if y == y2 and (z, x) in above:
                return False
    return True


def r3_apply(tokens: Sequence[int]) -> tuple[int, int, int]:
    a, b, c = tokens
    sa, sb, sc = (1 if t > 0 else -1 for t in tokens)
    i, j = abs(a), abs(b)
    return (sc * j, sb * i, sa * j)


def _strand_pairs(tokens: Sequence[int], n: int) -> list[tuple[int, int]]:
    where = list(range(n + 2))
    out = []
    for t in tokens:
        i = abs(t)
        x, y = where[i], where[i + 1]
        out.append((min(x, y), max(x, y)))
        where[i], where[i + 1] = y, x
    return out


class _Window:
    """Mutable window of (id, token) with a log of relative ops."""

    def __init__(self, tokens: Sequence[int], n: int):
        self.n = n
        self.ids = list(range(len(tokens)))
        self.tokens = list(tokens)
        self.next_id = len(tokens)
        self.ops: list[tuple] = []
        # strand pair of every id, fixed for its lifetime
        self.pair = dict(zip(self.ids, _strand_pairs(self.tokens, n)))

    def pos(self, x: int) -> int:
        return self.ids.index(x)

    def swap(self, k: int):
        a, b = self.tokens[k], self.tokens[k + 1]
        if abs(abs(a) - abs(b)) < 2:
            raise AssertionError("attempted to commute non-distant letters")
        self.tokens[k], self.tokens[k + 1] = b, a
        self.ids[k], self.ids[k + 1] = self.ids[k + 1], self.ids[k]
        self.ops.append(("commute", k))

    def depends(self, p: int, q: int) -> bool:
        return abs(abs(self.tokens[p]) - abs(self.tokens[q])) < 2

    def below(self, p: int, q: int) -> bool:
        """Whether the letter at p must stay left of the letter at q (p < q)."""
        reach = {p}
        for r in range(p + 1, q + 1):
            if any(self.depends(s, r) for s in reach):
                reach.add(r)
        return q in reach

    def bring_together(self, xs: Sequence[int]):
        """Commute letters so that the ids ``xs`` become consecutive in order."""
        x, z = xs[0], xs[-1]
        px, pz = self.pos(x), self.pos(z)
        inner = set(xs[1:-1])
        seg = list(range(px + 1, pz))
        first = [p for p in seg if self.ids[p] not in inner and self.below(p, pz)]
        rest = [p for p in seg if self.ids[p] not in inner and p not in first]
        mids = [self.pos(y) for y in xs[1:-1]]
        order = first + [px] + mids + [pz] + rest
        target = [self.ids[p] for p in order]
        self._sort_to(px, target)

    def _sort_to(self, start: int, target: Sequence[int]):
        rank = {x: r for r, x in enumerate(target)}
        end = start + len(target)
        changed = True
        while changed:
            changed = False
            for k in range(start, end - 1):
                if rank[self.ids[k]] > rank[self.ids[k + 1]]:
                    self.swap(k)
                    changed = True

    def r3_ready(self, xs: Sequence[int]) -> bool:
        px, py, pz = sorted(self.pos(x) for x in xs)
        for p in range(px + 1, pz):
            if p != py and self.below(px, p) and self.below(p, pz):
                return False
        trip = [self.tokens[p] for p in (px, py, pz)]
        return r3_valid(trip)

    def r3(self, xs: Sequence[int]):
        xs = sorted(xs, key=self.pos)
        self.bring_together(xs)
        k = self.pos(xs[0])
        trip = self.tokens[k:k + 3]
        if not r3_valid(trip):
            raise AssertionError(f"invalid triangle {trip}")
        self.tokens[k:k + 3] = r3_apply(trip)
        self.ids[k:k + 3] = self.ids[k:k + 3][::-1]
        self.ops.append(("r3", k))

    def death(self, x: int, y: int):
        xs = sorted((x, y), key=self.pos)
        self.bring_together(xs)
        k = self.pos(xs[0])
        a, b = self.tokens[k], self.tokens[k + 1]
        if a != -b:
            raise AssertionError("death of a non-cancelling pair")
        del self.tokens[k:k + 2]
        del self.ids[k:k + 2]
        self.ops.append(("death", k))
        return k

    def birth(self, k: int, gen: int) -> tuple[int, int]:
        a, b = self.next_id, self.next_id + 1
        self.next_id += 2
        self.tokens[k:k] = [gen, -gen]
        self.ids[k:k] = [a, b]
        pairs = _strand_pairs(self.tokens, self.n)
        self.pair[a], self.pair[b] = pairs[k], pairs[k + 1]
        self.ops.append(("birth", k, gen))
        return a, b

    def finish(self, target: Sequence[int]):
        pairs = _strand_pairs(self.tokens, self.n)
        tpairs = _strand_pairs(target, self.n)
        seen: dict[tuple[int, int], int] = {}
        key_to_rank = {}
        for r, pr in enumerate(tpairs):
            c = seen.get(pr, 0)
            seen[pr] = c + 1
            key_to_rank[(pr, c)] = r
        seen = {}
        order = [None] * len(target)
        for p, pr in enumerate(pairs):
            c = seen.get(pr, 0)
            seen[pr] = c + 1
            order[key_to_rank[(pr, c)]] = self.ids[p]
        self._sort_to(0, order)
        if self.tokens != list(target):
            raise AssertionError(f"push ended at {self.tokens}, expected {list(target)}")


def _greedy_r3(w: _Window, pending: list[list[int]]):
    pending = list(pending)
    while pending:
        for t, xs in enumerate(pending):
            if w.r3_ready(xs):
                w.r3(xs)
                del pending[t]
                break
        else:
            raise AssertionError("no applicable triangle")


@lru_cache(maxsize=None)
def push_recipe(n: int, j: int, sign: int, variant: int = 0) -> tuple[tuple, ...]:
    """Window ops turning sigma_j^sign . D into D . sigma_{n-j}^sign.

    ``variant`` 1 handles the triangles above the moving strands first for
    positive letters, another decomposition of the same push.
    """
    d = list(garside_word(n).letters)
    w = _Window([sign * j] + d, n)
    u, v = j, j + 1  # entering positions of the two strands crossing at the letter
    moving = 0

    def dpair(a: int, b: int) -> int:
        pr = (min(a, b), max(a, b))
        return next(x for x in w.ids if x != moving and w.pair[x] == pr)

    below = [s for s in range(1, u)]
    above = [s for s in range(v + 1, n + 1)]
    if sign > 0 and variant:
        uv = dpair(u, v)
        _greedy_r3(w, [[uv, dpair(v, s), dpair(u, s)] for s in above])
        _greedy_r3(w, [[moving, dpair(s, v), dpair(s, u)] for s in below])
        w.finish(d + [sign * (n - j)])
        return tuple(w.ops)
    _greedy_r3(w, [[moving, dpair(s, v), dpair(s, u)] for s in below])
    uv = dpair(u, v)
    if sign < 0:
        gen = abs(w.tokens[w.pos(uv)])
        k = w.death(moving, uv)
        uv, moving = w.birth(k, gen)
        _greedy_r3(w, [[moving, dpair(v, s), dpair(u, s)] for s in above])
    else:
        _greedy_r3(w, [[uv, dpair(v, s), dpair(u, s)] for s in above])
    w.finish(d + [sign * (n - j)])
    return tuple(w.ops)


# ---------------------------------------------------------------- engine

class _Engine:
    def __init__(self, word: BraidWord, variant: int = 0):
        self.n = word.n
        self.variant = variant
        self.tokens = list(word.letters)
        self.ids = list(range(len(word)))
        self.next_id = len(word)
        self.events: list[MoveEvent] = []
        self.seam_log: dict[int, list[int]] = {}
        self.writhe = {i: (1 if t > 0 else -1) for i, t in zip(self.ids, self.tokens)}
        self.rotation = 0
        self.born: list[int] = []
        self.max_length = len(word)

    def _state(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.ids, self.tokens))

    def _emit(self, kind, ids, position, before, **kw):
        after = self._state()
        self.max_length = max(self.max_length, len(after))
        self.events.append(MoveEvent(len(self.events), kind, tuple(ids), position,
                                     before, after, rotation=self.rotation, **kw))

    def birth(self, k: int, gen: int):
        before = self._state()
        a, b = self.next_id, self.next_id + 1
        self.next_id += 2
        self.tokens[k:k] = [gen, -gen]
        self.ids[k:k] = [a, b]
        s = 1 if gen > 0 else -1
        self.writhe[a], self.writhe[b] = s, -s
        self.born += [a, b]
        self._emit(R2_BIRTH, (a, b), k, before)

    def death(self, k: int):
        before = self._state()
        if self.tokens[k] != -self.tokens[k + 1]:
            raise AssertionError("death of a non-cancelling pair")
        ids = (self.ids[k], self.ids[k + 1])
        del self.tokens[k:k + 2]
        del self.ids[k:k + 2]
        self._emit(R2_DEATH, ids, k, before)

    def commute(self, k: int):
        before = self._state()
        self.tokens[k], self.tokens[k + 1] = self.tokens[k + 1], self.tokens[k]
        self.ids[k], self.ids[k + 1] = self.ids[k + 1], self.ids[k]
        self._emit(COMMUTE, (self.ids[k + 1], self.ids[k]), k, before)

    def r3(self, k: int):
        before = self._state()
        trip = self.tokens[k:k + 3]
        ids = tuple(self.ids[k:k + 3])
        pattern = "up" if abs(trip[1]) > abs(trip[0]) else "down"
        self.tokens[k:k + 3] = r3_apply(trip)
        self.ids[k:k + 3] = ids[::-1]
        self._emit(R3, ids, k, before, pattern=pattern)

    def shift(self, count: int):
        before = self._state()
        moved = self.ids[:count]
        self.tokens = self.tokens[count:] + self.tokens[:count]
        self.ids = self.ids[count:] + self.ids[:count]
        for x in moved:
            self.seam_log.setdefault(x, []).append(1)
        self._emit(SHIFT, moved, 0, before, offset=count)

    def replay(self, base: int, ops: Sequence[tuple]):
        for op in ops:
            kind, k = op[0], base + op[1]
            if kind == "commute":
                self.commute(k)
            elif kind == "r3":
                self.r3(k)
            elif kind == "death":
                self.death(k)
            else:
                self.birth(k, op[2])

    def half_rotation(self):
        d = garside_word(self.n).letters
        big_n, c = len(d), len(self.tokens)
        for r, x in enumerate(d):
            self.birth(r, x)
        self.shift(big_n)
        for k in range(c - 1, -1, -1):
            t = self.tokens[big_n + k]
            self.replay(big_n + k, push_recipe(self.n, abs(t), 1 if t > 0 else -1, self.variant))
        for r in range(big_n):
            self.death(big_n - 1 - r)


def canonical_loop(word: BraidWord, l: int = 1, variant: int = 0) -> LoopTranscript:
    """Run l full rotations of the closure of ``word``.

    ``variant`` selects an alternative decomposition of the letter pushes.
    """
    if l < 1:
        raise ValueError("rotation count must be at least 1")
    if not is_knot(word):
        raise NotAKnotError("closure is a link, not a knot")
    eng = _Engine(word, variant)
    initial = tuple(eng.ids)
    starts, borns, halves = [], [], []
    for r in range(l):
        eng.rotation = r
        eng.born = []
        starts.append(tuple(eng.ids))
        if word.n >= 2:
            eng.half_rotation()
            halves.append(tuple(eng.tokens))
            eng.half_rotation()
            halves.append(tuple(eng.tokens))
        borns.append(tuple(eng.born))
    if eng.tokens != list(word.letters):
        raise AssertionError("loop did not return to the initial word")
    return LoopTranscript(word, l, initial, tuple(eng.ids), eng.events, eng.seam_log,
                          eng.writhe, starts, borns, halves, eng.max_length)


def push_letter(n: int, token: int) -> list[MoveEvent]:
    """Events pushing D leftwards through a single letter, on the window alone."""
    d = garside_word(n).letters
    eng = _Engine(BraidWord(n, ()))
    eng.tokens = [token] + list(d)
    eng.ids = list(range(len(eng.tokens)))
    eng.next_id = len(eng.tokens)
    eng.writhe = {i: (1 if t > 0 else -1) for i, t in zip(eng.ids, eng.tokens)}
    eng.replay(0, push_recipe(n, abs(token), 1 if token > 0 else -1))
    return eng.events
