"""Degree-one cocycles, character tables and *-length bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .braid import BraidWord
from .classify import MINUS, PLUS, TripleEvent, triple_events
from .diagram import w_vector
from .loop import LoopTranscript, canonical_loop
from .trace import Trace, trace_circles


@dataclass
class Analysis:
    """Everything computed from one (word, l) pair."""

    word: BraidWord
    l: int
    transcript: LoopTranscript
    trace: Trace
    events: list[TripleEvent]

    @property
    def n(self) -> int:
        return self.word.n


def analyze(word: BraidWord, l: int = 1, variant: int = 0) -> Analysis:
    return _analyze(word, l, variant)


@lru_cache(maxsize=256)
def _analyze(word: BraidWord, l: int, variant: int) -> Analysis:
    transcript = canonical_loop(word, l, variant)
    trace = trace_circles(transcript)
    events = triple_events(transcript, trace.circle_of)
    return Analysis(word, l, transcript, trace, events)


def possible_types(n: int) -> list[tuple[str, int, int]]:
    """All (type, a, b) whose distinguished marking lands in 1..n-1."""
    out = []
    for a in range(1, n):
        for b in range(1, n):
            if a + b <= n - 1:
                out.append((MINUS, a, b))
            if a + b >= n + 1:
                out.append((PLUS, a, b))
    return sorted(out)


def gamma_deg1(events: Iterable[TripleEvent], a: int, b: int, kind: str) -> int:
    return sum(e.sign for e in events if e.type == kind and e.a == a and e.b == b)


def gamma_table(analysis: Analysis) -> dict[tuple[str, int, int], int]:
    table = {key: 0 for key in possible_types(analysis.n)}
    for e in analysis.events:
        table[e.key] += e.sign
    return table


@dataclass
class CharacterTable:
    entries: dict[tuple, int]
    circles: list[tuple[str, int, tuple[int, int], int]] = field(default_factory=list)

    def nonzero(self) -> dict[tuple, int]:
        return {k: v for k, v in sorted(self.entries.items()) if v}

    def marginals(self) -> dict[tuple[str, int, int], int]:
        out: dict[tuple[str, int, int], int] = {}
        for (kind, a, b, *_), v in self.entries.items():
            out[(kind, a, b)] = out.get((kind, a, b), 0) + v
        return out


def character_table_deg1(analysis: Analysis) -> CharacterTable:
    entries: dict[tuple, int] = {}
    for e in analysis.events:
        key = (e.type, e.a, e.b) + e.role_names
        entries[key] = entries.get(key, 0) + e.sign
    return CharacterTable(entries, analysis.trace.summary())


def w_table(word: BraidWord) -> tuple[int, ...]:
    return w_vector(word)


def star_length_lower_bound(values, mode: str = "characters") -> int:
    """Lower bound on the number of triple points of any loop in the class.

    ``characters``: sum of absolute values of the character entries.
    ``cocycles``: twice the sum, over unordered pairs {(a, b), (b, a)} of one
    type, of the absolute cocycle value.
    """
    if isinstance(values, CharacterTable):
        values = values.entries
    if mode == "characters":
        vs = values.values() if isinstance(values, dict) else values
        return sum(abs(v) for v in vs)
    if mode == "cocycles":
        seen = set()
        total = 0
        for (kind, a, b), v in sorted(values.items()):
            cls = (kind, min(a, b), max(a, b))
            if cls in seen:
                continue
            seen.add(cls)
            total += abs(v)
        return 2 * total
    raise ValueError(f"unknown mode {mode!r}")


__all__ = [
    "Analysis", "CharacterTable", "MINUS", "PLUS", "analyze", "character_table_deg1",
    "gamma_deg1", "gamma_table", "possible_types", "star_length_lower_bound", "w_table",
]
