"""Braid words in the Artin generators and a few word transformations.

A word is stored as a tuple of nonzero integers: ``k`` stands for the
generator sigma_k and ``-k`` for its inverse.  Generator indices run from 1
to n-1 on n strands.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed braid input."""


@dataclass(frozen=True)
class Letter:
    index: int
    sign: int

    @property
    def token(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be positive, got {self.n}")
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        for k in self.letters:
            if k == 0 or abs(k) >= self.n:
                raise BraidError(f"letter {k} is not a generator of B_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def letter(self, k: int) -> Letter:
        t = self.letters[k]
        return Letter(abs(t), 1 if t > 0 else -1)

    def with_letters(self, letters: Iterable[int]) -> "BraidWord":
        return BraidWord(self.n, tuple(letters))


def parse_word(text: str, n: int | None = None) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Without ``n`` the strand count is one more than the largest index.
    """
    tokens = text.replace(",", " ").split()
    letters = []
    for tok in tokens:
        try:
            k = int(tok)
        except ValueError:
            raise BraidError(f"bad token {tok!r}: not an integer") from None
        if k == 0:
            raise BraidError(f"bad token {tok!r}: 0 is not a generator")
        if n is not None and abs(k) >= n:
            raise BraidError(f"bad token {tok!r}: |k| must be below n={n}")
        letters.append(k)
    if n is None:
        if not letters:
            raise BraidError("empty word needs an explicit strand count")
        n = max(abs(k) for k in letters) + 1
    return BraidWord(n, tuple(letters))


def permutation(word: BraidWord) -> tuple[int, ...]:
    """Images of the starting positions 1..n after reading the word.

    ``result[p-1]`` is the position where the strand entering at ``p`` exits.
    """
    pos_of = list(range(1, word.n + 1))  # strand entering at p sits at pos_of[p-1]
    where = list(range(word.n + 1))      # where[position] -> entering strand
    for k in word.letters:
        i = abs(k)
        a, b = where[i], where[i + 1]
        where[i], where[i + 1] = b, a
        pos_of[a - 1], pos_of[b - 1] = i + 1, i
    return tuple(pos_of)


def is_knot(word: BraidWord) -> bool:
    """True when the closure has a single component."""
    perm = permutation(word)
    p, length = 1, 0
    while True:
        p = perm[p - 1]
        length += 1
        if p == 1:
            break
    return length == word.n


def garside_word(n: int) -> BraidWord:
    """Half twist as the product of descending runs (s1)(s2 s1)...(s_{n-1}...s1)."""
    if n < 2:
        raise BraidError("the half twist needs at least two strands")
    letters = [i for k in range(1, n) for i in range(k, 0, -1)]
    return BraidWord(n, tuple(letters))


def flip(word: BraidWord) -> BraidWord:
    return word.with_letters((word.n - abs(k)) * (1 if k > 0 else -1) for k in word.letters)


def reverse(word: BraidWord) -> BraidWord:
    return word.with_letters(reversed(word.letters))


def inverse(word: BraidWord) -> BraidWord:
    return word.with_letters(-k for k in reversed(word.letters))


def cyclic_shift(word: BraidWord, k: int) -> BraidWord:
    if not 0 <= k < max(len(word), 1):
        raise BraidError(f"shift {k} out of range for a word of length {len(word)}")
    return word.with_letters(word.letters[k:] + word.letters[:k])


def transform(word: BraidWord, kind: str, k: int = 0) -> BraidWord:
    """Apply one of ``flip``, ``reverse``, ``inverse`` or ``shift`` (by ``k``)."""
    kind = kind.lower()
    if kind == "flip":
        return flip(word)
    if kind == "reverse":
        return reverse(word)
    if kind == "inverse":
        return inverse(word)
    if kind in ("shift", "cyclicshift", "cyclic_shift"):
        return cyclic_shift(word, k)
    raise BraidError(f"unknown transform {kind!r}")


def _cable_block(i: int, k: int, sign: int) -> list[int]:
    # bundle at positions k(i-1)+1..ki crosses the bundle at ki+1..k(i+1);
    # each strand of the lower bundle, starting with the outermost, walks
    # across the k strands of the upper bundle
    base = k * (i - 1)
    letters = []
    for r in range(k - 1, -1, -1):
        for s in range(k):
            letters.append(base + r + 1 + s)
    return [sign * g for g in letters]


def half_twist_letters(k: int, sign: int = 1) -> list[int]:
    if k < 2:
        return []
    return [sign * g for g in garside_word(k).letters]


def cable(word: BraidWord, k: int, half_twists: int = 0) -> BraidWord:
    """k-parallel cable of the closure, framed by ``half_twists`` half twists.

    The twists are inserted on the first k strands at the end of the word.
    """
    if k < 1:
        raise BraidError("cable multiplicity must be at least 1")
    if k == 1:
        return word
    out: list[int] = []
    for t in word.letters:
        out.extend(_cable_block(abs(t), k, 1 if t > 0 else -1))
    sign = 1 if half_twists >= 0 else -1
    for _ in range(abs(half_twists)):
        out.extend(half_twist_letters(k, sign))
    return BraidWord(k * word.n, tuple(out))


def random_knot(rng: random.Random, n: int, c: int) -> BraidWord:
    """Uniform random word of length about ``c`` whose closure is a knot.

    The length is raised to the nearest value with the parity of an n-cycle.
    """
    if n == 1:
        return BraidWord(1, ())
    c = max(c, n - 1)
    if (c - (n - 1)) % 2:
        c += 1
    while True:
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(c))
        w = BraidWord(n, letters)
        if is_knot(w):
            return w


def free_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for t in letters:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)
