import random

from hypothesis import HealthCheck, settings, strategies as st

from braidloop.braid import BraidWord, is_knot, random_knot
from braidloop.loop import r3_apply, r3_valid

settings.register_profile("default", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def knot_words(draw, n_min=2, n_max=5, c_max=8):
    n = draw(st.integers(n_min, n_max))
    c = draw(st.integers(0, c_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_knot(random.Random(seed), n, c)


def rewrite(word: BraidWord, rng: random.Random) -> tuple[BraidWord, str]:
    """One random move that keeps the closure up to isotopy in the solid torus."""
    letters = list(word.letters)
    n = word.n
    kind = rng.choice(["conjugation", "shift", "free", "relation"])
    if kind == "shift" and letters:
        s = rng.randrange(len(letters))
        letters = letters[s:] + letters[:s]
    elif kind == "free":
        k = rng.choice((1, -1)) * rng.randint(1, n - 1)
        p = rng.randint(0, len(letters))
        letters[p:p] = [k, -k]
    elif kind == "relation":
        triangles = [p for p in range(len(letters) - 2) if r3_valid(letters[p:p + 3])]
        distant = [p for p in range(len(letters) - 1)
                   if abs(abs(letters[p]) - abs(letters[p + 1])) >= 2]
        if triangles:
            p = rng.choice(triangles)
            letters[p:p + 3] = r3_apply(letters[p:p + 3])
        elif distant:
            p = rng.choice(distant)
            letters[p], letters[p + 1] = letters[p + 1], letters[p]
        else:
            kind = "conjugation"
    if kind == "conjugation" or (kind == "shift" and not letters):
        kind = "conjugation"
        k = rng.choice((1, -1)) * rng.randint(1, n - 1)
        letters = [k] + letters + [-k]
    out = BraidWord(n, tuple(letters))
    assert is_knot(out)
    return out, kind


def corpus(seed: int, count: int, n_range=(2, 6), c_max=12) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_knot(rng, rng.randint(*n_range), rng.randint(1, c_max)) for _ in range(count)]
