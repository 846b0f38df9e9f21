"""Random braid words and pairs of words with equivalent closures.

Each move returns ``(before, after)``; the closures of the two words are
isotopic, so every knot invariant must agree on them.
"""
from __future__ import annotations

import random

from .braid import BraidWord, braid_components

MOVES = ("braid_relation", "far_commutation", "conjugation", "stabilization", "r2_insertion")


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    return BraidWord(strands, tuple(
        (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)))


def random_knot_word(rng: random.Random, max_strands: int = 4, max_length: int = 8) -> BraidWord:
    """Random word whose closure has one component; N is uniform, the word is resampled."""
    N = rng.randint(2, max_strands)
    while True:
        w = random_word(rng, N, rng.randint(0, max_length))
        if braid_components(w) == 1:
            return w


def _split(rng, w):
    k = rng.randint(0, len(w))
    return w.letters[:k], w.letters[k:]


def braid_relation(rng, w):
    """u s_i s_{i+1} s_i v  vs  u s_{i+1} s_i s_{i+1} v (same sign throughout)."""
    if w.strands < 3:
        w = BraidWord(3, w.letters)
    u, v = _split(rng, w)
    i, s = rng.randint(1, w.strands - 2), rng.choice((1, -1))
    a = ((i, s), (i + 1, s), (i, s))
    b = ((i + 1, s), (i, s), (i + 1, s))
    return BraidWord(w.strands, u + a + v), BraidWord(w.strands, u + b + v)


def far_commutation(rng, w):
    if w.strands < 4:
        w = BraidWord(4, w.letters)
    u, v = _split(rng, w)
    i = rng.randint(1, w.strands - 3)
    j = rng.randint(i + 2, w.strands - 1)
    x, y = (i, rng.choice((1, -1))), (j, rng.choice((1, -1)))
    return BraidWord(w.strands, u + (x, y) + v), BraidWord(w.strands, u + (y, x) + v)


def conjugation(rng, w):
    g = random_word(rng, w.strands, rng.randint(1, 3))
    return w, g * w * g.inverse()


def stabilization(rng, w):
    s = rng.choice((1, -1))
    return w, BraidWord(w.strands + 1, w.letters + ((w.strands, s),))


def r2_insertion(rng, w):
    u, v = _split(rng, w)
    i, s = rng.randint(1, w.strands - 1), rng.choice((1, -1))
    return w, BraidWord(w.strands, u + ((i, s), (i, -s)) + v)


MOVE_FUNCS = {
    "braid_relation": braid_relation,
    "far_commutation": far_commutation,
    "conjugation": conjugation,
    "stabilization": stabilization,
    "r2_insertion": r2_insertion,
}
