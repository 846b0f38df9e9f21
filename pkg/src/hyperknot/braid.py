"""Braid words, torus words, permutations and Burau matrices.

Generator indices are 1-based everywhere in the public interface: the
letter ``(i, +1)`` is sigma_i, strand i+1 crossing over strand i.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameters, CapExceeded, IndexOutOfRange, ParseError, SpecMismatch
from .ring import RingElement, RingSpec

Letter = tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise BadParameters(f"need at least 2 strands, got {self.strands!r}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise IndexOutOfRange(f"generator {i} outside [1, {self.strands - 1}]")
            if s not in (1, -1):
                raise ParseError(f"sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise BadParameters("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> BraidWord:
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.strands, self.letters * n)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def text(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters)

    def __str__(self):
        return f"B{self.strands}[{self.text()}]"

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": [list(x) for x in self.letters]}

    @classmethod
    def from_json(cls, doc: dict) -> BraidWord:
        return cls(int(doc["strands"]), tuple(tuple(x) for x in doc["letters"]))


def braid_parse(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices, e.g. ``"2 -1 2"``."""
    letters = []
    for tok in text.split():
        try:
            k = int(tok)
        except ValueError:
            raise ParseError(f"bad token {tok!r}") from None
        if k == 0:
            raise ParseError("generator index 0 is not allowed")
        letters.append((abs(k), 1 if k > 0 else -1))
    return BraidWord(strands, tuple(letters))


def braid_torus_word(N: int, n: int) -> BraidWord:
    """(sigma_{N-1} ... sigma_1)^n, the torus word T(N, n)."""
    if N < 2 or n < 1:
        raise BadParameters(f"torus word needs N >= 2 and n >= 1, got ({N}, {n})")
    gen = tuple((i, 1) for i in range(N - 1, 0, -1))
    return BraidWord(N, gen * n)


def braid_torus_crossing_number(N: int, n: int) -> int:
    if N < 2 or n < 1:
        raise BadParameters(f"torus crossing number needs N >= 2 and n >= 1, got ({N}, {n})")
    return min(abs(N) * (abs(n) - 1), abs(n) * (abs(N) - 1))


def braid_permutation(w: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: ``perm[k]`` is the bottom position (0-based) of the strand starting at k."""
    pos = list(range(w.strands))  # pos[slot] = starting strand currently in slot
    for i, _ in w.letters:
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    perm = [0] * w.strands
    for slot, start in enumerate(pos):
        perm[start] = slot
    return tuple(perm)


def permutation_cycles(perm) -> list[list[int]]:
    seen = [False] * len(perm)
    cycles = []
    for k in range(len(perm)):
        if not seen[k]:
            cyc = []
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = perm[k]
            cycles.append(cyc)
    return cycles


def braid_components(w: BraidWord) -> int:
    return len(permutation_cycles(braid_permutation(w)))


def permutation_order(perm) -> int:
    return math.lcm(*(len(c) for c in permutation_cycles(perm)))


@dataclass(frozen=True)
class BurauMatrix:
    """Square matrix over a RingSpec acting on row vectors from the right."""

    spec: RingSpec
    rows: tuple[tuple[RingElement, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, spec: RingSpec, size: int) -> BurauMatrix:
        z, o = spec.zero, spec.one
        return cls(spec, tuple(tuple(o if i == j else z for j in range(size)) for i in range(size)))

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        if other.spec != self.spec or other.size != self.size:
            raise SpecMismatch("matrix dimensions or rings differ")
        n = self.size
        zero = self.spec.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new = []
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                new.append(acc)
            out.append(tuple(new))
        return BurauMatrix(self.spec, tuple(out))

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix(
            self.spec,
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def act(self, vec) -> tuple[RingElement, ...]:
        """Row vector times matrix."""
        zero = self.spec.zero
        out = []
        for j in range(self.size):
            acc = zero
            for i, a in enumerate(vec):
                acc = acc + a * self.rows[i][j]
            out.append(acc)
        return tuple(out)

    def is_identity(self) -> bool:
        one, zero = self.spec.one, self.spec.zero
        return all(
            x == (one if i == j else zero) for i, row in enumerate(self.rows) for j, x in enumerate(row)
        )

    def to_json(self) -> list:
        return [[list(x.coeffs) for x in row] for row in self.rows]


@lru_cache(maxsize=None)
def burau_generator(spec: RingSpec, strands: int, i: int, sign: int) -> BurauMatrix:
    t = spec.T
    one, zero = spec.one, spec.zero
    if sign > 0:
        block = ((zero, t), (one, one - t))
    else:
        ti = spec.T_inv
        block = (((t - one) * ti, one), (ti, zero))
    rows = [list(r) for r in BurauMatrix.identity(spec, strands).rows]
    a = i - 1
    for r in range(2):
        for c in range(2):
            rows[a + r][a + c] = block[r][c]
    return BurauMatrix(spec, tuple(tuple(r) for r in rows))


def braid_burau(w: BraidWord, spec: RingSpec) -> BurauMatrix:
    """Ordered product of the unreduced Burau generator matrices."""
    m = BurauMatrix.identity(spec, w.strands)
    for i, s in w.letters:
        m = m @ burau_generator(spec, w.strands, i, s)
    return m


def braid_matrix_order(B: BurauMatrix, cap: int = 10**6) -> int:
    """Least M >= 1 with B^M = I, by iterated multiplication."""
    if cap < 1:
        raise BadParameters("cap must be >= 1")
    power = B
    for m in range(1, cap + 1):
        if power.is_identity():
            return m
        power = power @ B
    raise CapExceeded(f"matrix order exceeds cap={cap}")
