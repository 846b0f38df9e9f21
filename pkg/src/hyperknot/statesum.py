"""CJKLS state sum, free energy and free energy per crossing.

The state sum is stored as its coefficient vector in the group algebra of
A: ``counts[g]`` is the number of colorings whose accumulated weight
sum(sign * phi[x][y]) over the crossings equals the g-th element of A.
Free energies take natural logs coordinatewise; zero coordinates are
``None`` (undefined) and are skipped by :func:`statesum_norm`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord
from .cocycle import AbelianGroup, Cocycle
from .coloring import coloring_enumerate
from .errors import SpecMismatch, ZeroCrossings
from .quandle import Quandle

FreeEnergyVector = tuple  # tuple[float | None, ...]


@dataclass(frozen=True)
class StateSum:
    group: AbelianGroup
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"orders": list(self.group.orders), "counts": list(self.counts)}

    @classmethod
    def trivial(cls, group: AbelianGroup, k: int) -> StateSum:
        """k copies of the identity element, k * e_0."""
        return cls(group, (k,) + (0,) * (group.size - 1))


def coloring_weight(trace, phi: Cocycle):
    A, table = phi.group, phi.table
    g = A.zero
    for x, y, s in trace:
        g = A.add(g, table[x][y]) if s > 0 else A.sub(g, table[x][y])
    return g


def statesum_cjkls(w: BraidWord, q: Quandle, phi: Cocycle) -> StateSum:
    if phi.quandle.op != q.op:
        raise SpecMismatch("cocycle is defined on a different quandle")
    A = phi.group
    counts = [0] * A.size
    for col in coloring_enumerate(w, q):
        counts[A.index(coloring_weight(col.trace, phi))] += 1
    return StateSum(A, tuple(counts))


def statesum_free_energy(Z: StateSum) -> FreeEnergyVector:
    return tuple(math.log(c) if c > 0 else None for c in Z.counts)


def statesum_fepc(F: FreeEnergyVector, crossings: int) -> FreeEnergyVector:
    if crossings < 1:
        raise ZeroCrossings("free energy per crossing needs at least one crossing")
    return tuple(None if x is None else x / crossings for x in F)


def statesum_norm(F: FreeEnergyVector) -> float:
    return math.sqrt(math.fsum(x * x for x in F if x is not None))
