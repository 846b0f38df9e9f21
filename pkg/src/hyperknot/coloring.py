"""Colorings of braid closures by a finite quandle.

Two independent routes: propagate top colors down the word and keep the
fixed points, or solve the row-vector equation a B(w) = a over the ring of
an Alexander quandle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .braid import BraidWord, braid_burau
from .errors import BadColorIndex, LengthMismatch, SearchSpaceTooLarge
from .quandle import Quandle
from .ring import RingSpec

# Trace entries are (x, y, sign): the colors carried at the equivalent positive crossing.
TraceEntry = tuple[int, int, int]

DEFAULT_BRUTE_FORCE_BOUND = 1 << 20


@dataclass(frozen=True)
class Coloring:
    top: tuple[int, ...]
    trace: tuple[TraceEntry, ...]


def coloring_propagate(w: BraidWord, q: Quandle, top) -> tuple[tuple[int, ...], tuple[TraceEntry, ...]]:
    """Push ``top`` through ``w``; return (bottom colors, per-letter trace).

    At sigma_i the pair (a, b) in slots (i, i+1) becomes (b, a*b) and the
    trace records (a, b, +1).  At sigma_i^-1 it becomes (c, a) with c*a = b,
    recorded as (c, a, -1).
    """
    if len(top) != w.strands:
        raise LengthMismatch(f"{len(top)} colors for {w.strands} strands")
    n = q.n
    colors = list(top)
    for c in colors:
        if not (isinstance(c, int) and 0 <= c < n):
            raise BadColorIndex(f"color {c!r} not in [0, {n})")
    op, inv = q.op, q.inv_op
    trace = []
    for i, s in w.letters:
        a, b = colors[i - 1], colors[i]
        if s > 0:
            colors[i - 1], colors[i] = b, op[a][b]
            trace.append((a, b, 1))
        else:
            c = inv[b][a]
            colors[i - 1], colors[i] = c, a
            trace.append((c, a, -1))
    return tuple(colors), tuple(trace)


def coloring_enumerate(w: BraidWord, q: Quandle) -> list[Coloring]:
    """All top vectors fixed by propagation, lexicographic."""
    found = []
    for top in itertools.product(range(q.n), repeat=w.strands):
        bottom, trace = coloring_propagate(w, q, top)
        if bottom == top:
            found.append(Coloring(top, trace))
    return found


def coloring_count(w: BraidWord, q: Quandle) -> int:
    return len(coloring_enumerate(w, q))


def _field_null_space(m, spec: RingSpec):
    """Basis of {x : m x = 0} over the field ``spec`` (rows of ``m`` are equations)."""
    rows = [list(r) for r in m]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        vec = [spec.zero] * ncols
        vec[fcol] = spec.one
        for k, pc in enumerate(pivots):
            vec[pc] = -rows[k][fcol]
        basis.append(vec)
    return basis


def coloring_enumerate_burau(
    w: BraidWord, spec: RingSpec, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> list[tuple[int, ...]]:
    """Solutions of a (B(w) - I) = 0, as sorted tuples of element indices.

    Field rings are solved by elimination; otherwise every one of the
    p^(dN) vectors is tested, provided that count is within ``bound``.
    """
    N = w.strands
    B = braid_burau(w, spec)
    if spec.is_field:
        # a M = 0  <=>  M^T a^T = 0; M^T rows are the columns of M.
        m = [
            [B.rows[i][j] - (spec.one if i == j else spec.zero) for i in range(N)]
            for j in range(N)
        ]
        basis = _field_null_space(m, spec)
        sols = set()
        for coeffs in itertools.product(spec.elements, repeat=len(basis)):
            vec = [spec.zero] * N
            for c, b in zip(coeffs, basis):
                if c:
                    vec = [x + c * y for x, y in zip(vec, b)]
            sols.add(tuple(x.index for x in vec))
        return sorted(sols)
    total = spec.size**N
    if total > bound:
        raise SearchSpaceTooLarge(f"{total} candidate vectors exceed bound {bound}")
    els = spec.elements
    out = []
    for idx in itertools.product(range(spec.size), repeat=N):
        vec = tuple(els[k] for k in idx)
        if B.act(vec) == vec:
            out.append(idx)
    return out
