"""Finite abelian coefficient groups and quandle 2-cocycles.

Cocycles are written additively: ``phi[a][b]`` is a tuple over
Z_{q_1} x ... x Z_{q_k}.  The conditions are

    phi[a][a] = 0
    phi[a][b] + phi[a*b][c] = phi[a][c] + phi[a*c][b*c]
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import BadParameters, CocycleViolation, ShapeMismatch, TooLarge
from .quandle import Quandle

Elem = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(q) for q in self.orders)
        if not orders or any(q < 2 for q in orders):
            raise BadParameters(f"cyclic factor orders must be >= 2, got {list(self.orders)}")
        object.__setattr__(self, "orders", orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def zero(self) -> Elem:
        return (0,) * len(self.orders)

    @cached_property
    def elements(self) -> tuple[Elem, ...]:
        return tuple(itertools.product(*(range(q) for q in self.orders)))

    def index(self, g: Elem) -> int:
        i = 0
        for x, q in zip(g, self.orders):
            i = i * q + x
        return i

    def normalize(self, g) -> Elem:
        if isinstance(g, int):
            g = (g,)
        g = tuple(int(x) for x in g)
        if len(g) != len(self.orders):
            raise ShapeMismatch(f"element {g} has {len(g)} components, group has {len(self.orders)}")
        return tuple(x % q for x, q in zip(g, self.orders))

    def add(self, g: Elem, h: Elem) -> Elem:
        return tuple((x + y) % q for x, y, q in zip(g, h, self.orders))

    def sub(self, g: Elem, h: Elem) -> Elem:
        return tuple((x - y) % q for x, y, q in zip(g, h, self.orders))

    def scale(self, k: int, g: Elem) -> Elem:
        return tuple(k * x % q for x, q in zip(g, self.orders))


@dataclass(frozen=True)
class CocycleCheck:
    ok: bool
    kind: str | None = None  # "diagonal" or "cocycle"
    witness: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "kind": self.kind,
                "witness": None if self.witness is None else list(self.witness)}


def _normalize_phi(q: Quandle, A: AbelianGroup, table):
    try:
        rows = [list(r) for r in table]
    except TypeError:
        raise ShapeMismatch("cocycle table must be a 2D array") from None
    if len(rows) != q.n or any(len(r) != q.n for r in rows):
        raise ShapeMismatch(f"cocycle table must be {q.n}x{q.n}")
    return tuple(tuple(A.normalize(g) for g in r) for r in rows)


def cocycle_check(q: Quandle, A: AbelianGroup, table) -> CocycleCheck:
    phi = _normalize_phi(q, A, table)
    n, op = q.n, q.op
    for a in range(n):
        if any(phi[a][a]):
            return CocycleCheck(False, "diagonal", (a,))
    for a in range(n):
        for b in range(n):
            ab = op[a][b]
            for c in range(n):
                lhs = A.add(phi[a][b], phi[ab][c])
                rhs = A.add(phi[a][c], phi[op[a][c]][op[b][c]])
                if lhs != rhs:
                    return CocycleCheck(False, "cocycle", (a, b, c))
    return CocycleCheck(True)


@dataclass(frozen=True)
class Cocycle:
    quandle: Quandle
    group: AbelianGroup
    table: tuple[tuple[Elem, ...], ...]

    def __post_init__(self):
        phi = _normalize_phi(self.quandle, self.group, self.table)
        object.__setattr__(self, "table", phi)
        res = cocycle_check(self.quandle, self.group, phi)
        if not res.ok:
            raise CocycleViolation(f"{res.kind} condition fails at {res.witness}")

    def __add__(self, other: Cocycle) -> Cocycle:
        A = self.group
        return Cocycle(self.quandle, A, tuple(
            tuple(A.add(x, y) for x, y in zip(r, s)) for r, s in zip(self.table, other.table)))

    def scaled(self, k: int) -> Cocycle:
        A = self.group
        return Cocycle(self.quandle, A, tuple(tuple(A.scale(k, x) for x in r) for r in self.table))

    def is_zero(self) -> bool:
        return not any(any(x) for r in self.table for x in r)

    def to_json(self) -> dict:
        return {"orders": list(self.group.orders),
                "phi": [[list(x) for x in r] for r in self.table]}


def cocycle_zero(q: Quandle, A: AbelianGroup) -> Cocycle:
    return Cocycle(q, A, tuple(tuple(A.zero for _ in range(q.n)) for _ in range(q.n)))


def cocycle_load(doc: dict, q: Quandle) -> Cocycle:
    """Read ``{"orders": [int], "phi": n x n array of k-tuples}``."""
    if not isinstance(doc, dict) or "orders" not in doc or "phi" not in doc:
        raise ShapeMismatch("cocycle document needs 'orders' and 'phi'")
    return Cocycle(q, AbelianGroup(tuple(doc["orders"])), doc["phi"])


def cocycle_coboundary(q: Quandle, A: AbelianGroup, gamma) -> Cocycle:
    """delta gamma: phi[a][b] = gamma[a] - gamma[a*b]."""
    gamma = [A.normalize(g) for g in gamma]
    if len(gamma) != q.n:
        raise ShapeMismatch(f"gamma has {len(gamma)} values for a quandle of size {q.n}")
    return Cocycle(q, A, tuple(
        tuple(A.sub(gamma[a], gamma[q.op[a][b]]) for b in range(q.n)) for a in range(q.n)))


@lru_cache(maxsize=32)
def all_coboundaries(q: Quandle, A: AbelianGroup, limit: int = 1 << 16) -> frozenset:
    """Tables of every delta gamma; brute force over the |A|^n maps gamma."""
    if A.size**q.n > limit:
        raise TooLarge(f"{A.size}^{q.n} maps exceed limit {limit}")
    return frozenset(
        cocycle_coboundary(q, A, g).table for g in itertools.product(A.elements, repeat=q.n))


def is_coboundary(phi: Cocycle, limit: int = 1 << 16) -> bool:
    return phi.table in all_coboundaries(phi.quandle, phi.group, limit)


# --- linear solve over Z_m ---------------------------------------------------


def _constraint_rows(q: Quandle) -> list[list[int]]:
    n, op = q.n, q.op
    var = lambda a, b: a * n + b  # noqa: E731
    rows = {}
    for a in range(n):
        r = [0] * (n * n)
        r[var(a, a)] = 1
        rows[tuple(r)] = None
    for a, b, c in itertools.product(range(n), repeat=3):
        r = [0] * (n * n)
        r[var(a, b)] += 1
        r[var(op[a][b], c)] += 1
        r[var(a, c)] -= 1
        r[var(op[a][c], op[b][c])] -= 1
        if any(r):
            rows[tuple(r)] = None
    return [list(r) for r in rows]


def kernel_generators(rows: list[list[int]], ncols: int, m: int) -> list[list[int]]:
    """Generators of {x in Z_m^ncols : rows . x = 0 mod m}.

    Diagonalizes the matrix with unimodular row and column operations,
    tracking only the column transform V; with rows.V = D diagonal, the
    kernel is generated by (m / gcd(d_i, m)) V[:, i].
    """
    A = [[x % m for x in r] for r in rows]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    nrows = len(A)

    def col_op(dst, src, f):
        for r in A:
            r[dst] = (r[dst] - f * r[src]) % m
        for r in V:
            r[dst] = (r[dst] - f * r[src]) % m

    def col_swap(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(nrows, ncols):
        nz = [(A[i][j], i, j) for i in range(t, nrows) for j in range(t, ncols) if A[i][j]]
        if not nz:
            break
        while True:
            _, i, j = min(nz)
            A[t], A[i] = A[i], A[t]
            col_swap(t, j)
            piv = A[t][t]
            for i in range(t + 1, nrows):
                if A[i][t]:
                    f = A[i][t] // piv
                    A[i] = [(x - f * y) % m for x, y in zip(A[i], A[t])]
            for j in range(t + 1, ncols):
                if A[t][j]:
                    col_op(j, t, A[t][j] // piv)
            nz = [(A[i][t], i, t) for i in range(t + 1, nrows) if A[i][t]]
            nz += [(A[t][j], t, j) for j in range(t + 1, ncols) if A[t][j]]
            if not nz:
                break
            # a smaller remainder is now off the diagonal; it becomes the next pivot
            nz.append((A[t][t], t, t))
            nz = [x for x in nz if x[0]]
        t += 1
    diag = [A[i][i] if i < min(t, nrows) else 0 for i in range(ncols)]
    gens = []
    for i in range(ncols):
        f = m // math.gcd(diag[i], m)
        vec = [f * V[r][i] % m for r in range(ncols)]
        if any(vec):
            gens.append(vec)
    return gens


def cocycle_search(q: Quandle, A: AbelianGroup, max_size: int = 8, max_order: int = 16) -> list[Cocycle]:
    """Zero cocycle followed by generators of the full cocycle group Z^2(X; A).

    Each cyclic factor is solved independently; the returned list spans
    every table satisfying both conditions (see :func:`cocycle_span`).
    """
    if q.n > max_size or A.size > max_order:
        raise TooLarge(f"search bounded to |X| <= {max_size}, |A| <= {max_order}")
    n = q.n
    rows = _constraint_rows(q)
    out = [cocycle_zero(q, A)]
    seen = {out[0].table}
    for k, m in enumerate(A.orders):
        for vec in kernel_generators(rows, n * n, m):
            table = []
            for a in range(n):
                row = []
                for b in range(n):
                    g = [0] * len(A.orders)
                    g[k] = vec[a * n + b]
                    row.append(tuple(g))
                table.append(tuple(row))
            table = tuple(table)
            if table not in seen:
                seen.add(table)
                out.append(Cocycle(q, A, table))
    return out


def cocycle_span(cocycles: list[Cocycle], limit: int = 1 << 16) -> list[Cocycle]:
    """Every Z-linear combination of ``cocycles``, by closure under addition."""
    if not cocycles:
        return []
    zero = cocycles[0].scaled(0)
    found = {zero.table: zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for c in frontier:
            for g in cocycles:
                s = c + g
                if s.table not in found:
                    if len(found) >= limit:
                        raise TooLarge(f"cocycle span exceeds {limit} elements")
                    found[s.table] = s
                    nxt.append(s)
        frontier = nxt
    return [found[t] for t in sorted(found)]
