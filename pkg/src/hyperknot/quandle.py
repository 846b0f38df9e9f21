"""Finite quandles as operation tables.

``op[a][b]`` is ``a * b``; ``inv_op[a][b]`` is the unique ``x`` with
``x * b = a``.  Tables are validated against the three quandle axioms on
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from operator import itemgetter

from .errors import AxiomViolation, MalformedTable
from .ring import RingSpec

AXIOMS = ("idempotency", "right_invertibility", "self_distributivity")


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def summary(self) -> str:
        return ", ".join(
            f"{r.name}={'pass' if r.passed else f'fail{list(r.witness)}'}" for r in self.results
        )

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "axioms": [
                {"name": r.name, "passed": r.passed,
                 "witness": None if r.witness is None else list(r.witness)}
                for r in self.results
            ],
        }


def _normalize_table(op) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(x) for x in row) for row in op)
    except (TypeError, ValueError) as exc:
        raise MalformedTable(f"table is not a 2D integer array: {exc}") from None
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"row {a} has length {len(row)}, expected {n}")
        for x in row:
            if not 0 <= x < n:
                raise MalformedTable(f"entry {x} in row {a} out of range [0, {n})")
    return rows


def quandle_check_axioms(table) -> AxiomReport:
    """Check the three axioms exhaustively.

    ``table`` is a :class:`Quandle` or a square nested sequence.  Each failed
    axiom carries its first witness: ``(a,)`` for idempotency, ``(b, a1, a2)``
    for a column ``b`` with ``a1 * b == a2 * b``, ``(a, b, c)`` for
    self-distributivity.
    """
    op = table.op if isinstance(table, Quandle) else _normalize_table(table)
    n = len(op)

    idem = next((a for a in range(n) if op[a][a] != a), None)
    results = [AxiomResult("idempotency", idem is None, None if idem is None else (idem,))]

    cols = [tuple(op[x][c] for x in range(n)) for c in range(n)]
    inv_witness = None
    for b, col in enumerate(cols):
        if len(set(col)) < n:
            seen = {}
            for a, v in enumerate(col):
                if v in seen:
                    inv_witness = (b, seen[v], a)
                    break
                seen[v] = a
            break
    results.append(AxiomResult("right_invertibility", inv_witness is None, inv_witness))

    # (a*b)*c = (a*c)*(b*c) says each right translation x -> x*c is an endomorphism
    dist_witness = None
    for c, col in enumerate(cols):
        along = itemgetter(*col)
        for a in range(n):
            if itemgetter(*op[a])(col) != along(op[col[a]]):
                b = next(b for b in range(n) if col[op[a][b]] != op[col[a]][col[b]])
                dist_witness = (a, b, c)
                break
        if dist_witness:
            break
    results.append(AxiomResult("self_distributivity", dist_witness is None, dist_witness))
    return AxiomReport(tuple(results))


@dataclass(frozen=True)
class Quandle:
    op: tuple[tuple[int, ...], ...]
    ring: RingSpec | None = None
    inv_op: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        op = _normalize_table(self.op)
        object.__setattr__(self, "op", op)
        report = quandle_check_axioms(op)
        if not report.ok:
            raise AxiomViolation(report)
        n = len(op)
        inv = [[0] * n for _ in range(n)]
        for b in range(n):
            for x in range(n):
                inv[op[x][b]][b] = x
        object.__setattr__(self, "inv_op", tuple(tuple(r) for r in inv))

    @property
    def n(self) -> int:
        return len(self.op)

    def star(self, a: int, b: int) -> int:
        return self.op[a][b]

    def to_json(self) -> dict:
        doc = {"n": self.n, "op": [list(r) for r in self.op]}
        if self.ring is not None:
            doc["ring"] = self.ring.to_json()
        return doc


def quandle_alexander(spec: RingSpec) -> Quandle:
    """Alexander quandle a * b = T a + (1 - T) b on the elements of ``spec``."""
    els = spec.elements
    t = spec.T
    s = spec.one - t
    p = spec.p
    weights = [p ** (spec.d - 1 - k) for k in range(spec.d)]
    ta = [(t * x).coeffs for x in els]
    sb = [(s * y).coeffs for y in els]
    op = tuple(
        tuple(sum((u + v) % p * w for u, v, w in zip(x, y, weights)) for y in sb) for x in ta
    )
    return Quandle(op, ring=spec)


def quandle_load(doc: dict) -> Quandle:
    """Build a quandle from ``{"n": int, "op": [[int]]}``.

    An optional ``"ring": {"p", "h"}`` entry marks the table as Alexander; it
    must then coincide with the table generated from that ring.
    """
    if not isinstance(doc, dict) or "op" not in doc:
        raise MalformedTable("quandle document needs an 'op' table")
    op = _normalize_table(doc["op"])
    if "n" in doc and int(doc["n"]) != len(op):
        raise MalformedTable(f"n={doc['n']} disagrees with table size {len(op)}")
    ring = None
    if doc.get("ring") is not None:
        ring = RingSpec.from_json(doc["ring"])
        if quandle_alexander(ring).op != op:
            raise MalformedTable("table does not match the Alexander quandle of its ring")
    return Quandle(op, ring=ring)


def dihedral(p: int) -> Quandle:
    return quandle_alexander(RingSpec(p, (1, 1)))
