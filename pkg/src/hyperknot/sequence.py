"""The knot sequence K_n = closure(b^n).

Builds per-n rows (state sum, crossing count, free energy per crossing),
checks the period P = M * |A| where M is the order of the Burau matrix of
b, and judges convergence of the free energy per crossing to zero.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .braid import (
    BraidWord,
    braid_burau,
    braid_components,
    braid_matrix_order,
    braid_torus_crossing_number,
    braid_torus_word,
)
from .cocycle import Cocycle
from .errors import BadParameters, InsufficientRows, PeriodicityMismatch
from .quandle import Quandle
from .statesum import StateSum, statesum_cjkls, statesum_fepc, statesum_free_energy, statesum_norm

REL_TOL = 1e-12
CROSSING_MODES = ("murasugi", "diagram")


@dataclass(frozen=True)
class SequenceRow:
    n: int
    word_length: int
    components: int
    crossing_count: int
    crossing_mode: str
    statesum: StateSum
    fepc_norm: float | None  # None when crossing_count == 0
    period_verified: bool | None = None  # None: no partner n +- P in range

    @property
    def is_link(self) -> bool:
        return self.components > 1


@dataclass
class SequenceReport:
    braid: BraidWord
    crossing_mode: str
    order: int | None  # Burau order M; None when the quandle is not Alexander
    group_size: int
    period: int | None
    period_source: str  # "burau" or "detected"
    rows: list[SequenceRow] = field(default_factory=list)

    @property
    def distinct_sums(self) -> list[StateSum]:
        seen = []
        for r in self.rows:
            if r.statesum not in seen:
                seen.append(r.statesum)
        return seen

    @property
    def bound_constant(self) -> float:
        """C = max euclidean norm of the log-vectors of the observed state sums."""
        return max((statesum_norm(statesum_free_energy(z)) for z in self.distinct_sums), default=0.0)

    @property
    def periodicity_ok(self) -> bool:
        return all(r.period_verified is not False for r in self.rows)

    @property
    def distinct_within_period(self) -> bool:
        return self.period is None or len(self.distinct_sums) <= self.period

    def row(self, n: int) -> SequenceRow:
        return self.rows[n - 1]

    def to_json(self) -> dict:
        return {
            "braid": self.braid.to_json(),
            "crossing_mode": self.crossing_mode,
            "M": self.order,
            "A_size": self.group_size,
            "P": self.period,
            "period_source": self.period_source,
            "periodicity_ok": self.periodicity_ok,
            "distinct_sums": [z.to_json()["counts"] for z in self.distinct_sums],
            "C": self.bound_constant,
            "rows": [
                {
                    "n": r.n,
                    "word_length": r.word_length,
                    "components": r.components,
                    "crossing_count": r.crossing_count,
                    "crossing_mode": r.crossing_mode,
                    "counts": list(r.statesum.counts),
                    "fepc_norm": r.fepc_norm,
                    "period_verified": r.period_verified,
                }
                for r in self.rows
            ],
        }


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("HYPERKNOT_THREADS", "1")))
    except ValueError:
        return 1


def _row_statesum(args):
    b, q, phi, n = args
    return statesum_cjkls(b**n, q, phi)


def detect_period(sums: list[StateSum]) -> int | None:
    """Smallest p with sums[k + p] == sums[k] for every k in range, if any p < len(sums)."""
    for p in range(1, len(sums)):
        if all(sums[k + p] == sums[k] for k in range(len(sums) - p)):
            return p
    return None


def sequence_analyze(
    b: BraidWord,
    q: Quandle,
    phi: Cocycle,
    n_max: int,
    crossing_mode: str = "diagram",
    cap: int = 10**6,
    strict: bool = True,
) -> SequenceReport:
    """Rows for closure(b^n), n = 1..n_max, with the period checked pairwise.

    ``crossing_mode="murasugi"`` requires ``b`` to be the torus generator
    sigma_{N-1} ... sigma_1 and uses the torus crossing number; "diagram"
    uses the word length of b^n, an upper bound on the crossing number.
    With ``strict`` a failed periodicity comparison raises
    :class:`PeriodicityMismatch`; otherwise it is recorded in the rows.
    """
    if n_max < 1:
        raise BadParameters("n_max must be >= 1")
    if crossing_mode not in CROSSING_MODES:
        raise BadParameters(f"crossing_mode must be one of {CROSSING_MODES}")
    N = b.strands
    if crossing_mode == "murasugi" and b != braid_torus_word(N, 1):
        raise BadParameters("murasugi mode needs the torus generator sigma_{N-1}...sigma_1")

    jobs = [(b, q, phi, n) for n in range(1, n_max + 1)]
    workers = _worker_count()
    if workers > 1 and n_max > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            sums = list(pool.map(_row_statesum, jobs))
    else:
        sums = [_row_statesum(j) for j in jobs]

    if q.ring is not None:
        order = braid_matrix_order(braid_burau(b, q.ring), cap)
        period, source = order * phi.group.size, "burau"
    else:
        order, period, source = None, detect_period(sums), "detected"

    rows = []
    for n, z in enumerate(sums, start=1):
        if crossing_mode == "murasugi":
            cross = braid_torus_crossing_number(N, n)
        else:
            cross = len(b) * n
        fepc = None
        if cross >= 1:
            fepc = statesum_norm(statesum_fepc(statesum_free_energy(z), cross))
        verified = None
        if period is not None:
            partners = [m for m in (n - period, n + period) if 1 <= m <= n_max]
            if partners:
                verified = all(sums[m - 1] == z for m in partners)
                if not verified and strict:
                    raise PeriodicityMismatch(
                        f"StateSum differs between n={n} and n={partners} with P={period}")
        rows.append(SequenceRow(n, len(b) * n, braid_components(b**n), cross,
                                crossing_mode, z, fepc, verified))
    return SequenceReport(b, crossing_mode, order, phi.group.size, period, source, rows)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    C: float
    checked: tuple[int, ...]
    reason: str

    def to_json(self) -> dict:
        return {"passed": self.passed, "C": self.C, "rows": list(self.checked), "reason": self.reason}


def sequence_convergence_check(report: SequenceReport, tail: int, include_links: bool = True) -> Verdict:
    """PASS iff every tail row obeys norm <= C / c(n) and the norm decreases across the tail."""
    eligible = [r for r in report.rows
                if r.crossing_count >= 1 and (include_links or not r.is_link)]
    if tail < 2 or len(eligible) < tail:
        raise InsufficientRows(f"need {max(tail, 2)} rows with crossings >= 1, have {len(eligible)}")
    rows = eligible[-tail:]
    C = report.bound_constant
    for r in rows:
        limit = C / r.crossing_count
        if r.fepc_norm > limit and not math.isclose(r.fepc_norm, limit, rel_tol=REL_TOL):
            return Verdict(False, C, tuple(x.n for x in rows),
                           f"n={r.n}: norm {r.fepc_norm!r} exceeds C/c = {limit!r}")
    first, last = rows[0].fepc_norm, rows[-1].fepc_norm
    if not (last < first or (first == 0 and last == 0)):
        return Verdict(False, C, tuple(x.n for x in rows),
                       f"tail norm did not decrease: first {first!r}, last {last!r}")
    return Verdict(True, C, tuple(x.n for x in rows), "bounded by C/c(n) and decreasing")
