"""Command-line interface.

    hyperknot quandle make --p 3 --h 1,1 --out dihedral3.json
    hyperknot quandle check --table dihedral3.json
    hyperknot cocycle zero --quandle dihedral3.json --orders 3 --out zero.json
    hyperknot cocycle search --quandle gf4.json --orders 2
    hyperknot cocycle check --quandle dihedral3.json --phi zero.json
    hyperknot invariant --braid "1 1 1" --strands 2 --quandle dihedral3.json --cocycle zero.json
    hyperknot sequence --torus 2 --n-max 12 --quandle dihedral3.json --cocycle zero.json
    hyperknot selftest --seed 0

Exit codes: 0 success, 1 input error, 2 axiom violation or periodicity
mismatch (or a failed verdict), 3 search too large.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import moves
from .braid import braid_components, braid_parse, braid_torus_word
from .cocycle import (
    AbelianGroup,
    cocycle_check,
    cocycle_coboundary,
    cocycle_load,
    cocycle_search,
    cocycle_zero,
    is_coboundary,
    cocycle_span,
)
from .coloring import coloring_count
from .errors import HyperknotError, InsufficientRows, PeriodicityMismatch, TooLarge
from .quandle import quandle_alexander, quandle_check_axioms, quandle_load
from .ring import RingSpec
from .sequence import sequence_analyze, sequence_convergence_check
from .statesum import StateSum, statesum_cjkls, statesum_free_energy


class UsageError(HyperknotError):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.12g}"


# --- subcommands -------------------------------------------------------------


def cmd_quandle(args) -> int:
    if args.action == "make":
        q = quandle_alexander(RingSpec(args.p, tuple(_ints(args.h))))
        _emit(_dump(q.to_json()), args.out)
        return 0
    doc = _read_json(args.table)
    if not isinstance(doc, dict) or "op" not in doc:
        raise UsageError("quandle document needs an 'op' table")
    report = quandle_check_axioms(doc["op"])
    _emit(_dump(report.to_json()), args.out)
    if report.ok:
        quandle_load(doc)  # also validates n and an optional ring entry
    return 0 if report.ok else 2


def cmd_cocycle(args) -> int:
    q = quandle_load(_read_json(args.quandle))
    if args.action == "check":
        doc = _read_json(args.phi)
        if not isinstance(doc, dict) or "orders" not in doc or "phi" not in doc:
            raise UsageError("cocycle document needs 'orders' and 'phi'")
        res = cocycle_check(q, AbelianGroup(tuple(doc["orders"])), doc["phi"])
        _emit(_dump(res.to_json()), args.out)
        return 0 if res.ok else 2
    A = AbelianGroup(tuple(_ints(args.orders)))
    if args.action == "zero":
        _emit(_dump(cocycle_zero(q, A).to_json()), args.out)
        return 0
    if args.action == "coboundary":
        gamma = [tuple(_ints(g.replace(":", ","))) for g in args.gamma.split(";")] \
            if ";" in args.gamma or ":" in args.gamma else [(g,) for g in _ints(args.gamma)]
        _emit(_dump(cocycle_coboundary(q, A, gamma).to_json()), args.out)
        return 0
    try:
        found = cocycle_search(q, A)
    except TooLarge as exc:
        print(f"TooLarge: {exc}", file=sys.stderr)
        return 3
    docs = []
    for c in found:
        d = c.to_json()
        try:
            d["coboundary"] = is_coboundary(c)
        except TooLarge:
            d["coboundary"] = None
        docs.append(d)
    doc = {"orders": list(A.orders), "quandle_size": q.n, "generators": docs}
    if args.span:
        doc["span_size"] = len(cocycle_span(found))
    _emit(_dump(doc), args.out)
    return 0


def _load_pair(args):
    q = quandle_load(_read_json(args.quandle))
    phi = cocycle_load(_read_json(args.cocycle), q)
    return q, phi


def cmd_invariant(args) -> int:
    w = braid_parse(args.braid, args.strands)
    q, phi = _load_pair(args)
    z = statesum_cjkls(w, q, phi)
    fe = statesum_free_energy(z)
    doc = {
        "braid": w.to_json(),
        "components": braid_components(w),
        "colorings": z.total,
        "statesum": z.to_json(),
        "free_energy": list(fe),
    }
    if args.format == "human":
        text = (f"braid {w}\ncomponents {doc['components']}\ncolorings {z.total}\n"
                f"counts {list(z.counts)}\nfree_energy {[_fmt(x) or 'undefined' for x in fe]}\n")
    else:
        text = _dump(doc)
    _emit(text, args.out)
    return 0


def _sequence_csv(report, verdict) -> str:
    buf = io.StringIO()
    buf.write(f"# braid={report.braid.text()} strands={report.braid.strands}\n")
    buf.write(f"# M={report.order if report.order is not None else 'na'}\n")
    buf.write(f"# A_size={report.group_size}\n")
    buf.write(f"# P={report.period if report.period is not None else 'na'}"
              f" source={report.period_source}\n")
    buf.write(f"# distinct_sums={len(report.distinct_sums)}\n")
    buf.write(f"# C={_fmt(report.bound_constant)}\n")
    buf.write(f"# periodicity={'verified' if report.periodicity_ok else 'MISMATCH'}\n")
    buf.write(f"# verdict={'PASS' if verdict.passed else 'FAIL'} tail={','.join(map(str, verdict.checked))}\n")
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["n", "components", "crossing_count", "crossing_mode", "counts",
                 "fepc_norm", "period_verified"])
    for r in report.rows:
        pv = "na" if r.period_verified is None else str(r.period_verified).lower()
        wr.writerow([r.n, r.components, r.crossing_count, r.crossing_mode,
                     ";".join(map(str, r.statesum.counts)), _fmt(r.fepc_norm), pv])
    return buf.getvalue()


def cmd_sequence(args) -> int:
    if (args.torus is None) == (args.braid is None):
        raise UsageError("give exactly one of --torus N or --braid W")
    if args.torus is not None:
        b = braid_torus_word(args.torus, 1)
        mode = args.crossing or "murasugi"
    else:
        if args.strands is None:
            raise UsageError("--braid needs --strands")
        b = braid_parse(args.braid, args.strands)
        mode = args.crossing or "diagram"
    q, phi = _load_pair(args)
    report = sequence_analyze(b, q, phi, args.n_max, mode, cap=args.cap, strict=False)
    include = not args.exclude_links
    eligible = [r for r in report.rows if r.crossing_count >= 1 and (include or not r.is_link)]
    tail = args.tail if args.tail is not None else max(2, min(8, len(eligible)))
    verdict = sequence_convergence_check(report, tail, include_links=include)
    if args.format == "json":
        doc = report.to_json()
        doc["verdict"] = verdict.to_json()
        text = _dump(doc)
    else:
        text = _sequence_csv(report, verdict)
    _emit(text, args.out)
    if not report.periodicity_ok:
        print("periodicity mismatch: implementation bug", file=sys.stderr)
        return 2
    return 0 if verdict.passed else 2


def run_selftest(seed: int = 0, words: int = 50) -> dict:
    """Markov/R2 invariance of coloring counts and state sums on seeded random knots."""

    rng = random.Random(seed)
    configs = []
    for spec, orders in ((RingSpec(3, (1, 1)), (3,)), (RingSpec(2, (1, 1, 1)), (2,))):
        q = quandle_alexander(spec)
        A = AbelianGroup(orders)
        span = cocycle_span(cocycle_search(q, A))
        gamma = [rng.choice(A.elements) for _ in range(q.n)]
        cocycles = {"zero": cocycle_zero(q, A), "coboundary": cocycle_coboundary(q, A, gamma)}
        nontrivial = [c for c in span if not is_coboundary(c)]
        if nontrivial:
            cocycles["non_coboundary"] = nontrivial[0]
        configs.append((f"{spec.p}:{','.join(map(str, spec.h))}", q, cocycles))
    results = []
    for name, q, cocycles in configs:
        for cname, phi in cocycles.items():
            for move in moves.MOVES:
                fails = 0
                for _ in range(words):
                    w = moves.random_knot_word(rng)
                    a, b = moves.MOVE_FUNCS[move](rng, w)
                    if coloring_count(a, q) != coloring_count(b, q) or \
                            statesum_cjkls(a, q, phi) != statesum_cjkls(b, q, phi):
                        fails += 1
                results.append({"ring": name, "cocycle": cname, "move": move,
                                "words": words, "failures": fails})
    return {"seed": seed, "ok": all(r["failures"] == 0 for r in results), "results": results}


def cmd_selftest(args) -> int:
    doc = run_selftest(args.seed, args.words)
    _emit(_dump(doc), args.out)
    return 0 if doc["ok"] else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperknot", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_out(sp):
        sp.add_argument("--out", help="write output to a file instead of stdout")

    qp = sub.add_parser("quandle", help="build or check quandle tables")
    qsub = qp.add_subparsers(dest="action", required=True)
    mk = qsub.add_parser("make", help="Alexander quandle of Z_p[T]/(h)")
    mk.add_argument("--p", type=int, required=True)
    mk.add_argument("--h", required=True, help="coefficients of h, constant term first")
    add_out(mk)
    ck = qsub.add_parser("check", help="verify the quandle axioms of a JSON table")
    ck.add_argument("--table", required=True)
    add_out(ck)
    qp.set_defaults(func=cmd_quandle)

    cp = sub.add_parser("cocycle", help="search, check or build 2-cocycles")
    csub = cp.add_subparsers(dest="action", required=True)
    for name in ("search", "zero", "coboundary"):
        sp = csub.add_parser(name)
        sp.add_argument("--quandle", required=True)
        sp.add_argument("--orders", required=True, help="cyclic factor orders, e.g. 2 or 2,3")
        add_out(sp)
        if name == "coboundary":
            sp.add_argument("--gamma", required=True,
                            help="values gamma[a]: '0,1,2' for one factor, '0:1;1:0' for several")
        if name == "search":
            sp.add_argument("--span", action="store_true", help="also report the size of the span")
    sp = csub.add_parser("check")
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--phi", required=True)
    add_out(sp)
    cp.set_defaults(func=cmd_cocycle)

    ip = sub.add_parser("invariant", help="state sum of a braid closure")
    ip.add_argument("--braid", required=True)
    ip.add_argument("--strands", type=int, required=True)
    ip.add_argument("--quandle", required=True)
    ip.add_argument("--cocycle", required=True)
    ip.add_argument("--format", choices=("json", "human"), default="json")
    add_out(ip)
    ip.set_defaults(func=cmd_invariant)

    sq = sub.add_parser("sequence", help="analyze closures of b^n")
    sq.add_argument("--torus", type=int, help="use the torus generator on N strands")
    sq.add_argument("--braid")
    sq.add_argument("--strands", type=int)
    sq.add_argument("--n-max", type=int, required=True)
    sq.add_argument("--quandle", required=True)
    sq.add_argument("--cocycle", required=True)
    sq.add_argument("--crossing", choices=("murasugi", "diagram"))
    sq.add_argument("--tail", type=int)
    sq.add_argument("--exclude-links", action="store_true")
    sq.add_argument("--cap", type=int, default=10**6, help="Burau order cap")
    sq.add_argument("--format", choices=("csv", "json"), default="csv")
    add_out(sq)
    sq.set_defaults(func=cmd_sequence)

    st = sub.add_parser("selftest", help="seeded Markov-invariance suite")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--words", type=int, default=50)
    add_out(st)
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PeriodicityMismatch as exc:
        print(f"PeriodicityMismatch: {exc}", file=sys.stderr)
        return 2
    except InsufficientRows as exc:
        print(f"InsufficientRows: {exc}", file=sys.stderr)
        return 1
    except HyperknotError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
