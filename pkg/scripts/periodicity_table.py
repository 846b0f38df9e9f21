"""Burau order M of the torus generator sigma_{N-1}...sigma_1 over small rings.

Also reports the period observed directly in the state-sum sequence,
which must divide M (zero cocycle, so only the coloring sets vary).

    python scripts/periodicity_table.py --max-size 9
"""
import argparse
import itertools

from hyperknot.braid import braid_burau, braid_matrix_order, braid_torus_word
from hyperknot.cocycle import AbelianGroup, cocycle_zero
from hyperknot.quandle import quandle_alexander
from hyperknot.ring import RingSpec, is_prime
from hyperknot.sequence import detect_period, sequence_analyze


def rings(max_size):
    for p in filter(is_prime, range(2, max_size + 1)):
        d = 1
        while p**d <= max_size:
            for low in itertools.product(range(p), repeat=d):
                if low[0]:
                    yield RingSpec(p, low + (1,))
            d += 1


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=9)
    ap.add_argument("--strands", default="2,3,4")
    args = ap.parse_args()
    print("p,h,N,M,P,observed_period")
    for spec in rings(args.max_size):
        q = quandle_alexander(spec)
        A = AbelianGroup((spec.p,))
        for N in map(int, args.strands.split(",")):
            b = braid_torus_word(N, 1)
            M = braid_matrix_order(braid_burau(b, spec))
            rep = sequence_analyze(b, q, cocycle_zero(q, A), 2 * M, "diagram")
            seen = detect_period([r.statesum for r in rep.rows])
            assert M % seen == 0
            print(f"{spec.p},{' '.join(map(str, spec.h))},{N},{M},{rep.period},{seen}")


if __name__ == "__main__":
    main()
