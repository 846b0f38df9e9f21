import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperknot import moves
from hyperknot.braid import braid_components, braid_parse
from hyperknot.cocycle import cocycle_coboundary, cocycle_zero
from hyperknot.coloring import coloring_count
from hyperknot.errors import SpecMismatch, ZeroCrossings
from hyperknot.statesum import (
    StateSum,
    statesum_cjkls,
    statesum_fepc,
    statesum_free_energy,
    statesum_norm,
)

from strategies import braid_words


def test_unknot(d3, z3, gf4, gf4_nontrivial):
    w = braid_parse("1", 2)
    assert statesum_cjkls(w, d3, cocycle_zero(d3, z3)).counts == (3, 0, 0)
    assert statesum_cjkls(w, gf4, gf4_nontrivial).counts == (4, 0)


def test_trefoil_zero_cocycle(d3, z3):
    assert statesum_cjkls(braid_parse("1 1 1", 2), d3, cocycle_zero(d3, z3)).counts == (9, 0, 0)


def test_trefoil_gf4_nontrivial(gf4, gf4_nontrivial):
    tre = braid_parse("1 1 1", 2)
    z = statesum_cjkls(tre, gf4, gf4_nontrivial)
    # brute force over the 16 top vectors, weights summed by hand from the table
    phi, op = gf4_nontrivial.table, gf4.op
    counts = [0, 0]
    for a in range(4):
        for b in range(4):
            x, y, g = a, b, 0
            for _ in range(3):
                g += phi[x][y][0]
                x, y = y, op[x][y]
            if (x, y) == (a, b):
                counts[g % 2] += 1
    assert z.counts == tuple(counts) == (4, 12)
    assert z.counts[1] > 0


def test_cocycle_quandle_mismatch(d3, gf4_nontrivial):
    with pytest.raises(SpecMismatch):
        statesum_cjkls(braid_parse("1", 2), d3, gf4_nontrivial)


def test_free_energy_examples(z2, z3):
    assert statesum_free_energy(StateSum(z2, (3, 0))) == (math.log(3), None)
    assert statesum_free_energy(StateSum(z2, (1, 1))) == (0.0, 0.0)
    assert statesum_free_energy(StateSum(z3, (9, 0, 0))) == (math.log(9), None, None)


def test_fepc_examples():
    assert statesum_fepc((math.log(9), None), 3) == (math.log(9) / 3, None)
    assert statesum_fepc((0.0, 0.0), 7) == (0.0, 0.0)
    (x,) = statesum_fepc((math.log(16),), 8)
    assert math.isclose(x, 0.34657359027997264, rel_tol=1e-12)
    assert math.isclose(x, math.log(2) / 2, rel_tol=1e-12)
    with pytest.raises(ZeroCrossings):
        statesum_fepc((1.0,), 0)


def test_norm_examples(d3, z3):
    assert statesum_norm((0.0, None, None)) == 0.0
    assert statesum_norm((3.0, 4.0)) == 5.0
    z = statesum_cjkls(braid_parse("1 1 1", 2), d3, cocycle_zero(d3, z3))
    n = statesum_norm(statesum_fepc(statesum_free_energy(z), 3))
    assert math.isclose(n, math.log(9) / 3, rel_tol=1e-12)
    assert abs(n - 0.7324) < 1e-4


@settings(max_examples=60, deadline=None)
@given(braid_words(max_length=8))
def test_sum_rule_and_identity_coordinate(w):
    from hyperknot.cocycle import AbelianGroup
    from hyperknot.quandle import dihedral

    q = dihedral(3)
    phi = cocycle_coboundary(q, AbelianGroup((3,)), [0, 1, 2])
    z = statesum_cjkls(w, q, phi)
    assert z.total == coloring_count(w, q)
    assert z.counts[0] >= q.n
    F = statesum_free_energy(z)
    assert F[0] is not None
    assert [x is not None for x in F] == [c > 0 for c in z.counts]
    if len(w):
        bound = math.sqrt(len(z.counts)) * math.log(max(z.counts)) / len(w)
        assert statesum_norm(statesum_fepc(F, len(w))) <= bound * (1 + 1e-12)


@settings(max_examples=40, deadline=None)
@given(braid_words(max_length=8), st.sampled_from(moves.MOVES), st.randoms(use_true_random=False))
def test_invariance_gf4_nontrivial(gf4, gf4_nontrivial, w, move, rng):
    a, b = moves.MOVE_FUNCS[move](rng, w)
    assert statesum_cjkls(a, gf4, gf4_nontrivial) == statesum_cjkls(b, gf4, gf4_nontrivial)


@settings(max_examples=40, deadline=None)
@given(braid_words(max_length=8), st.randoms(use_true_random=False))
def test_cohomologous_cocycles_agree(gf4, z2, gf4_nontrivial, w, rng):
    gamma = [rng.choice(z2.elements) for _ in range(gf4.n)]
    shifted = gf4_nontrivial + cocycle_coboundary(gf4, z2, gamma)
    assert statesum_cjkls(w, gf4, shifted) == statesum_cjkls(w, gf4, gf4_nontrivial)


def test_coboundary_trivial_on_knots(d3, z3):
    rng = random.Random(7)
    for _ in range(30):
        w = moves.random_knot_word(rng)
        assert braid_components(w) == 1
        phi = cocycle_coboundary(d3, z3, [rng.randrange(3) for _ in range(3)])
        z = statesum_cjkls(w, d3, phi)
        assert z == StateSum.trivial(z3, coloring_count(w, d3))
