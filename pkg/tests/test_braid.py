import pytest
from hypothesis import given, settings, strategies as st

from hyperknot.braid import (
    BraidWord,
    BurauMatrix,
    braid_burau,
    braid_components,
    braid_matrix_order,
    braid_parse,
    braid_permutation,
    braid_torus_crossing_number,
    braid_torus_word,
    permutation_order,
)
from hyperknot.errors import BadParameters, CapExceeded, IndexOutOfRange, ParseError
from hyperknot.ring import RingSpec

from conftest import small_specs
from strategies import braid_words

SPECS_9 = small_specs(9)


def test_parse():
    assert braid_parse("1 1 1", 2).letters == ((1, 1),) * 3
    assert braid_parse("2 -1 2", 3).letters == ((2, 1), (1, -1), (2, 1))
    assert len(braid_parse("", 3)) == 0
    with pytest.raises(IndexOutOfRange):
        braid_parse("3", 3)
    with pytest.raises(ParseError):
        braid_parse("1 x", 3)
    with pytest.raises(ParseError):
        braid_parse("0", 3)


def test_text_json_roundtrip():
    w = braid_parse("2 -1 2", 3)
    assert braid_parse(w.text(), 3) == w
    assert BraidWord.from_json(w.to_json()) == w


def test_torus_words():
    assert braid_torus_word(2, 3).letters == ((1, 1),) * 3
    assert braid_torus_word(3, 2).letters == ((2, 1), (1, 1), (2, 1), (1, 1))
    assert braid_torus_word(2, 1).letters == ((1, 1),)
    with pytest.raises(BadParameters):
        braid_torus_word(1, 3)
    with pytest.raises(BadParameters):
        braid_torus_word(3, 0)


@pytest.mark.parametrize("N, n, c", [(2, 3, 3), (3, 4, 8), (2, 1, 0), (3, 2, 3), (2, 5, 5), (4, 3, 8)])
def test_torus_crossing_number(N, n, c):
    assert braid_torus_crossing_number(N, n) == c


@given(st.integers(2, 7), st.integers(1, 30))
def test_torus_length_bounds_crossing_number(N, n):
    w = braid_torus_word(N, n)
    assert len(w) == (N - 1) * n >= braid_torus_crossing_number(N, n)
    assert all(s == 1 for _, s in w.letters)


def test_permutation_and_components():
    assert braid_permutation(braid_torus_word(2, 3)) == (1, 0)
    assert braid_components(braid_torus_word(2, 3)) == 1
    assert braid_permutation(braid_torus_word(2, 2)) == (0, 1)
    assert braid_components(braid_torus_word(2, 2)) == 2
    assert braid_components(BraidWord(3)) == 3


@given(st.integers(2, 6), st.integers(1, 12))
def test_torus_components_gcd(N, n):
    from math import gcd

    assert braid_components(braid_torus_word(N, n)) == gcd(N, n)


def test_burau_sigma1_dihedral(d3_spec):
    B = braid_burau(braid_parse("1", 2), d3_spec)
    assert [[x.coeffs[0] for x in r] for r in B.rows] == [[0, 2], [1, 2]]


def _mat_mod(a, b, p):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) % p for j in range(len(b[0]))]
            for i in range(len(a))]


def test_burau_trefoil_identity_by_hand(d3_spec):
    # independent integer-matrix oracle mod 3
    g = [[0, 2], [1, 2]]
    cube = _mat_mod(_mat_mod(g, g, 3), g, 3)
    assert cube == [[1, 0], [0, 1]]
    assert braid_burau(braid_parse("1 1 1", 2), d3_spec).is_identity()


def test_order_examples(d3_spec, gf4_spec):
    assert braid_matrix_order(braid_burau(braid_parse("1", 2), d3_spec)) == 3
    assert braid_matrix_order(BurauMatrix.identity(d3_spec, 3)) == 1
    with pytest.raises(CapExceeded):
        braid_matrix_order(braid_burau(braid_parse("1", 2), gf4_spec), cap=1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPECS_9), st.integers(3, 5), st.data())
def test_braid_relations(spec, N, data):
    i = data.draw(st.integers(1, N - 2))
    a = braid_burau(BraidWord(N, ((i, 1), (i + 1, 1), (i, 1))), spec)
    b = braid_burau(BraidWord(N, ((i + 1, 1), (i, 1), (i + 1, 1))), spec)
    assert a == b
    if N >= 4:
        j = data.draw(st.integers(1, N - 1).filter(lambda j: abs(j - i) >= 2))
        s, t = data.draw(st.sampled_from((1, -1))), data.draw(st.sampled_from((1, -1)))
        assert braid_burau(BraidWord(N, ((i, s), (j, t))), spec) == \
            braid_burau(BraidWord(N, ((j, t), (i, s))), spec)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPECS_9), braid_words(max_length=10))
def test_word_times_inverse(spec, w):
    assert braid_burau(w * w.inverse(), spec).is_identity()
    assert (braid_burau(w, spec) @ braid_burau(w.inverse(), spec)).is_identity()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPECS_9), braid_words(max_length=6))
def test_order_is_minimal(spec, w):
    B = braid_burau(w, spec)
    M = braid_matrix_order(B)
    P = BurauMatrix.identity(spec, w.strands)
    for k in range(1, M + 1):
        P = P @ B
        assert P.is_identity() == (k == M)


@given(braid_words(max_length=10), st.integers(1, 30))
def test_component_count_periodic_in_permutation_order(w, n):
    k = permutation_order(braid_permutation(w))
    assert braid_components(w ** n) == braid_components(w ** (n + k))
