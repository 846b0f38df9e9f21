import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from hyperknot.errors import DegreeZero, NotMonic, NotPrime, SpecMismatch, TNotInvertible
from hyperknot.ring import RingSpec, ring_add, ring_inv_T, ring_make, ring_mul, ring_neg

from conftest import small_specs


def test_make_dihedral_ring():
    s = ring_make(3, [1, 1])
    assert s.size == 3 and s.d == 1
    assert s.T == s.scalar(-1)


def test_make_gf4_is_field_by_brute_force():
    s = ring_make(2, [1, 1, 1])
    els = s.elements
    assert len(els) == 4
    nonzero = [x for x in els if x]
    for x in nonzero:
        assert sum(1 for y in els if x * y == s.one) == 1
    assert s.is_field


@pytest.mark.parametrize(
    "p, h, exc",
    [(2, [0, 1, 1], TNotInvertible), (4, [1, 1], NotPrime), (3, [1, 2], NotMonic),
     (3, [1], DegreeZero), (1, [1, 1], NotPrime)],
)
def test_make_errors(p, h, exc):
    with pytest.raises(exc):
        ring_make(p, h)


def test_mul_examples():
    d3 = ring_make(3, [1, 1])
    assert ring_mul(d3.T, d3.T) == d3.one
    gf4 = ring_make(2, [1, 1, 1])
    assert ring_mul(gf4.T, gf4.T) == gf4.element([1, 1])


def test_spec_mismatch():
    a = ring_make(3, [1, 1]).one
    b = ring_make(5, [1, 1]).one
    with pytest.raises(SpecMismatch):
        ring_add(a, b)


@pytest.mark.parametrize("p, h, expected", [(3, [1, 1], [2]), (2, [1, 1, 1], [1, 1]), (5, [-2, 1], [3])])
def test_inv_T_examples(p, h, expected):
    s = ring_make(p, h)
    # exhaustive search oracle
    found = [u for u in s.elements if u * s.T == s.one]
    assert found == [s.element(expected)]
    assert ring_inv_T(s) == s.element(expected)


@pytest.mark.parametrize("spec", small_specs(16), ids=repr)
def test_ring_axioms_exhaustive(spec):
    els = spec.elements
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
        assert ring_add(a, ring_neg(a)) == spec.zero
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    assert ring_inv_T(spec) * spec.T == spec.one


@pytest.mark.parametrize("spec", small_specs(32), ids=repr)
def test_mul_matches_sympy_reduction(spec):
    x = sympy.Symbol("x")
    mod = sympy.Poly(list(reversed(spec.h)), x, modulus=spec.p)
    for a, b in itertools.product(spec.elements, repeat=2):
        pa = sympy.Poly(list(reversed(a.coeffs)), x, modulus=spec.p)
        pb = sympy.Poly(list(reversed(b.coeffs)), x, modulus=spec.p)
        r = (pa * pb).rem(mod)
        coeffs = [int(c) % spec.p for c in reversed(r.all_coeffs())]
        assert (a * b) == spec.element(coeffs)


@pytest.mark.parametrize("spec", small_specs(32), ids=repr)
def test_is_field_matches_sympy(spec):
    x = sympy.Symbol("x")
    h = sympy.Poly(list(reversed(spec.h)), x, modulus=spec.p)
    assert spec.is_field == h.is_irreducible


@given(st.sampled_from(small_specs(49)), st.data())
def test_canonical_form_and_index_roundtrip(spec, data):
    k = data.draw(st.integers(0, spec.size - 1))
    a = spec.from_index(k)
    assert a.index == k and len(a.coeffs) == spec.d
    raw = data.draw(st.lists(st.integers(-50, 50), max_size=8))
    e = spec.element(raw)
    assert all(0 <= c < spec.p for c in e.coeffs) and len(e.coeffs) == spec.d


def test_index_order_constant_term_most_significant():
    s = ring_make(2, [1, 1, 1])
    assert [e.coeffs for e in s.elements] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_json_roundtrip():
    s = ring_make(2, [1, 1, 1])
    assert s.to_json() == {"p": 2, "h": [1, 1, 1]}
    assert RingSpec.from_json(s.to_json()) == s
