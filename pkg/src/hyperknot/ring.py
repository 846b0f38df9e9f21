"""Exact arithmetic in the finite quotient ring Z_p[T]/(h(T)).

Polynomials are coefficient tuples with the constant term first.  Every
element is stored by its unique representative of degree < deg h, so two
elements are equal iff their coefficient tuples are equal.

Elements are indexed 0..p^d - 1 lexicographically on the coefficient
tuple with the constant term most significant; this index order fixes the
Alexander quandle tables built from a ring.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DegreeZero,
    NotInvertible,
    NotMonic,
    NotPrime,
    SpecMismatch,
    TNotInvertible,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


# --- raw polynomial helpers over Z_p (coefficient tuples, constant first) ---


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a, b, p):
    """Quotient and remainder of a by b over Z_p; b must be nonzero."""
    a = _trim(x % p for x in a)
    b = _trim(x % p for x in b)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] * inv_lead % p
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - f * bc) % p
        a = _trim(a)
    return _trim(q), a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim((x - y) % p for x, y in zip(a, b))


@dataclass(frozen=True)
class RingSpec:
    """The ring Z_p[T]/(h(T)) with p prime and h monic of degree d >= 1, h(0) != 0."""

    p: int
    h: tuple[int, ...]

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"modulus {p!r} is not prime")
        h = tuple(int(c) % p for c in self.h)
        h = tuple(_trim(h))
        if len(h) < 2:
            raise DegreeZero(f"h must have degree >= 1, got {list(self.h)}")
        if h[-1] != 1:
            raise NotMonic(f"leading coefficient of h is {h[-1]}, expected 1")
        if h[0] == 0:
            raise TNotInvertible("h(0) = 0 mod p, so T is a zero divisor")
        object.__setattr__(self, "h", h)

    @property
    def d(self) -> int:
        return len(self.h) - 1

    @property
    def size(self) -> int:
        return self.p**self.d

    def element(self, coeffs) -> RingElement:
        """Reduce an arbitrary coefficient sequence (any degree) into the ring."""
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.d:
            _, c = _poly_divmod(c, self.h, self.p)
        c = list(c) + [0] * (self.d - len(c))
        return RingElement(self, tuple(c))

    def scalar(self, k: int) -> RingElement:
        return self.element([k])

    @cached_property
    def zero(self) -> RingElement:
        return self.scalar(0)

    @cached_property
    def one(self) -> RingElement:
        return self.scalar(1)

    @cached_property
    def T(self) -> RingElement:
        return self.element([0, 1])

    @cached_property
    def T_inv(self) -> RingElement:
        return self.T.inverse()

    def from_index(self, index: int) -> RingElement:
        if not 0 <= index < self.size:
            raise IndexError(index)
        c = []
        for _ in range(self.d):
            index, r = divmod(index, self.p)
            c.append(r)
        return RingElement(self, tuple(reversed(c)))

    @cached_property
    def elements(self) -> tuple[RingElement, ...]:
        return tuple(
            RingElement(self, c) for c in itertools.product(range(self.p), repeat=self.d)
        )

    @cached_property
    def is_field(self) -> bool:
        """True iff h is irreducible over Z_p (no monic factor of degree <= d/2)."""
        for k in range(1, self.d // 2 + 1):
            for low in itertools.product(range(self.p), repeat=k):
                _, r = _poly_divmod(self.h, list(low) + [1], self.p)
                if not r:
                    return False
        return True

    def to_json(self) -> dict:
        return {"p": self.p, "h": list(self.h)}

    @classmethod
    def from_json(cls, doc: dict) -> RingSpec:
        return cls(int(doc["p"]), tuple(doc["h"]))

    def __repr__(self):
        return f"RingSpec(p={self.p}, h={list(self.h)})"


@dataclass(frozen=True)
class RingElement:
    spec: RingSpec = field(repr=False)
    coeffs: tuple[int, ...]

    def _check(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return RingElement(self.spec, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.spec.p
        return RingElement(self.spec, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.spec.p
        return RingElement(self.spec, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.spec.element(_poly_mul(self.coeffs, other.coeffs, self.spec.p))

    def __bool__(self):
        return any(self.coeffs)

    def inverse(self) -> RingElement:
        """Multiplicative inverse by the extended Euclidean algorithm over Z_p."""
        p = self.spec.p
        r0, r1 = list(self.spec.h), _trim(self.coeffs)
        s0, s1 = [], [1]
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        if len(r0) != 1:
            raise NotInvertible(f"{self} is not a unit in {self.spec!r}")
        c = pow(r0[0], -1, p)
        return self.spec.element([c * x for x in s0])

    @property
    def index(self) -> int:
        i = 0
        for c in self.coeffs:
            i = i * self.spec.p + c
        return i

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
                terms.append(f"{c}{mono}" if c != 1 or k == 0 else mono)
        return " + ".join(terms) if terms else "0"


def ring_make(p: int, h) -> RingSpec:
    return RingSpec(p, tuple(h))


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_neg(a: RingElement) -> RingElement:
    return -a


def ring_inv_T(spec: RingSpec) -> RingElement:
    return spec.T_inv
