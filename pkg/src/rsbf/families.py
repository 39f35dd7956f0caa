"""Generators for the quartic chain, its sixteen boundary variants, and
monomial rotation symmetric families, plus the cycle structure of strides.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .core import (
    TruthTable,
    _check_arity,
    constant_table,
    monomial_table,
    walsh_transform,
)

__all__ = [
    "MonomialRsbfSpec",
    "SubFunctionId",
    "CycleDecomposition",
    "quartic_chain",
    "tail_products",
    "sub_function",
    "monomial_rsbf",
    "rotate_input",
    "cycle_decompose",
    "factored_walsh",
]


@dataclass(frozen=True)
class MonomialRsbfSpec:
    """Parameters (n, l, e): arity, monomial degree, and rotation stride."""

    n: int
    l: int
    e: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        if self.l < 2:
            raise ValueError(f"degree must be at least 2, got {self.l}")
        if self.e < 1:
            raise ValueError(f"stride must be at least 1, got {self.e}")

    @property
    def degenerate(self) -> bool:
        """True when there are fewer variables than the nominal degree."""
        return self.n < self.l


@dataclass(frozen=True)
class SubFunctionId:
    """Names one of the sixteen boundary variants at arity n."""

    i: int
    j: int
    n: int

    def __post_init__(self) -> None:
        if not (0 <= self.i <= 3 and 0 <= self.j <= 3):
            raise ValueError(f"variant indices must be in 0..3, got ({self.i},{self.j})")
        _check_arity(self.n)
        if self.n < 4:
            raise ValueError(f"variants need arity at least 4, got {self.n}")


@dataclass(frozen=True)
class CycleDecomposition:
    """Orbits of i -> i + e (mod n): s = gcd(n, e) cycles of length t = n/s."""

    n: int
    e: int
    s: int
    t: int
    cycles: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def quartic_chain(n: int) -> TruthTable:
    """XOR of the n-3 windows x_i x_{i+1} x_{i+2} x_{i+3}, no wraparound."""
    _check_arity(n)
    if n < 4:
        raise ValueError(f"chain needs at least 4 variables, got {n}")
    acc = constant_table(n, 0)
    for i in range(n - 3):
        acc ^= monomial_table(n, (i, i + 1, i + 2, i + 3))
    return acc


def tail_products(first: int, last: int, count: int, n: int) -> TruthTable:
    """XOR of the ``count`` longest products ending at x_last.

    Term r is x_{first+r} * ... * x_last for r in 0..count-1.  count may be
    0 (the empty sum) up to the window length last - first + 1.
    """
    _check_arity(n)
    if not 0 <= first <= last < n:
        raise ValueError(f"window {first}..{last} out of range for n={n}")
    if not 0 <= count <= last - first + 1:
        raise ValueError(f"term count {count} exceeds window {first}..{last}")
    acc = constant_table(n, 0)
    for r in range(count):
        acc ^= monomial_table(n, range(first + r, last + 1))
    return acc


@lru_cache(maxsize=None)
def sub_function(i: int, j: int, n: int) -> TruthTable:
    """The chain plus the (i, j)-indexed tail and head corrections."""
    SubFunctionId(i, j, n)  # range checks
    acc = quartic_chain(n) ^ tail_products(n - 3, n - 1, i, n)
    if j >= 1:
        acc ^= monomial_table(n, (0, 1, 2))
    if j >= 2:
        acc ^= monomial_table(n, (0, 1))
    if j >= 3:
        acc ^= monomial_table(n, (0,))
    return acc


def monomial_rsbf(spec: MonomialRsbfSpec) -> TruthTable:
    """XOR over i of x_i x_{i+e} ... x_{i+(l-1)e}, indices mod n.

    Repeated indices inside one monomial collapse (x * x = x); identical
    monomials then cancel in pairs under XOR.
    """
    acc = constant_table(spec.n, 0)
    for i in range(spec.n):
        acc ^= monomial_table(spec.n, ((i + k * spec.e) % spec.n for k in range(spec.l)))
    return acc


def rotate_input(x: int, n: int, shift: int) -> int:
    """Rotate an input so bit i of the result is bit (i + shift) mod n of x."""
    _check_arity(n)
    if not 0 <= x < 1 << n:
        raise IndexError(f"input {x} out of range for n={n}")
    s = shift % n
    if s == 0:
        return x
    return ((x >> s) | (x << (n - s))) & ((1 << n) - 1)


def cycle_decompose(n: int, e: int) -> CycleDecomposition:
    """Orbits of the stride-e rotation on variable indices."""
    _check_arity(n)
    if e < 1:
        raise ValueError(f"stride must be at least 1, got {e}")
    s = gcd(n, e)
    t = n // s
    cycles = tuple(tuple((k + j * e) % n for j in range(t)) for k in range(s))
    return CycleDecomposition(n, e, s, t, cycles)


@lru_cache(maxsize=None)
def _aligned_spectrum(t: int, l: int):
    return walsh_transform(monomial_rsbf(MonomialRsbfSpec(t, l, 1)))


def factored_walsh(spec: MonomialRsbfSpec, mask) -> int:
    """Walsh coefficient as a product of one factor per rotation cycle.

    Monomials never mix variables from different orbits, so the function
    splits into independent stride-1 copies on t variables each and the
    transform multiplies, with each factor's mask bits read in orbit order.
    """
    c = operator.index(mask)
    if not 0 <= c < 1 << spec.n:
        raise IndexError(f"mask {c} out of range for n={spec.n}")
    dec = cycle_decompose(spec.n, spec.e)
    base = _aligned_spectrum(dec.t, spec.l)
    product = 1
    for cycle in dec.cycles:
        sub = 0
        for pos, var in enumerate(cycle):
            sub |= ((c >> var) & 1) << pos
        product *= base[sub]
    return product
