import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsbf import (
    MonomialRsbfSpec,
    SubFunctionId,
    constant_table,
    cycle_decompose,
    evaluate,
    factored_walsh,
    linear_function,
    monomial_rsbf,
    quartic_chain,
    rotate_input,
    sub_function,
    tail_products,
    walsh_at,
)


def _bits(x, n):
    return [(x >> k) & 1 for k in range(n)]


def _eval_chain(n, x):
    b = _bits(x, n)
    acc = 0
    for i in range(n - 3):
        acc ^= b[i] & b[i + 1] & b[i + 2] & b[i + 3]
    return acc


def _eval_tail(first, last, count, n, x):
    b = _bits(x, n)
    acc = 0
    for r in range(count):
        term = 1
        for s in range(first + r, last + 1):
            term &= b[s]
        acc ^= term
    return acc


def _eval_subfn(i, j, n, x):
    b = _bits(x, n)
    acc = _eval_chain(n, x) ^ _eval_tail(n - 3, n - 1, i, n, x)
    if j >= 1:
        acc ^= b[0] & b[1] & b[2]
    if j >= 2:
        acc ^= b[0] & b[1]
    if j >= 3:
        acc ^= b[0]
    return acc


def _eval_family(n, l, e, x):
    b = _bits(x, n)
    acc = 0
    for i in range(n):
        term = 1
        for k in range(l):
            term &= b[(i + k * e) % n]
        acc ^= term
    return acc


def test_quartic_chain_matches_reference_evaluator():
    for n in range(4, 9):
        tbl = quartic_chain(n)
        for x in range(1 << n):
            assert evaluate(tbl, x) == _eval_chain(n, x)
    with pytest.raises(ValueError):
        quartic_chain(3)


def test_chain_peels_one_variable():
    for n in range(5, 10):
        longer, shorter = quartic_chain(n), quartic_chain(n - 1)
        window = 0b1111 << (n - 4)
        for x in range(1 << n):
            top_term = 1 if (x & window) == window else 0
            assert evaluate(longer, x) == evaluate(shorter, x & ((1 << (n - 1)) - 1)) ^ top_term


def test_tail_products_matches_reference_evaluator():
    for n in range(4, 8):
        for count in range(4):
            tbl = tail_products(n - 3, n - 1, count, n)
            for x in range(1 << n):
                assert evaluate(tbl, x) == _eval_tail(n - 3, n - 1, count, n, x)
    assert tail_products(1, 3, 0, 4) == constant_table(4, 0)
    with pytest.raises(ValueError):
        tail_products(1, 3, 4, 4)  # only 3 products fit in that window


def test_sub_function_matches_reference_evaluator():
    for n in (4, 5, 6, 7):
        for i in range(4):
            for j in range(4):
                tbl = sub_function(i, j, n)
                for x in range(1 << n):
                    assert evaluate(tbl, x) == _eval_subfn(i, j, n, x)


def test_sub_function_id_validation():
    with pytest.raises(ValueError):
        SubFunctionId(4, 0, 8)
    with pytest.raises(ValueError):
        SubFunctionId(0, -1, 8)
    with pytest.raises(ValueError):
        SubFunctionId(0, 0, 3)


def test_sub_function_reversal_pairs():
    # swapping the two variants mirrors the variable order
    for n in (5, 6, 8):
        size = 1 << n
        for i in range(4):
            for j in range(4):
                fwd, rev = sub_function(i, j, n), sub_function(j, i, n)
                for x in range(size):
                    reversed_x = int(f"{x:0{n}b}"[::-1], 2)
                    assert evaluate(fwd, x) == evaluate(rev, reversed_x)


def test_family_matches_reference_evaluator():
    for l in (2, 3, 4, 5):
        for n in range(2, 8):
            for e in range(1, n + 1):
                tbl = monomial_rsbf(MonomialRsbfSpec(n, l, e))
                for x in range(1 << n):
                    assert evaluate(tbl, x) == _eval_family(n, l, e, x)


def test_family_spec_validation():
    with pytest.raises(ValueError):
        MonomialRsbfSpec(8, 1, 1)
    with pytest.raises(ValueError):
        MonomialRsbfSpec(8, 4, 0)
    with pytest.raises(ValueError):
        MonomialRsbfSpec(0, 4, 1)
    assert MonomialRsbfSpec(3, 4, 1).degenerate
    assert not MonomialRsbfSpec(4, 4, 1).degenerate


def test_quadratic_stride_one_cancels_at_n2():
    # both monomials are x0*x1, so they cancel mod 2
    assert monomial_rsbf(MonomialRsbfSpec(2, 2, 1)) == constant_table(2, 0)


def test_full_stride_family_is_parity():
    # e = n wraps every monomial onto a single repeated variable
    for n, l in [(4, 4), (5, 4), (6, 3), (4, 2)]:
        tbl = monomial_rsbf(MonomialRsbfSpec(n, l, n))
        assert tbl == linear_function(n, (1 << n) - 1)


def test_rotate_input():
    assert rotate_input(1, 4, 1) == 8
    assert rotate_input(8, 4, 1) == 4
    for n in (3, 5, 8):
        for x in range(1 << n):
            assert rotate_input(x, n, n) == x
            assert rotate_input(rotate_input(x, n, 1), n, n - 1) == x


def test_family_is_rotation_invariant():
    for l in (2, 3, 4):
        for n in range(max(l, 3), 9):
            for e in (1, 2, 3):
                tbl = monomial_rsbf(MonomialRsbfSpec(n, l, e))
                for x in range(1 << n):
                    assert evaluate(tbl, x) == evaluate(tbl, rotate_input(x, n, 1))


def test_cycle_decompose_partitions_indices():
    for n in range(2, 13):
        for e in range(1, n + 1):
            dec = cycle_decompose(n, e)
            assert dec.s == math.gcd(n, e)
            assert dec.t == n // dec.s
            seen = sorted(v for cycle in dec.cycles for v in cycle)
            assert seen == list(range(n))
            assert all(len(cycle) == dec.t for cycle in dec.cycles)


def test_factored_walsh_matches_direct():
    for n, e in [(6, 2), (8, 2), (8, 4), (9, 3), (10, 5)]:
        spec = MonomialRsbfSpec(n, 4, e)
        tbl = monomial_rsbf(spec)
        for c in range(1 << n):
            assert factored_walsh(spec, c) == walsh_at(tbl, c)


def test_factored_walsh_other_degrees():
    for n, l, e in [(6, 3, 2), (8, 3, 2), (6, 2, 2)]:
        spec = MonomialRsbfSpec(n, l, e)
        tbl = monomial_rsbf(spec)
        for c in range(1 << n):
            assert factored_walsh(spec, c) == walsh_at(tbl, c)


@given(data=st.data())
def test_family_rotation_invariance_random(data):
    n = data.draw(st.integers(2, 10))
    l = data.draw(st.integers(2, 6))
    e = data.draw(st.integers(1, n))
    shift = data.draw(st.integers(0, n))
    x = data.draw(st.integers(0, (1 << n) - 1))
    tbl = monomial_rsbf(MonomialRsbfSpec(n, l, e))
    assert evaluate(tbl, x) == evaluate(tbl, rotate_input(x, n, shift))
