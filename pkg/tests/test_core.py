import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsbf import (
    HARD_MAX_N,
    LinearMask,
    TruthTable,
    WalshSpectrum,
    affine_nonlinearity,
    constant_table,
    distance,
    evaluate,
    linear_function,
    monomial_table,
    nonlinearity,
    spectrum_argmax,
    table_from_values,
    table_values,
    variable_table,
    walsh_at,
    walsh_transform,
    weight,
)


def test_truth_table_validation():
    with pytest.raises(ValueError):
        TruthTable(0, 0)
    with pytest.raises(ValueError):
        TruthTable(HARD_MAX_N + 1, 0)
    with pytest.raises(ValueError):
        TruthTable(2, 1 << 16)
    with pytest.raises(ValueError):
        TruthTable(2, -1)
    assert TruthTable(3, 0b10010110).size == 8


def test_linear_mask_validation():
    with pytest.raises(ValueError):
        LinearMask(3, 8)
    with pytest.raises(ValueError):
        LinearMask(3, -1)
    assert int(LinearMask(3, 5)) == 5


def test_variable_table_projects_each_bit():
    for n in range(1, 7):
        for v in range(n):
            tbl = variable_table(n, v)
            for x in range(1 << n):
                assert evaluate(tbl, x) == (x >> v) & 1
    with pytest.raises(ValueError):
        variable_table(3, 3)


def test_constant_table():
    assert weight(constant_table(4, 0)) == 0
    assert weight(constant_table(4, 1)) == 16
    with pytest.raises(ValueError):
        constant_table(4, 2)


def test_monomial_table_is_product():
    tbl = monomial_table(4, [0, 2])
    for x in range(16):
        assert evaluate(tbl, x) == ((x >> 0) & (x >> 2) & 1)
    # repeats collapse, empty product is the constant one
    assert monomial_table(4, [1, 1, 1]) == variable_table(4, 1)
    assert monomial_table(3, []) == constant_table(3, 1)


def test_linear_function_is_mask_parity():
    for n in range(1, 7):
        for c in range(1 << n):
            tbl = linear_function(n, c)
            for x in range(1 << n):
                assert evaluate(tbl, x) == ((x & c).bit_count() & 1)


def test_evaluate_rejects_out_of_range():
    tbl = constant_table(3, 1)
    with pytest.raises(IndexError):
        evaluate(tbl, 8)
    with pytest.raises(IndexError):
        evaluate(tbl, -1)


def test_xor_and_require_same_arity():
    with pytest.raises(ValueError):
        constant_table(3, 1) ^ constant_table(4, 1)
    with pytest.raises(ValueError):
        constant_table(3, 1) & constant_table(4, 1)
    a, b = linear_function(3, 5), linear_function(3, 3)
    assert a ^ b == linear_function(3, 6)


def test_table_values_roundtrip(small_tables):
    for tbl in small_tables[:200]:
        values = table_values(tbl)
        assert values.shape == (tbl.size,)
        assert int(values.sum()) == weight(tbl)
        assert table_from_values(tbl.n, values) == tbl


def test_distance_counts_disagreements():
    f = linear_function(4, 0b0011)
    g = linear_function(4, 0b0101)
    brute = sum(evaluate(f, x) != evaluate(g, x) for x in range(16))
    assert distance(f, g) == brute == weight(f ^ g)
    with pytest.raises(ValueError):
        distance(f, linear_function(3, 1))


def test_walsh_transform_matches_direct_summation(small_tables):
    for tbl in small_tables:
        if tbl.n > 8:
            continue
        spectrum = walsh_transform(tbl)
        for c in range(tbl.size):
            assert spectrum[c] == walsh_at(tbl, c)


def test_walsh_zero_entry_is_weight_identity(small_tables):
    for tbl in small_tables:
        assert walsh_transform(tbl)[0] == tbl.size - 2 * weight(tbl)


def test_spectrum_power_is_conserved(small_tables):
    for tbl in small_tables:
        values = walsh_transform(tbl).values
        assert int(np.dot(values, values)) == 4**tbl.n


def test_walsh_at_validates_mask():
    tbl = constant_table(4, 0)
    with pytest.raises(IndexError):
        walsh_at(tbl, 16)
    with pytest.raises(ValueError):
        walsh_at(tbl, LinearMask(3, 1))
    assert walsh_at(tbl, LinearMask(4, 0)) == 16


def test_spectrum_getitem_range():
    spectrum = walsh_transform(constant_table(3, 0))
    with pytest.raises(IndexError):
        spectrum[8]
    assert spectrum[0] == 8


def test_nonlinearity_is_distance_to_nearest_linear():
    for tbl in [linear_function(5, 9), monomial_table(5, [0, 1]), constant_table(5, 1)]:
        brute = min(distance(tbl, linear_function(5, c)) for c in range(32))
        assert nonlinearity(tbl) == brute


def test_affine_nonlinearity_also_checks_complements():
    tbl = constant_table(4, 1)
    assert nonlinearity(tbl) == 8  # nearest plain linear function is far
    assert affine_nonlinearity(tbl) == 0  # but the complement of zero is exact
    quad = monomial_table(4, [0, 1])
    brute = min(
        min(distance(quad, linear_function(4, c)), 16 - distance(quad, linear_function(4, c)))
        for c in range(16)
    )
    assert affine_nonlinearity(quad) == brute


def test_spectrum_argmax_breaks_ties_low():
    mask_s, value_s, mask_a, value_a = spectrum_argmax(walsh_transform(constant_table(3, 0)))
    assert (int(mask_s), value_s, int(mask_a), value_a) == (0, 8, 0, 8)
    parity = linear_function(4, 15)
    mask_s, value_s, mask_a, value_a = spectrum_argmax(walsh_transform(parity))
    assert (int(mask_s), value_s) == (15, 16)
    assert (int(mask_a), value_a) == (15, 16)
    complemented = parity ^ constant_table(4, 1)
    mask_s, value_s, mask_a, value_a = spectrum_argmax(walsh_transform(complemented))
    assert (int(mask_s), value_s) == (0, 0)  # every other entry is zero, tie at the bottom
    assert (int(mask_a), value_a) == (15, 16)  # reported as a magnitude


@given(data=st.data())
def test_transform_agrees_with_direct_summation_random(data):
    n = data.draw(st.integers(1, 9))
    tbl = TruthTable(n, data.draw(st.integers(0, (1 << (1 << n)) - 1)))
    spectrum = walsh_transform(tbl)
    c = data.draw(st.integers(0, tbl.size - 1))
    assert spectrum[c] == walsh_at(tbl, c)
    assert spectrum[0] == tbl.size - 2 * weight(tbl)
