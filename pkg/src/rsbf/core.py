"""Bit-packed truth tables and integer Walsh spectra for Boolean functions.

A function on n variables is stored as one Python integer whose bit x holds
the output at input x.  An input packs the assignment (x_0, ..., x_{n-1}) as
sum x_i * 2**i, so x_0 is always the least significant bit.  Coefficient
masks of linear functions use the same packing.

All spectral values are exact integers; nothing in this module produces a
float.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Hard ceiling keeps one spectrum within a couple of GiB; the configurable
# default below is what commands use unless told otherwise.
HARD_MAX_N = 28
DEFAULT_MAX_N = 24

__all__ = [
    "HARD_MAX_N",
    "DEFAULT_MAX_N",
    "TruthTable",
    "LinearMask",
    "WalshSpectrum",
    "evaluate",
    "weight",
    "distance",
    "variable_table",
    "constant_table",
    "monomial_table",
    "linear_function",
    "table_values",
    "table_from_values",
    "walsh_transform",
    "walsh_at",
    "nonlinearity",
    "affine_nonlinearity",
    "spectrum_argmax",
]


def _check_arity(n: int) -> None:
    if not 1 <= n <= HARD_MAX_N:
        raise ValueError(f"arity must be in 1..{HARD_MAX_N}, got {n}")


@dataclass(frozen=True)
class TruthTable:
    """Boolean function of ``n`` variables with outputs packed into ``bits``."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise ValueError("packed bits do not fit a table of this arity")

    @property
    def size(self) -> int:
        """Number of table entries, 2**n."""
        return 1 << self.n

    def __xor__(self, other: "TruthTable") -> "TruthTable":
        return TruthTable(self.n, self.bits ^ _same_arity(self, other).bits)

    def __and__(self, other: "TruthTable") -> "TruthTable":
        return TruthTable(self.n, self.bits & _same_arity(self, other).bits)


def _same_arity(f: TruthTable, g: TruthTable) -> TruthTable:
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n}")
    return g


@dataclass(frozen=True)
class LinearMask:
    """Coefficient mask c naming the linear function x -> c.x over GF(2)."""

    n: int
    c: int

    def __post_init__(self) -> None:
        _check_arity(self.n)
        if not 0 <= self.c < 1 << self.n:
            raise ValueError(f"mask {self.c} out of range for n={self.n}")

    def __index__(self) -> int:
        return self.c


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """All 2**n Walsh coefficients of one function, indexed by mask."""

    n: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape != (1 << self.n,):
            raise ValueError("spectrum length must be 2**n")

    def __getitem__(self, mask) -> int:
        c = operator.index(mask)
        if not 0 <= c < self.values.shape[0]:
            raise IndexError(f"mask {c} out of range for n={self.n}")
        return int(self.values[c])


def evaluate(table: TruthTable, x: int) -> int:
    """Value of the function at packed input x."""
    if not 0 <= x < table.size:
        raise IndexError(f"input {x} out of range for n={table.n}")
    return (table.bits >> x) & 1


def weight(table: TruthTable) -> int:
    """Number of inputs mapped to 1."""
    return table.bits.bit_count()


def distance(f: TruthTable, g: TruthTable) -> int:
    """Hamming distance between two functions of the same arity."""
    return (f.bits ^ _same_arity(f, g).bits).bit_count()


@lru_cache(maxsize=None)
def _variable_bits(n: int, v: int) -> int:
    # table of x -> x_v: the block 0^(2^v) 1^(2^v), doubled up to 2^n bits
    block = 1 << v
    pattern = ((1 << block) - 1) << block
    span = block << 1
    size = 1 << n
    while span < size:
        pattern |= pattern << span
        span <<= 1
    return pattern


def variable_table(n: int, v: int) -> TruthTable:
    """Truth table of the projection x -> x_v."""
    _check_arity(n)
    if not 0 <= v < n:
        raise ValueError(f"variable index {v} out of range for n={n}")
    return TruthTable(n, _variable_bits(n, v))


def constant_table(n: int, value: int) -> TruthTable:
    """The constant 0 or constant 1 function."""
    _check_arity(n)
    if value not in (0, 1):
        raise ValueError("constant must be 0 or 1")
    return TruthTable(n, ((1 << (1 << n)) - 1) * value)


def monomial_table(n: int, indices) -> TruthTable:
    """Product of the variables named in ``indices``.

    Repeated indices collapse (x * x = x); the empty product is constant 1.
    """
    _check_arity(n)
    bits = (1 << (1 << n)) - 1
    for v in set(indices):
        if not 0 <= v < n:
            raise ValueError(f"variable index {v} out of range for n={n}")
        bits &= _variable_bits(n, v)
    return TruthTable(n, bits)


def linear_function(n: int, c: int) -> TruthTable:
    """Truth table of x -> c.x for the given coefficient mask."""
    mask = c if isinstance(c, LinearMask) else LinearMask(n, c)
    bits = 0
    c = mask.c
    while c:
        v = (c & -c).bit_length() - 1
        bits ^= _variable_bits(mask.n, v)
        c &= c - 1
    return TruthTable(mask.n, bits)


def table_values(table: TruthTable) -> np.ndarray:
    """Outputs as a uint8 vector ordered by packed input."""
    nbytes = (table.size + 7) // 8
    raw = np.frombuffer(table.bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[: table.size]


def table_from_values(n: int, values) -> TruthTable:
    """Pack a 0/1 vector of length 2**n into a table."""
    _check_arity(n)
    arr = np.asarray(values, dtype=np.uint8)
    if arr.shape != (1 << n,):
        raise ValueError(f"need {1 << n} values for n={n}, got shape {arr.shape}")
    packed = np.packbits(arr & 1, bitorder="little")
    return TruthTable(n, int.from_bytes(packed.tobytes(), "little"))


def walsh_transform(table: TruthTable) -> WalshSpectrum:
    """Full spectrum by the in-place butterfly, O(n * 2**n) int64 ops."""
    v = 1 - 2 * table_values(table).astype(np.int64)
    half = 1
    while half < v.shape[0]:
        pairs = v.reshape(-1, 2, half)
        top = pairs[:, 0, :].copy()
        pairs[:, 0, :] += pairs[:, 1, :]
        pairs[:, 1, :] = top - pairs[:, 1, :]
        half <<= 1
    return WalshSpectrum(table.n, v)


@lru_cache(maxsize=4)
def _input_indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def walsh_at(table: TruthTable, mask) -> int:
    """One Walsh coefficient by direct summation over all inputs.

    Deliberately independent of walsh_transform so the butterfly can be
    checked against it.
    """
    if isinstance(mask, LinearMask) and mask.n != table.n:
        raise ValueError(f"arity mismatch: {mask.n} vs {table.n}")
    c = operator.index(mask)
    if not 0 <= c < table.size:
        raise IndexError(f"mask {c} out of range for n={table.n}")
    parities = (np.bitwise_count(_input_indices(table.n) & c) & 1).astype(np.uint8)
    ones = int(np.count_nonzero(table_values(table) ^ parities))
    return table.size - 2 * ones


def nonlinearity(table: TruthTable) -> int:
    """Minimum distance to the 2**n linear functions.

    Constants and complements of linear functions are not in the reference
    set; for the distance to the full affine class see affine_nonlinearity.
    """
    s = walsh_transform(table)
    return (table.size - int(s.values.max())) // 2


def affine_nonlinearity(table: TruthTable) -> int:
    """Minimum distance to linear functions and their complements.

    Side helper only; none of the verification suites use it.
    """
    s = walsh_transform(table)
    return (table.size - int(np.abs(s.values).max())) // 2


def spectrum_argmax(spectrum: WalshSpectrum) -> tuple[LinearMask, int, LinearMask, int]:
    """Peaks of a spectrum: (signed argmax, signed max, abs argmax, abs max).

    Ties break toward the lowest mask.
    """
    vals = spectrum.values
    k_signed = int(np.argmax(vals))
    magnitudes = np.abs(vals)
    k_abs = int(np.argmax(magnitudes))
    return (
        LinearMask(spectrum.n, k_signed),
        int(vals[k_signed]),
        LinearMask(spectrum.n, k_abs),
        int(magnitudes[k_abs]),
    )
