"""Arity-lowering identities for variant spectra, zero-mask recurrences,
and the spectral bound that pins peaks to the zero mask.

Every evaluator works in exact Python integers.  The identities rewrite a
coefficient at arity n in terms of variant coefficients two to four
variables down; by default the lower-arity values come from the direct
summation oracle, but a caller may inject any provider with the same
(i, j, n, c) -> int signature.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

import numpy as np

from . import goldens
from .core import WalshSpectrum, walsh_at, walsh_transform, weight
from .families import MonomialRsbfSpec, monomial_rsbf, sub_function
from .report import VerificationReport

__all__ = [
    "MaskSuffix",
    "SpectralBaseTable",
    "MissingBaseEntry",
    "subfn_walsh_top0",
    "subfn_walsh_top1",
    "family_walsh_via_subfns",
    "subfn_zero_recurrence",
    "family_zero_recurrence",
    "family_zero_value",
    "spectral_bound_check",
    "peak_at_zero",
]

SubWalsh = Callable[[int, int, int, int], int]

log = logging.getLogger(__name__)


def _sign(parity: int) -> int:
    return -1 if parity & 1 else 1


@dataclass(frozen=True)
class MaskSuffix:
    """View of a mask as trailing top coefficients plus low truncations."""

    n: int
    c: int

    def __post_init__(self) -> None:
        if not 0 <= self.c < 1 << self.n:
            raise ValueError(f"mask {self.c} out of range for n={self.n}")

    def top(self, back: int) -> int:
        """Coefficient c_{n-back}, for back in 1..n."""
        if not 1 <= back <= self.n:
            raise ValueError(f"top offset {back} out of range for n={self.n}")
        return (self.c >> (self.n - back)) & 1

    def low(self, m: int) -> int:
        """The mask truncated to its m lowest coefficients."""
        if not 0 <= m <= self.n:
            raise ValueError(f"truncation width {m} out of range for n={self.n}")
        return self.c & ((1 << m) - 1)


@lru_cache(maxsize=None)
def _sub_walsh_direct(i: int, j: int, n: int, c: int) -> int:
    return walsh_at(sub_function(i, j, n), c)


def _checked(i: int, j: int, n: int, c: int, top_bit: int, floor: int) -> MaskSuffix:
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise ValueError(f"variant indices must be in 0..3, got ({i},{j})")
    if n < floor:
        raise ValueError(f"reduction needs n >= {floor}, got {n}")
    if not 0 <= c < 1 << n:
        raise IndexError(f"mask {c} out of range for n={n}")
    suffix = MaskSuffix(n, c)
    if suffix.top(1) != top_bit:
        raise ValueError(f"top coefficient must be {top_bit} for this identity")
    return suffix


def subfn_walsh_top0(i: int, j: int, n: int, c: int, sub_walsh: SubWalsh | None = None) -> int:
    """Variant coefficient at a mask whose top coefficient is 0, rewritten
    over variants two to four variables down.  Needs n >= 8."""
    suffix = _checked(i, j, n, c, 0, 8)
    w = sub_walsh or _sub_walsh_direct
    b2, b3, b4 = suffix.top(2), suffix.top(3), suffix.top(4)
    c2, c3, c4 = suffix.low(n - 2), suffix.low(n - 3), suffix.low(n - 4)
    if i == 0:
        return (2 * w(0, j, n - 2, c2)
                + 2 * _sign(b2) * w(0, j, n - 3, c3)
                + 2 * _sign(b2 + b3) * w(0, j, n - 4, c4))
    if i == 1:
        return (2 * w(0, j, n - 2, c2)
                + 2 * _sign(b2) * w(0, j, n - 3, c3)
                + 2 * _sign(b2 + b3 + b4) * w(3, j, n - 4, c4))
    if i == 2:
        return 2 * w(0, j, n - 2, c2) + 2 * _sign(b2 + b3) * w(0, j, n - 4, c4)
    return 2 * _sign(b2) * w(0, j, n - 3, c3) + 2 * _sign(b2 + b3 + b4) * w(3, j, n - 4, c4)


def subfn_walsh_top1(i: int, j: int, n: int, c: int, sub_walsh: SubWalsh | None = None) -> int:
    """Variant coefficient at a mask whose top coefficient is 1, rewritten
    over variants two or four variables down.  Needs n >= 8."""
    suffix = _checked(i, j, n, c, 1, 8)
    w = sub_walsh or _sub_walsh_direct
    b2, b3 = suffix.top(2), suffix.top(3)
    c2, c4 = suffix.low(n - 2), suffix.low(n - 4)
    if i == 0:
        return _sign(b2) * w(1, j, n - 2, c2) + _sign(1 + b2) * w(2, j, n - 2, c2)
    if i == 1:
        return _sign(b2) * w(1, j, n - 2, c2) + _sign(1 + b2) * w(3, j, n - 2, c2)
    if i == 2:
        return _sign(b2) * w(1, j, n - 2, c2) + _sign(b2) * w(3, j, n - 2, c2)
    return 2 * w(0, j, n - 2, c2) + 2 * _sign(b2 + b3) * w(0, j, n - 4, c4)


def family_walsh_via_subfns(n: int, c: int, sub_walsh: SubWalsh | None = None) -> int:
    """Stride-1 quartic family coefficient from seven variant coefficients
    three variables down.  Needs n >= 7."""
    if n < 7:
        raise ValueError(f"decomposition needs n >= 7, got {n}")
    if not 0 <= c < 1 << n:
        raise IndexError(f"mask {c} out of range for n={n}")
    suffix = MaskSuffix(n, c)
    b1, b2, b3 = suffix.top(1), suffix.top(2), suffix.top(3)
    c3 = suffix.low(n - 3)
    w = sub_walsh or _sub_walsh_direct
    return ((1 + _sign(b2)) * w(0, 0, n - 3, c3)
            + _sign(b1) * w(0, 1, n - 3, c3)
            + _sign(b2 + b1) * w(0, 2, n - 3, c3)
            + _sign(b3) * w(1, 0, n - 3, c3)
            + _sign(b3 + b1) * w(1, 1, n - 3, c3)
            + _sign(b3 + b2) * w(2, 0, n - 3, c3)
            + _sign(b3 + b2 + b1) * w(3, 3, n - 3, c3))


class MissingBaseEntry(LookupError):
    """A recurrence seed outside the stored base range."""


@dataclass(frozen=True)
class SpectralBaseTable:
    """Zero-mask seed values for the variants and the stride-1 family."""

    sub_zero: Mapping[tuple[int, int, int], int]
    family_zero: Mapping[int, int]

    def sub_seed(self, i: int, j: int, n: int) -> int:
        try:
            return self.sub_zero[(i, j, n)]
        except KeyError:
            raise MissingBaseEntry(f"no stored value for variant ({i},{j}) at n={n}") from None

    def family_seed(self, n: int) -> int:
        try:
            return self.family_zero[n]
        except KeyError:
            raise MissingBaseEntry(f"no stored family value at n={n}") from None

    @classmethod
    def from_reference(cls) -> "SpectralBaseTable":
        """Seeds from the stored reference table."""
        sub, fam = goldens.zero_value_maps()
        return cls(sub, fam)

    @classmethod
    def from_brute_force(cls, n_max: int = 11) -> "SpectralBaseTable":
        """Seeds recomputed from scratch via the weight identity."""
        sub: dict[tuple[int, int, int], int] = {}
        fam: dict[int, int] = {}
        for n in range(4, n_max + 1):
            for i in range(4):
                for j in range(4):
                    sub[(i, j, n)] = (1 << n) - 2 * weight(sub_function(i, j, n))
            fam[n] = (1 << n) - 2 * weight(monomial_rsbf(MonomialRsbfSpec(n, 4, 1)))
        return cls(sub, fam)

    def validate(self) -> list[tuple[str, int, int]]:
        """Recompute every stored value by direct summation; list mismatches."""
        bad: list[tuple[str, int, int]] = []
        for (i, j, n), v in sorted(self.sub_zero.items()):
            got = walsh_at(sub_function(i, j, n), 0)
            if got != v:
                bad.append((f"f{i}{j}:n={n}", v, got))
        for n, v in sorted(self.family_zero.items()):
            got = walsh_at(monomial_rsbf(MonomialRsbfSpec(n, 4, 1)), 0)
            if got != v:
                bad.append((f"F4:n={n}", v, got))
        return bad


def _run_zero_recurrence(seeds: dict[int, int], n: int) -> int:
    values = dict(seeds)
    for m in range(8, n + 1):
        values[m] = 2 * (values[m - 2] + values[m - 3] + values[m - 4])
    return values[n]


def subfn_zero_recurrence(i: int, j: int, n: int, base: SpectralBaseTable) -> int:
    """Variant value at mask zero by the order-4 recurrence, seeded at
    arities 4..7.  Needs n >= 8; bottom-up, integers throughout."""
    if n < 8:
        raise ValueError(f"recurrence starts at n=8, got {n}")
    return _run_zero_recurrence({m: base.sub_seed(i, j, m) for m in range(4, 8)}, n)


def family_zero_recurrence(n: int, base: SpectralBaseTable) -> int:
    """Family value at mask zero by the same recurrence.  Needs n >= 8."""
    if n < 8:
        raise ValueError(f"recurrence starts at n=8, got {n}")
    return _run_zero_recurrence({m: base.family_seed(m) for m in range(4, 8)}, n)


@lru_cache(maxsize=1)
def _brute_force_seeds() -> SpectralBaseTable:
    return SpectralBaseTable.from_brute_force(7)


def family_zero_value(n: int, base: SpectralBaseTable | None = None) -> int:
    """Family value at mask zero for any n >= 4.

    Seeds below 8 are read (or recomputed) directly; larger arities run the
    recurrence.  With no base given the seeds are recomputed from scratch
    rather than read from the stored table.
    """
    if n < 4:
        raise ValueError(f"family values start at n=4, got {n}")
    table = base if base is not None else _brute_force_seeds()
    if n < 8:
        return table.family_seed(n)
    return family_zero_recurrence(n, table)


def spectral_bound_check(n: int) -> VerificationReport:
    """Check 8*|variant coefficient| stays below the family zero value three
    variables up, over all 16 variants and all masks with c_1 set."""
    t0 = time.perf_counter()
    bound = family_zero_value(n + 3)
    size = 1 << n
    selector = (np.arange(size) & 2) != 0
    observed_max = 0
    witnesses: list[tuple[str, int, int]] = []
    for i in range(4):
        for j in range(4):
            magnitudes = np.abs(walsh_transform(sub_function(i, j, n)).values[selector])
            observed_max = max(observed_max, int(magnitudes.max()))
            over = np.nonzero(8 * magnitudes >= bound)[0]
            for k in over:
                mask = int(np.nonzero(selector)[0][k])
                witnesses.append((f"f{i}{j}:c={mask}", bound, 8 * int(magnitudes[k])))
    log.info("bound n=%d: max 8|w| = %d against %d", n, 8 * observed_max, bound)
    status = "fail" if witnesses else "pass"
    elapsed = int((time.perf_counter() - t0) * 1000)
    return VerificationReport("bound", {"n": n}, status, witnesses, elapsed)


def peak_at_zero(spectrum: WalshSpectrum) -> bool:
    """True when no coefficient magnitude exceeds the value at mask zero.

    The zero-mask value is compared signed, so a spectrum that is negative
    or zero there fails unless everything else vanishes too.
    """
    return bool(np.all(np.abs(spectrum.values) <= int(spectrum.values[0])))
