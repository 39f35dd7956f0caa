"""Verification suites: reference tables recomputed two ways, identity
grids, zero-mask recurrences against brute force, the spectral bound, the
cycle factorization, and family sweeps comparing nonlinearity to weight.

Every suite returns VerificationReport records.  Runs with the same
configuration produce identical report streams apart from the elapsed
fields; sampled grids draw their masks from a seeded generator.
"""

from __future__ import annotations

import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import goldens
from .core import DEFAULT_MAX_N, HARD_MAX_N, walsh_at, walsh_transform, weight
from .families import (
    MonomialRsbfSpec,
    cycle_decompose,
    factored_walsh,
    monomial_rsbf,
    sub_function,
)
from .recurrences import (
    SpectralBaseTable,
    family_walsh_via_subfns,
    family_zero_recurrence,
    peak_at_zero,
    spectral_bound_check,
    subfn_walsh_top0,
    subfn_walsh_top1,
    subfn_zero_recurrence,
)
from .report import TableArtifact, VerificationReport, write_jsonl

__all__ = [
    "HarnessConfig",
    "RunResult",
    "SUITES",
    "check_reference_table",
    "check_identity_grid",
    "check_family_identity",
    "check_subfn_zero",
    "check_family_zero",
    "check_bound",
    "check_factorization",
    "sweep_cases",
    "scan_family",
    "counterexample_search",
    "run_all",
]

log = logging.getLogger(__name__)

DEFAULT_SEED = 0
SUB_PAIRS = tuple((i, j) for i in range(4) for j in range(4))
MAX_WITNESSES = 32

# default scan windows
TABLE_ARITIES = range(4, 12)
GRID_EXHAUSTIVE_NS = range(8, 13)
GRID_SAMPLED_NS = range(13, 17)
GRID_SAMPLES = 10_000
DECOMPOSITION_NS = range(7, 15)
ZERO_RECURRENCE_NS = range(8, 23)
BOUND_NS = range(4, 17)
FACTOR_CASES = ((10, 2), (12, 3), (12, 4), (14, 2))
SWEEP_N_RANGE = (4, 20)
CUBIC_N_RANGE = (4, 16)
CUBIC_E_RANGE = (1, 4)
SURVEY_DEGREES = (5, 6)
SURVEY_E_RANGE = (1, 3)
COUNTEREXAMPLE_N_RANGE = (2, 16)
COUNTEREXAMPLE_E_RANGE = (1, 2)

SUITES = (
    "table1",
    "table2",
    "lemma21",
    "lemma22",
    "eq23",
    "eq26",
    "thm24",
    "bound",
    "factor",
    "theorem",
    "cubic",
    "conjecture",
    "counterexample",
)


def _elapsed_ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def _skip(check: str, params: dict, cap: int, n: int) -> VerificationReport:
    return VerificationReport(check, params, "skipped", [("max-n", cap, n)], 0)


def _cap_witnesses(witnesses: list) -> list:
    if len(witnesses) > MAX_WITNESSES:
        extra = len(witnesses) - MAX_WITNESSES
        return witnesses[:MAX_WITNESSES] + [("more-witnesses", extra, "truncated")]
    return witnesses


def _table1_artifact(route_bad: list) -> TableArtifact:
    arities = list(TABLE_ARITIES)
    rows = []
    for i in range(4):
        for j in range(i, 4):
            values = []
            for n in arities:
                tbl = sub_function(i, j, n)
                fast = walsh_transform(tbl)[0]
                direct = walsh_at(tbl, 0)
                if fast != direct:
                    route_bad.append((f"route:f{i}{j}:n={n}", direct, fast))
                values.append(fast)
            rows.append((f"f{i}{j}", values))
    family_values = []
    for n in arities:
        tbl = monomial_rsbf(MonomialRsbfSpec(n, 4, 1))
        fast = walsh_transform(tbl)[0]
        direct = walsh_at(tbl, 0)
        if fast != direct:
            route_bad.append((f"route:F4:n={n}", direct, fast))
        family_values.append(fast)
    rows.append(("F4", family_values))
    return TableArtifact("table1", "n", [str(n) for n in arities], rows)


def _table2_artifact(route_bad: list) -> TableArtifact:
    masks = [c for c in range(32) if c & 2]
    spectra = {}
    for i, j in SUB_PAIRS:
        tbl = sub_function(i, j, 5)
        spectra[(i, j)] = walsh_transform(tbl)
        for c in masks:
            direct = walsh_at(tbl, c)
            if spectra[(i, j)][c] != direct:
                route_bad.append((f"route:f{i}{j}:c={c}", direct, spectra[(i, j)][c]))
    rows = [(str(c), [spectra[p][c] for p in SUB_PAIRS]) for c in masks]
    return TableArtifact("table2", "c", [f"f{i}{j}" for i, j in SUB_PAIRS], rows)


def check_reference_table(
    which: int, golden_path: str | None = None
) -> tuple[TableArtifact, VerificationReport]:
    """Recompute a reference table by both spectral routes and compare it
    cell by cell with the stored copy (or an override file)."""
    t0 = time.perf_counter()
    if golden_path is None:
        golden = goldens.load_reference_table(which)
    else:
        golden = TableArtifact.from_csv_text(f"table{which}", Path(golden_path).read_text())
    route_bad: list = []
    computed = _table1_artifact(route_bad) if which == 1 else _table2_artifact(route_bad)
    witnesses = route_bad + golden.diff(computed)
    status = "fail" if witnesses else "pass"
    report = VerificationReport(
        f"table{which}", {}, status, _cap_witnesses(witnesses), _elapsed_ms(t0)
    )
    return computed, report


def _transform_provider():
    cache: dict = {}

    def get(i: int, j: int, m: int, c: int) -> int:
        key = (i, j, m)
        spectrum = cache.get(key)
        if spectrum is None:
            spectrum = walsh_transform(sub_function(i, j, m)).values
            cache[key] = spectrum
        return int(spectrum[c])

    return get


def check_identity_grid(
    which: str,
    n_values=None,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    oracle: str | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> list[VerificationReport]:
    """Compare one arity-lowering identity against independently computed
    coefficients, over all 16 variants.

    With samples=None every admissible mask is checked and both sides use
    the direct summation oracle.  Sampled runs default to transform-backed
    values so large arities stay cheap; either side can be forced with
    ``oracle`` ("direct" or "transform").
    """
    if which not in ("lemma21", "lemma22"):
        raise ValueError(f"unknown identity grid {which!r}")
    top_bit = 0 if which == "lemma21" else 1
    identity = subfn_walsh_top0 if which == "lemma21" else subfn_walsh_top1
    if n_values is None:
        n_values = GRID_EXHAUSTIVE_NS
    mode = oracle or ("direct" if samples is None else "transform")
    if mode not in ("direct", "transform"):
        raise ValueError(f"unknown oracle {mode!r}")
    reports = []
    for n in n_values:
        params = {"n": n, "id": mode if samples is None else f"{mode}:sampled"}
        if n > max_n:
            reports.append(_skip(which, params, max_n, n))
            continue
        t0 = time.perf_counter()
        half = 1 << (n - 1)
        if samples is None or samples >= half:
            base_masks = range(half)
        else:
            rng = random.Random(seed * 1_000_003 + n * 101 + top_bit)
            base_masks = sorted(rng.sample(range(half), samples))
        offset = half if top_bit else 0
        witnesses = []
        provider = _transform_provider() if mode == "transform" else None
        for i, j in SUB_PAIRS:
            if mode == "transform":
                lhs_values = walsh_transform(sub_function(i, j, n)).values
                for base in base_masks:
                    c = base | offset
                    lhs = int(lhs_values[c])
                    rhs = identity(i, j, n, c, provider)
                    if lhs != rhs:
                        witnesses.append((f"f{i}{j}:c={c}", lhs, rhs))
            else:
                tbl = sub_function(i, j, n)
                for base in base_masks:
                    c = base | offset
                    lhs = walsh_at(tbl, c)
                    rhs = identity(i, j, n, c)
                    if lhs != rhs:
                        witnesses.append((f"f{i}{j}:c={c}", lhs, rhs))
        status = "fail" if witnesses else "pass"
        reports.append(
            VerificationReport(which, params, status, _cap_witnesses(witnesses), _elapsed_ms(t0))
        )
    return reports


def check_family_identity(n_values=None, max_n: int = DEFAULT_MAX_N) -> list[VerificationReport]:
    """Seven-term decomposition of the stride-1 family versus direct
    summation, every mask."""
    if n_values is None:
        n_values = DECOMPOSITION_NS
    reports = []
    for n in n_values:
        if n > max_n:
            reports.append(_skip("eq23", {"n": n}, max_n, n))
            continue
        t0 = time.perf_counter()
        tbl = monomial_rsbf(MonomialRsbfSpec(n, 4, 1))
        witnesses = []
        for c in range(1 << n):
            lhs = walsh_at(tbl, c)
            rhs = family_walsh_via_subfns(n, c)
            if lhs != rhs:
                witnesses.append((c, lhs, rhs))
        status = "fail" if witnesses else "pass"
        reports.append(
            VerificationReport("eq23", {"n": n}, status, _cap_witnesses(witnesses), _elapsed_ms(t0))
        )
    return reports


def check_subfn_zero(
    n_values=None, base: SpectralBaseTable | None = None, max_n: int = DEFAULT_MAX_N
) -> list[VerificationReport]:
    """Order-4 zero-mask recurrence for every variant versus the exact
    population count."""
    if n_values is None:
        n_values = ZERO_RECURRENCE_NS
    table = base if base is not None else SpectralBaseTable.from_reference()
    reports = []
    for n in n_values:
        if n > max_n:
            reports.append(_skip("eq26", {"n": n}, max_n, n))
            continue
        t0 = time.perf_counter()
        witnesses = []
        for i, j in SUB_PAIRS:
            recurred = subfn_zero_recurrence(i, j, n, table)
            direct = (1 << n) - 2 * weight(sub_function(i, j, n))
            if recurred != direct:
                witnesses.append((f"f{i}{j}", direct, recurred))
        status = "fail" if witnesses else "pass"
        reports.append(
            VerificationReport("eq26", {"n": n}, status, _cap_witnesses(witnesses), _elapsed_ms(t0))
        )
    return reports


def check_family_zero(
    n_values=None, base: SpectralBaseTable | None = None, max_n: int = DEFAULT_MAX_N
) -> list[VerificationReport]:
    """Zero-mask recurrence for the stride-1 family versus the exact
    population count."""
    if n_values is None:
        n_values = ZERO_RECURRENCE_NS
    table = base if base is not None else SpectralBaseTable.from_reference()
    reports = []
    for n in n_values:
        if n > max_n:
            reports.append(_skip("thm24", {"n": n}, max_n, n))
            continue
        t0 = time.perf_counter()
        recurred = family_zero_recurrence(n, table)
        direct = (1 << n) - 2 * weight(monomial_rsbf(MonomialRsbfSpec(n, 4, 1)))
        witnesses = [] if recurred == direct else [("F4", direct, recurred)]
        status = "fail" if witnesses else "pass"
        reports.append(VerificationReport("thm24", {"n": n}, status, witnesses, _elapsed_ms(t0)))
    return reports


def check_bound(n_values=None, max_n: int = DEFAULT_MAX_N) -> list[VerificationReport]:
    """Spectral bound over all variants for each arity in the window."""
    if n_values is None:
        n_values = BOUND_NS
    reports = []
    for n in n_values:
        if n > max_n:
            reports.append(_skip("bound", {"n": n}, max_n, n))
            continue
        reports.append(spectral_bound_check(n))
    return reports


def check_factorization(cases=FACTOR_CASES, max_n: int = DEFAULT_MAX_N) -> list[VerificationReport]:
    """Cycle-product coefficients versus the full transform, every mask.

    Also surveys each aligned factor's peaks and logs whether the signed
    and the absolute forms of the peak-at-zero comparison hold for it.
    """
    reports = []
    for n, e in cases:
        if n > max_n:
            reports.append(_skip("factor", {"n": n, "e": e}, max_n, n))
            continue
        t0 = time.perf_counter()
        spec = MonomialRsbfSpec(n, 4, e)
        values = walsh_transform(monomial_rsbf(spec)).values
        witnesses = []
        for c in range(1 << n):
            got = factored_walsh(spec, c)
            expected = int(values[c])
            if got != expected:
                witnesses.append((c, expected, got))
        dec = cycle_decompose(n, e)
        aligned = walsh_transform(monomial_rsbf(MonomialRsbfSpec(dec.t, 4, 1))).values
        zero_value = int(aligned[0])
        signed_strict = bool(np.all(aligned[1:] < zero_value)) if dec.t > 1 else False
        abs_within = bool(np.all(np.abs(aligned[1:]) <= zero_value)) if dec.t > 1 else False
        log.info(
            "factor (n=%d,e=%d): t=%d signed-strict=%s abs-within=%s",
            n, e, dec.t, signed_strict, abs_within,
        )
        status = "fail" if witnesses else "pass"
        reports.append(
            VerificationReport(
                "factor", {"n": n, "e": e}, status, _cap_witnesses(witnesses), _elapsed_ms(t0)
            )
        )
    return reports


def sweep_cases(n_range=SWEEP_N_RANGE, e_range=None, l: int = 4) -> list[tuple[int, int, int]]:
    """The (n, l, e) grid for a family sweep; e_range=None means 1..n."""
    lo, hi = n_range
    cases = []
    for n in range(lo, hi + 1):
        strides = range(1, n + 1) if e_range is None else range(e_range[0], e_range[1] + 1)
        cases.extend((n, l, e) for e in strides)
    return cases


def _family_case(args: tuple[int, int, int]):
    n, l, e = args
    t0 = time.perf_counter()
    tbl = monomial_rsbf(MonomialRsbfSpec(n, l, e))
    spectrum = walsh_transform(tbl)
    wt = weight(tbl)
    nl = (tbl.size - int(spectrum.values.max())) // 2
    peak = peak_at_zero(spectrum)
    k_abs = int(np.argmax(np.abs(spectrum.values)))
    abs_max = int(np.abs(spectrum.values[k_abs]))
    return (n, l, e, wt, nl, peak, k_abs, abs_max, spectrum[0], _elapsed_ms(t0))


def scan_family(
    cases,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
    check_name: str = "theorem",
) -> list[VerificationReport]:
    """Measure weight, nonlinearity, and peak location for each (n, l, e).

    A case passes when nonlinearity equals weight and no coefficient
    magnitude beats the zero-mask value.  Results come back sorted by
    (l, n, e) regardless of worker count.
    """
    reports = []
    todo = []
    for n, l, e in cases:
        if n > max_n:
            reports.append(_skip(check_name, {"n": n, "l": l, "e": e}, max_n, n))
        else:
            todo.append((n, l, e))
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_family_case, todo, chunksize=8))
    else:
        results = [_family_case(args) for args in todo]
    for n, l, e, wt, nl, peak, k_abs, abs_max, zero_value, ms in results:
        witnesses = []
        if nl != wt:
            witnesses.append(("weight-vs-nonlinearity", wt, nl))
        if not peak:
            witnesses.append((f"peak:c={k_abs}", zero_value, abs_max))
        status = "fail" if witnesses else "pass"
        reports.append(VerificationReport(check_name, {"n": n, "l": l, "e": e}, status, witnesses, ms))
    reports.sort(key=lambda r: (r.params["l"], r.params["n"], r.params["e"]))
    return reports


def counterexample_search(
    n_range=COUNTEREXAMPLE_N_RANGE,
    e_range=COUNTEREXAMPLE_E_RANGE,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> tuple[list[VerificationReport], VerificationReport]:
    """Quadratic sweep where a failing case is the expected finding.

    Returns the per-case reports plus a summary that passes exactly when
    at least one case shows nonlinearity below weight; each finding keeps
    its witnesses in its own report line.
    """
    lo, hi = n_range
    cases = [(n, 2, e) for n in range(max(lo, 2), hi + 1) for e in range(e_range[0], e_range[1] + 1)]
    reports = scan_family(cases, workers=workers, max_n=max_n, check_name="counterexample")
    found = [r for r in reports if r.status == "fail"]
    elapsed = sum(r.elapsed_ms for r in reports)
    if found:
        summary = VerificationReport("counterexample", {"l": 2, "id": "summary"}, "pass", [], elapsed)
    else:
        summary = VerificationReport(
            "counterexample",
            {"l": 2, "id": "summary"},
            "fail",
            [("search", "some case with nonlinearity != weight", "none found")],
            elapsed,
        )
    return reports, summary


def _gating(report: VerificationReport) -> bool:
    # confirmed quadratic counterexamples are findings, not errors
    if report.check == "counterexample" and "n" in report.params:
        return False
    return report.status == "fail"


@dataclass
class RunResult:
    """All reports of one run plus the aggregate verdict."""

    reports: list[VerificationReport]

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if _gating(r)]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.reports:
            out[r.status] += 1
        return out


@dataclass
class HarnessConfig:
    """Resource caps, parallelism, seeding, and output wiring for run_all."""

    max_n: int = DEFAULT_MAX_N
    workers: int = 0  # 0 means one per CPU
    seed: int = DEFAULT_SEED
    out_path: str | None = None
    table1_path: str | None = None
    table2_path: str | None = None
    sampled_grids: bool = True

    def __post_init__(self) -> None:
        if not 1 <= self.max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must be in 1..{HARD_MAX_N}, got {self.max_n}")
        if self.workers < 0:
            raise ValueError("workers cannot be negative")

    def resolved_workers(self) -> int:
        return self.workers or (os.cpu_count() or 1)


def run_all(config: HarnessConfig | None = None, only=None) -> RunResult:
    """Every suite in a fixed order with the configured caps.

    ``only`` restricts the run to a subset of SUITES (used by tests and by
    the command line to slice the default sweep).
    """
    cfg = config or HarnessConfig()
    chosen = set(SUITES) if only is None else set(only)
    unknown = chosen - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    workers = cfg.resolved_workers()
    reports: list[VerificationReport] = []

    def run_suite(name: str, thunk) -> None:
        if name not in chosen:
            return
        t0 = time.perf_counter()
        thunk()
        log.info("suite %s finished in %d ms", name, _elapsed_ms(t0))

    run_suite("table1", lambda: reports.append(check_reference_table(1, cfg.table1_path)[1]))
    run_suite("table2", lambda: reports.append(check_reference_table(2, cfg.table2_path)[1]))

    def identity_suite(which: str) -> None:
        reports.extend(check_identity_grid(which, max_n=cfg.max_n))
        if cfg.sampled_grids:
            reports.extend(
                check_identity_grid(
                    which,
                    n_values=GRID_SAMPLED_NS,
                    samples=GRID_SAMPLES,
                    seed=cfg.seed,
                    max_n=cfg.max_n,
                )
            )

    run_suite("lemma21", lambda: identity_suite("lemma21"))
    run_suite("lemma22", lambda: identity_suite("lemma22"))
    run_suite("eq23", lambda: reports.extend(check_family_identity(max_n=cfg.max_n)))
    base = SpectralBaseTable.from_reference()
    run_suite("eq26", lambda: reports.extend(check_subfn_zero(base=base, max_n=cfg.max_n)))
    run_suite("thm24", lambda: reports.extend(check_family_zero(base=base, max_n=cfg.max_n)))
    run_suite("bound", lambda: reports.extend(check_bound(max_n=cfg.max_n)))
    run_suite("factor", lambda: reports.extend(check_factorization(max_n=cfg.max_n)))
    run_suite(
        "theorem",
        lambda: reports.extend(
            scan_family(sweep_cases(), workers=workers, max_n=cfg.max_n, check_name="theorem")
        ),
    )
    run_suite(
        "cubic",
        lambda: reports.extend(
            scan_family(
                sweep_cases(CUBIC_N_RANGE, CUBIC_E_RANGE, l=3),
                workers=workers,
                max_n=cfg.max_n,
                check_name="theorem",
            )
        ),
    )

    def survey_suite() -> None:
        for l in SURVEY_DEGREES:
            reports.extend(
                scan_family(
                    sweep_cases((l, 20), SURVEY_E_RANGE, l=l),
                    workers=workers,
                    max_n=cfg.max_n,
                    check_name="conjecture",
                )
            )

    run_suite("conjecture", survey_suite)

    def counterexample_suite() -> None:
        case_reports, summary = counterexample_search(workers=workers, max_n=cfg.max_n)
        reports.extend(case_reports)
        reports.append(summary)

    run_suite("counterexample", counterexample_suite)

    result = RunResult(reports)
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="ascii") as fh:
            write_jsonl(result.reports, fh)
    return result
