"""Command line front end.

Four commands: analyze (one family member's headline numbers), spectrum
(coefficients, single or full), subfn (same for the chain variants), and
check (the verification suites, streamed as JSON lines).

Every option also reads an RSBF_* environment variable, so scripted runs
can pin defaults without repeating flags.
"""

from __future__ import annotations

import json
import sys

import click

from .core import (
    DEFAULT_MAX_N,
    HARD_MAX_N,
    spectrum_argmax,
    walsh_at,
    walsh_transform,
    weight,
)
from .families import MonomialRsbfSpec, monomial_rsbf, sub_function
from .harness import (
    HarnessConfig,
    check_bound,
    check_factorization,
    check_family_identity,
    check_family_zero,
    check_identity_grid,
    check_reference_table,
    check_subfn_zero,
    counterexample_search,
    run_all,
    scan_family,
    sweep_cases,
)

CHECK_TOKENS = (
    "table1",
    "table2",
    "lemma21",
    "lemma22",
    "eq23",
    "eq26",
    "thm24",
    "bound",
    "theorem",
    "conjecture",
    "counterexample",
    "factor",
    "all",
)

# default (n window, e window) per degree for the sweep checks;
# e window None means 1..n per arity
_SCAN_DEFAULTS = {
    2: ((2, 16), (1, 2)),
    3: ((4, 16), (1, 4)),
    4: ((4, 20), None),
    5: ((5, 20), (1, 3)),
    6: ((6, 20), (1, 3)),
}
_SCAN_FALLBACK = (1, 3)


class RangeType(click.ParamType):
    """Inclusive integer window written A..B (a bare integer means A..A)."""

    name = "range"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        text = str(value)
        try:
            if ".." in text:
                lo_text, hi_text = text.split("..", 1)
                lo, hi = int(lo_text), int(hi_text)
            else:
                lo = hi = int(text)
        except ValueError:
            self.fail(f"{text!r} is not A..B with integer endpoints", param, ctx)
        if lo > hi:
            self.fail(f"empty window {text!r}", param, ctx)
        return (lo, hi)


RANGE = RangeType()


def _mask_text(c: int, n: int, bits: bool) -> str:
    if bits:
        return "".join(str((c >> k) & 1) for k in range(n))
    return str(c)


def _family_spec(n: int, l: int, e: int, max_n: int) -> MonomialRsbfSpec:
    if n > max_n:
        raise click.UsageError(
            f"n={n} exceeds the cap of {max_n}; raise --max-n (hard cap {HARD_MAX_N})"
        )
    try:
        return MonomialRsbfSpec(n, l, e)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _emit(text: str, out: str | None) -> None:
    if out is not None:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        click.echo(text)


def _record_json(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"), default=int)


def _record_csv(record: dict) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(record.keys())
    writer.writerow(record.values())
    return buf.getvalue()


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Truth tables, Walsh spectra, and verification suites for monomial
    rotation symmetric Boolean functions."""


def _common_options(fn):
    fn = click.option(
        "--format", "fmt", envvar="RSBF_FORMAT",
        type=click.Choice(["text", "json", "csv"]), default="text", show_default=True,
        help="Output rendering.",
    )(fn)
    fn = click.option(
        "--out", envvar="RSBF_OUT", type=click.Path(dir_okay=False, writable=True),
        default=None, help="Write the output to a file instead of stdout.",
    )(fn)
    fn = click.option(
        "--max-n", envvar="RSBF_MAX_N", type=click.IntRange(1, HARD_MAX_N),
        default=DEFAULT_MAX_N, show_default=True,
        help="Refuse arities above this cap.",
    )(fn)
    fn = click.option(
        "--bits", envvar="RSBF_BITS", is_flag=True, default=False,
        help="Render masks as bit vectors, lowest-index variable first.",
    )(fn)
    return fn


@main.command()
@click.option("--n", envvar="RSBF_N", type=int, required=True, help="Number of variables.")
@click.option("--l", envvar="RSBF_L", type=int, default=4, show_default=True, help="Monomial degree.")
@click.option("--e", envvar="RSBF_E", type=int, default=1, show_default=True, help="Index stride.")
@_common_options
def analyze(n, l, e, fmt, out, max_n, bits):
    """Weight, nonlinearity, and spectral peaks of one family member."""
    spec = _family_spec(n, l, e, max_n)
    tbl = monomial_rsbf(spec)
    spectrum = walsh_transform(tbl)
    mask_signed, value_signed, mask_abs, value_abs = spectrum_argmax(spectrum)
    wt = weight(tbl)
    nl = (tbl.size - value_signed) // 2
    record = {
        "n": n,
        "l": l,
        "e": e,
        "degenerate": spec.degenerate,
        "weight": wt,
        "nonlinearity": nl,
        "walsh_at_zero": spectrum[0],
        "max_walsh": value_signed,
        "max_walsh_mask": _mask_text(int(mask_signed), n, bits) if bits else int(mask_signed),
        "max_abs_walsh": abs(value_abs),
        "max_abs_walsh_mask": _mask_text(int(mask_abs), n, bits) if bits else int(mask_abs),
        "nonlinearity_equals_weight": nl == wt,
        "peak_at_zero": abs(value_abs) <= spectrum[0],
    }
    if fmt == "json":
        _emit(_record_json(record), out)
    elif fmt == "csv":
        _emit(_record_csv(record), out)
    else:
        lines = [f"family member: n={n} l={l} e={e}"]
        if spec.degenerate:
            lines.append("note: degenerate (n < l), indices wrap onto repeats")
        lines += [
            f"weight             {record['weight']}",
            f"nonlinearity       {record['nonlinearity']}",
            f"walsh at zero      {record['walsh_at_zero']}",
            f"max walsh          {record['max_walsh']} at mask {record['max_walsh_mask']}",
            f"max |walsh|        {record['max_abs_walsh']} at mask {record['max_abs_walsh_mask']}",
            f"nonlinearity == weight  {record['nonlinearity_equals_weight']}",
            f"peak at zero            {record['peak_at_zero']}",
        ]
        _emit("\n".join(lines), out)


def _stdout_is_tty() -> bool:
    return sys.stdout.isatty()


def _full_spectrum_guard(n: int, out: str | None, force: bool) -> None:
    if n > 16 and out is None and not force and _stdout_is_tty():
        raise click.UsageError(
            f"full spectrum for n={n} is {1 << n} lines; use --out, or --force to dump to the terminal"
        )


def _render_spectrum(record: dict, values, fmt: str, n: int, bits: bool) -> str:
    if fmt == "json":
        record = dict(record)
        record["values"] = [int(v) for v in values]
        return _record_json(record)
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["mask", "value"])
        for c, v in enumerate(values):
            writer.writerow([_mask_text(c, n, bits), int(v)])
        return buf.getvalue()
    lines = [" ".join(f"{k}={v}" for k, v in record.items())]
    if record.get("degenerate"):
        lines.append("note: degenerate (n < l), indices wrap onto repeats")
    lines += [f"{_mask_text(c, n, bits)} {int(v)}" for c, v in enumerate(values)]
    return "\n".join(lines)


@main.command()
@click.option("--n", envvar="RSBF_N", type=int, required=True, help="Number of variables.")
@click.option("--l", envvar="RSBF_L", type=int, default=4, show_default=True, help="Monomial degree.")
@click.option("--e", envvar="RSBF_E", type=int, default=1, show_default=True, help="Index stride.")
@click.option("--at", envvar="RSBF_AT", type=int, default=None,
              help="Only the coefficient at this mask, by direct summation.")
@click.option("--force", envvar="RSBF_FORCE", is_flag=True, default=False,
              help="Dump large spectra to a terminal anyway.")
@_common_options
def spectrum(n, l, e, at, force, fmt, out, max_n, bits):
    """Walsh spectrum of one family member (all masks, or one with --at)."""
    spec = _family_spec(n, l, e, max_n)
    tbl = monomial_rsbf(spec)
    if at is not None:
        if not 0 <= at < tbl.size:
            raise click.UsageError(f"--at {at} is outside 0..{tbl.size - 1}")
        record = {
            "n": n, "l": l, "e": e, "degenerate": spec.degenerate,
            "at": _mask_text(at, n, bits) if bits else at,
            "value": walsh_at(tbl, at),
        }
        if fmt == "json":
            _emit(_record_json(record), out)
        elif fmt == "csv":
            _emit(_record_csv(record), out)
        else:
            note = " (degenerate: n < l)" if spec.degenerate else ""
            _emit(f"walsh at {record['at']}: {record['value']}{note}", out)
        return
    _full_spectrum_guard(n, out, force)
    values = walsh_transform(tbl).values
    record = {"n": n, "l": l, "e": e, "degenerate": spec.degenerate}
    _emit(_render_spectrum(record, values, fmt, n, bits), out)


@main.command()
@click.option("--i", "i", envvar="RSBF_I", type=click.IntRange(0, 3), required=True,
              help="Count of trailing products folded in.")
@click.option("--j", "j", envvar="RSBF_J", type=click.IntRange(0, 3), required=True,
              help="Low-end correction level.")
@click.option("--n", envvar="RSBF_N", type=int, required=True, help="Number of variables.")
@click.option("--at", envvar="RSBF_AT", type=int, default=None,
              help="Only the coefficient at this mask, by direct summation.")
@click.option("--force", envvar="RSBF_FORCE", is_flag=True, default=False,
              help="Dump large spectra to a terminal anyway.")
@_common_options
def subfn(i, j, n, at, force, fmt, out, max_n, bits):
    """Walsh spectrum of one chain variant (all masks, or one with --at)."""
    if n > max_n:
        raise click.UsageError(
            f"n={n} exceeds the cap of {max_n}; raise --max-n (hard cap {HARD_MAX_N})"
        )
    try:
        tbl = sub_function(i, j, n)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if at is not None:
        if not 0 <= at < tbl.size:
            raise click.UsageError(f"--at {at} is outside 0..{tbl.size - 1}")
        record = {
            "i": i, "j": j, "n": n,
            "at": _mask_text(at, n, bits) if bits else at,
            "value": walsh_at(tbl, at),
        }
        if fmt == "json":
            _emit(_record_json(record), out)
        elif fmt == "csv":
            _emit(_record_csv(record), out)
        else:
            _emit(f"walsh at {record['at']}: {record['value']}", out)
        return
    _full_spectrum_guard(n, out, force)
    values = walsh_transform(tbl).values
    record = {"i": i, "j": j, "n": n}
    _emit(_render_spectrum(record, values, fmt, n, bits), out)


def _stream_reports(reports, fmt: str, out: str | None) -> None:
    if fmt == "text":
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            head = f"{r.status.upper():<7} {r.check}"
            if params:
                head += f" [{params}]"
            head += f" witnesses={len(r.witnesses)} elapsed={r.elapsed_ms}ms"
            lines.append(head)
            for w in r.witnesses[:8]:
                lines.append(f"        {w[0]}: expected {w[1]}, got {w[2]}")
        text = "\n".join(lines)
    else:
        text = "\n".join(r.to_json() for r in reports)
    click.echo(text)
    if out is not None:
        with open(out, "w", encoding="ascii") as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")


def _scan_windows(l: int, n_range, e_range):
    default_n, default_e = _SCAN_DEFAULTS.get(l, ((max(l, 4), 20), _SCAN_FALLBACK))
    return (n_range or default_n), (e_range if e_range is not None else default_e)


@main.command()
@click.argument("which", type=click.Choice(CHECK_TOKENS))
@click.option("--l", envvar="RSBF_L", type=int, default=None,
              help="Degree for the sweep checks (theorem defaults to 4).")
@click.option("--n-range", envvar="RSBF_N_RANGE", type=RANGE, default=None,
              help="Arity window A..B for the sweep checks.")
@click.option("--e-range", envvar="RSBF_E_RANGE", type=RANGE, default=None,
              help="Stride window A..B for the sweep checks.")
@click.option("--workers", envvar="RSBF_WORKERS", type=click.IntRange(0), default=0,
              show_default=True, help="Process pool size; 0 means one per CPU.")
@click.option("--max-n", envvar="RSBF_MAX_N", type=click.IntRange(1, HARD_MAX_N),
              default=DEFAULT_MAX_N, show_default=True,
              help="Skip cases above this arity.")
@click.option("--seed", envvar="RSBF_SEED", type=int, default=0, show_default=True,
              help="Seed for the sampled identity grids.")
@click.option("--format", "fmt", envvar="RSBF_FORMAT",
              type=click.Choice(["json", "text", "csv"]), default="json", show_default=True,
              help="json streams one report per line; csv only for the table checks.")
@click.option("--out", envvar="RSBF_OUT", type=click.Path(dir_okay=False, writable=True),
              default=None, help="Also write the reports (or table CSV) to a file.")
@click.pass_context
def check(ctx, which, l, n_range, e_range, workers, max_n, seed, fmt, out):
    """Run one verification suite (or all) and exit 0 only on a clean run.

    The quadratic counterexample search inverts that: it exits 0 exactly
    when a counterexample is found, because finding one is its job.
    """
    import os as _os

    pool = workers or (_os.cpu_count() or 1)
    if fmt == "csv" and which not in ("table1", "table2"):
        raise click.UsageError("--format csv only applies to table1/table2")

    if which == "all":
        cfg = HarnessConfig(max_n=max_n, workers=pool, seed=seed, out_path=out)
        result = run_all(cfg)
        _stream_reports(result.reports, fmt, None)
        counts = result.counts()
        click.echo(
            f"# {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped",
            err=True,
        )
        ctx.exit(result.exit_code)

    if which in ("table1", "table2"):
        index = 1 if which == "table1" else 2
        artifact, report = check_reference_table(index)
        if fmt == "csv":
            if out is None:
                raise click.UsageError("--format csv needs --out for the table artifact")
            with open(out, "w", encoding="ascii", newline="") as fh:
                fh.write(artifact.to_csv_text())
            click.echo(report.to_json())
        else:
            _stream_reports([report], fmt, out)
        ctx.exit(0 if report.ok else 1)

    if which in ("lemma21", "lemma22"):
        ns = range(n_range[0], n_range[1] + 1) if n_range else None
        reports = check_identity_grid(which, n_values=ns, seed=seed, max_n=max_n)
    elif which == "eq23":
        ns = range(n_range[0], n_range[1] + 1) if n_range else None
        reports = check_family_identity(n_values=ns, max_n=max_n)
    elif which == "eq26":
        ns = range(n_range[0], n_range[1] + 1) if n_range else None
        reports = check_subfn_zero(n_values=ns, max_n=max_n)
    elif which == "thm24":
        ns = range(n_range[0], n_range[1] + 1) if n_range else None
        reports = check_family_zero(n_values=ns, max_n=max_n)
    elif which == "bound":
        ns = range(n_range[0], n_range[1] + 1) if n_range else None
        reports = check_bound(n_values=ns, max_n=max_n)
    elif which == "factor":
        reports = check_factorization(max_n=max_n)
    elif which == "counterexample" or (which in ("theorem", "conjecture") and l == 2):
        nw, ew = _scan_windows(2, n_range, e_range)
        case_reports, summary = counterexample_search(nw, ew, workers=pool, max_n=max_n)
        reports = case_reports + [summary]
        _stream_reports(reports, fmt, out)
        ctx.exit(0 if summary.status == "pass" else 1)
    else:
        degree = l if l is not None else (4 if which == "theorem" else 5)
        if degree < 2:
            raise click.UsageError("--l must be at least 2")
        if degree >= 7:
            click.echo(f"# degree {degree} is exploratory; no expected outcome is pinned", err=True)
        if which == "conjecture" and l is None:
            reports = []
            for degree in (5, 6):
                nw, ew = _scan_windows(degree, n_range, e_range)
                reports.extend(
                    scan_family(sweep_cases(nw, ew, l=degree), workers=pool,
                                max_n=max_n, check_name="conjecture")
                )
        else:
            nw, ew = _scan_windows(degree, n_range, e_range)
            name = "conjecture" if which == "conjecture" else "theorem"
            reports = scan_family(sweep_cases(nw, ew, l=degree), workers=pool,
                                  max_n=max_n, check_name=name)

    _stream_reports(reports, fmt, out)
    ctx.exit(0 if all(r.ok for r in reports) else 1)


if __name__ == "__main__":
    main()
