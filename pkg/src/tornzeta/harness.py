"""Closed-form vs oracle comparisons, suite presets, and report emission.

The pass rule credits the oracle's own honesty budget: a report passes
when abs_err <= max(tolerance, tail_bound + quadrature error estimate).
A truncated sum that lands inside its certified tail bound is correct to
the extent it can be checked at that cutoff; only a discrepancy exceeding
both the tolerance and the bound is evidence against an identity.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from mpmath import mp

from .closedform import closed_form_of
from .oracle import (
    NoTailBound,
    NumericCfg,
    OracleError,
    OracleResult,
    default_digits,
    oracle_for,
    oracle_quadrature,
    zx_numeric,
)
from .series import SeriesSpec, parse_spec
from .zexpr import ZExpr


@dataclass(frozen=True)
class EvalReport:
    spec: SeriesSpec
    closed_form: ZExpr
    closed_text: str
    closed_numeric: object  # mpf
    oracle: OracleResult
    abs_err: object  # mpf
    rel_err: object  # mpf
    tolerance: float
    passed: bool
    reason: str = ""


def verify(spec: SeriesSpec, cfg: NumericCfg, tol: float) -> EvalReport:
    """Compare the closed form against the configured oracle.

    Never raises on a numeric mismatch or an oracle breakdown; those come
    back as passed=False with a reason.  Invalid usage (a spec with no
    closed form, tol <= 0) still raises, since no comparison is defined.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    closed = closed_form_of(spec)
    closed_num = zx_numeric(closed, cfg.digits)
    note = ""
    broken = False
    result: OracleResult | None = None
    try:
        result = oracle_for(spec, cfg)
    except NoTailBound as exc:
        # without a certified tail the truncation error is unquantified;
        # fall back to quadrature agreement where an integral form exists
        if spec.kind in ("A3", "An") and cfg.method != "quadrature":
            note = f"{exc}; quadrature agreement used instead"
            try:
                result = oracle_quadrature(spec, replace(cfg, method="quadrature"))
            except OracleError as qexc:
                note = str(qexc)
                broken = True
                result = qexc.partial
        else:
            note = str(exc)
            broken = True
    except OracleError as exc:
        note = str(exc)
        broken = True
        result = exc.partial
    with mp.workdps(cfg.digits + 10):
        if result is None:
            result = OracleResult(
                value=mp.nan,
                method=cfg.method,
                n_used=None,
                levels_used=None,
                tail_bound=mp.mpf(0),
                error_estimate=mp.mpf(0),
                elapsed=0.0,
            )
        abs_err = abs(closed_num - result.value)
        rel_err = abs_err / abs(closed_num) if closed_num != 0 else +abs_err
        threshold = max(mp.mpf(tol), result.tail_bound + result.error_estimate)
        passed = (not broken) and bool(abs_err <= threshold)
        if not passed and not note:
            note = (
                f"abs_err {mp.nstr(abs_err, 6)} exceeds tolerance {tol:g} "
                f"and slack {mp.nstr(result.tail_bound + result.error_estimate, 6)}"
            )
    return EvalReport(
        spec=spec,
        closed_form=closed,
        closed_text=closed.render(),
        closed_numeric=closed_num,
        oracle=result,
        abs_err=abs_err,
        rel_err=rel_err,
        tolerance=tol,
        passed=passed,
        reason="" if passed else note or "",
    )


@dataclass(frozen=True)
class SuiteEntry:
    spec: SeriesSpec
    cfg: NumericCfg
    tol: float


@dataclass(frozen=True)
class SuiteManifest:
    name: str
    entries: tuple[SuiteEntry, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a suite manifest needs at least one entry")
        for e in self.entries:
            if e.tol <= 0:
                raise ValueError(f"entry {e.spec}: tolerance must be positive, got {e.tol}")
            if e.spec.kind == "TornheimRaw":
                raise ValueError(
                    f"entry {e.spec}: oracle-only family has no closed form to verify"
                )


def _entry(text: str, method: str, n_max: int, tol: float, digits: int) -> SuiteEntry:
    return SuiteEntry(
        parse_spec(text),
        NumericCfg(digits=digits, n_max=n_max, method=method),
        tol,
    )


def smoke_manifest(digits: int | None = None) -> SuiteManifest:
    """Six fast identities at cutoff 10^4; a seconds-scale sanity pass."""
    d = default_digits() if digits is None else digits
    n = 10**4
    entries = (
        _entry("A3:s=0", "diagonal", n, 1e-6, d),
        _entry("An:n=2,s=0", "diagonal", n, 1e-6, d),
        _entry("aXL:k=1", "diagonal", n, 1e-6, d),
        _entry("ln", "diagonal", n, 1e-6, d),
        _entry("on", "diagonal", n, 1e-6, d),
        _entry("halfint:c", "diagonal", n, 1e-6, d),
    )
    return SuiteManifest("smoke", entries)


def paper_full_manifest(digits: int | None = None) -> SuiteManifest:
    """Every closed-form identity in the catalog, each against at least one oracle."""
    d = default_digits() if digits is None else digits
    entries = (
        # quadrature on the integral representations
        _entry("A3:s=0", "quadrature", 10**6, 1e-8, d),
        _entry("An:n=2,s=0", "quadrature", 10**6, 1e-10, d),
        _entry("An:n=4,s=0", "quadrature", 10**6, 1e-10, d),
        _entry("An:n=5,s=3", "quadrature", 10**6, 1e-10, d),
        # regrouped single-index summation
        _entry("A3:s=0", "diagonal", 10**6, 1e-6, d),
        _entry("A3:s=1", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("A3:s=2", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("A3:s=20", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("An:n=2,s=2", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("An:n=6,s=1", "diagonal", 10**5, 1e-6, d),
        _entry("aXL:k=0", "diagonal", 10**6, 1e-6, d),
        _entry("aXL:k=1", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("aXL:k=3", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("aXL:k=10", "diagonal", 2 * 10**5, 1e-6, d),
        _entry("S111", "diagonal", 10**6, 1e-6, d),
        _entry("ln", "diagonal", 10**6, 1e-8, d),
        _entry("on", "diagonal", 10**6, 1e-8, d),
        _entry("evenodd", "diagonal", 10**6, 1e-8, d),
        _entry("oddsq", "diagonal", 10**6, 1e-8, d),
        _entry("binter", "diagonal", 10**6, 1e-8, d),
        _entry("baseT:1", "diagonal", 10**6, 1e-8, d),
        _entry("baseT:2", "diagonal", 10**6, 1e-8, d),
        _entry("baseT:3", "diagonal", 10**6, 1e-8, d),
        _entry("halfint:a", "diagonal", 10**5, 1e-6, d),
        _entry("halfint:b", "diagonal", 10**5, 1e-6, d),
        _entry("halfint:c", "diagonal", 10**5, 1e-6, d),
        # defining double sums over boxes, covered by the same tail bounds
        _entry("S111", "raw", 1500, 1e-6, d),
        _entry("halfint:c", "raw", 1000, 1e-6, d),
    )
    return SuiteManifest("paper-full", entries)


PRESETS = {
    "smoke": smoke_manifest,
    "paper-full": paper_full_manifest,
}


def run_suite(manifest: SuiteManifest, parallel: bool = False) -> list[EvalReport]:
    """Run every entry; report order always equals manifest order."""
    if parallel:
        with ThreadPoolExecutor(max_workers=min(8, len(manifest.entries))) as pool:
            return list(pool.map(lambda e: verify(e.spec, e.cfg, e.tol), manifest.entries))
    return [verify(e.spec, e.cfg, e.tol) for e in manifest.entries]


# ---------------------------------------------------------------------------
# emission

_CSV_COLUMNS = (
    "spec",
    "params",
    "closed_form",
    "closed_numeric",
    "oracle_value",
    "method",
    "n_used",
    "abs_err",
    "tail_bound",
    "pass",
)


def _fmt30(x) -> str:
    with mp.workdps(40):
        return mp.nstr(mp.mpf(x), 30, strip_zeros=False)


def _row(report: EvalReport) -> dict:
    o = report.oracle
    n_used = o.n_used if o.n_used is not None else o.levels_used
    return {
        "spec": report.spec.token(),
        "params": report.spec.params_text(),
        "closed_form_text": report.closed_text,
        "closed_numeric": _fmt30(report.closed_numeric),
        "oracle_value": _fmt30(o.value),
        "oracle_method": o.method,
        "n_used": n_used,
        "abs_err": _fmt30(report.abs_err),
        "tail_bound": _fmt30(o.tail_bound),
        "pass": report.passed,
    }


def render_reports(reports: list[EvalReport], format: str) -> str:
    """Serialized report batch; deterministic bytes for fixed inputs."""
    if format == "json":
        return json.dumps([_row(r) for r in reports], indent=2) + "\n"
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for r in reports:
            row = _row(r)
            writer.writerow(
                [
                    row["spec"],
                    row["params"],
                    row["closed_form_text"],
                    row["closed_numeric"],
                    row["oracle_value"],
                    row["oracle_method"],
                    row["n_used"],
                    row["abs_err"],
                    row["tail_bound"],
                    "true" if row["pass"] else "false",
                ]
            )
        return buf.getvalue()
    if format == "text":
        lines = []
        header = (
            f"{'spec':<18} {'method':<10} {'n_used':>8} {'closed':>22} "
            f"{'abs_err':>12} {'tail_bound':>12}  status"
        )
        lines.append(header)
        npass = 0
        for r in reports:
            o = r.oracle
            n_used = o.n_used if o.n_used is not None else o.levels_used
            status = "ok" if r.passed else f"FAIL ({r.reason})"
            npass += r.passed
            with mp.workdps(40):
                lines.append(
                    f"{r.spec.label():<18} {o.method:<10} {n_used!s:>8} "
                    f"{mp.nstr(mp.mpf(r.closed_numeric), 15):>22} "
                    f"{mp.nstr(mp.mpf(r.abs_err), 4):>12} "
                    f"{mp.nstr(mp.mpf(o.tail_bound), 4):>12}  {status}"
                )
        lines.append(f"{npass}/{len(reports)} identities verified")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}")


def emit(reports: list[EvalReport], format: str, sink) -> None:
    """Write the rendered batch to a file-like sink; failures carry context."""
    payload = render_reports(reports, format)
    try:
        sink.write(payload)
    except OSError as exc:
        raise RuntimeError(f"could not write {format} report to {sink!r}: {exc}") from exc
