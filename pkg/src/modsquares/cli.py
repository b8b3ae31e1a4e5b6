"""Command-line front end: every analysis as a subcommand.

Output is CSV by default (header row, `#`-prefixed footer comments for
summary statistics), JSON via --format json, and a self-contained SVG
for the histogram/scatter commands.  Simulations take --seed (default a
fixed constant, so casual runs are reproducible) and --workers, which
also fixes the stream partition; identical argv always produces
byte-identical output.

Exit codes: 0 success, 1 invalid arguments, 2 domain error (for example
a composite modulus), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import enum
import io
import json
import sys
from csv import writer as csv_writer
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .genseq import lcg_orbit, generator_cycle, square_cycle, squares_set
from .modarith import OddPrime, discrete_log, legendre_euler, sqrt_mod
from .permstats import (
    SimConfig,
    SimReport,
    inversion_null_moments,
    inversion_summary,
    simulate_inversions,
)
from .primroots import euler_phi, primitive_roots, smallest_primitive_root
from .rng import RNG_ALGORITHM
from .runstats import (
    aladov_predicted,
    count_runs,
    legendre_sequence,
    pair_counts,
    runs_null_moments,
    scan_runs,
    simulate_runs,
)

__all__ = ["ExitStatus", "OutputSpec", "emit_csv", "emit_svg_histogram", "main", "run_command"]

#: Fixed default seed so bare invocations are already reproducible.
DEFAULT_SEED = 0x5EED
DEFAULT_ITERATIONS = 10_000
DEFAULT_SCAN_COUNT = 200
DEFAULT_PRECISION = 6


class ExitStatus(enum.IntEnum):
    OK = 0
    USAGE = 1
    DOMAIN = 2
    INTERNAL = 3


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


@dataclass(frozen=True)
class OutputSpec:
    """Where and how a command writes: csv/json/svg to a path or stdout."""

    format: str = "csv"
    destination: str | None = None

    def __post_init__(self):
        if self.format not in ("csv", "json", "svg"):
            raise UsageError(f"unknown format {self.format!r}")


@dataclass
class CommandResult:
    """Uniform hand-off from a subcommand to the emitters."""

    inputs: dict
    header: list[str]
    rows: list[tuple]
    footers: dict = field(default_factory=dict)
    report: SimReport | None = None  # histogram commands (enables SVG bars)
    scatter: bool = False  # scatter commands (enables SVG points)
    title: str = ""
    xlabel: str = ""


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 1, not 2."""

    def error(self, message):
        raise UsageError(message)


def _fmt(x, precision: int) -> str:
    """Render a number: integers exactly, everything else as a decimal
    with `precision` digits, trailing zeros stripped."""
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        x = float(x)
    if isinstance(x, float):
        s = f"{x:.{precision}f}".rstrip("0").rstrip(".")
        return s if s and s != "-" else "0"
    return str(x)


def emit_csv(rows, header, footers=None, precision: int = DEFAULT_PRECISION) -> bytes:
    """RFC-4180-style CSV: header first, `\\n` endings, `#` footer comments."""
    arity = len(header)
    for row in rows:
        if len(row) != arity:
            raise RuntimeError(
                f"row arity {len(row)} does not match header arity {arity}: {row!r}"
            )
    buf = io.StringIO()
    w = csv_writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v, precision) if isinstance(v, (int, float, Fraction)) else v for v in row])
    for key, value in (footers or {}).items():
        buf.write(f"# {key}={_fmt(value, precision)}\n")
    return buf.getvalue().encode("utf-8")


def _json_value(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else float(v)
    return v


def emit_json(result: CommandResult, precision: int) -> bytes:
    payload = {
        "inputs": result.inputs,
        "outputs": {
            "columns": result.header,
            "rows": [[_json_value(v) for v in row] for row in result.rows],
            "summary": {k: _json_value(v) for k, v in result.footers.items()},
        },
        "provenance": {
            "seed": result.inputs.get("seed"),
            "rng_algorithm": RNG_ALGORITHM,
            "version": __version__,
        },
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _svg_doc(body: list[str], title: str, xlabel: str, ylabel: str) -> bytes:
    width, height = 800, 420
    x0, y0, x1, y1 = 64, 40, 780, 370
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{(x0 + x1) / 2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{x0}" y1="{y1}" x2="{x1}" y2="{y1}" stroke="black"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>',
        f'<text x="{(x0 + x1) / 2:.1f}" y="{height - 8}" text-anchor="middle">{xlabel}</text>',
        f'<text x="16" y="{(y0 + y1) / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {(y0 + y1) / 2:.1f})">{ylabel}</text>',
    ]
    parts.extend(body)
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def _axis_ticks(parts, x0, y0, x1, y1, vmin, vmax, cmax, to_x):
    for v in sorted({vmin, (vmin + vmax) // 2, vmax}):
        x = to_x(v)
        parts.append(f'<line x1="{x:.2f}" y1="{y1}" x2="{x:.2f}" y2="{y1 + 4}" stroke="black"/>')
        parts.append(f'<text x="{x:.2f}" y="{y1 + 18}" text-anchor="middle">{v}</text>')
    for c in sorted({0, cmax}):
        y = y1 - (y1 - y0) * (c / cmax if cmax else 0)
        parts.append(f'<text x="{x0 - 6}" y="{y + 4:.2f}" text-anchor="end">{c}</text>')


def emit_svg_histogram(report: SimReport, title: str, xlabel: str) -> bytes:
    """Self-contained SVG bar chart of an exact-value histogram."""
    hist = report.histogram
    if not hist:
        raise ValueError("cannot render an empty histogram")
    x0, y0, x1, y1 = 64, 40, 780, 370
    vmin, vmax = min(hist), max(hist)
    span = vmax - vmin + 1
    cmax = max(hist.values())
    bar_w = (x1 - x0) / span
    body = []
    for v in range(vmin, vmax + 1):
        c = hist.get(v, 0)
        if c == 0:
            continue
        h = (y1 - y0) * c / cmax
        left = x0 + (v - vmin) * bar_w
        body.append(
            f'<rect x="{left:.2f}" y="{y1 - h:.2f}" width="{bar_w:.2f}" '
            f'height="{h:.2f}" fill="steelblue"/>'
        )
    _axis_ticks(body, x0, y0, x1, y1, vmin, vmax, cmax, lambda v: x0 + (v - vmin + 0.5) * bar_w)
    return _svg_doc(body, title, xlabel, "count")


def emit_svg_scatter(rows, title: str, xlabel: str, ylabel: str) -> bytes:
    """Self-contained SVG scatter plot of (x, y) integer pairs."""
    if not rows:
        raise ValueError("cannot render an empty scatter")
    x0, y0, x1, y1 = 64, 40, 780, 370
    xs = [r[0] for r in rows]
    ys = [r[1] for r in rows]
    vmin, vmax = min(xs), max(xs)
    cmax = max(ys)
    xspan = max(vmax - vmin, 1)

    def to_x(v):
        return x0 + (x1 - x0) * (v - vmin) / xspan

    body = []
    for x, y in rows:
        py = y1 - (y1 - y0) * y / cmax
        body.append(f'<circle cx="{to_x(x):.2f}" cy="{py:.2f}" r="2.5" fill="steelblue"/>')
    _axis_ticks(body, x0, y0, x1, y1, vmin, vmax, cmax, to_x)
    return _svg_doc(body, title, xlabel, ylabel)


def _write(data: bytes, destination: str | None) -> None:
    if destination is None:
        buffer = getattr(sys.stdout, "buffer", None)
        if buffer is not None:
            buffer.write(data)
            buffer.flush()
        else:
            sys.stdout.write(data.decode("utf-8"))
    else:
        Path(destination).write_bytes(data)


# ---------------------------------------------------------------------------
# subcommand bodies (plain parameters so `repro` can reuse them)


def _res_legendre(p: int) -> CommandResult:
    seq = legendre_sequence(p)
    return CommandResult(
        inputs={"command": "legendre", "p": p},
        header=["a", "symbol"],
        rows=[(a, s) for a, s in enumerate(seq.symbols, start=1)],
        footers={"n_plus": sum(1 for s in seq if s == 1),
                 "n_minus": sum(1 for s in seq if s == -1)},
    )


def _res_primroots(p: int) -> CommandResult:
    roots = primitive_roots(p)
    return CommandResult(
        inputs={"command": "primroots", "p": p},
        header=["g"],
        rows=[(g,) for g in roots],
        footers={"count": len(roots), "euler_phi_p_minus_1": euler_phi(p - 1)},
    )


def _res_cycle(p: int, g: int) -> CommandResult:
    cycle = generator_cycle(g, p)
    return CommandResult(
        inputs={"command": "cycle", "p": p, "g": g},
        header=["index", "value"],
        rows=list(enumerate(cycle.states)),
        footers={"period": cycle.period},
    )


def _res_squares(p: int, g: int | None) -> CommandResult:
    if g is None:
        values = sorted(squares_set(p))
        return CommandResult(
            inputs={"command": "squares", "p": p, "g": None},
            header=["value"],
            rows=[(v,) for v in values],
            footers={"count": len(values)},
        )
    cycle = square_cycle(g, p)
    return CommandResult(
        inputs={"command": "squares", "p": p, "g": g},
        header=["index", "value"],
        rows=list(enumerate(cycle.states)),
        footers={"count": cycle.period},
    )


def _res_period(m: int, a: int) -> CommandResult:
    orbit = lcg_orbit(a, m)
    return CommandResult(
        inputs={"command": "period", "m": m, "a": a},
        header=["index", "value"],
        rows=list(enumerate(orbit.states)),
        footers={"period": orbit.period},
    )


def _res_inversions(p: int) -> CommandResult:
    summary = inversion_summary(p)
    return CommandResult(
        inputs={"command": "inversions", "p": p},
        header=["g", "inversions"],
        rows=list(summary.per_root),
        footers={
            "sample_mean": summary.sample_mean,
            "sample_sd": summary.sample_sd,
            "theory_mean": summary.theory_mean,
            "theory_sd": summary.theory_sd,
        },
    )


def _sim_footers(report: SimReport) -> dict:
    cfg = report.config
    return {
        "sample_mean": report.sample_mean,
        "sample_sd": report.sample_sd,
        "iterations": cfg.iterations,
        "seed": cfg.seed,
        "streams": cfg.streams,
        "rng_algorithm": cfg.rng_algorithm,
    }


def _res_sim_inversions(p: int, config: SimConfig, workers: int) -> CommandResult:
    report = simulate_inversions(p, config, workers=workers)
    mean, var = inversion_null_moments(p)
    footers = _sim_footers(report)
    footers["theory_mean"] = mean
    footers["theory_sd"] = float(var) ** 0.5
    return CommandResult(
        inputs={"command": "sim-inversions", "p": p, "iterations": config.iterations,
                "seed": config.seed, "workers": workers},
        header=["inversions", "count"],
        rows=list(report.histogram.items()),
        footers=footers,
        report=report,
        title=f"random fixed-cycle inversions: p={p}, iterations={config.iterations}, seed={config.seed}",
        xlabel="inversions",
    )


def _res_runs(p: int) -> CommandResult:
    seq = legendre_sequence(p)
    runs = count_runs(seq)
    return CommandResult(
        inputs={"command": "runs", "p": p},
        header=["p", "n_plus", "n_minus", "runs", "expected_runs"],
        rows=[(p, (p - 1) // 2, (p - 1) // 2, runs, (p + 1) // 2)],
    )


def _res_pairs(p: int) -> CommandResult:
    observed = pair_counts(legendre_sequence(p))
    predicted = aladov_predicted(p)
    return CommandResult(
        inputs={"command": "pairs", "p": p},
        header=["kind", "npp", "npm", "nmp", "nmm"],
        rows=[("observed",) + observed.as_tuple(),
              ("predicted",) + predicted.as_tuple()],
        footers={"total": observed.total},
    )


def _res_sim_runs(p: int, config: SimConfig, workers: int) -> CommandResult:
    report = simulate_runs(p, config, workers=workers)
    half = (p - 1) // 2
    mean, var = runs_null_moments(half, half)
    footers = _sim_footers(report)
    footers["null_mean"] = mean
    footers["null_sd"] = float(var) ** 0.5
    return CommandResult(
        inputs={"command": "sim-runs", "p": p, "iterations": config.iterations,
                "seed": config.seed, "workers": workers},
        header=["runs", "count"],
        rows=list(report.histogram.items()),
        footers=footers,
        report=report,
        title=f"runs of shuffled balanced sequences: p={p}, iterations={config.iterations}, seed={config.seed}",
        xlabel="runs",
    )


def _res_scan(count: int | None, p_max: int | None) -> CommandResult:
    scan = scan_runs(count=count, p_max=p_max)
    return CommandResult(
        inputs={"command": "scan", "count": count, "p_max": p_max},
        header=["p", "runs"],
        rows=list(scan.rows),
        footers={"primes": len(scan)},
        scatter=True,
        title=f"Legendre-sequence runs for {len(scan)} odd primes",
        xlabel="p",
    )


def _res_dlog(p: int, g: int, a: int) -> CommandResult:
    return CommandResult(
        inputs={"command": "dlog", "p": p, "g": g, "a": a},
        header=["p", "g", "a", "discrete_log"],
        rows=[(p, g, a, discrete_log(g, a, p))],
    )


def _res_sqrt(p: int, a: int, g: int | None) -> CommandResult:
    if g is None:
        g = smallest_primitive_root(p)
    root = sqrt_mod(a, p, g)
    return CommandResult(
        inputs={"command": "sqrt", "p": p, "a": a, "g": g},
        header=["p", "a", "g", "root", "symbol"],
        rows=[(p, a, g, "" if root is None else root, int(legendre_euler(a, p)))],
    )


# ---------------------------------------------------------------------------
# repro: regenerate the full set of canonical artifacts as named CSV/SVG files


def _res_repro(out_dir: str, iterations: int, seed: int, precision: int) -> CommandResult:
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    config = SimConfig(seed=seed, iterations=iterations)
    artifacts: list[tuple[str, CommandResult]] = [
        ("orbit_m8191_a1904.csv", _res_period(8191, 1904)),
        ("primitive_roots_p29.csv", _res_primroots(29)),
        ("inversion_counts_p29.csv", _res_inversions(29)),
        ("inversion_hist_p29.csv", _res_sim_inversions(29, config, workers=1)),
        ("runs_hist_p97.csv", _res_sim_runs(97, config, workers=1)),
        ("legendre_small_primes.csv", _res_small_prime_table()),
        ("runs_scan_200.csv", _res_scan(DEFAULT_SCAN_COUNT, None)),
    ]
    manifest = []
    for name, result in artifacts:
        path = directory / name
        path.write_bytes(emit_csv(result.rows, result.header, result.footers, precision))
        manifest.append((result.inputs["command"], str(path), len(result.rows)))
        if result.report is not None:
            svg_path = path.with_suffix(".svg")
            svg_path.write_bytes(emit_svg_histogram(result.report, result.title, result.xlabel))
            manifest.append((result.inputs["command"] + "-svg", str(svg_path), len(result.report.histogram)))
    return CommandResult(
        inputs={"command": "repro", "out_dir": out_dir, "iterations": iterations, "seed": seed},
        header=["artifact", "path", "rows"],
        rows=manifest,
    )


def _res_small_prime_table() -> CommandResult:
    rows = []
    for p in (3, 5, 7, 11, 13, 17, 19):
        seq = legendre_sequence(p)
        rows.append((p, count_runs(seq), " ".join(str(s) for s in seq.symbols)))
    return CommandResult(
        inputs={"command": "legendre-table"},
        header=["p", "runs", "symbols"],
        rows=rows,
    )


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _add_output_flags(sub):
    sub.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    sub.add_argument("--out", default=None, help="write to this file instead of stdout")
    sub.add_argument("--precision", type=int, default=None,
                     help=f"decimal digits for non-integer numbers (default {DEFAULT_PRECISION})")
    sub.add_argument("--config", default=None,
                     help="key=value file with defaults for iterations/seed/workers/scan/precision")


def _add_sim_flags(sub):
    sub.add_argument("--iterations", type=int, default=None,
                     help=f"Monte Carlo draws (default {DEFAULT_ITERATIONS})")
    sub.add_argument("--seed", type=int, default=None,
                     help=f"64-bit seed (default {DEFAULT_SEED})")
    sub.add_argument("--workers", type=int, default=None,
                     help="stream count and thread pool size (default 1)")


def build_parser() -> _Parser:
    parser = _Parser(prog="modsquares", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name, help_text, **kwargs):
        s = subs.add_parser(name, help=help_text, **kwargs)
        _add_output_flags(s)
        return s

    s = sub("legendre", "Legendre symbols (a/p) for a = 1..p-1")
    s.add_argument("--p", type=int, required=True)

    s = sub("primroots", "primitive roots of p, ascending")
    s.add_argument("--p", type=int, required=True)

    s = sub("cycle", "the full cycle (1, g, g^2, ...) mod p")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--g", type=int, required=True)

    s = sub("squares", "nonzero squares mod p (sorted, or in g^2-walk order)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--g", type=int, default=None)

    s = sub("period", "orbit of 1 under x -> a*x mod m, with its period")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--a", type=int, required=True)

    s = sub("inversions", "inversion counts of every primitive-root cycle of p")
    s.add_argument("--p", type=int, required=True)

    s = sub("sim-inversions", "Monte Carlo inversion counts of random fixed cycles")
    s.add_argument("--p", type=int, required=True)
    _add_sim_flags(s)

    s = sub("runs", "runs of the Legendre sequence of p (or --scan N primes)")
    group = s.add_mutually_exclusive_group(required=True)
    group.add_argument("--p", type=int, default=None)
    group.add_argument("--scan", type=int, default=None, metavar="COUNT")

    s = sub("pairs", "observed vs predicted overlapping-pair counts for p")
    s.add_argument("--p", type=int, required=True)

    s = sub("sim-runs", "Monte Carlo run counts of shuffled balanced sequences")
    s.add_argument("--p", type=int, required=True)
    _add_sim_flags(s)

    s = sub("scan", "runs of the Legendre sequence over many primes")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--count", type=int, default=None, help="first COUNT odd primes")
    group.add_argument("--p-max", type=int, default=None, help="all odd primes <= P_MAX")

    s = sub("dlog", "discrete logarithm: the l with g^l = a (mod p)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--g", type=int, required=True)
    s.add_argument("--a", type=int, required=True)

    s = sub("sqrt", "modular square root of a (mod p), via discrete log")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--g", type=int, default=None,
                   help="primitive root to use (default: smallest)")

    s = sub("repro", "write every canonical analysis to named CSV/SVG files")
    s.add_argument("--out-dir", default="repro-out")
    _add_sim_flags(s)

    return parser


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    allowed = {"iterations", "seed", "workers", "scan", "precision"}
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in allowed:
            raise UsageError(f"{path}:{lineno}: expected 'key=value' with key in {sorted(allowed)}")
        try:
            values[key] = int(value.strip())
        except ValueError:
            raise UsageError(f"{path}:{lineno}: value for {key} must be an integer") from None
    return values


def _resolve(args) -> None:
    """Fill unset flags from the config file, then from built-in defaults."""
    cfg = _load_config(getattr(args, "config", None))

    def pick(name, default):
        if getattr(args, name, None) is None:
            setattr(args, name, cfg.get(name, default))

    pick("precision", DEFAULT_PRECISION)
    if args.precision < 0:
        raise UsageError("--precision must be >= 0")
    if hasattr(args, "iterations"):
        pick("iterations", DEFAULT_ITERATIONS)
        pick("seed", DEFAULT_SEED)
        pick("workers", 1)
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
    if args.command == "scan" and args.count is None and args.p_max is None:
        args.count = cfg.get("scan", DEFAULT_SCAN_COUNT)


def _dispatch(args) -> CommandResult:
    if args.command == "legendre":
        return _res_legendre(args.p)
    if args.command == "primroots":
        return _res_primroots(args.p)
    if args.command == "cycle":
        return _res_cycle(args.p, args.g)
    if args.command == "squares":
        return _res_squares(args.p, args.g)
    if args.command == "period":
        return _res_period(args.m, args.a)
    if args.command == "inversions":
        return _res_inversions(args.p)
    if args.command == "sim-inversions":
        config = SimConfig(seed=args.seed, iterations=args.iterations, streams=args.workers)
        return _res_sim_inversions(args.p, config, args.workers)
    if args.command == "runs":
        if args.scan is not None:
            return _res_scan(args.scan, None)
        return _res_runs(args.p)
    if args.command == "pairs":
        return _res_pairs(args.p)
    if args.command == "sim-runs":
        config = SimConfig(seed=args.seed, iterations=args.iterations, streams=args.workers)
        return _res_sim_runs(args.p, config, args.workers)
    if args.command == "scan":
        return _res_scan(args.count, args.p_max)
    if args.command == "dlog":
        return _res_dlog(args.p, args.g, args.a)
    if args.command == "sqrt":
        return _res_sqrt(args.p, args.a, args.g)
    if args.command == "repro":
        return _res_repro(args.out_dir, args.iterations, args.seed, args.precision)
    raise RuntimeError(f"unhandled command {args.command!r}")


def _render(result: CommandResult, fmt: str, precision: int) -> bytes:
    if fmt == "csv":
        return emit_csv(result.rows, result.header, result.footers, precision)
    if fmt == "json":
        return emit_json(result, precision)
    if fmt == "svg":
        if result.report is not None:
            return emit_svg_histogram(result.report, result.title, result.xlabel)
        if result.scatter:
            return emit_svg_scatter(result.rows, result.title, result.xlabel, "runs")
        raise UsageError(
            f"--format svg is only valid for histogram or scatter commands, "
            f"not {result.inputs.get('command')!r}"
        )
    raise UsageError(f"unknown format {fmt!r}")


def main(argv: list[str] | None = None) -> int:
    """Parse argv, run one subcommand, write its output; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _resolve(args)
        spec = OutputSpec(args.format, args.out)
        result = _dispatch(args)
        data = _render(result, spec.format, args.precision)
        _write(data, spec.destination)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitStatus.USAGE)
    except SystemExit as exc:  # --help / --version
        code = exc.code
        return int(code) if isinstance(code, int) else 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return int(ExitStatus.DOMAIN)
    except (RuntimeError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return int(ExitStatus.INTERNAL)
    return int(ExitStatus.OK)


def run_command(argv: list[str]) -> int:
    """Programmatic entry point: like `main`, but argv is required."""
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
