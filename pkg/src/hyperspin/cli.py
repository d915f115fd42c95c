"""Command-line front end.

Subcommands: ``params`` (channel constants), ``measure`` (one grid point),
``sweep`` (figure presets or explicit grids, CSV/JSON output), ``check``
(embedded invariant suite).  Exit codes: 0 ok, 1 runtime or numeric
failure, 2 usage, 3 self-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from ._version import __version__
from .channel import ChannelConfig, dephase, memory_kernel
from .errors import (
    GridSyntaxError,
    HyperspinError,
    UnknownChannelError,
    UnknownPresetError,
)
from .measures import measure_all
from .production import channel_params, density_matrix
from .selfcheck import run_checks
from .sweep import (
    CSV_HEADER,
    SweepGrid,
    SweepRow,
    TimeGrid,
    emit,
    run_preset,
    run_sweep,
)

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2
EXIT_CHECK = 3

GRID_AXES = ("time", "phi", "mu", "tau")


def _add_phi_arguments(parser: argparse.ArgumentParser, required: bool) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--phi", type=float, help="production angle in radians")
    group.add_argument(
        "--phi-deg", type=float, help="production angle in degrees (converted at parse)"
    )


def _resolve_phi(args: argparse.Namespace) -> float | None:
    if args.phi_deg is not None:
        return math.radians(args.phi_deg)
    return args.phi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspin",
        description="Hyperon-pair spin states under correlated dephasing: "
        "steering, entanglement, discord and coherence.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"hyperspin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="print the constants of one channel")
    p_params.add_argument("--channel", required=True)

    p_measure = sub.add_parser("measure", help="evaluate all measures at one point")
    p_measure.add_argument("--channel", required=True)
    _add_phi_arguments(p_measure, required=True)
    p_measure.add_argument("--mu", type=float, required=True)
    p_measure.add_argument("--tau", type=float, required=True)
    p_measure.add_argument("--time", type=float, required=True)
    p_measure.add_argument("--format", choices=("json", "csv"), default="json")
    p_measure.add_argument("--out", help="output path (default stdout)")

    p_sweep = sub.add_parser("sweep", help="evaluate a parameter grid")
    p_sweep.add_argument("--figure", help="figure preset id")
    p_sweep.add_argument(
        "--grid",
        action="append",
        default=[],
        metavar="AXIS=START:STOP:STEP",
        help="axis specification; repeatable (axes: time, phi, mu, tau)",
    )
    p_sweep.add_argument("--channel")
    _add_phi_arguments(p_sweep, required=False)
    p_sweep.add_argument("--mu", type=float)
    p_sweep.add_argument("--tau", type=float)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", help="output path (default stdout)")
    p_sweep.add_argument("--workers", type=int, help="worker threads (values unchanged)")

    sub.add_parser("check", help="run the embedded invariant suite")
    return parser


def _parse_axis(spec: str) -> tuple[str, TimeGrid]:
    name, sep, rest = spec.partition("=")
    if not sep or name not in GRID_AXES:
        raise GridSyntaxError(
            f"bad grid spec {spec!r}; expected AXIS=START:STOP:STEP with AXIS in {GRID_AXES}"
        )
    parts = rest.split(":")
    if len(parts) != 3:
        raise GridSyntaxError(f"bad grid range {rest!r}; expected START:STOP:STEP")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise GridSyntaxError(f"non-numeric grid range {rest!r}") from None
    return name, TimeGrid(start, stop, step)


def _sweep_grid_from_args(args: argparse.Namespace) -> SweepGrid:
    axes: dict[str, TimeGrid] = {}
    for spec in args.grid:
        name, rng = _parse_axis(spec)
        if name in axes:
            raise GridSyntaxError(f"axis {name!r} specified twice")
        axes[name] = rng
    if "time" not in axes:
        raise GridSyntaxError("sweep needs a time axis: --grid time=START:STOP:STEP")
    if not args.channel:
        raise GridSyntaxError("sweep needs --channel")

    phi_scalar = _resolve_phi(args)
    scalars = {"phi": phi_scalar, "mu": args.mu, "tau": args.tau}
    values: dict[str, tuple[float, ...]] = {}
    for name in ("phi", "mu", "tau"):
        if name in axes:
            if scalars[name] is not None:
                raise GridSyntaxError(f"{name} given both as scalar and as grid axis")
            values[name] = tuple(axes[name].values())
        elif scalars[name] is not None:
            values[name] = (float(scalars[name]),)
        else:
            raise GridSyntaxError(f"missing {name}: pass --{name} or --grid {name}=...")
    return SweepGrid(args.channel, values["phi"], values["mu"], values["tau"], axes["time"])


def _single_row(args: argparse.Namespace) -> SweepRow:
    ch = channel_params(args.channel)
    phi = _resolve_phi(args)
    rho0 = density_matrix(ch, phi)
    cfg = ChannelConfig(mu=args.mu, tau=args.tau)
    k = memory_kernel(args.time, cfg).k
    eta = k * k + (1.0 - k * k) * cfg.mu
    record = measure_all(dephase(rho0, eta), eta, k)
    return SweepRow(ch.name, phi, cfg.mu, cfg.tau, cfg.regime.value, args.time, record)


def _write_text(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_params(args: argparse.Namespace) -> int:
    ch = channel_params(args.channel)
    print(
        json.dumps(
            {
                "channel": ch.name,
                "upsilon_psi": ch.upsilon_psi,
                "delta_theta": ch.delta_theta,
            }
        )
    )
    return EXIT_OK


def _cmd_measure(args: argparse.Namespace) -> int:
    row = _single_row(args)
    if args.format == "json":
        payload = json.dumps(row.as_dict()) + "\n"
    else:
        payload = CSV_HEADER + "\n" + row.csv_line() + "\n"
    _write_text(payload, args.out)
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    explicit = (args.grid, args.channel, args.phi, args.phi_deg, args.mu, args.tau)
    if args.figure and any(x not in (None, []) for x in explicit):
        raise GridSyntaxError("--figure and explicit grid flags are mutually exclusive")
    if args.figure:
        result = run_preset(args.figure, workers=args.workers)
    else:
        result = run_sweep(_sweep_grid_from_args(args), workers=args.workers)
    sink = args.out if args.out else sys.stdout
    nbytes = emit(result, args.format, sink)
    target = args.out if args.out else "<stdout>"
    print(
        f"wrote {len(result.rows)} records ({nbytes} bytes, {args.format}) to {target}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_check(_: argparse.Namespace) -> int:
    suites = run_checks(corrupt=os.environ.get("HYPERSPIN_CHECK_CORRUPT"))
    all_ok = True
    for suite in suites:
        status = "ok" if suite.ok else "FAILED"
        print(f"{suite.name}: passed {suite.passed}, failed {suite.failed} [{status}]")
        for msg in suite.failures:
            print(f"  - {msg}")
        all_ok = all_ok and suite.ok
    total_passed = sum(s.passed for s in suites)
    total_failed = sum(s.failed for s in suites)
    print(f"self-check: {total_passed} passed, {total_failed} failed")
    return EXIT_OK if all_ok else EXIT_CHECK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "params": _cmd_params,
        "measure": _cmd_measure,
        "sweep": _cmd_sweep,
        "check": _cmd_check,
    }
    try:
        return handlers[args.command](args)
    except (UnknownChannelError, UnknownPresetError, GridSyntaxError) as exc:
        print(f"hyperspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperspinError as exc:
        print(f"hyperspin: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"hyperspin: i/o error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
