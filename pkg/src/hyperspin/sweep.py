"""Grid evaluation of the measures and deterministic serialization.

A sweep walks the Cartesian grid (channel, phi, mu, tau, time) in
lexicographic order, evolving the production state through the dephasing
channel at every point and recording one flat row per point.  Evaluation
may be chunked over a thread pool; chunks are gathered back in grid order,
so the output is byte-identical for any worker count.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Any, Iterable, Sequence

from ._version import __version__
from .channel import ChannelConfig, dephase, memory_kernel
from .errors import DomainError, HyperspinError, UnknownPresetError
from .measures import MeasureRecord, measure_all
from .production import CHANNELS, channel_params, density_matrix

KERNEL_VARIANT = "telegraph-paired-cos-sin/cosh-sinh-u-over-v"

CSV_HEADER = (
    "channel,phi,mu,tau,regime,time,kernel,eta,s_ab,s_ba,delta_s,"
    "steering_class,concurrence,eof,gqd,coherence_l1"
)

MEASURE_NAMES = ("steering", "eof", "gqd", "coherence_l1")


def format_float(x: float) -> str:
    """Render a float with 12 significant digits, locale-independent."""
    return f"{float(x):.12g}"


@dataclass(frozen=True)
class TimeGrid:
    """Arithmetic time progression [start, stop] with the given step."""

    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.step <= 0.0:
            raise DomainError(f"time step must be > 0, got {self.step}")
        if self.stop < self.start:
            raise DomainError("time stop must be >= start")
        if self.start < 0.0:
            raise DomainError("time start must be >= 0")

    def __len__(self) -> int:
        return int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1

    def values(self) -> list[float]:
        return [self.start + k * self.step for k in range(len(self))]


@dataclass(frozen=True)
class SweepGrid:
    """One channel swept over lists of phi, mu, tau and a time progression."""

    channel: str
    phi: tuple[float, ...]
    mu: tuple[float, ...]
    tau: tuple[float, ...]
    time: TimeGrid

    def __post_init__(self) -> None:
        channel_params(self.channel)
        for name, values in (("phi", self.phi), ("mu", self.mu), ("tau", self.tau)):
            if len(values) == 0:
                raise DomainError(f"{name} list must be non-empty")
        for p in self.phi:
            if not -1e-12 <= p <= math.pi + 1e-12:
                raise DomainError(f"phi value {p} outside [0, pi]")
        for m in self.mu:
            if not 0.0 <= m <= 1.0:
                raise DomainError(f"mu value {m} outside [0, 1]")
        for t in self.tau:
            if t <= 0.0:
                raise DomainError(f"tau value {t} must be > 0")

    def __len__(self) -> int:
        return len(self.phi) * len(self.mu) * len(self.tau) * len(self.time)

    def spec(self) -> dict[str, Any]:
        return {
            "channel": self.channel,
            "phi": list(self.phi),
            "mu": list(self.mu),
            "tau": list(self.tau),
            "time": {"start": self.time.start, "stop": self.time.stop, "step": self.time.step},
        }


@dataclass(frozen=True)
class SweepRow:
    """One grid point: its coordinates plus the full measure record."""

    channel: str
    phi: float
    mu: float
    tau: float
    regime: str
    time: float
    record: MeasureRecord

    def csv_line(self) -> str:
        r = self.record
        ff = format_float
        return ",".join(
            (
                self.channel,
                ff(self.phi),
                ff(self.mu),
                ff(self.tau),
                self.regime,
                ff(self.time),
                ff(r.kernel),
                ff(r.eta),
                ff(r.steering.s_ab),
                ff(r.steering.s_ba),
                ff(r.steering.delta_s),
                r.steering.steering_class.value,
                ff(r.concurrence),
                ff(r.eof),
                ff(r.gqd),
                ff(r.coherence_l1),
            )
        )

    def as_dict(self) -> dict[str, Any]:
        def f12(x: float) -> float:
            return float(format_float(x))

        r = self.record
        return {
            "channel": self.channel,
            "phi": f12(self.phi),
            "mu": f12(self.mu),
            "tau": f12(self.tau),
            "regime": self.regime,
            "time": f12(self.time),
            "kernel": f12(r.kernel),
            "eta": f12(r.eta),
            "s_ab": f12(r.steering.s_ab),
            "s_ba": f12(r.steering.s_ba),
            "delta_s": f12(r.steering.delta_s),
            "steering_class": r.steering.steering_class.value,
            "concurrence": f12(r.concurrence),
            "eof": f12(r.eof),
            "gqd": f12(r.gqd),
            "coherence_l1": f12(r.coherence_l1),
        }


@dataclass
class SweepResult:
    rows: list[SweepRow]
    metadata: dict[str, Any]


@dataclass(frozen=True)
class FigurePreset:
    """Named grid reproducing one figure panel's data."""

    preset_id: str
    grid: SweepGrid
    measures: tuple[str, ...]


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = min(8, os.cpu_count() or 1)
    cap = os.environ.get("HYPERSPIN_THREADS")
    if cap:
        try:
            workers = min(workers, int(cap))
        except ValueError:
            raise DomainError(f"HYPERSPIN_THREADS must be an integer, got {cap!r}")
    return max(1, int(workers))


def run_sweep(
    grid: SweepGrid,
    measures: Sequence[str] | None = None,
    workers: int | None = None,
) -> SweepResult:
    """Evaluate one MeasureRecord per grid point, in lexicographic grid order.

    ``measures`` is a selector recorded in the metadata; every row always
    carries all measure fields (they share almost all of their arithmetic).
    Evaluation is chunked per (phi, mu, tau) series over a thread pool whose
    size never affects values or ordering.
    """
    selected = tuple(measures) if measures is not None else MEASURE_NAMES
    for name in selected:
        if name not in MEASURE_NAMES:
            raise DomainError(f"unknown measure {name!r}; known: {MEASURE_NAMES}")
    ch = channel_params(grid.channel)
    states = [density_matrix(ch, p) for p in grid.phi]
    times = grid.time.values()

    series = [
        (i_phi, mu, tau)
        for i_phi in range(len(grid.phi))
        for mu in grid.mu
        for tau in grid.tau
    ]

    def eval_series(task: tuple[int, float, float]) -> list[SweepRow]:
        i_phi, mu, tau = task
        rho0 = states[i_phi]
        cfg = ChannelConfig(mu=mu, tau=tau)
        regime = cfg.regime.value
        rows = []
        for t in times:
            try:
                k = memory_kernel(t, cfg).k
                eta = k * k + (1.0 - k * k) * mu
                record = measure_all(dephase(rho0, eta), eta, k)
            except HyperspinError as exc:
                raise type(exc)(
                    f"{exc} [at channel={grid.channel}, phi={grid.phi[i_phi]!r}, "
                    f"mu={mu!r}, tau={tau!r}, time={t!r}]"
                ) from exc
            rows.append(
                SweepRow(grid.channel, grid.phi[i_phi], mu, tau, regime, t, record)
            )
        return rows

    n_workers = _resolve_workers(workers)
    if n_workers == 1 or len(series) == 1:
        chunks: Iterable[list[SweepRow]] = map(eval_series, series)
    else:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            chunks = list(pool.map(eval_series, series))

    rows = [row for chunk in chunks for row in chunk]
    spec = grid.spec()
    grid_hash = hashlib.sha256(
        json.dumps(spec, sort_keys=True).encode("utf-8")
    ).hexdigest()[:12]
    metadata = {
        "preset": None,
        "grid_hash": grid_hash,
        "kernel_variant": KERNEL_VARIANT,
        "version": __version__,
        "measures": list(selected),
        "grid": spec,
    }
    return SweepResult(rows, metadata)


def run_preset(preset_id: str, workers: int | None = None) -> SweepResult:
    """Run a figure preset and stamp its id into the metadata."""
    preset = figure_preset(preset_id)
    result = run_sweep(preset.grid, preset.measures, workers)
    result.metadata["preset"] = preset.preset_id
    return result


def emit(result: SweepResult, fmt: str, sink: str | Path | IO[str]) -> int:
    """Serialize a sweep result as CSV or JSON; returns bytes written.

    CSV: fixed header, one line per row, '\\n' newlines, floats with 12
    significant digits.  JSON: object with ``metadata`` and a ``records``
    array of flat objects carrying the same field names as the CSV columns.
    """
    if fmt == "csv":
        lines = [CSV_HEADER]
        lines.extend(row.csv_line() for row in result.rows)
        payload = "\n".join(lines) + "\n"
    elif fmt == "json":
        obj = {
            "metadata": result.metadata,
            "records": [row.as_dict() for row in result.rows],
        }
        payload = json.dumps(obj, indent=1) + "\n"
    else:
        raise DomainError(f"format must be 'csv' or 'json', got {fmt!r}")

    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8", newline="") as fh:
            fh.write(payload)
    else:
        sink.write(payload)
    return len(payload.encode("utf-8"))


_PHI_FULL = tuple(k * math.pi / 180.0 for k in range(181))
_MU_FULL = tuple(k / 100.0 for k in range(101))
_PHI_COMPARE = (math.pi / 6.0, math.pi / 4.0, math.pi / 3.0, math.pi / 2.0)
_HALF_PI = math.pi / 2.0
_T_MARKOV = TimeGrid(0.0, 5.0, 0.01)
_T_NONMARKOV = TimeGrid(0.0, 50.0, 0.01)


def _grid(
    phi: tuple[float, ...], mu: tuple[float, ...], tau: float, time: TimeGrid
) -> SweepGrid:
    return SweepGrid("lambda", phi, mu, (tau,), time)


def _surface_presets(prefix: str, measures: tuple[str, ...]) -> dict[str, FigurePreset]:
    """The common panel pair: (a) phi sweep at mu=0.8, (b) mu sweep at phi=pi/2."""
    out = {}
    for digit, tau, tgrid in (("1", 0.1, _T_MARKOV), ("2", 5.0, _T_NONMARKOV)):
        pid_a = f"{prefix}{digit}a"
        pid_b = f"{prefix}{digit}b"
        out[pid_a] = FigurePreset(pid_a, _grid(_PHI_FULL, (0.8,), tau, tgrid), measures)
        out[pid_b] = FigurePreset(pid_b, _grid((_HALF_PI,), _MU_FULL, tau, tgrid), measures)
    return out


def _build_presets() -> dict[str, FigurePreset]:
    presets: dict[str, FigurePreset] = {}
    presets.update(_surface_presets("h", ("steering",)))
    presets.update(_surface_presets("e", ("eof",)))
    presets.update(_surface_presets("d", ("gqd",)))
    presets.update(_surface_presets("c", ("coherence_l1",)))
    # Direction-comparison panels: a handful of phi values per panel.
    for digit, tau, tgrid in (("1", 0.1, _T_MARKOV), ("2", 5.0, _T_NONMARKOV)):
        for suffix, mu in (("a", 0.6), ("b", 0.8)):
            pid = f"sc{digit}{suffix}"
            presets[pid] = FigurePreset(
                pid, _grid(_PHI_COMPARE, (mu,), tau, tgrid), ("steering",)
            )
    # Four-measure comparison at phi = pi/2 for a ladder of mu values.
    for prefix, tau, tgrid in (("m", 0.1, _T_MARKOV), ("nm", 5.0, _T_NONMARKOV)):
        for suffix, mu in (("0", 0.0), ("06", 0.6), ("08", 0.8), ("1", 1.0)):
            pid = f"{prefix}{suffix}"
            presets[pid] = FigurePreset(
                pid, _grid((_HALF_PI,), (mu,), tau, tgrid), MEASURE_NAMES
            )
    return presets


PRESETS: dict[str, FigurePreset] = _build_presets()


def figure_preset(preset_id: str) -> FigurePreset:
    """Look up a registered figure preset.

    Raises
    ------
    UnknownPresetError
        For ids outside the registry.
    """
    try:
        return PRESETS[preset_id]
    except KeyError:
        raise UnknownPresetError(
            f"unknown preset {preset_id!r}; known: {sorted(PRESETS)}"
        ) from None
