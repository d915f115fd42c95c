import io
import json
import math

import pytest

from hyperspin import (
    DomainError,
    PRESETS,
    SweepGrid,
    SweepResult,
    TimeGrid,
    UnknownPresetError,
    channel_params,
    decoherence_factor,
    density_matrix,
    dephase,
    emit,
    figure_preset,
    measure_all,
    memory_kernel,
    run_preset,
    run_sweep,
)
from hyperspin.channel import ChannelConfig
from hyperspin.sweep import CSV_HEADER, format_float

HALF_PI = math.pi / 2.0


def small_grid(**overrides):
    base = dict(
        channel="lambda",
        phi=(0.0, HALF_PI),
        mu=(0.0, 0.8),
        tau=(0.1,),
        time=TimeGrid(0.0, 1.0, 0.5),
    )
    base.update(overrides)
    return SweepGrid(**base)


def test_time_grid_inclusive_endpoints():
    assert TimeGrid(0.0, 1.0, 0.5).values() == [0.0, 0.5, 1.0]
    assert len(TimeGrid(0.0, 5.0, 0.01)) == 501
    assert len(TimeGrid(0.0, 50.0, 0.01)) == 5001
    with pytest.raises(DomainError):
        TimeGrid(0.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        TimeGrid(1.0, 0.0, 0.5)


def test_grid_validation():
    with pytest.raises(DomainError):
        small_grid(phi=())
    with pytest.raises(DomainError):
        small_grid(mu=(1.4,))
    with pytest.raises(DomainError):
        small_grid(tau=(0.0,))


def test_run_sweep_ordering_and_count():
    grid = small_grid()
    result = run_sweep(grid)
    assert len(result.rows) == len(grid) == 2 * 2 * 1 * 3
    keys = [(r.phi, r.mu, r.tau, r.time) for r in result.rows]
    assert keys == sorted(keys)


def test_run_sweep_single_point_matches_measure_all():
    grid = SweepGrid("lambda", (HALF_PI,), (0.8,), (0.1,), TimeGrid(0.0, 0.0, 1.0))
    row = run_sweep(grid).rows[0]
    cfg = ChannelConfig(mu=0.8, tau=0.1)
    k = memory_kernel(0.0, cfg).k
    eta = decoherence_factor(0.0, cfg)
    want = measure_all(dephase(density_matrix(channel_params("lambda"), HALF_PI), eta), eta, k)
    assert row.record == want
    assert row.regime == "markovian"


def test_run_sweep_frozen_channel_rows_identical():
    grid = SweepGrid("lambda", (HALF_PI,), (1.0,), (0.1,), TimeGrid(0.0, 1.0, 0.01))
    rows = run_sweep(grid).rows
    assert len(rows) == 101
    first = rows[0].record
    for row in rows[1:]:
        assert row.record.concurrence == first.concurrence
        assert row.record.steering == first.steering
        assert row.record.gqd == first.gqd
        assert row.record.coherence_l1 == first.coherence_l1


def test_run_sweep_phi_boundary_zero_columns():
    grid = SweepGrid("lambda", (0.0,), (0.0, 0.5), (0.1, 5.0), TimeGrid(0.0, 2.0, 0.5))
    for row in run_sweep(grid).rows:
        assert row.record.steering.s_ab == 0.0
        assert row.record.concurrence == 0.0
        assert row.record.eof == 0.0
        assert row.record.gqd == 0.0


def test_run_sweep_rejects_unknown_measure():
    with pytest.raises(DomainError):
        run_sweep(small_grid(), measures=("entropy",))


def test_parallel_equivalence():
    grid = small_grid(phi=(0.3, 1.1, 2.2), mu=(0.0, 0.4, 0.9), time=TimeGrid(0.0, 2.0, 0.1))
    serial = run_sweep(grid, workers=1)
    threaded = run_sweep(grid, workers=4)
    assert serial.rows == threaded.rows
    sink_a, sink_b = io.StringIO(), io.StringIO()
    emit(serial, "csv", sink_a)
    emit(threaded, "csv", sink_b)
    assert sink_a.getvalue() == sink_b.getvalue()


def test_threads_env_cap(monkeypatch):
    monkeypatch.setenv("HYPERSPIN_THREADS", "1")
    grid = small_grid()
    assert run_sweep(grid).rows == run_sweep(grid, workers=6).rows


def test_preset_registry_fixed_parameters():
    # Fixed parameters per preset id: (tau, mu list or None, phi list or None, t_stop).
    full_phi = tuple(k * math.pi / 180.0 for k in range(181))
    full_mu = tuple(k / 100.0 for k in range(101))
    compare_phi = (math.pi / 6.0, math.pi / 4.0, math.pi / 3.0, HALF_PI)
    expected = {}
    for prefix in ("h", "e", "d", "c"):
        for digit, tau, stop in (("1", 0.1, 5.0), ("2", 5.0, 50.0)):
            expected[f"{prefix}{digit}a"] = (tau, (0.8,), full_phi, stop)
            expected[f"{prefix}{digit}b"] = (tau, full_mu, (HALF_PI,), stop)
    for digit, tau, stop in (("1", 0.1, 5.0), ("2", 5.0, 50.0)):
        expected[f"sc{digit}a"] = (tau, (0.6,), compare_phi, stop)
        expected[f"sc{digit}b"] = (tau, (0.8,), compare_phi, stop)
    for prefix, tau, stop in (("m", 0.1, 5.0), ("nm", 5.0, 50.0)):
        for suffix, mu in (("0", 0.0), ("06", 0.6), ("08", 0.8), ("1", 1.0)):
            expected[f"{prefix}{suffix}"] = (tau, (mu,), (HALF_PI,), stop)

    assert set(PRESETS) == set(expected)
    for pid, (tau, mu, phi, stop) in expected.items():
        preset = figure_preset(pid)
        assert preset.grid.tau == (tau,), pid
        assert preset.grid.mu == mu, pid
        assert preset.grid.phi == phi, pid
        assert preset.grid.time.stop == stop, pid
        assert preset.grid.time.step == 0.01, pid
        assert preset.grid.channel == "lambda", pid


def test_preset_measure_selectors():
    assert figure_preset("h1a").measures == ("steering",)
    assert figure_preset("e1b").measures == ("eof",)
    assert figure_preset("d2a").measures == ("gqd",)
    assert figure_preset("c2b").measures == ("coherence_l1",)
    assert figure_preset("nm1").measures == ("steering", "eof", "gqd", "coherence_l1")


def test_unknown_preset():
    with pytest.raises(UnknownPresetError):
        figure_preset("zz9")


def test_emit_csv_header_and_rows():
    result = run_sweep(SweepGrid("lambda", (0.0,), (0.0,), (0.1,), TimeGrid(0.0, 0.0, 1.0)))
    sink = io.StringIO()
    nbytes = emit(result, "csv", sink)
    text = sink.getvalue()
    assert nbytes == len(text.encode())
    lines = text.split("\n")
    assert lines[0] == CSV_HEADER
    assert len(lines) == 3 and lines[2] == ""
    assert lines[1].startswith("lambda,0,0,0.1,markovian,0,1,1,")


def test_emit_empty_result():
    empty = SweepResult([], {"preset": None})
    sink = io.StringIO()
    emit(empty, "csv", sink)
    assert sink.getvalue() == CSV_HEADER + "\n"
    sink = io.StringIO()
    emit(empty, "json", sink)
    assert json.loads(sink.getvalue())["records"] == []


def test_emit_rejects_unknown_format():
    with pytest.raises(DomainError):
        emit(SweepResult([], {}), "xml", io.StringIO())


def test_float_rendering():
    assert format_float(0.1) == "0.1"
    assert format_float(1.0) == "1"
    assert format_float(0.123456789012345) == "0.123456789012"
    assert format_float(1e-30) == "1e-30"


def test_emit_json_round_trip():
    result = run_sweep(small_grid())
    sink = io.StringIO()
    emit(result, "json", sink)
    parsed = json.loads(sink.getvalue())
    assert parsed["metadata"]["kernel_variant"] == result.metadata["kernel_variant"]
    assert len(parsed["records"]) == len(result.rows)
    for rec, row in zip(parsed["records"], result.rows):
        assert rec == row.as_dict()


def test_emit_to_path(tmp_path):
    result = run_sweep(small_grid())
    target = tmp_path / "out.csv"
    nbytes = emit(result, "csv", target)
    assert target.read_bytes() == target.read_text().encode()
    assert nbytes == len(target.read_bytes())


def test_preset_run_is_deterministic():
    a, b = run_preset("m08"), run_preset("m08")
    sink_a, sink_b = io.StringIO(), io.StringIO()
    emit(a, "csv", sink_a)
    emit(b, "csv", sink_b)
    assert sink_a.getvalue() == sink_b.getvalue()
    assert len(a.rows) == 501
    assert a.metadata["preset"] == "m08"
