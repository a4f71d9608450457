import numpy as np
import pytest

from bellpoly import (
    CapacityError,
    ConfigError,
    Grid,
    SweepConfig,
    SweepResult,
    emit,
    read_result_csv,
    run_audit,
    run_spectrum,
    run_sweep,
    to_csv,
    to_json,
)
from bellpoly.sweep import resolve_threads


def small_config(**overrides):
    base = {
        "model": "polygon_dimer",
        "n": 2,
        "delta0": 1.0,
        "delta": 1.0,
        "j_over_j0": {"min": -1.0, "max": 1.0, "steps": 3},
        "t": 0.1,
        "pairs": [[0, 2], [0, 1]],
    }
    base.update(overrides)
    return SweepConfig.from_dict(base)


def test_grid_single_value():
    g = Grid.coerce(0.25, "t")
    assert list(g.values()) == [0.25]


def test_grid_table():
    g = Grid.coerce({"min": 0.0, "max": 1.0, "steps": 5}, "t")
    assert np.allclose(g.values(), [0.0, 0.25, 0.5, 0.75, 1.0])


def test_grid_rejects_bad_steps():
    with pytest.raises(ValueError):
        Grid(0.0, 1.0, 0)


def test_grid_rejects_inverted_range():
    with pytest.raises(ValueError):
        Grid(1.0, 0.0, 3)


@pytest.mark.parametrize(
    "overrides,field",
    [
        ({"model": "chain"}, "model"),
        ({"n": 0}, "n"),
        ({"model": "ring", "n": None, "m": 2}, "m"),
        ({"pairs": []}, "pairs"),
        ({"pairs": [[0, 0]]}, "pairs"),
        ({"pairs": [[0, 9]]}, "pairs"),
        ({"pairs": [[0, 1], [0, 1]]}, "pairs"),
        ({"observables": ["b_horodecki", "entropy"]}, "observables"),
        ({"degeneracy_tol": 0.0}, "degeneracy_tol"),
        ({"energies_lowest_k": 0}, "energies_lowest_k"),
        ({"t": -0.5}, "t"),
        ({"bogus": 1}, "bogus"),
    ],
)
def test_config_errors_name_offending_field(overrides, field):
    with pytest.raises(ConfigError, match=field):
        small_config(**overrides)


def test_config_capacity_error():
    cfg = small_config(n=7, pairs=[[0, 7]])
    with pytest.raises(CapacityError, match="12"):
        run_sweep(cfg)


def test_row_count_and_ordering():
    cfg = small_config(t={"min": 0.1, "max": 0.2, "steps": 2})
    result = run_sweep(cfg, threads=1)
    assert len(result.rows) == 2 * 3 * 2  # T points x J points x pairs
    keys = [(r[0], r[1], r[2], r[3]) for r in result.rows]
    assert keys == sorted(keys)
    # Pairs are emitted in lexicographic order regardless of config order.
    assert keys[0][2:] == (0, 1)
    assert keys[1][2:] == (0, 2)


def test_all_observable_columns():
    cfg = small_config(
        observables=[
            "b_horodecki",
            "b_formula",
            "correlators_xx_zz",
            "energies_lowest_k",
            "monogamy_slacks",
            "crossings",
        ],
        energies_lowest_k=3,
    )
    result = run_sweep(cfg, threads=1)
    assert result.columns == (
        "t", "j_over_j0", "pair_i", "pair_j", "b_horodecki", "b_formula",
        "sxx", "szz", "e0", "e1", "e2", "monogamy_slack_min",
    )
    assert "crossings" in result.metadata


def test_metadata_echoes_config():
    cfg = small_config()
    meta = run_sweep(cfg, threads=1).metadata
    assert meta["config"] == cfg.to_dict()
    assert meta["version"]
    assert meta["wall_time_s"] >= 0


def test_determinism_two_runs_byte_identical():
    cfg = small_config(t={"min": 0.05, "max": 0.3, "steps": 3})
    a = to_csv(run_sweep(cfg, threads=1))
    b = to_csv(run_sweep(cfg, threads=1))
    assert a == b


def test_serial_and_concurrent_runs_agree_exactly():
    cfg = small_config(
        j_over_j0={"min": -2.0, "max": 1.5, "steps": 8},
        t={"min": 0.05, "max": 0.3, "steps": 2},
        observables=["b_horodecki", "b_formula", "correlators_xx_zz", "monogamy_slacks"],
    )
    serial = run_sweep(cfg, threads=1)
    concurrent = run_sweep(cfg, threads=4)
    assert serial.rows == concurrent.rows
    assert to_csv(serial) == to_csv(concurrent)


def test_env_thread_cap(monkeypatch):
    monkeypatch.setenv("BELLPOLY_THREADS", "2")
    assert resolve_threads() == 2
    monkeypatch.setenv("BELLPOLY_THREADS", "junk")
    with pytest.raises(ConfigError, match="BELLPOLY_THREADS"):
        resolve_threads()


def test_zero_temperature_paths_agree():
    exact = small_config(t=0.0)
    tiny = small_config(t=0.0, zero_t_as_small_t=True)
    rows_exact = run_sweep(exact, threads=1).rows
    rows_tiny = run_sweep(tiny, threads=1).rows
    for a, b in zip(rows_exact, rows_tiny):
        assert a[:4] == b[:4]
        assert abs(a[4] - b[4]) < 1e-6  # b_horodecki


def test_single_point_grid_single_row_per_pair():
    cfg = small_config(j_over_j0=0.0, t=0.0, pairs=[[0, 2]])
    result = run_sweep(cfg, threads=1)
    assert len(result.rows) == 1
    assert result.rows[0][4] == pytest.approx(2 * np.sqrt(2), abs=1e-10)


def test_csv_header_only_for_empty_result():
    empty = SweepResult(("t", "j_over_j0", "pair_i", "pair_j"), (), {})
    assert to_csv(empty) == "t,j_over_j0,pair_i,pair_j\n"


def test_csv_roundtrip(tmp_path):
    cfg = small_config(j_over_j0=0.3, t=0.2)
    result = run_sweep(cfg, threads=1)
    path = tmp_path / "out.csv"
    emit(result, "csv", str(path))
    columns, rows = read_result_csv(path.read_text())
    assert columns == result.columns
    assert rows == result.rows  # 17 significant digits round-trip exactly


def test_emit_json(tmp_path):
    import json

    cfg = small_config(j_over_j0=0.3, t=0.2)
    result = run_sweep(cfg, threads=1)
    path = tmp_path / "out.json"
    emit(result, "json", str(path))
    doc = json.loads(path.read_text())
    assert doc["columns"] == list(result.columns)
    assert len(doc["rows"]) == len(result.rows)
    assert doc["metadata"]["config"]["model"] == "polygon_dimer"


def test_emit_rejects_unknown_format(tmp_path):
    result = run_sweep(small_config(j_over_j0=0.0, t=0.0), threads=1)
    with pytest.raises(ConfigError, match="format"):
        emit(result, "parquet", str(tmp_path / "x"))


def test_crossings_metadata_flags_square_boundaries():
    cfg = small_config(
        j_over_j0={"min": -3.0, "max": 2.0, "steps": 101},
        t=1e-4,
        observables=["b_horodecki", "crossings"],
    )
    result = run_sweep(cfg, threads=2)
    crossings = result.metadata["crossings"][0]["crossings"]
    positions = sorted(c["param"] for c in crossings)
    assert len(positions) == 2
    assert abs(positions[0] - (-2.0)) <= 0.06
    assert abs(positions[1] - 1.0) <= 0.06


def test_rows_respect_quantum_bounds():
    cfg = small_config(
        j_over_j0={"min": -3.0, "max": 2.0, "steps": 11},
        t={"min": 0.0, "max": 0.4, "steps": 3},
        observables=["b_horodecki", "monogamy_slacks"],
    )
    result = run_sweep(cfg)
    b_col = result.columns.index("b_horodecki")
    slack_col = result.columns.index("monogamy_slack_min")
    for row in result.rows:
        assert -1e-12 <= row[b_col] <= 2 * np.sqrt(2) + 1e-9
        assert row[slack_col] >= -1e-8


def test_run_spectrum_rows():
    cfg = small_config(energies_lowest_k=4)
    result = run_spectrum(cfg, threads=1)
    assert result.columns == ("t", "j_over_j0", "e0", "e1", "e2", "e3")
    assert len(result.rows) == 3
    middle = [r for r in result.rows if r[1] == 0.0][0]
    assert middle[2] == pytest.approx(-1.5, abs=1e-12)


def test_audit_requires_single_point():
    with pytest.raises(ConfigError, match="single-point"):
        run_audit(small_config())


def test_audit_report_structure():
    cfg = small_config(j_over_j0=0.0, t=0.0)
    report = run_audit(cfg)
    assert report["n_sites"] == 4
    assert len(report["pair_b"]) == 6
    assert len(report["monogamy"]) == 24
    assert all(entry["slack"] >= -1e-8 for entry in report["monogamy"])
    diag = [e for e in report["pair_b"] if (e["i"], e["j"]) == (0, 2)][0]
    assert diag["b"] == pytest.approx(2 * np.sqrt(2), abs=1e-10)
    witnessed = {(w["i"], w["j"]): w["k"] for w in report["witnesses"]}
    assert witnessed[(0, 2)] is None  # dimer pair has no equal third
