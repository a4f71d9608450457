"""Config-driven (J/J0, T) sweeps: build graph -> Hamiltonian -> spectrum ->
thermal state -> per-pair reduced states -> requested observables.

All couplings are expressed in units of the dimer bond (j0 = 1), so the side
coupling axis of a sweep is literally J/J0.  Grid points are independent pure
computations; they may be evaluated concurrently and merge deterministically
by grid index, so identical configs produce byte-identical CSV bodies.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .bell import BellReport, horodecki_b, model_b_formula, monogamy_audit
from .errors import ConfigError
from .models import ModelParams, build_hamiltonian, polygon_dimer_graph, ring_graph
from .operators import MAX_DENSE_SITES, check_capacity
from .reduced import pair_correlation, partial_trace
from .spectral import Spectrum, detect_level_crossings, eigendecompose, gibbs_state

THREADS_ENV = "BELLPOLY_THREADS"

OBSERVABLES = (
    "b_horodecki",
    "b_formula",
    "correlators_xx_zz",
    "energies_lowest_k",
    "monogamy_slacks",
    "crossings",
)
DEFAULT_OBSERVABLES = ("b_horodecki", "b_formula", "correlators_xx_zz")

# Temperature substituted for T = 0 when zero_t_as_small_t is enabled.
SMALL_T = 1e-8


@dataclass(frozen=True)
class Grid:
    """Inclusive linspace grid; steps is the number of points (steps=1 -> [lo])."""

    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError("grid steps must be >= 1")
        if self.lo > self.hi:
            raise ValueError("grid min must be <= max")

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)

    @classmethod
    def coerce(cls, value, field_name: str) -> "Grid":
        if isinstance(value, Grid):
            return value
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return cls(float(value), float(value), 1)
        if isinstance(value, dict):
            try:
                return cls(float(value["min"]), float(value["max"]), int(value["steps"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"{field_name}: expected keys min/max/steps ({exc})") from exc
        raise ConfigError(f"{field_name}: expected a number or a min/max/steps table")


@dataclass(frozen=True)
class SweepConfig:
    model: str
    n: Optional[int] = None  # dimer count (polygon_dimer)
    m: Optional[int] = None  # site count (ring)
    delta0: float = 1.0
    delta: float = 1.0
    j_over_j0: Grid = Grid(-4.0, 2.0, 121)
    t: Grid = Grid(1e-4, 0.6, 61)
    pairs: tuple[tuple[int, int], ...] = ()
    observables: tuple[str, ...] = DEFAULT_OBSERVABLES
    degeneracy_tol: float = 1e-8
    seed: int = 0
    zero_t_as_small_t: bool = False
    energies_lowest_k: int = 2

    def __post_init__(self):
        if self.model not in ("polygon_dimer", "ring"):
            raise ConfigError(f"model: unknown model {self.model!r}")
        if self.model == "polygon_dimer":
            if self.n is None or self.n < 1:
                raise ConfigError("n: polygon_dimer needs a dimer count n >= 1")
        else:
            if self.m is None or self.m < 3:
                raise ConfigError("m: ring needs a site count m >= 3")
        sites = self.n_sites
        if not self.pairs:
            raise ConfigError("pairs: at least one site pair is required")
        seen = set()
        for p in self.pairs:
            if len(p) != 2 or p[0] == p[1]:
                raise ConfigError(f"pairs: {p} is not a pair of distinct sites")
            if not (0 <= p[0] < sites and 0 <= p[1] < sites):
                raise ConfigError(f"pairs: {p} out of range for {sites} sites")
            if p in seen:
                raise ConfigError(f"pairs: duplicate pair {p}")
            seen.add(p)
        for obs in self.observables:
            if obs not in OBSERVABLES:
                raise ConfigError(f"observables: unknown observable {obs!r}")
        if self.degeneracy_tol <= 0:
            raise ConfigError("degeneracy_tol: must be > 0")
        if self.energies_lowest_k < 1 or self.energies_lowest_k > 2**sites:
            raise ConfigError("energies_lowest_k: must be in [1, 2^n_sites]")
        if self.t.lo < 0:
            raise ConfigError("t: temperatures must be >= 0")

    @property
    def n_sites(self) -> int:
        return 2 * self.n if self.model == "polygon_dimer" else self.m

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {
            "model", "n", "m", "delta0", "delta", "j_over_j0", "t", "pairs",
            "observables", "degeneracy_tol", "seed", "zero_t_as_small_t",
            "energies_lowest_k",
        }
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"{sorted(unknown)[0]}: unknown config field")
        if "model" not in data:
            raise ConfigError("model: required field is missing")
        kwargs: dict = {"model": data["model"]}
        for key in ("n", "m", "energies_lowest_k", "seed"):
            if data.get(key) is not None:
                try:
                    kwargs[key] = int(data[key])
                except (TypeError, ValueError):
                    raise ConfigError(f"{key}: expected an integer") from None
        for key in ("delta0", "delta", "degeneracy_tol"):
            if key in data:
                try:
                    kwargs[key] = float(data[key])
                except (TypeError, ValueError):
                    raise ConfigError(f"{key}: expected a number") from None
        for key in ("j_over_j0", "t"):
            if key in data:
                kwargs[key] = Grid.coerce(data[key], key)
        if "pairs" in data:
            try:
                kwargs["pairs"] = tuple((int(i), int(j)) for i, j in data["pairs"])
            except (TypeError, ValueError):
                raise ConfigError("pairs: expected a list of [i, j] site pairs") from None
        if "observables" in data:
            if not isinstance(data["observables"], (list, tuple)):
                raise ConfigError("observables: expected a list of names")
            kwargs["observables"] = tuple(data["observables"])
        if "zero_t_as_small_t" in data:
            if not isinstance(data["zero_t_as_small_t"], bool):
                raise ConfigError("zero_t_as_small_t: expected a boolean")
            kwargs["zero_t_as_small_t"] = data["zero_t_as_small_t"]
        return cls(**kwargs)

    def to_dict(self) -> dict:
        d: dict = {
            "model": self.model,
            "delta0": self.delta0,
            "delta": self.delta,
            "j_over_j0": {"min": self.j_over_j0.lo, "max": self.j_over_j0.hi, "steps": self.j_over_j0.steps},
            "t": {"min": self.t.lo, "max": self.t.hi, "steps": self.t.steps},
            "pairs": [list(p) for p in self.pairs],
            "observables": list(self.observables),
            "degeneracy_tol": self.degeneracy_tol,
            "seed": self.seed,
            "zero_t_as_small_t": self.zero_t_as_small_t,
            "energies_lowest_k": self.energies_lowest_k,
        }
        if self.model == "polygon_dimer":
            d["n"] = self.n
        else:
            d["m"] = self.m
        return d


@dataclass(frozen=True)
class SweepResult:
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    metadata: dict = field(compare=False)


def _columns_for(config: SweepConfig) -> tuple[str, ...]:
    cols = ["t", "j_over_j0", "pair_i", "pair_j"]
    obs = config.observables
    if "b_horodecki" in obs:
        cols.append("b_horodecki")
    if "b_formula" in obs:
        cols.append("b_formula")
    if "correlators_xx_zz" in obs:
        cols.extend(("sxx", "szz"))
    if "energies_lowest_k" in obs:
        cols.extend(f"e{k}" for k in range(config.energies_lowest_k))
    if "monogamy_slacks" in obs:
        cols.append("monogamy_slack_min")
    return tuple(cols)


def _spectrum_at(config: SweepConfig, j: float) -> Spectrum:
    if config.model == "polygon_dimer":
        params = ModelParams(
            n_dimers=config.n, j0=1.0, delta0=config.delta0, j=j, delta=config.delta
        )
        graph = polygon_dimer_graph(params)
    else:
        graph = ring_graph(config.m, j, config.delta)
    return eigendecompose(build_hamiltonian(graph))


def _thermal_state(config: SweepConfig, spec: Spectrum, t: float):
    if t == 0.0:
        if config.zero_t_as_small_t:
            return gibbs_state(spec, SMALL_T)
        from .spectral import ground_state

        return ground_state(spec, config.degeneracy_tol)
    return gibbs_state(spec, t)


def _all_pairs(n_sites: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n_sites) for j in range(i + 1, n_sites)]


def _point_observables(config: SweepConfig, spec: Spectrum, t: float) -> dict:
    """Everything the requested observables need at one (t, j) grid point."""
    obs = config.observables
    state = _thermal_state(config, spec, t)
    want_slack = "monogamy_slacks" in obs
    rdm_pairs = list(config.pairs)
    if want_slack:
        rdm_pairs = sorted(set(rdm_pairs) | set(_all_pairs(config.n_sites)))
    reports: dict[tuple[int, int], BellReport] = {}
    correlators: dict[tuple[int, int], tuple[float, float]] = {}
    for pair in rdm_pairs:
        rdm = partial_trace(state, pair)
        reports[pair] = horodecki_b(rdm)
        correlators[pair] = (
            pair_correlation(rdm, "x", "x"),
            pair_correlation(rdm, "z", "z"),
        )
    slacks = monogamy_audit(reports, config.n_sites) if want_slack else []
    out: dict[tuple[int, int], dict[str, float]] = {}
    for pair in config.pairs:
        values: dict[str, float] = {}
        sxx, szz = correlators[pair]
        if "b_horodecki" in obs:
            values["b_horodecki"] = reports[pair].b
        if "b_formula" in obs:
            values["b_formula"] = model_b_formula(sxx, szz)
        if "correlators_xx_zz" in obs:
            values["sxx"] = sxx
            values["szz"] = szz
        if "energies_lowest_k" in obs:
            for k in range(config.energies_lowest_k):
                values[f"e{k}"] = float(spec.eigenvalues[k])
        if want_slack:
            i, j = pair
            values["monogamy_slack_min"] = min(
                s for (a, b, _c), s in slacks if (a, b) in ((i, j), (j, i))
            )
        out[pair] = values
    return out


def resolve_threads(threads: Optional[int] = None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"{THREADS_ENV}: expected an integer, got {env!r}") from None
    return max(1, os.cpu_count() or 1)


def run_sweep(config: SweepConfig, threads: Optional[int] = None) -> SweepResult:
    """Evaluate the full grid.  Rows are ordered by (t, j_over_j0, pair) and
    the computation is deterministic for a fixed config regardless of the
    number of worker threads."""
    check_capacity(config.n_sites)
    start = time.perf_counter()
    t_values = config.t.values()
    j_values = config.j_over_j0.values()
    columns = _columns_for(config)
    workers = resolve_threads(threads)

    def per_j(ji: int) -> tuple[list[tuple[float, float]], dict]:
        spec = _spectrum_at(config, float(j_values[ji]))
        levels = (float(spec.eigenvalues[0]), float(spec.eigenvalues[1]))
        return levels, {
            ti: _point_observables(config, spec, float(t_values[ti]))
            for ti in range(len(t_values))
        }

    if workers > 1 and len(j_values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_j_results = list(pool.map(per_j, range(len(j_values))))
    else:
        per_j_results = [per_j(ji) for ji in range(len(j_values))]

    pairs_sorted = sorted(config.pairs)
    rows = []
    for ti, t in enumerate(t_values):
        for ji, j in enumerate(j_values):
            point = per_j_results[ji][1][ti]
            for pair in pairs_sorted:
                values = point[pair]
                row = [float(t), float(j), pair[0], pair[1]]
                row.extend(values[c] for c in columns[4:])
                rows.append(tuple(row))

    metadata: dict = {
        "config": config.to_dict(),
        "version": _package_version(),
        "wall_time_s": time.perf_counter() - start,
    }
    if "crossings" in config.observables:
        level_rows = [
            (float(j_values[ji]), *per_j_results[ji][0]) for ji in range(len(j_values))
        ]
        metadata["crossings"] = [
            {
                "t": float(t),
                "crossings": [
                    {"param": c.param, "bracket": list(c.bracket), "min_gap": c.min_gap}
                    for c in (detect_level_crossings(level_rows) if len(level_rows) >= 2 else [])
                ],
            }
            for t in t_values
        ]
    return SweepResult(columns, tuple(rows), metadata)


def run_spectrum(config: SweepConfig, threads: Optional[int] = None) -> SweepResult:
    """Energies only: one row per grid point with the lowest-k eigenvalues."""
    check_capacity(config.n_sites)
    start = time.perf_counter()
    t_values = config.t.values()
    j_values = config.j_over_j0.values()
    k = config.energies_lowest_k
    workers = resolve_threads(threads)

    def per_j(ji: int) -> list[float]:
        spec = _spectrum_at(config, float(j_values[ji]))
        return [float(v) for v in spec.eigenvalues[:k]]

    if workers > 1 and len(j_values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            energies = list(pool.map(per_j, range(len(j_values))))
    else:
        energies = [per_j(ji) for ji in range(len(j_values))]

    columns = ("t", "j_over_j0", *(f"e{i}" for i in range(k)))
    rows = tuple(
        (float(t), float(j_values[ji]), *energies[ji])
        for t in t_values
        for ji in range(len(j_values))
    )
    metadata = {
        "config": config.to_dict(),
        "version": _package_version(),
        "wall_time_s": time.perf_counter() - start,
    }
    return SweepResult(columns, rows, metadata)


def run_audit(config: SweepConfig) -> dict:
    """Monogamy slacks, per-pair Bell measures and reduced-state equality
    witnesses at a single grid point (both grids must have one point)."""
    check_capacity(config.n_sites)
    if config.t.steps != 1 or config.j_over_j0.steps != 1:
        raise ConfigError("t/j_over_j0: audit needs single-point grids")
    t = float(config.t.values()[0])
    j = float(config.j_over_j0.values()[0])
    spec = _spectrum_at(config, j)
    state = _thermal_state(config, spec, t)
    n = config.n_sites
    reports = {pair: horodecki_b(partial_trace(state, pair)) for pair in _all_pairs(n)}
    slacks = monogamy_audit(reports, n)
    from .bell import rdm_equality_witness

    witnesses = [
        {"i": i, "j": j2, "k": rdm_equality_witness(state, i, j2)}
        for i in range(n)
        for j2 in range(n)
        if i != j2
    ]
    return {
        "t": t,
        "j_over_j0": j,
        "n_sites": n,
        "pair_b": [{"i": p[0], "j": p[1], "b": r.b} for p, r in sorted(reports.items())],
        "monogamy": [
            {"i": a, "j": b, "k": c, "slack": s} for (a, b, c), s in slacks
        ],
        "witnesses": witnesses,
        "version": _package_version(),
    }


def _package_version() -> str:
    from . import __version__

    return __version__


def _format_value(column: str, value) -> str:
    if column in ("pair_i", "pair_j"):
        return str(int(value))
    return format(float(value), ".17g")


def to_csv(result: SweepResult) -> str:
    """Header plus rows; floats carry 17 significant digits so values
    round-trip exactly."""
    lines = [",".join(result.columns)]
    for row in result.rows:
        lines.append(",".join(_format_value(c, v) for c, v in zip(result.columns, row)))
    return "\n".join(lines) + "\n"


def to_json(result: SweepResult) -> str:
    doc = {
        "metadata": result.metadata,
        "columns": list(result.columns),
        "rows": [list(row) for row in result.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def emit(result: SweepResult, format: str, path: str) -> str:
    """Write the result to path as csv or json; returns the path."""
    if format == "csv":
        text = to_csv(result)
    elif format == "json":
        text = to_json(result)
    else:
        raise ConfigError(f"format: expected csv or json, got {format!r}")
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return path


def read_result_csv(text: str) -> tuple[tuple[str, ...], tuple[tuple, ...]]:
    """Parse emit()'s CSV back into (columns, rows) with original types."""
    lines = [ln for ln in text.split("\n") if ln]
    if not lines:
        raise ValueError("empty CSV")
    columns = tuple(lines[0].split(","))
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(columns):
            raise ValueError(f"row has {len(cells)} cells, expected {len(columns)}")
        rows.append(
            tuple(
                int(cell) if col in ("pair_i", "pair_j") else float(cell)
                for col, cell in zip(columns, cells)
            )
        )
    return columns, tuple(rows)
