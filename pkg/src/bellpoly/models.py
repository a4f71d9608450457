"""Coupling graphs for the polygon-dimer and ring models, and the XXZ Hamiltonian.

The polygon-dimer model places 2N spins on a regular polygon: every longest
diagonal (i, i+N) carries a strong XXZ bond (J0, Delta0) and every side
(i, i+1 mod 2N) a weak one (J, Delta).  J0 is the natural energy unit.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError  # noqa: F401  (re-exported for callers)
from .operators import ManyBodyOperator, _pair_embed, check_capacity, spin


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    coupling: float
    anisotropy: float


@dataclass(frozen=True)
class CouplingGraph:
    """Weighted edge list: each edge is an XXZ bond J(SxSx + SySy + Delta SzSz)."""

    n_sites: int
    edges: tuple[Edge, ...]
    # The N=1 polygon degenerates to two parallel bonds on the same pair;
    # everything else must keep unordered pairs unique.
    allow_parallel_edges: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("n_sites must be positive")
        seen = set()
        for e in self.edges:
            if e.i == e.j:
                raise ValueError(f"self-loop on site {e.i}")
            if not (0 <= e.i < self.n_sites and 0 <= e.j < self.n_sites):
                raise ValueError(f"edge ({e.i}, {e.j}) out of range")
            pair = frozenset((e.i, e.j))
            if pair in seen and not self.allow_parallel_edges:
                raise ValueError(f"duplicate edge on pair ({e.i}, {e.j})")
            seen.add(pair)

    def to_dict(self) -> dict:
        return {
            "n_sites": self.n_sites,
            "edges": [[e.i, e.j, e.coupling, e.anisotropy] for e in self.edges],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CouplingGraph":
        edges = tuple(Edge(int(i), int(j), float(c), float(a)) for i, j, c, a in d["edges"])
        return cls(int(d["n_sites"]), edges, allow_parallel_edges=True)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, s: str) -> "CouplingGraph":
        return cls.from_dict(json.loads(s))


@dataclass(frozen=True)
class ModelParams:
    """Polygon-dimer parameters: N dimers (2N sites), diagonal bond (j0, delta0),
    side bond (j, delta), temperature t (k_B = 1, same units as j0)."""

    n_dimers: int
    j0: float = 1.0
    delta0: float = 1.0
    j: float = 0.0
    delta: float = 1.0
    t: float = 0.0

    def __post_init__(self):
        if self.n_dimers < 1:
            raise ValueError("n_dimers must be >= 1")
        if self.j0 <= 0:
            raise ValueError("j0 must be > 0 (antiferromagnetic dimer bond)")
        if self.t < 0:
            raise ValueError("temperature must be >= 0")
        if self.delta0 <= -1:
            warnings.warn(
                "delta0 <= -1: the dimer ground state is no longer the singlet",
                stacklevel=2,
            )


def polygon_dimer_graph(params: ModelParams) -> CouplingGraph:
    """2N sites around a polygon: diagonals (i, i+N) at (j0, delta0),
    sides (i, i+1 mod 2N) at (j, delta)."""
    n = params.n_dimers
    sites = 2 * n
    edges = [Edge(i, i + n, params.j0, params.delta0) for i in range(n)]
    if n == 1:
        # Diagonal and side collapse onto the same pair; keep both bonds.
        edges.append(Edge(0, 1, params.j, params.delta))
        return CouplingGraph(sites, tuple(edges), allow_parallel_edges=True)
    edges.extend(Edge(i, (i + 1) % sites, params.j, params.delta) for i in range(sites))
    return CouplingGraph(sites, tuple(edges))


def ring_graph(m: int, j: float, delta: float) -> CouplingGraph:
    """Uniform XXZ cycle on m >= 3 sites."""
    if m < 3:
        raise ValueError("ring needs m >= 3 sites")
    return CouplingGraph(m, tuple(Edge(i, (i + 1) % m, j, delta) for i in range(m)))


def build_hamiltonian(graph: CouplingGraph) -> ManyBodyOperator:
    """H = sum_edges J_e (S_i^x S_j^x + S_i^y S_j^y + Delta_e S_i^z S_j^z)."""
    n = graph.n_sites
    check_capacity(n)
    dim = 2**n
    h = np.zeros((dim, dim), dtype=complex)
    paulis = {a: spin(a).entries for a in ("x", "y", "z")}
    for e in graph.edges:
        lo, hi = (e.i, e.j) if e.i < e.j else (e.j, e.i)
        for axis, weight in (("x", e.coupling), ("y", e.coupling), ("z", e.coupling * e.anisotropy)):
            if weight != 0.0:
                h += weight * _pair_embed(n, lo, hi, paulis[axis], paulis[axis])
    return ManyBodyOperator(n, h)


@dataclass(frozen=True)
class LadderProjection:
    """Relabeling of polygon sites as a two-leg ladder: dimers become rungs.

    The ladder closes with a DNA-style twist: the two boundary side bonds
    swap legs instead of wrapping around.
    """

    assignments: tuple[tuple[int, int, int], ...]  # (site, rung, leg)
    boundary_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]  # ((rung, leg), (rung, leg))


def ladder_projection(params: ModelParams) -> LadderProjection:
    """Pure relabeling: site i < N -> (rung i, leg 0), site i+N -> (rung i, leg 1)."""
    n = params.n_dimers
    if n < 2:
        raise ValueError("ladder projection needs n_dimers >= 2")
    assignments = tuple(
        (site, site % n, site // n) for site in range(2 * n)
    )
    boundary = (((n - 1, 0), (0, 1)), ((n - 1, 1), (0, 0)))
    return LadderProjection(assignments, boundary)
