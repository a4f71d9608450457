"""Exact diagonalization of XXZ coupling graphs with CHSH nonlocality analysis."""

__version__ = "0.1.0"

from .bell import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    BellReport,
    chsh_oracle,
    correlation_matrix,
    horodecki_b,
    model_b_formula,
    monogamy_audit,
    rdm_equality_witness,
)
from .errors import BellPolyError, CapacityError, ConfigError, NumericalConsistencyError
from .models import (
    CouplingGraph,
    Edge,
    LadderProjection,
    ModelParams,
    build_hamiltonian,
    ladder_projection,
    polygon_dimer_graph,
    ring_graph,
)
from .operators import (
    AXES,
    MAX_DENSE_SITES,
    LocalOperator,
    ManyBodyOperator,
    pauli,
    site_embed,
    spin,
    two_site_term,
)
from .reduced import (
    TwoQubitState,
    correlation,
    pair_correlation,
    partial_trace,
    singlet,
    trace_distance,
)
from .spectral import (
    DensityMatrix,
    LevelCrossing,
    Spectrum,
    detect_level_crossings,
    eigendecompose,
    gibbs_state,
    ground_state,
)
from .sweep import (
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

__all__ = [
    "AXES",
    "CLASSICAL_BOUND",
    "MAX_DENSE_SITES",
    "TSIRELSON_BOUND",
    "BellPolyError",
    "BellReport",
    "CapacityError",
    "ConfigError",
    "CouplingGraph",
    "DensityMatrix",
    "Edge",
    "Grid",
    "LadderProjection",
    "LevelCrossing",
    "LocalOperator",
    "ManyBodyOperator",
    "ModelParams",
    "NumericalConsistencyError",
    "Spectrum",
    "SweepConfig",
    "SweepResult",
    "TwoQubitState",
    "build_hamiltonian",
    "chsh_oracle",
    "correlation",
    "correlation_matrix",
    "detect_level_crossings",
    "eigendecompose",
    "emit",
    "gibbs_state",
    "ground_state",
    "horodecki_b",
    "ladder_projection",
    "model_b_formula",
    "monogamy_audit",
    "pair_correlation",
    "partial_trace",
    "pauli",
    "polygon_dimer_graph",
    "rdm_equality_witness",
    "read_result_csv",
    "ring_graph",
    "run_audit",
    "run_spectrum",
    "run_sweep",
    "singlet",
    "site_embed",
    "spin",
    "to_csv",
    "to_json",
    "two_site_term",
]
