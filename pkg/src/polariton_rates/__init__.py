"""Hopfield-model polariton diagonalization and dissipation-rate comparison.

The package diagonalizes the quadratic Hamiltonian of one cavity mode
coupled to one matter mode, from weak to ultrastrong coupling, and compares
four per-branch dissipation-rate models: naive RWA, normalized RWA, and
Maxwell-boundary-condition loss profiles for dielectric and metallic
mirrors.  An independent oracle path (characteristic polynomial plus
null-space extraction) cross-checks every decomposition, and a CLI sweeps
the coupling strength into plot-ready CSV or JSON tables.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateSpectrum,
    DomainError,
    Error,
    InvalidParams,
    NoConvergence,
    NoStablePoints,
    UnstableSystem,
    UsageError,
    WriteError,
    ZeroPhotonWeight,
)
from .hopfield import (
    BogoliubovMatrix,
    Branch,
    HopfieldDecomposition,
    ModelParams,
    PolaritonBranch,
    Variant,
    build_hopfield_matrix,
    diagonalize,
    matter_completeness,
    photon_completeness,
)
from .oracle import OracleReport, audit, oracle_decomposition, oracle_diagonalize
from .rates import (
    RateSet,
    WeightingMode,
    compute_rateset,
    mbc_dielectric_rate,
    mbc_metallic_rate,
    naive_rwa_rate,
    normalized_rwa_rate,
)
from .sweep import (
    Mirror,
    OutputFormat,
    SweepConfig,
    SweepResult,
    SweepSummary,
    emit,
    evaluate_grid,
    run_sweep,
)

__all__ = [
    "__version__",
    "Error",
    "InvalidParams",
    "UnstableSystem",
    "DegenerateSpectrum",
    "ZeroPhotonWeight",
    "DomainError",
    "NoConvergence",
    "NoStablePoints",
    "UsageError",
    "WriteError",
    "ModelParams",
    "Variant",
    "Branch",
    "BogoliubovMatrix",
    "PolaritonBranch",
    "HopfieldDecomposition",
    "build_hopfield_matrix",
    "diagonalize",
    "photon_completeness",
    "matter_completeness",
    "RateSet",
    "WeightingMode",
    "naive_rwa_rate",
    "normalized_rwa_rate",
    "mbc_dielectric_rate",
    "mbc_metallic_rate",
    "compute_rateset",
    "OracleReport",
    "oracle_diagonalize",
    "oracle_decomposition",
    "audit",
    "Mirror",
    "OutputFormat",
    "SweepConfig",
    "SweepResult",
    "SweepSummary",
    "evaluate_grid",
    "run_sweep",
    "emit",
]
