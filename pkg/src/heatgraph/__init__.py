"""Multiscale heat-diffusion distances between graphs with bootstrap inference.

The library compares graphs through the time-indexed processes
``t -> || exp(-t L) - exp(-t L') ||_F`` (heat kernel distance, needs a
node correspondence) and ``t -> bottleneck distance between extended
persistence diagrams of the heat kernel signature`` (heat persistence
distance, correspondence-free), and provides uniform bootstrap
confidence bands and two-sample tests for their means.
"""

from .bottleneck import bottleneck_distance, diagram_set_distance
from .distances import (
    KIND_HKD,
    KIND_HPD,
    GraphPair,
    TimeGrid,
    hkd_direct,
    hkd_spectral,
    hpd,
    lipschitz_constant,
    process_row,
)
from .errors import NumericalError, ValidationError
from .experiments import (
    EXPERIMENT_KINDS,
    ExperimentConfig,
    binomial_ci,
    compute_process_matrix,
    run_experiment,
)
from .graphs import (
    WeightedGraph,
    build_graph,
    connected_components,
    graph_from_dict,
    graph_to_dict,
    laplacian,
)
from .models import (
    ANNULUS,
    DISK,
    ERModel,
    ExpDecayWeights,
    GeometricModel,
    PairModel,
    SBMModel,
    Unweighted,
    UniformWeights,
    fixed_size,
    hkd_compatible,
    model_from_dict,
    model_to_dict,
    np_sweep_params,
    pair_model_from_dict,
    pair_model_to_dict,
    sample_dataset,
    sample_graph,
    sample_pair,
)
from .persistence import (
    EMPTY_DIAGRAM,
    ConeComplex,
    ExtendedDiagramSet,
    PersistenceDiagram,
    extended_persistence,
)
from .spectral import (
    ZERO_EIGENVALUE_THRESHOLD,
    HKSVector,
    SpectralDecomposition,
    heat_kernel,
    hks,
    hks_matrix,
    laplacian_eigen_bounds,
    spectral_decompose,
)
from .stats import (
    ConfidenceBand,
    ProcessMatrix,
    TwoSampleResult,
    bootstrap_band,
    empirical_covariance,
    mean_process,
    two_sample_statistic,
    two_sample_test,
)
from .streams import derive_rng, derive_seed

__version__ = "0.1.0"

__all__ = [
    "ANNULUS",
    "DISK",
    "EMPTY_DIAGRAM",
    "EXPERIMENT_KINDS",
    "KIND_HKD",
    "KIND_HPD",
    "ZERO_EIGENVALUE_THRESHOLD",
    "ConeComplex",
    "ConfidenceBand",
    "ERModel",
    "ExpDecayWeights",
    "ExperimentConfig",
    "ExtendedDiagramSet",
    "GeometricModel",
    "GraphPair",
    "HKSVector",
    "NumericalError",
    "PairModel",
    "PersistenceDiagram",
    "ProcessMatrix",
    "SBMModel",
    "SpectralDecomposition",
    "TimeGrid",
    "TwoSampleResult",
    "Unweighted",
    "UniformWeights",
    "ValidationError",
    "WeightedGraph",
    "binomial_ci",
    "bootstrap_band",
    "bottleneck_distance",
    "build_graph",
    "compute_process_matrix",
    "connected_components",
    "derive_rng",
    "derive_seed",
    "diagram_set_distance",
    "empirical_covariance",
    "extended_persistence",
    "fixed_size",
    "graph_from_dict",
    "graph_to_dict",
    "heat_kernel",
    "hkd_compatible",
    "hkd_direct",
    "hkd_spectral",
    "hks",
    "hks_matrix",
    "hpd",
    "laplacian",
    "laplacian_eigen_bounds",
    "lipschitz_constant",
    "mean_process",
    "model_from_dict",
    "model_to_dict",
    "np_sweep_params",
    "pair_model_from_dict",
    "pair_model_to_dict",
    "process_row",
    "run_experiment",
    "sample_dataset",
    "sample_graph",
    "sample_pair",
    "spectral_decompose",
    "two_sample_statistic",
    "two_sample_test",
]
