"""Entanglement of formation for harmonically coupled bosonic modes on graphs.

The heavy lifting lives in the compiled extension; this package re-exports
the public names so callers can just ``import harmonet``.
"""

from ._core import (
    AsymmetricPairError,
    CovariancePair,
    EofResult,
    Graph,
    InfiniteEntanglementError,
    NegativeDiscriminantError,
    NotEntangledAtZeroError,
    PotentialMatrix,
    QuadratureSpec,
    Spectrum,
    ToleranceNotReachedError,
    TwoModeForm,
    WPair,
    apply_spectral_function,
    complete,
    covariance,
    delta_meanfield,
    delta_of,
    delta_path3,
    delta_two_vertex,
    eig_sym,
    eof_from_delta,
    eof_infinite_lattice,
    eof_pair,
    graph,
    graph_distance,
    ground_state_beta,
    lattice,
    lattice_w_integral,
    meanfield_largen_estimate,
    path,
    platonic,
    potential_matrix,
    reduce_pair,
    ring,
    ring_w_element,
    run_cli,
    threshold_temperature,
    w_pair,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricPairError",
    "CovariancePair",
    "EofResult",
    "Graph",
    "InfiniteEntanglementError",
    "NegativeDiscriminantError",
    "NotEntangledAtZeroError",
    "PotentialMatrix",
    "QuadratureSpec",
    "Spectrum",
    "ToleranceNotReachedError",
    "TwoModeForm",
    "WPair",
    "apply_spectral_function",
    "complete",
    "covariance",
    "delta_meanfield",
    "delta_of",
    "delta_path3",
    "delta_two_vertex",
    "eig_sym",
    "eof_from_delta",
    "eof_infinite_lattice",
    "eof_pair",
    "graph",
    "graph_distance",
    "ground_state_beta",
    "lattice",
    "lattice_w_integral",
    "meanfield_largen_estimate",
    "path",
    "platonic",
    "potential_matrix",
    "reduce_pair",
    "ring",
    "ring_w_element",
    "run_cli",
    "threshold_temperature",
    "w_pair",
]
