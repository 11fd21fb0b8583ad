"""Signed graph distances, powers, balance, and spectra."""

from .core import (
    BadExponentError,
    BadSignError,
    DisconnectedError,
    DuplicateEdgeError,
    LoopEdgeError,
    MissingWitnessError,
    NonUniquePowerError,
    NotAPathError,
    NotBalancedError,
    NotCompatibleError,
    NotTwoConnectedError,
    PreconditionViolatedError,
    SignedGraph,
    SignedGraphError,
    VertexOutOfRangeError,
    is_connected,
    is_two_connected,
    new_signed_graph,
    path_sign,
    switch,
    walk_sign,
)
from .distance import (
    PathSigns,
    Reach,
    SignedDistanceMatrix,
    diameter,
    distance_matrices,
    first_incompatible_pair,
    is_compatible,
    is_compatible_pair,
    shortest_path_with_sign,
    sign_reachability,
)
from .power import (
    PowerResult,
    associated_complete,
    check_diameter_power_theorem,
    is_power_unique,
    power,
)
from .balance import (
    BalanceReport,
    CheckOutcome,
    is_balanced,
    lift_path,
    project_path,
    verify_balanced_implies_power_compatible,
    verify_nbc,
    verify_power_balance,
    verify_power_compat_implies_compat,
)
from .spectra import (
    NoConvergenceError,
    NotSymmetricError,
    Spectrum,
    adjacency_matrix,
    balanced_spectrum_test,
    eigenvalues,
    power_balance_spectrum_test,
)
from .oracle import (
    CorpusSpec,
    GenerationExhaustedError,
    TooManyPathsError,
    count_shortest_paths,
    enumerate_shortest_paths,
    generate,
    oracle_signs,
)
from .fileio import GraphSyntaxError, parse_corpus_spec, parse_graph, serialize_graph

__version__ = "0.1.0"
