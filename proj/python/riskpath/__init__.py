"""Fault-tolerant path-finding on DAGs with per-edge failure probabilities.

Accumulates risk backward from the destination under two models (the
optimistic eagle recursion and the commitment-aware bat recursion), runs and
verifies the greedy rerouting walk, and builds exact uniform-risk reliability
polynomials to locate decision crossovers.
"""

from riskpath._core import (
    Accumulation,
    Dag,
    EnumerationLimitError,
    GraphError,
    __version__,
    accumulate,
    accumulate_symbolic,
    enumerate_exact,
    find_crossovers,
    generate_layered,
    greedy_walk,
    monte_carlo,
    parse_graph,
    sample_world,
    static_most_reliable_path,
    sweep,
    validate_dag,
)

__all__ = [
    "Accumulation",
    "Dag",
    "EnumerationLimitError",
    "GraphError",
    "__version__",
    "accumulate",
    "accumulate_symbolic",
    "enumerate_exact",
    "find_crossovers",
    "generate_layered",
    "greedy_walk",
    "monte_carlo",
    "parse_graph",
    "sample_world",
    "static_most_reliable_path",
    "sweep",
    "validate_dag",
]
