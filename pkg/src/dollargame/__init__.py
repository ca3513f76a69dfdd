"""Dollar game / chip-firing engine with exact minimal-move solving."""

from .coset import (InvalidNError, ShiftAnalysis, is_coset_minimal, lower_bound,
                    minimal_norm, minimal_representative)
from .engine import (DEFAULT_MAX_STEPS, HIGHEST_INDEX, LOWEST_INDEX, MOST_EXTREME,
                     GameTrace, Move, MoveKind, StepLimitError, TieBreakPolicy,
                     borrowing_binge, detect_cycle, greedy_stabilize, seeded_random,
                     single_move)
from .families import (Expected, Instance, InstanceFormatError, UnsatisfiableError,
                       hybrid_example, instance_from_dict, intro_example,
                       random_instance, star_example)
from .graph import (DimensionMismatchError, DisconnectedGraphError, Divisor,
                    DuplicateEdgeError, FiringVector, Graph, GraphError,
                    SelfLoopError, VertexIndexError, apply_firing, build_graph,
                    canonical_divisor, dualize, is_effective, is_stable, to_dot,
                    total_chips)
from .solver import (BudgetError, CapExceededError, CosetResult, GreedyFailedError,
                     PreconditionError, SearchResult, SolveReport, bfs_min_moves,
                     check_least_action, coset_min_moves, firing_to_moves,
                     verify_bound)

__version__ = "0.1.0"

__all__ = [
    "Graph", "Divisor", "FiringVector", "build_graph", "canonical_divisor",
    "apply_firing", "is_effective", "is_stable", "dualize", "total_chips",
    "to_dot", "GraphError", "SelfLoopError", "DuplicateEdgeError",
    "VertexIndexError", "DisconnectedGraphError", "DimensionMismatchError",
    "Move", "MoveKind", "GameTrace", "TieBreakPolicy", "LOWEST_INDEX",
    "HIGHEST_INDEX", "MOST_EXTREME", "seeded_random", "borrowing_binge",
    "greedy_stabilize", "single_move", "detect_cycle", "StepLimitError",
    "DEFAULT_MAX_STEPS", "ShiftAnalysis", "minimal_representative",
    "minimal_norm", "lower_bound", "is_coset_minimal", "InvalidNError",
    "SearchResult", "CosetResult", "SolveReport", "bfs_min_moves",
    "coset_min_moves", "verify_bound", "check_least_action", "firing_to_moves",
    "CapExceededError", "BudgetError", "GreedyFailedError", "PreconditionError",
    "Instance", "Expected", "instance_from_dict", "intro_example",
    "star_example", "hybrid_example", "random_instance", "InstanceFormatError",
    "UnsatisfiableError",
]
