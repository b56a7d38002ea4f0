"""Island-parallel ensemble metaheuristic graph coloring.

Worker islands run Harris Hawk Optimization, Artificial Bee Colony, or
Teaching-Learning-Based Optimization populations hybridized with TabuCol
local search at a fixed color budget k; a master reducer collects island
bests and a descending-k driver finds the smallest certified coloring.
"""

from .budget import Deadline, EvalCounter
from .coloring import Coloring, Move, random_coloring, scan_conflicts
from .engine import (
    EnsembleConfig,
    IslandReport,
    KAttempt,
    Metaheuristic,
    SolveResult,
    assign_metaheuristic,
    island_seed,
    master_reduce,
    run_island,
    solve,
    total_evaluations,
)
from .graph import (
    DimacsError,
    DimacsRangeError,
    DimacsStructureError,
    DimacsSyntaxError,
    DimacsWarning,
    Graph,
    InstanceMeta,
    density,
    dsatur_coloring,
    greedy_upper_bound,
    load_dimacs,
    parse_dimacs,
    to_dimacs,
)
from .tabucol import TabuParams, TabuState, select_move, tabucol, tabucol_run

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Graph",
    "InstanceMeta",
    "DimacsError",
    "DimacsSyntaxError",
    "DimacsStructureError",
    "DimacsRangeError",
    "DimacsWarning",
    "parse_dimacs",
    "load_dimacs",
    "to_dimacs",
    "density",
    "greedy_upper_bound",
    "dsatur_coloring",
    "Coloring",
    "Move",
    "random_coloring",
    "scan_conflicts",
    "TabuParams",
    "TabuState",
    "select_move",
    "tabucol",
    "tabucol_run",
    "EvalCounter",
    "Deadline",
    "Metaheuristic",
    "EnsembleConfig",
    "IslandReport",
    "KAttempt",
    "SolveResult",
    "assign_metaheuristic",
    "island_seed",
    "run_island",
    "master_reduce",
    "solve",
    "total_evaluations",
    "EnsembleGraphColoring",
]


def __getattr__(name: str):
    # Lazy: keeps scikit-learn off the import path for CLI and core use.
    if name == "EnsembleGraphColoring":
        from .estimator import EnsembleGraphColoring

        return EnsembleGraphColoring
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
