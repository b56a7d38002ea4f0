"""TabuCol local search: one-vertex recoloring moves with a tabu list.

The exploitation engine shared by every metaheuristic. A move recolors a
conflicting vertex; the reverse (vertex, old color) pair then stays tabu for
`tenure` iterations unless aspiration (beating the best f seen) unlocks it.
The search runs until f = 0 or `nbmax` iterations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import (
    FLAG_ASPIRATION,
    FLAG_FALLBACK,
    FLAG_NORMAL,
    rebuild_gamma_kernel,
    new_rng_state,
    tabucol_chunk_kernel,
)
from .budget import Deadline
from .coloring import Coloring, Move

__all__ = [
    "TabuParams",
    "TabuState",
    "TabuRun",
    "select_move",
    "tabucol",
    "tabucol_run",
    "FLAG_NORMAL",
    "FLAG_ASPIRATION",
    "FLAG_FALLBACK",
]

# Chunk length used when a wall-clock deadline must be polled mid-search.
_DEADLINE_CHUNK = 8192


@dataclass(frozen=True)
class TabuParams:
    """Tuning knobs; defaults are tenure 7 and depth 100,000."""

    tenure: int = 7
    nbmax: int = 100_000
    rep_policy: str = "all"  # "all" = every critical move, "sampled" = rep draws
    rep: int = 0

    def __post_init__(self):
        if self.tenure < 1:
            raise ValueError("tenure must be >= 1")
        if self.nbmax < 1:
            raise ValueError("nbmax must be >= 1")
        if self.rep_policy not in ("all", "sampled"):
            raise ValueError("rep_policy must be 'all' or 'sampled'")
        if self.rep_policy == "sampled" and self.rep < 1:
            raise ValueError("sampled policy needs rep >= 1")

    @property
    def rep_arg(self) -> int:
        return self.rep if self.rep_policy == "sampled" else 0


@dataclass
class TabuState:
    """Tabu bookkeeping for the move-selection surface.

    `expiry` maps (vertex, color) to the iteration until which the pair is
    tabu: the pair is tabu at iteration t iff expiry > t. `best_f` is the
    aspiration level (a tabu move unlocks when it would beat it).
    """

    expiry: dict[tuple[int, int], int] = field(default_factory=dict)
    iteration: int = 0
    best_f: int = 1 << 40

    def is_tabu(self, vertex: int, color: int) -> bool:
        return self.expiry.get((vertex, color), 0) > self.iteration

    def forbid(self, vertex: int, color: int, tenure: int) -> None:
        self.expiry[(vertex, color)] = self.iteration + tenure + 1


def select_move(
    s: Coloring, ts: TabuState, rng: np.random.Generator
) -> Move:
    """Pick a minimum-delta admissible move among critical vertices.

    Admissible = non-tabu, or tabu but beating ts.best_f (aspiration). Ties
    are broken uniformly at random. If every candidate is tabu and none
    aspirates, the least-bad tabu move is returned instead of stalling.
    """
    if s.conflicts == 0:
        raise ValueError("select_move requires a conflicted coloring")
    if s.k < 2:
        raise ValueError("no moves exist with a single color")

    crit = s.conflicting_vertices()
    cur = s.colors[crit]
    deltas = s.gamma[crit, :].astype(np.int64) - s.gamma[crit, cur][:, None]
    deltas[np.arange(crit.size), cur] = 1 << 40  # staying put is not a move

    tabu = np.zeros_like(deltas, dtype=bool)
    for row, v in enumerate(crit):
        for c in range(s.k):
            if c != cur[row] and ts.is_tabu(int(v), c):
                tabu[row, c] = True
    aspirates = (s.conflicts + deltas) < ts.best_f
    admissible = ~tabu | aspirates

    pool = np.where(admissible, deltas, 1 << 40)
    best = pool.min()
    if best >= 1 << 40:  # everything tabu, nothing aspirates
        pool = deltas
        best = pool.min()
    rows, cols = np.nonzero(pool == best)
    pick = int(rng.integers(rows.size))
    v = int(crit[rows[pick]])
    return Move(v, int(s.colors[v]), int(cols[pick]), int(best))


@dataclass
class TabuRun:
    """Outcome details of one tabucol() invocation."""

    coloring: Coloring
    iterations: int
    evaluations: int
    trace: np.ndarray | None = None  # rows: vertex, from, to, delta, flag


def tabucol_run(
    s: Coloring,
    params: TabuParams,
    rng: np.random.Generator,
    *,
    eval_budget: int | None = None,
    deadline: Deadline | None = None,
    record_trace: bool = False,
) -> TabuRun:
    """Refine `s` in place with TabuCol; returns the run details.

    The coloring ends at the best solution encountered (never worse than the
    input). The search stops at f = 0, after nbmax iterations, when the
    evaluation budget runs out, or past the deadline.
    """
    graph = s.graph
    n = graph.vertex_count
    seed = int(rng.integers(0, np.iinfo(np.int64).max))

    if s.conflicts == 0:
        return TabuRun(s, 0, 0, np.empty((0, 5), dtype=np.int64) if record_trace else None)

    max_evals = eval_budget if eval_budget is not None else 1 << 62
    trace_cap = min(params.nbmax, 1 << 22) if record_trace else 0
    trace = np.empty((trace_cap, 5), dtype=np.int64)
    tabu_until = np.zeros((n, s.k), dtype=np.int64)
    best_colors = s.colors.copy()
    best_f = s.conflicts
    rng_state = new_rng_state(seed)
    crit_buf = np.empty(n, dtype=np.int32)

    chunk = _DEADLINE_CHUNK if deadline is not None and deadline.at is not None else params.nbmax
    it = 0
    evals = 0
    trace_len = 0
    conflicts = s.conflicts
    while it < params.nbmax and conflicts > 0 and evals < max_evals:
        if deadline is not None and deadline.expired:
            break
        stop = min(it + chunk, params.nbmax)
        conflicts, best_f, done, used, trace_len = tabucol_chunk_kernel(
            graph.adj_offsets,
            graph.adj_indices,
            s.colors,
            s.gamma,
            conflicts,
            best_colors,
            best_f,
            tabu_until,
            rng_state,
            it,
            stop,
            params.tenure,
            max_evals - evals,
            params.rep_arg,
            crit_buf,
            trace,
            trace_len,
        )
        it += done
        evals += used
        if done == 0:
            break  # no admissible or fallback move exists (isolated corner)

    s.colors[:] = best_colors
    if it > 0:
        s.conflicts = int(
            rebuild_gamma_kernel(graph.adj_offsets, graph.adj_indices, s.colors, s.gamma)
        )
    return TabuRun(s, it, evals, trace[:trace_len].copy() if record_trace else None)


def tabucol(
    s: Coloring,
    params: TabuParams,
    rng: np.random.Generator,
    *,
    eval_budget: int | None = None,
    deadline: Deadline | None = None,
) -> Coloring:
    """Convenience wrapper around :func:`tabucol_run` returning the coloring."""
    return tabucol_run(
        s, params, rng, eval_budget=eval_budget, deadline=deadline
    ).coloring
