"""Island-model ensemble engine and the descending-k driver.

Worker islands run HHO, ABC, or TLBO (round-robin by island id) on private
populations at a fixed color budget k; the only cross-island traffic is one
best-solution report per island per k, reduced at the master. The outer loop
starts from the DSATUR bound and lowers k until the ensemble fails.

Islands derive their random streams from (base_seed, island_id, k), so the
sequential and thread-parallel execution modes produce identical results.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from . import bee_colony, hho, tlbo
from .budget import Deadline, EvalCounter
from .coloring import Coloring, random_coloring, scan_conflicts
from .graph import Graph, dsatur_coloring
from .tabucol import TabuParams

__all__ = [
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
]


class Metaheuristic(str, Enum):
    HHO = "HHO"
    ABC = "ABC"
    TLBO = "TLBO"


@dataclass(frozen=True)
class EnsembleConfig:
    """Run-wide knobs; per-metaheuristic blocks inherit the shared fields.

    `generations` and `population_size` override the matching fields of the
    hho/abc/tlbo parameter blocks so every island honors the same budget.
    """

    island_count: int = 4
    generations: int = 1000
    population_size: int = 20
    base_seed: int = 0
    tabu: TabuParams = field(default_factory=TabuParams)
    hho: hho.HhoParams = field(default_factory=hho.HhoParams)
    abc: bee_colony.AbcParams = field(default_factory=bee_colony.AbcParams)
    tlbo: tlbo.TlboParams = field(default_factory=tlbo.TlboParams)
    time_limit: float | None = None
    fitness_eval_budget: int | None = None
    parallel: bool = True

    def __post_init__(self):
        if self.island_count < 1:
            raise ValueError("island_count must be >= 1")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.fitness_eval_budget is not None and self.fitness_eval_budget < 1:
            raise ValueError("fitness_eval_budget must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class IslandReport:
    """A worker island's end-of-run message to the master."""

    island_id: int
    metaheuristic: Metaheuristic
    best: Coloring
    fitness_evaluations: int
    wall_time: float
    generations_completed: int

    def canonical_dict(self) -> dict:
        """Timing-free content for byte-stable comparisons."""
        return {
            "island_id": self.island_id,
            "metaheuristic": self.metaheuristic.value,
            "best_f": self.best.conflicts,
            "best_colors": [int(c) for c in self.best.colors],
            "fitness_evaluations": self.fitness_evaluations,
            "generations_completed": self.generations_completed,
        }


@dataclass
class KAttempt:
    k: int
    success: bool
    reports: list[IslandReport]
    dsatur_fallback: bool = False


@dataclass
class SolveResult:
    smallest_legal_k: int | None
    witness: Coloring | None
    per_k_history: list[KAttempt]
    total_fitness_evaluations: int

    def canonical_dict(self) -> dict:
        return {
            "smallest_legal_k": self.smallest_legal_k,
            "witness_k": None if self.witness is None else self.witness.k,
            "witness_colors": None
            if self.witness is None
            else [int(c) for c in self.witness.colors],
            "history": [
                {
                    "k": att.k,
                    "success": att.success,
                    "dsatur_fallback": att.dsatur_fallback,
                    "reports": [r.canonical_dict() for r in att.reports],
                }
                for att in self.per_k_history
            ],
            "total_fitness_evaluations": self.total_fitness_evaluations,
        }

    def canonical_json(self) -> str:
        """Deterministic serialization excluding wall-clock telemetry."""
        return json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))


def assign_metaheuristic(island_id: int) -> Metaheuristic:
    """Round-robin mapping: id mod 3 -> HHO, ABC, TLBO."""
    if island_id < 0:
        raise ValueError("island_id must be >= 0")
    return (Metaheuristic.HHO, Metaheuristic.ABC, Metaheuristic.TLBO)[island_id % 3]


def island_seed(base_seed: int, island_id: int, k: int) -> int:
    """Deterministic splittable-seed mix of (base_seed, island_id, k)."""
    entropy = (base_seed & 0xFFFFFFFFFFFFFFFF, island_id, k)
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])


def run_island(
    g: Graph,
    k: int,
    island_id: int,
    config: EnsembleConfig,
    deadline: Deadline | None = None,
) -> IslandReport:
    """Run one island at fixed k: seeded population, assigned metaheuristic.

    Stops at f = 0, after `generations` generations, past the deadline, or
    when the island's fitness-evaluation budget is spent. Resource expiry is
    a normal report, not an error.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    start = time.perf_counter()
    deadline = deadline or Deadline(None)
    algo = assign_metaheuristic(island_id)
    rng = np.random.default_rng(island_seed(config.base_seed, island_id, k))
    counter = EvalCounter(config.fitness_eval_budget)

    members: list[Coloring] = []
    for _ in range(config.population_size):
        if members and (counter.exhausted or deadline.expired):
            break
        members.append(random_coloring(g, k, rng))
        counter.add(1)

    if algo is Metaheuristic.HHO:
        params = replace(
            config.hho,
            population_size=max(len(members), 2),
            generations=config.generations,
        )
        state = hho.init_state(members)
        step = lambda: hho.hho_generation(state, params, config.tabu, rng, counter, deadline)
        current_best = lambda: state.rabbit
    elif algo is Metaheuristic.ABC:
        params = replace(config.abc, colony_size=max(len(members), 2))
        state = bee_colony.init_state(members)
        step = lambda: bee_colony.abc_generation(state, params, config.tabu, rng, counter, deadline)
        current_best = lambda: state.best
    else:
        params = replace(
            config.tlbo,
            population_size=max(len(members), 2),
            generations=config.generations,
        )
        state = tlbo.init_state(members)
        step = lambda: tlbo.tlbo_generation(state, params, config.tabu, rng, counter, deadline)
        current_best = lambda: state.teacher

    best = current_best().copy()
    generations_done = 0
    for _ in range(config.generations):
        if best.conflicts == 0 or counter.exhausted or deadline.expired:
            break
        step()
        cand = current_best()
        if cand.conflicts < best.conflicts:
            best = cand.copy()
        generations_done = _completed_generations(state)

    return IslandReport(
        island_id=island_id,
        metaheuristic=algo,
        best=best,
        fitness_evaluations=counter.count,
        wall_time=time.perf_counter() - start,
        generations_completed=generations_done,
    )


def _completed_generations(state) -> int:
    if isinstance(state, hho.HhoState):
        return state.t
    if isinstance(state, bee_colony.AbcState):
        return state.generation
    return state.generation


def master_reduce(reports: list[IslandReport]) -> IslandReport:
    """Minimum-f report; ties broken by the lowest island id."""
    if not reports:
        raise ValueError("master_reduce needs at least one report")
    return min(reports, key=lambda r: (r.best.conflicts, r.island_id))


def _run_all_islands(
    g: Graph, k: int, config: EnsembleConfig, deadline: Deadline
) -> list[IslandReport]:
    ids = range(config.island_count)
    if not config.parallel or config.island_count == 1:
        return [run_island(g, k, i, config, deadline) for i in ids]
    with ThreadPoolExecutor(max_workers=config.island_count) as pool:
        return list(pool.map(lambda i: run_island(g, k, i, config, deadline), ids))


def _verified_success(g: Graph, report: IslandReport) -> bool:
    if report.best.conflicts != 0:
        return False
    if scan_conflicts(g, report.best.colors) != 0:
        raise RuntimeError("conflict bookkeeping disagrees with a fresh edge scan")
    return True


def solve(
    g: Graph, config: EnsembleConfig, target_k: int | None = None
) -> SolveResult:
    """Find the smallest k the ensemble can legally color `g` with.

    Starts from the DSATUR upper bound and descends while the ensemble keeps
    reaching f = 0; the first failing k ends the run and the last success is
    returned with its witness. With `target_k`, a single fixed-k run is
    performed instead. If the ensemble misses even the starting bound (only
    possible under very tight budgets), the DSATUR coloring itself serves as
    the witness for that k.
    """
    deadline = Deadline.after(config.time_limit)
    history: list[KAttempt] = []

    if target_k is not None:
        reports = _run_all_islands(g, target_k, config, deadline)
        best = master_reduce(reports)
        success = _verified_success(g, best)
        history.append(KAttempt(target_k, success, reports))
        return SolveResult(
            smallest_legal_k=target_k if success else None,
            witness=best.best.copy() if success else None,
            per_k_history=history,
            total_fitness_evaluations=total_evaluations_of(history),
        )

    k0 = int(dsatur_coloring(g).max()) + 1
    witness: Coloring | None = None
    k = k0
    while k >= 1:
        reports = _run_all_islands(g, k, config, deadline)
        best = master_reduce(reports)
        success = _verified_success(g, best)
        history.append(KAttempt(k, success, reports))
        if not success:
            break
        witness = best.best.copy()
        k -= 1

    if witness is None:
        # Ensemble missed the DSATUR bound (budget starvation): the DSATUR
        # coloring is itself a verified proper k0-coloring.
        colors = dsatur_coloring(g)
        witness = Coloring(g, k0, colors)
        if scan_conflicts(g, witness.colors) != 0:
            raise RuntimeError("DSATUR produced an improper coloring")
        history.append(KAttempt(k0, True, [], dsatur_fallback=True))

    return SolveResult(
        smallest_legal_k=witness.k,
        witness=witness,
        per_k_history=history,
        total_fitness_evaluations=total_evaluations_of(history),
    )


def total_evaluations_of(history: list[KAttempt]) -> int:
    return sum(r.fitness_evaluations for att in history for r in att.reports)


def total_evaluations(result: SolveResult) -> int:
    """Fitness evaluations summed over every island report in the history."""
    return total_evaluations_of(result.per_k_history)
