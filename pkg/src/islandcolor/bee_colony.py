"""Artificial Bee Colony over coloring populations.

Food sources are colorings with a stale-visit counter. Each generation runs
scout, onlooker, and employed phases in that order: scouts replace the most
stagnant sources with fresh random colorings, onlookers revisit sources
drawn fitness-proportionally by quality 1/(1+f), and every source receives
one employed visit. A visit perturbs conflicting vertices, refines with
TabuCol, and accepts greedily (strict improvement resets the counter).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .budget import Deadline, EvalCounter
from .coloring import Coloring, random_coloring
from .tabucol import TabuParams, tabucol_run

__all__ = [
    "AbcParams",
    "FoodSource",
    "AbcState",
    "source_weights",
    "select_proportional",
    "employed_phase",
    "onlooker_phase",
    "scout_phase",
    "init_state",
    "abc_generation",
]


@dataclass(frozen=True)
class AbcParams:
    colony_size: int = 20
    onlooker_count: int | None = None  # defaults to colony_size // 2
    scout_count: int = 1
    abandonment_limit: int = 10
    neighbor_perturbation: int = 1

    def __post_init__(self):
        if self.colony_size < 2:
            raise ValueError("colony_size must be >= 2")
        if self.scout_count < 1:
            raise ValueError("scout_count must be >= 1")
        if self.abandonment_limit < 1:
            raise ValueError("abandonment_limit must be >= 1")
        if self.neighbor_perturbation < 1:
            raise ValueError("neighbor_perturbation must be >= 1")
        if self.onlooker_count is not None and self.onlooker_count < 1:
            raise ValueError("onlooker_count must be >= 1 when given")

    @property
    def onlookers(self) -> int:
        return (
            self.colony_size // 2
            if self.onlooker_count is None
            else self.onlooker_count
        )


@dataclass
class FoodSource:
    solution: Coloring
    trials: int = 0


@dataclass
class AbcState:
    sources: list[FoodSource]
    best: Coloring  # best-ever copy, exempt from abandonment by construction
    generation: int = 0


def source_weights(sources: list[FoodSource]) -> np.ndarray:
    """Selection weights quality(s) = 1 / (1 + f(s))."""
    return np.array([1.0 / (1.0 + src.solution.conflicts) for src in sources])


def select_proportional(
    weights: np.ndarray, count: int, rng: np.random.Generator
) -> np.ndarray:
    """`count` independent fitness-proportional draws of source indices."""
    probs = weights / weights.sum()
    return rng.choice(weights.size, size=count, replace=True, p=probs)


def _visit(
    source: FoodSource,
    params: AbcParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter,
    deadline: Deadline | None,
) -> None:
    """One bee visit: perturb, refine, accept greedily."""
    cand = source.solution.copy()
    conflicted = cand.conflicting_vertices()
    pool = conflicted if conflicted.size else np.arange(cand.graph.vertex_count)
    take = min(params.neighbor_perturbation, pool.size)
    if take and cand.k > 1:
        for v in rng.choice(pool, size=take, replace=False):
            c = int(rng.integers(cand.k - 1))
            if c >= cand.colors[v]:
                c += 1
            cand.recolor(int(v), c)
    counter.add(1)
    run = tabucol_run(
        cand, tabu, rng, eval_budget=counter.remaining, deadline=deadline
    )
    counter.add(run.evaluations)
    if run.coloring.conflicts < source.solution.conflicts:
        source.solution = run.coloring
        source.trials = 0
    else:
        source.trials += 1


def employed_phase(
    sources: list[FoodSource],
    params: AbcParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> list[FoodSource]:
    """Every source receives its employed bee's visit."""
    counter = counter or EvalCounter()
    for source in sources:
        if counter.exhausted or (deadline is not None and deadline.expired):
            break
        _visit(source, params, tabu, rng, counter, deadline)
    return sources


def onlooker_phase(
    sources: list[FoodSource],
    params: AbcParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> list[FoodSource]:
    """Onlookers revisit sources drawn proportionally to 1/(1+f)."""
    counter = counter or EvalCounter()
    picks = select_proportional(source_weights(sources), params.onlookers, rng)
    for idx in picks:
        if counter.exhausted or (deadline is not None and deadline.expired):
            break
        _visit(sources[int(idx)], params, tabu, rng, counter, deadline)
    return sources


def scout_phase(
    sources: list[FoodSource],
    params: AbcParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
) -> list[FoodSource]:
    """Replace up to scout_count stagnant sources with fresh random colorings.

    Stagnant = trials >= abandonment_limit, served highest-trials first (ties
    to the lower index). The current best source is never abandoned.
    """
    counter = counter or EvalCounter()
    fs = [src.solution.conflicts for src in sources]
    best_idx = int(np.argmin(fs))
    stale = [
        i for i in range(len(sources))
        if i != best_idx and sources[i].trials >= params.abandonment_limit
    ]
    stale.sort(key=lambda i: (-sources[i].trials, i))
    for i in stale[: params.scout_count]:
        if counter.exhausted:
            break
        graph = sources[i].solution.graph
        k = sources[i].solution.k
        sources[i] = FoodSource(random_coloring(graph, k, rng), trials=0)
        counter.add(1)
    return sources


def init_state(members: list[Coloring]) -> AbcState:
    sources = [FoodSource(m) for m in members]
    best = min(members, key=lambda m: m.conflicts)
    return AbcState(sources=sources, best=best.copy())


def abc_generation(
    state: AbcState,
    params: AbcParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> AbcState:
    """One generation: scouts forage, onlookers evaluate, employed collect."""
    counter = counter or EvalCounter()
    scout_phase(state.sources, params, rng, counter)
    onlooker_phase(state.sources, params, tabu, rng, counter, deadline)
    employed_phase(state.sources, params, tabu, rng, counter, deadline)
    for src in state.sources:
        if src.solution.conflicts < state.best.conflicts:
            state.best = src.solution.copy()
    if not counter.exhausted and (deadline is None or not deadline.expired):
        state.generation += 1
    return state
