"""Teaching-Learning-Based Optimization over coloring populations.

Parameter-free beyond population size and generation count. The teacher
phase recombines every learner with the class best through greedy partition
crossover; the learner phase recombines random peer pairs, with offspring
refined by TabuCol and inserted over the worst member when not worse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import gpx_kernel
from .budget import Deadline, EvalCounter
from .coloring import Coloring
from .tabucol import TabuParams, tabucol_run

__all__ = [
    "TlboParams",
    "ClassState",
    "partition_crossover",
    "teacher_phase",
    "learner_phase",
    "init_state",
    "tlbo_generation",
]


@dataclass(frozen=True)
class TlboParams:
    population_size: int = 20
    generations: int = 1000

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")


@dataclass
class ClassState:
    learners: list[Coloring]
    teacher: Coloring
    generation: int = 0


def partition_crossover(
    p1: Coloring, p2: Coloring, rng: np.random.Generator
) -> Coloring:
    """Greedy partition crossover of two parent colorings.

    Alternating between parents (p1 first), each child class inherits the
    largest color class remaining in the current parent (ties to the lower
    class index); inherited vertices leave both parents. Vertices still
    unassigned after k classes get uniform random colors.
    """
    if p1.graph is not p2.graph or p1.k != p2.k:
        raise ValueError("parents must share the same graph and color budget")
    seed = int(rng.integers(0, np.iinfo(np.int64).max))
    child_colors = gpx_kernel(p1.colors, p2.colors, p1.k, seed)
    return Coloring(p1.graph, p1.k, child_colors)


def _worst_index(learners: list[Coloring]) -> int:
    worst = 0
    for i in range(1, len(learners)):
        if learners[i].conflicts > learners[worst].conflicts:
            worst = i
    return worst


def _best_index(learners: list[Coloring]) -> int:
    best = 0
    for i in range(1, len(learners)):
        if learners[i].conflicts < learners[best].conflicts:
            best = i
    return best


def teacher_phase(
    state: ClassState,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> ClassState:
    """Recombine every learner with the teacher; accept non-worsening results."""
    counter = counter or EvalCounter()
    learners = state.learners
    for i in range(len(learners)):
        if counter.exhausted or (deadline is not None and deadline.expired):
            break
        child = partition_crossover(state.teacher, learners[i], rng)
        counter.add(1)
        run = tabucol_run(
            child, tabu, rng, eval_budget=counter.remaining, deadline=deadline
        )
        counter.add(run.evaluations)
        if run.coloring.conflicts <= learners[i].conflicts:
            learners[i] = run.coloring
    state.teacher = learners[_best_index(learners)]
    return state


def learner_phase(
    state: ClassState,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> ClassState:
    """Peer recombination: offspring of random distinct pairs replace the worst."""
    counter = counter or EvalCounter()
    learners = state.learners
    pop = len(learners)
    for _ in range(pop):
        if counter.exhausted or (deadline is not None and deadline.expired):
            break
        i = int(rng.integers(pop))
        j = int(rng.integers(pop - 1))
        if j >= i:
            j += 1
        child = partition_crossover(learners[i], learners[j], rng)
        counter.add(1)
        run = tabucol_run(
            child, tabu, rng, eval_budget=counter.remaining, deadline=deadline
        )
        counter.add(run.evaluations)
        worst = _worst_index(learners)
        if run.coloring.conflicts <= learners[worst].conflicts:
            learners[worst] = run.coloring
    state.teacher = learners[_best_index(learners)]
    return state


def init_state(members: list[Coloring]) -> ClassState:
    return ClassState(learners=members, teacher=members[_best_index(members)])


def tlbo_generation(
    state: ClassState,
    params: TlboParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> ClassState:
    """Teacher phase then learner phase; the teacher invariant is restored."""
    counter = counter or EvalCounter()
    teacher_phase(state, tabu, rng, counter, deadline)
    learner_phase(state, tabu, rng, counter, deadline)
    if not counter.exhausted and (deadline is None or not deadline.expired):
        state.generation += 1
    return state
