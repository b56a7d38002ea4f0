"""Discrete Harris Hawk Optimization over coloring populations.

Every HHO phase is realized as a vertex-subset color transfer whose size
encodes the phase's perturbation strength: exploration moves the largest
subsets, the high-perturbation besiege a large fraction, soft besiege a
J-scaled fraction, hard besiege a single vertex. Each candidate is refined
by TabuCol and replaces its hawk when not worse; the rabbit (incumbent best)
is re-selected after each generation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .budget import Deadline, EvalCounter
from .coloring import Coloring
from .tabucol import TabuParams, tabucol_run

__all__ = [
    "HhoParams",
    "HhoState",
    "escaping_energy",
    "exploration_transfer",
    "exploration_from_best",
    "soft_besiege",
    "hard_besiege",
    "init_state",
    "hho_generation",
]


@dataclass(frozen=True)
class HhoParams:
    population_size: int = 20
    generations: int = 1000
    exploration_subset_fraction: float = 0.1
    besiege_subset_fraction: float = 0.3
    minimal_subset_size: int = 1

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        for frac in (self.exploration_subset_fraction, self.besiege_subset_fraction):
            if not (0.0 < frac <= 1.0):
                raise ValueError("subset fractions must lie in (0, 1]")
        if self.minimal_subset_size < 1:
            raise ValueError("minimal_subset_size must be >= 1")


@dataclass
class HhoState:
    """Population of hawks plus the incumbent rabbit and diagnostics.

    `last_energy` and `last_phase` record, per hawk, the escaping energy and
    the operator branch taken in the most recent generation (0 peer
    exploration, 1 best-guided exploration, 2 soft besiege, 3 hard besiege,
    4 high-perturbation besiege, 5 minimal transfer).
    """

    hawks: list[Coloring]
    rabbit: Coloring
    t: int = 0
    last_e0: np.ndarray = field(default_factory=lambda: np.empty(0))
    last_energy: np.ndarray = field(default_factory=lambda: np.empty(0))
    last_phase: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=np.int8))


def escaping_energy(e0: float, t: int, total: int) -> float:
    """Prey escaping energy 2*e0*(1 - t/total), decaying over generations."""
    if total < 1:
        raise ValueError("total generations must be >= 1")
    if t > total:
        raise ValueError("t must not exceed the total generation count")
    return 2.0 * e0 * (1.0 - t / total)


def _subset(n: int, size: int, rng: np.random.Generator) -> np.ndarray:
    size = max(1, min(size, n))
    return rng.choice(n, size=size, replace=False).astype(np.int64)


def _transfer(donor: Coloring, base: Coloring, size: int, rng) -> Coloring:
    """Copy of `base` with `size` uniformly chosen vertices taking donor colors."""
    from ._kernels import transfer_kernel

    child = base.copy()
    subset = _subset(base.graph.vertex_count, size, rng)
    child.conflicts = int(
        transfer_kernel(
            base.graph.adj_offsets,
            base.graph.adj_indices,
            child.colors,
            child.gamma,
            child.conflicts,
            donor.colors,
            subset,
        )
    )
    return child


def exploration_transfer(
    h1: Coloring, h2: Coloring, fraction: float, rng: np.random.Generator
) -> Coloring:
    """Perching guided by a peer: copy a vertex subset of h1's colors into h2."""
    _check_compatible(h1, h2)
    size = math.ceil(fraction * h2.graph.vertex_count)
    return _transfer(h1, h2, size, rng)


def exploration_from_best(
    h: Coloring, rabbit: Coloring, fraction: float, rng: np.random.Generator
) -> Coloring:
    """Perching guided by the best hawk: subset copied from the rabbit."""
    return exploration_transfer(rabbit, h, fraction, rng)


def soft_besiege(
    h: Coloring,
    rabbit: Coloring,
    jump: float,
    rng: np.random.Generator,
    exploration_fraction: float = 0.1,
) -> Coloring:
    """Surprise-jump copy from the rabbit, subset size scaling with J in [0, 2)."""
    _check_compatible(h, rabbit)
    n = h.graph.vertex_count
    size = max(1, math.ceil((jump / 2.0) * exploration_fraction * n))
    return _transfer(rabbit, h, size, rng)


def hard_besiege(
    h: Coloring, rabbit: Coloring, energy: float, rng: np.random.Generator
) -> Coloring:
    """Low-energy strike: exactly one rabbit vertex color copied into the hawk."""
    del energy  # dispatch on |E| happens at the caller; the copy size is fixed
    _check_compatible(h, rabbit)
    return _transfer(rabbit, h, 1, rng)


def _check_compatible(a: Coloring, b: Coloring) -> None:
    if a.graph is not b.graph or a.k != b.k:
        raise ValueError("colorings must share the same graph and color budget")


def init_state(members: list[Coloring]) -> HhoState:
    best = min(range(len(members)), key=lambda i: members[i].conflicts)
    return HhoState(hawks=members, rabbit=members[best])


def hho_generation(
    state: HhoState,
    params: HhoParams,
    tabu: TabuParams,
    rng: np.random.Generator,
    counter: EvalCounter | None = None,
    deadline: Deadline | None = None,
) -> HhoState:
    """One generation: per-hawk energy draw, operator dispatch, TabuCol, accept.

    Per hawk: fresh E0 ~ U(-1, 1) and E = 2*E0*(1 - t/T). |E| >= 1 explores
    (q < 0.5 peer-guided, else rabbit-guided); otherwise exploitation
    dispatches on (r, |E|): soft besiege, hard besiege, high-perturbation
    rabbit transfer, or minimal rabbit transfer into a random hawk. The
    TabuCol-refined candidate replaces hawk i when its f is not worse.
    """
    counter = counter or EvalCounter()
    hawks = state.hawks
    pop = len(hawks)
    rabbit = state.rabbit
    e0s = np.empty(pop)
    energies = np.empty(pop)
    phases = np.full(pop, -1, dtype=np.int8)
    completed = True

    for i in range(pop):
        if counter.exhausted or (deadline is not None and deadline.expired):
            completed = False
            break
        e0 = rng.uniform(-1.0, 1.0)
        energy = escaping_energy(e0, state.t, params.generations)
        e0s[i] = e0
        energies[i] = energy

        if abs(energy) >= 1.0:
            q = rng.random()
            if q < 0.5:
                peer = hawks[int(rng.integers(pop))]
                candidate = exploration_transfer(
                    peer, hawks[i], params.exploration_subset_fraction, rng
                )
                phases[i] = 0
            else:
                candidate = exploration_from_best(
                    hawks[i], rabbit, params.exploration_subset_fraction, rng
                )
                phases[i] = 1
        else:
            r = rng.random()
            if r >= 0.5 and abs(energy) >= 0.5:
                jump = rng.uniform(0.0, 2.0)
                candidate = soft_besiege(
                    hawks[i], rabbit, jump, rng, params.exploration_subset_fraction
                )
                phases[i] = 2
            elif r >= 0.5:
                candidate = hard_besiege(hawks[i], rabbit, energy, rng)
                phases[i] = 3
            elif abs(energy) >= 0.5:
                candidate = exploration_transfer(
                    rabbit, hawks[i], params.besiege_subset_fraction, rng
                )
                phases[i] = 4
            else:
                base = hawks[int(rng.integers(pop))]
                candidate = _transfer(rabbit, base, params.minimal_subset_size, rng)
                phases[i] = 5

        counter.add(1)
        run = tabucol_run(
            candidate, tabu, rng, eval_budget=counter.remaining, deadline=deadline
        )
        counter.add(run.evaluations)
        if run.coloring.conflicts <= hawks[i].conflicts:
            hawks[i] = run.coloring

    best = min(range(pop), key=lambda i: hawks[i].conflicts)
    state.rabbit = hawks[best]
    state.last_e0 = e0s
    state.last_energy = energies
    state.last_phase = phases
    if completed:
        state.t += 1
    return state
