"""Acceptance gate: one test (or parametrized family) per criterion.

Criteria touching the published DIMACS benchmark files run whenever the
files are present (./instances or $ISLANDCOLOR_INSTANCES) and skip
per-instance otherwise; everything else always runs. A per-criterion
PASS/FAIL line is printed in the terminal summary (see conftest.py).
"""

from dataclasses import replace

import numpy as np
import pytest

from islandcolor import (
    EnsembleConfig,
    Graph,
    Metaheuristic,
    TabuParams,
    assign_metaheuristic,
    load_dimacs,
    random_coloring,
    solve,
    tabucol_run,
)
from islandcolor.coloring import Move
from islandcolor.registry import HARD_ROWS, REGISTRY, SMALL_ROWS
from islandcolor.tabucol import FLAG_ASPIRATION, FLAG_FALLBACK

import oracles
from conftest import instance_path, require_instance

REFERENCE_DEFAULTS = dict(
    island_count=4,
    generations=1000,
    population_size=20,
    tabu=TabuParams(tenure=7, nbmax=100_000),
)

# criterion 1 rows: (instance, published k)
SMALL_TARGETS = [
    ("DSJC125.1", 5),
    ("R125.1", 5),
    ("R250.1", 8),
    ("le450_25a", 25),
    ("le450_25b", 25),
    ("DSJR500.1", 12),
    ("school1", 14),
]

HARD_SMOKE = ["C2000.5", "DSJC1000.5", "latin_sqr_10", "flat1000_76_0"]


@pytest.mark.parametrize("name,k", SMALL_TARGETS, ids=[n for n, _ in SMALL_TARGETS])
def test_c1_small_instance_reproduction(name, k):
    """Published k reached in >= 18/20 seeded runs, <= 120 s per run."""
    path = require_instance(name)
    graph = load_dimacs(str(path))
    hits = 0
    for run_idx in range(20):
        config = EnsembleConfig(
            **REFERENCE_DEFAULTS, base_seed=run_idx, time_limit=120.0
        )
        result = solve(graph, config, target_k=k)
        hits += result.witness is not None
    assert hits >= 18, f"{name}: reached k={k} in only {hits}/20 runs"


def test_c2_medium_instance_dsjc125_5():
    """DSJC125.5 at k=17 in >= 10/20 runs, 10-minute cap per run."""
    path = require_instance("DSJC125.5")
    graph = load_dimacs(str(path))
    hits = 0
    for run_idx in range(20):
        config = EnsembleConfig(
            **REFERENCE_DEFAULTS, base_seed=run_idx, time_limit=600.0
        )
        result = solve(graph, config, target_k=17)
        hits += result.witness is not None
    assert hits >= 10, f"DSJC125.5: reached k=17 in only {hits}/20 runs"


@pytest.mark.parametrize("name", HARD_SMOKE)
def test_c2_hard_instances_run_under_time_limit(name):
    """Table-3-class instances run to completion under a user time limit;
    no quality threshold is asserted."""
    path = require_instance(name)
    graph = load_dimacs(str(path))
    config = EnsembleConfig(
        island_count=2,
        generations=1000,
        population_size=20,
        tabu=TabuParams(tenure=7, nbmax=100_000),
        time_limit=30.0,
    )
    result = solve(graph, config)
    assert result.witness is not None
    assert result.witness.is_proper()


def test_c2_hard_scale_surrogate_runs_under_time_limit(rng):
    """Always-on stand-in for the hard rows: a dense 1500-vertex random
    graph must run cleanly under a tight wall-clock budget."""
    n = 1500
    edges = oracles.random_gnm(n, n * (n - 1) // 4, rng)  # density ~ 0.5
    graph = Graph(n, edges)
    config = EnsembleConfig(
        island_count=2,
        generations=1000,
        population_size=20,
        tabu=TabuParams(tenure=7, nbmax=100_000),
        time_limit=8.0,
        parallel=False,
    )
    result = solve(graph, config)
    assert result.witness is not None
    assert oracles.recount_conflicts(edges, result.witness.colors) == 0
    assert result.witness.k <= graph.max_degree + 1


def test_c3_exact_oracle_equivalence():
    """smallest_legal_k == brute-force chromatic number on 201 random
    graphs with n <= 9, p in {0.3, 0.5, 0.7} (200 generations, 1 island)."""
    rng = np.random.default_rng(321321)
    config = EnsembleConfig(
        island_count=1,
        generations=200,
        population_size=20,
        tabu=TabuParams(tenure=7, nbmax=500),
        fitness_eval_budget=60_000,
        parallel=False,
    )
    mismatches = []
    cases = 0
    for p in (0.3, 0.5, 0.7):
        for _ in range(67):
            n = int(rng.integers(5, 10))
            edges = oracles.random_gnp(n, p, rng)
            g = Graph(n, edges)
            expected = oracles.chromatic_number(n, edges)
            got = solve(g, replace(config, base_seed=cases))
            cases += 1
            if got.smallest_legal_k != expected:
                mismatches.append((n, p, expected, got.smallest_legal_k))
    assert cases >= 200
    assert not mismatches, f"{len(mismatches)} mismatches: {mismatches[:5]}"


def test_c4_incremental_fitness_correctness():
    """10,000 randomized move sequences end exactly at the from-scratch
    recomputation of both f and the conflict table."""
    rng = np.random.default_rng(877)
    sequences = 0
    for _ in range(250):
        n = int(rng.integers(2, 51))
        p = float(rng.choice([0.1, 0.3, 0.5, 0.8]))
        edges = oracles.random_gnp(n, p, rng)
        g = Graph(n, edges)
        k = int(rng.integers(2, 8))
        for _ in range(40):
            c = random_coloring(g, k, rng)
            for _ in range(int(rng.integers(5, 30))):
                v = int(rng.integers(n))
                to = int(rng.integers(k - 1))
                if to >= c.colors[v]:
                    to += 1
                c.apply_move(Move(v, int(c.colors[v]), to, c.move_delta(v, to)))
            assert c.conflicts == oracles.recount_conflicts(edges, c.colors)
            assert np.array_equal(
                c.gamma, oracles.recount_gamma(n, k, edges, c.colors)
            )
            sequences += 1
    assert sequences >= 10_000


def test_c5_tabucol_bipartite_and_properties():
    """TabuCol 2-colors 100 random bipartite graphs (100%); monotone-best
    and tabu-discipline hold across 1,000 traced trials."""
    params = TabuParams(tenure=7, nbmax=100_000)
    for seed in range(100):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(4, 61))
        n, edges = oracles.random_bipartite(n, 0.35, rng)
        g = Graph(n, edges)
        c = random_coloring(g, 2, rng)
        run = tabucol_run(c, params, rng)
        assert run.coloring.conflicts == 0, f"bipartite seed {seed} unsolved"
        assert oracles.recount_conflicts(edges, run.coloring.colors) == 0

    tenure = 7
    reversal_checks = 0
    for seed in range(1000):
        rng = np.random.default_rng(10_000 + seed)
        n = int(rng.integers(8, 18))
        edges = oracles.random_gnp(n, 0.5, rng)
        g = Graph(n, edges)
        c = random_coloring(g, 3, rng)
        before = c.conflicts
        run = tabucol_run(
            c, TabuParams(tenure=tenure, nbmax=150), rng, record_trace=True
        )
        assert run.coloring.conflicts <= before  # monotone best
        trace = run.trace
        if trace is None or not len(trace):
            continue
        f = 0
        best = 0
        for row in trace:
            f += row[3]
            if row[4] == FLAG_ASPIRATION:
                assert f < best
            best = min(best, f)
        for i in range(len(trace)):
            v, frm = trace[i, 0], trace[i, 1]
            for j in range(i + 1, min(i + 1 + tenure, len(trace))):
                if trace[j, 0] == v and trace[j, 2] == frm:
                    assert trace[j, 4] in (FLAG_ASPIRATION, FLAG_FALLBACK)
                    reversal_checks += 1
    assert reversal_checks > 0


def test_c6_determinism_across_modes():
    """Byte-identical canonical SolveResults: repeated runs agree, and the
    sequential and concurrent modes agree, across 12 configs."""
    graphs = []
    for seed, (n, p) in enumerate([(12, 0.4), (16, 0.5), (20, 0.3)]):
        r = np.random.default_rng(seed)
        graphs.append(Graph(n, oracles.random_gnp(n, p, r)))

    checked = 0
    for gi, g in enumerate(graphs):
        for islands, budget in ((1, 3000), (2, 4000), (4, 2500), (5, 2000)):
            config = EnsembleConfig(
                island_count=islands,
                generations=40,
                population_size=5,
                base_seed=gi * 100 + islands,
                tabu=TabuParams(nbmax=400),
                fitness_eval_budget=budget,
                parallel=False,
            )
            seq1 = solve(g, config).canonical_json()
            seq2 = solve(g, config).canonical_json()
            par1 = solve(g, replace(config, parallel=True)).canonical_json()
            par2 = solve(g, replace(config, parallel=True)).canonical_json()
            assert seq1 == seq2, "sequential mode not reproducible"
            assert par1 == par2, "concurrent mode not reproducible"
            assert seq1 == par1, "modes disagree"
            checked += 1
    assert checked >= 10


def test_c7_evaluation_count_linearity(k4):
    """Per-island budget of 20,000 evaluations: totals scale exactly
    linearly at 1, 2, 4, 8 islands."""
    for islands in (1, 2, 4, 8):
        config = EnsembleConfig(
            island_count=islands,
            generations=10**9,
            population_size=20,
            tabu=TabuParams(tenure=7, nbmax=100_000),
            fitness_eval_budget=20_000,
            parallel=islands > 1,
        )
        # k=3 on K4 is infeasible, so every island spends its full budget
        result = solve(k4, config, target_k=3)
        expected = 20_000 * islands
        assert abs(result.total_fitness_evaluations - expected) <= islands


def test_c8_round_robin_balance():
    """63 islands split exactly 21/21/21 across the three metaheuristics."""
    counts = {m: 0 for m in Metaheuristic}
    for island_id in range(63):
        counts[assign_metaheuristic(island_id)] += 1
    assert counts == {
        Metaheuristic.HHO: 21,
        Metaheuristic.ABC: 21,
        Metaheuristic.TLBO: 21,
    }


def test_c9_registry_encoded():
    """All 43 table rows are encoded with their published values."""
    assert len(SMALL_ROWS) == 19
    assert len(HARD_ROWS) == 24
    spot = {
        "DSJC125.1": (125, 736, 5),
        "DSJC250.5": (250, 15668, 28),
        "R250.1": (250, 867, 8),
        "C2000.5": (2000, 999836, 153),
        "C4000.5": (4000, 4000268, 280),
        "le450_25d": (450, 17425, 25),
        "flat1000_60_0": (1000, 245830, 60),
        "latin_sqr_10": (900, 307350, 98),
    }
    for name, (nv, ne, kstar) in spot.items():
        row = REGISTRY[name]
        assert (row.vertex_count, row.edge_count, row.best_known_k) == (nv, ne, kstar)
    for row in SMALL_ROWS + HARD_ROWS:
        assert row.best_known_k >= 1
        assert row.edge_count <= row.vertex_count * (row.vertex_count - 1) // 2


@pytest.mark.parametrize(
    "row", SMALL_ROWS + HARD_ROWS, ids=[f"{r.name}-{i}" for i, r in enumerate(SMALL_ROWS + HARD_ROWS)]
)
def test_c9_registry_matches_local_files(row):
    """Vertex/edge counts of each locally available file match its row."""
    path = instance_path(row.name)
    if path is None:
        pytest.skip(f"{row.name}: instance file not available locally")
    graph = load_dimacs(str(path))
    assert graph.vertex_count == row.vertex_count
    assert graph.edge_count == row.edge_count


# --- supplementary, always-on coverage at criterion-1/2 scale -------------

SURROGATE_TARGETS = [
    ("queen6_6", *oracles.queen_graph(6), 7),
    ("queen8_8", *oracles.queen_graph(8), 9),
    ("myciel5", *(oracles.mycielski_graph(5)[:2]), 6),
    ("myciel7", *(oracles.mycielski_graph(7)[:2]), 8),
]


@pytest.mark.parametrize(
    "name,n,edges,chi", SURROGATE_TARGETS, ids=[t[0] for t in SURROGATE_TARGETS]
)
def test_supplementary_known_chromatic_graphs(name, n, edges, chi):
    """With reference defaults, graphs of independently known chromatic number
    are colored at exactly chi in 20/20 seeded runs."""
    graph = Graph(n, edges)
    hits = 0
    for run_idx in range(20):
        config = EnsembleConfig(
            **REFERENCE_DEFAULTS, base_seed=run_idx, time_limit=120.0
        )
        result = solve(graph, config, target_k=chi)
        if result.witness is not None:
            assert oracles.recount_conflicts(edges, result.witness.colors) == 0
            hits += 1
    assert hits >= 18


def test_supplementary_auto_descent_finds_chi(rng):
    """Full descending-k drives down to the known chromatic number."""
    n, edges = oracles.queen_graph(6)
    graph = Graph(n, edges)
    config = EnsembleConfig(
        island_count=4,
        generations=200,
        population_size=10,
        tabu=TabuParams(nbmax=5000),
        fitness_eval_budget=400_000,
    )
    result = solve(graph, config)
    assert result.smallest_legal_k == 7
