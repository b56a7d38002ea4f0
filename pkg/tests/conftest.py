import os
import re
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from islandcolor import Graph

K3_TEXT = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3"

CRITERIA = {
    1: "small-instance reproduction at the published k",
    2: "medium/hard instances: quality at DSJC125.5 scale, clean runs under time limits",
    3: "exact-oracle equivalence on n<=9 random graphs",
    4: "incremental-fitness correctness (10,000 move sequences)",
    5: "TabuCol bipartite success and tabu properties",
    6: "determinism across sequential and concurrent modes",
    7: "evaluation-count linearity under per-island budgets",
    8: "round-robin metaheuristic balance (63 -> 21/21/21)",
    9: "registry fidelity for all 43 table rows",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL/SKIPPED line per acceptance criterion."""
    del exitstatus, config
    outcomes: dict[int, dict[str, int]] = {}
    pattern = re.compile(r"test_acceptance\.py::test_c(\d+)")
    for status in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(status, []):
            match = pattern.search(getattr(report, "nodeid", ""))
            if not match:
                continue
            if getattr(report, "when", "call") not in ("call", "setup"):
                continue
            cid = int(match.group(1))
            bucket = outcomes.setdefault(cid, {"passed": 0, "failed": 0, "skipped": 0})
            key = "failed" if status == "error" else status
            bucket[key] += 1
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(CRITERIA):
        description = CRITERIA[cid]
        counts = outcomes.get(cid)
        if counts is None:
            continue
        if counts["failed"]:
            verdict = "FAIL"
        elif counts["passed"]:
            verdict = "PASS"
        else:
            verdict = "SKIPPED (instance files not available)"
        detail = f"{counts['passed']} passed, {counts['failed']} failed, {counts['skipped']} skipped"
        terminalreporter.write_line(
            f"criterion {cid}: {verdict} [{detail}] - {description}"
        )


def instances_dir() -> Path | None:
    """Directory holding DIMACS benchmark files, when the user provides one."""
    env = os.environ.get("ISLANDCOLOR_INSTANCES")
    candidates = [Path(env)] if env else []
    candidates.append(Path(__file__).resolve().parent.parent / "instances")
    for cand in candidates:
        if cand.is_dir():
            return cand
    return None


def instance_path(name: str) -> Path | None:
    base = instances_dir()
    if base is None:
        return None
    for suffix in (".col", ".COL", ".txt"):
        p = base / f"{name}{suffix}"
        if p.is_file():
            return p
    return None


def require_instance(name: str) -> Path:
    p = instance_path(name)
    if p is None:
        pytest.skip(
            f"DIMACS file for {name} not available (set ISLANDCOLOR_INSTANCES "
            f"or place it under ./instances)"
        )
    return p


@pytest.fixture
def k3() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> Graph:
    return Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


@pytest.fixture
def path3() -> Graph:
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def edgeless() -> Graph:
    return Graph(5, [])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
