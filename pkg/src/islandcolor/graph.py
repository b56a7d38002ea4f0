"""Undirected graph model: DIMACS .col parsing, adjacency queries, DSATUR bound.

Graphs are immutable after construction and safe to share across worker
threads. Vertices are 0-based internally; all DIMACS I/O is 1-based.
"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

__all__ = [
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
]


class DimacsError(ValueError):
    """Base error for malformed DIMACS input. Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimacsSyntaxError(DimacsError):
    """A line that cannot be tokenized as its declared type."""


class DimacsStructureError(DimacsError):
    """Structurally invalid document: edge before header, self-loop, etc."""


class DimacsRangeError(DimacsError):
    """Edge endpoint outside [1, n]."""


class DimacsWarning(UserWarning):
    """Non-fatal inconsistency, e.g. header edge count != distinct edges."""


class Graph:
    """Immutable undirected graph with CSR adjacency plus per-vertex neighbor sets.

    The CSR arrays (`adj_offsets`, `adj_indices`) feed the numba kernels;
    the neighbor sets give O(1) `has_edge` for crossover-style queries.
    """

    __slots__ = (
        "vertex_count",
        "edge_count",
        "adj_offsets",
        "adj_indices",
        "degrees",
        "_neighbor_sets",
        "_edge_arrays",
    )

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError("vertex_count must be >= 1")
        n = int(vertex_count)
        if isinstance(edges, np.ndarray):
            arr = edges.astype(np.int64, copy=False)
        else:
            arr = np.asarray(list(edges), dtype=np.int64)
        arr = arr.reshape(-1, 2)
        u, v = arr[:, 0], arr[:, 1]
        if arr.size:
            if int(u.min()) < 0 or int(v.min()) < 0 or int(u.max()) >= n or int(v.max()) >= n:
                bad = np.nonzero((u < 0) | (v < 0) | (u >= n) | (v >= n))[0][0]
                raise ValueError(
                    f"edge ({int(u[bad])}, {int(v[bad])}) out of range for n={n}"
                )
            loops = np.nonzero(u == v)[0]
            if loops.size:
                raise ValueError(f"self-loop at vertex {int(u[loops[0]])}")

        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        keys = np.unique(lo * n + hi)
        lo, hi = keys // n, keys % n
        m = int(keys.size)

        degrees = (
            np.bincount(lo, minlength=n) + np.bincount(hi, minlength=n)
        ).astype(np.int32)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=offsets[1:])
        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))  # per-vertex neighbor lists, ascending
        indices = dst[order].astype(np.int32)

        self.vertex_count = n
        self.edge_count = m
        self.adj_offsets = offsets
        self.adj_indices = indices
        self.degrees = degrees
        self._neighbor_sets = None  # built lazily on first has_edge
        self._edge_arrays = None

    def neighbors(self, v: int) -> np.ndarray:
        """Neighbor ids of v, sorted ascending (read-only view)."""
        return self.adj_indices[self.adj_offsets[v] : self.adj_offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        if self._neighbor_sets is None:
            self._neighbor_sets = [
                frozenset(int(x) for x in self.neighbors(w))
                for w in range(self.vertex_count)
            ]
        return v in self._neighbor_sets[u]

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.vertex_count else 0

    def edges(self) -> Iterable[tuple[int, int]]:
        """All edges as (u, v) with u < v, in sorted order."""
        for u in range(self.vertex_count):
            for v in self.neighbors(u):
                if u < v:
                    yield (u, int(v))

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays (u, v) with u < v; built once and cached."""
        if self._edge_arrays is None:
            src = np.repeat(
                np.arange(self.vertex_count, dtype=np.int32),
                np.diff(self.adj_offsets),
            )
            keep = src < self.adj_indices
            self._edge_arrays = (src[keep], self.adj_indices[keep].copy())
        return self._edge_arrays

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class InstanceMeta:
    """Benchmark identity for a parsed instance."""

    name: str
    best_known_k: int | None = None
    source_path: str = ""

    def __post_init__(self):
        if self.best_known_k is not None and self.best_known_k < 1:
            raise ValueError("best_known_k must be >= 1 when present")


def parse_dimacs(source: str | IO[str]) -> Graph:
    """Parse a DIMACS .col document into a Graph.

    Accepted lines: ``c ...`` comments, exactly one ``p edge <n> <m>`` header
    (before any edge), and ``e <u> <v>`` edges with 1-based endpoints. Both
    orientations and repeats of an edge are deduplicated; the header edge
    count is advisory and a mismatch only raises :class:`DimacsWarning`.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    n: int | None = None
    header_m = 0
    us: list[int] = []
    vs: list[int] = []

    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise DimacsStructureError("duplicate 'p' header", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise DimacsSyntaxError(
                    f"expected 'p edge <n> <m>', got {line!r}", lineno
                )
            try:
                n, header_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsSyntaxError(
                    f"non-integer counts in header {line!r}", lineno
                ) from None
            if n < 1:
                raise DimacsStructureError(f"vertex count {n} must be >= 1", lineno)
            if header_m < 0:
                raise DimacsStructureError("edge count must be >= 0", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsStructureError("'e' line before 'p' header", lineno)
            if len(tokens) != 3:
                raise DimacsSyntaxError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise DimacsSyntaxError(
                    f"non-integer endpoint in {line!r}", lineno
                ) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsRangeError(
                    f"endpoint out of [1, {n}] in {line!r}", lineno
                )
            if u == v:
                raise DimacsStructureError(f"self-loop 'e {u} {v}'", lineno)
            us.append(u - 1)
            vs.append(v - 1)
        else:
            raise DimacsSyntaxError(f"unknown line type {kind!r}", lineno)

    if n is None:
        raise DimacsStructureError("missing 'p edge <n> <m>' header")
    graph = Graph(
        n, np.stack([np.array(us, dtype=np.int64), np.array(vs, dtype=np.int64)], axis=1)
    )
    if graph.edge_count != header_m:
        warnings.warn(
            f"header declares {header_m} edges but {graph.edge_count} "
            f"distinct edges read",
            DimacsWarning,
            stacklevel=2,
        )
    return graph


def load_dimacs(path: str) -> Graph:
    """Parse a DIMACS .col file from disk."""
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        return parse_dimacs(fh)


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    """Serialize to canonical DIMACS: header then sorted 1-based edges."""
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {g.vertex_count} {g.edge_count}")
    out.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def density(g: Graph) -> float:
    """Edge density m / C(n, 2). Undefined for n < 2."""
    if g.vertex_count < 2:
        raise ValueError("density undefined for graphs with fewer than 2 vertices")
    n = g.vertex_count
    return g.edge_count / (n * (n - 1) / 2)


def dsatur_coloring(g: Graph) -> np.ndarray:
    """Proper coloring by DSATUR (max saturation, then max degree, then lowest id).

    Deterministic; uses at most max_degree + 1 colors.
    """
    from ._kernels import dsatur_kernel

    return dsatur_kernel(g.adj_offsets, g.adj_indices, g.vertex_count)


def greedy_upper_bound(g: Graph, seed: int = 0) -> int:
    """Number of colors a DSATUR pass uses: the starting k for the k-descent.

    `seed` is accepted for interface stability but inert: the tie-break is
    fixed, so the pass is deterministic.
    """
    del seed
    colors = dsatur_coloring(g)
    return int(colors.max()) + 1
