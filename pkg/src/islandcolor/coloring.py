"""k-bounded color assignments with incremental conflict accounting.

A Coloring keeps three mutually consistent pieces of state:

* ``colors``     -- per-vertex color in [0, k)
* ``gamma``      -- per-(vertex, color) count of neighbors holding that color
* ``conflicts``  -- number of monochromatic edges, f(s)

Moves are O(1) to price (a gamma read) and O(deg) to apply, which is what
makes the TabuCol inner loop cheap. ``scan_conflicts`` recomputes f from the
edge list without touching gamma and is used as the independent check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import build_gamma_kernel, recolor_kernel
from .graph import Graph

__all__ = [
    "Coloring",
    "Move",
    "random_coloring",
    "scan_conflicts",
]


@dataclass(frozen=True)
class Move:
    """A single-vertex recoloring with its priced fitness delta."""

    vertex: int
    from_color: int
    to_color: int
    delta: int

    def inverse(self, delta: int | None = None) -> "Move":
        """The reversing move; pass the re-priced delta if already known."""
        d = -self.delta if delta is None else delta
        return Move(self.vertex, self.to_color, self.from_color, d)


class Coloring:
    """A color assignment bounded by budget k, with conflict bookkeeping."""

    __slots__ = ("graph", "k", "colors", "gamma", "conflicts")

    def __init__(
        self,
        graph: Graph,
        k: int,
        colors: np.ndarray,
        gamma: np.ndarray | None = None,
        conflicts: int | None = None,
    ):
        if k < 1:
            raise ValueError("color budget k must be >= 1")
        colors = np.asarray(colors, dtype=np.int32)
        if colors.shape != (graph.vertex_count,):
            raise ValueError("assignment length must equal vertex count")
        if colors.size and (colors.min() < 0 or colors.max() >= k):
            raise ValueError(f"colors must lie in [0, {k})")
        self.graph = graph
        self.k = int(k)
        self.colors = colors
        if gamma is None:
            gamma, conflicts = build_gamma_kernel(
                graph.adj_offsets, graph.adj_indices, colors, k
            )
        self.gamma = gamma
        self.conflicts = int(conflicts)

    def copy(self) -> "Coloring":
        c = Coloring.__new__(Coloring)
        c.graph = self.graph
        c.k = self.k
        c.colors = self.colors.copy()
        c.gamma = self.gamma.copy()
        c.conflicts = self.conflicts
        return c

    def is_proper(self) -> bool:
        return self.conflicts == 0

    def conflicting_vertices(self) -> np.ndarray:
        """Vertices with at least one same-colored neighbor, ascending."""
        diag = self.gamma[np.arange(self.graph.vertex_count), self.colors]
        return np.nonzero(diag > 0)[0].astype(np.int32)

    def move_delta(self, vertex: int, to_color: int) -> int:
        """Fitness change if `vertex` were recolored to `to_color` (O(1))."""
        return int(
            self.gamma[vertex, to_color] - self.gamma[vertex, self.colors[vertex]]
        )

    def recolor(self, vertex: int, to_color: int) -> int:
        """Apply a recoloring directly; returns the realized delta."""
        delta = recolor_kernel(
            self.graph.adj_offsets,
            self.graph.adj_indices,
            self.colors,
            self.gamma,
            vertex,
            to_color,
        )
        self.conflicts += int(delta)
        return int(delta)

    def apply_move(self, move: Move) -> None:
        """Apply a Move, validating it against the current assignment."""
        current = int(self.colors[move.vertex])
        if current != move.from_color:
            raise ValueError(
                f"stale move: vertex {move.vertex} has color {current}, "
                f"move expects {move.from_color}"
            )
        expected = self.move_delta(move.vertex, move.to_color)
        if move.delta != expected:
            raise ValueError(
                f"inconsistent move delta {move.delta}, table says {expected}"
            )
        self.recolor(move.vertex, move.to_color)

    def color_classes(self) -> list[np.ndarray]:
        """Vertex ids per color class, index c -> class c."""
        return [
            np.nonzero(self.colors == c)[0].astype(np.int32) for c in range(self.k)
        ]

    def assignment_line(self) -> str:
        """Space-separated colors in vertex order (solution dump format)."""
        return " ".join(str(int(c)) for c in self.colors)

    def __repr__(self) -> str:
        return f"Coloring(k={self.k}, f={self.conflicts})"


def random_coloring(graph: Graph, k: int, rng: np.random.Generator) -> Coloring:
    """Uniform random assignment over [0, k) with consistent bookkeeping."""
    if k < 1:
        raise ValueError("color budget k must be >= 1")
    colors = rng.integers(0, k, size=graph.vertex_count, dtype=np.int32)
    return Coloring(graph, k, colors)


def scan_conflicts(graph: Graph, colors: np.ndarray) -> int:
    """Count monochromatic edges from scratch, independent of gamma."""
    u, v = graph.edge_arrays()
    if u.size == 0:
        return 0
    colors = np.asarray(colors)
    return int(np.count_nonzero(colors[u] == colors[v]))
