"""Colorings, mode-aware verification, and greedy upper bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits
from .transforms import Mode, derived_graph, has_p4_between


@dataclass(frozen=True)
class Coloring:
    """A total color assignment (1-based colors) claiming to satisfy ``mode``."""

    colors: tuple[int, ...]
    mode: Mode

    def __post_init__(self):
        if any(c < 1 for c in self.colors):
            raise ValueError("colors must be positive integers")

    @property
    def k(self) -> int:
        """Number of distinct colors actually used."""
        return len(set(self.colors))

    def color(self, v: int) -> int:
        return self.colors[v]


@dataclass(frozen=True)
class Violation:
    """A vertex tuple that breaks the mode constraint with equal colors.

    ``kind`` names the constraint family; ``witness`` is the offending end
    pair, checkable by hand against the original graph.
    """

    kind: str
    witness: tuple[int, int]


def verify_coloring(g: Graph, coloring: Coloring, mode: Mode) -> list[Violation]:
    """All constraint violations of ``coloring`` under ``mode``; empty = valid.

    Witnesses are stated in the original graph: an edge for proper mode, a
    common-neighbor pair for injective, a distance<=2 pair for 2-distance,
    and a P4 end pair for e-injective.
    """
    if len(coloring.colors) != g.n:
        raise ValueError(f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}")
    colors = coloring.colors
    out: list[Violation] = []
    if mode is Mode.PROPER:
        kind = "edge"
        conflict = g
    elif mode is Mode.INJECTIVE:
        kind = "common-neighbor-pair"
        conflict = None
    elif mode is Mode.TWO_DISTANCE:
        kind = "distance-2-pair"
        conflict = None
    elif mode is Mode.E_INJECTIVE:
        kind = "p4-end-pair"
        conflict = None
    else:
        raise ValueError(f"unknown mode {mode!r}")

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if colors[u] != colors[v]:
                continue
            if mode is Mode.PROPER:
                bad = g.has_edge(u, v)
            elif mode is Mode.INJECTIVE:
                bad = bool(g.adj[u] & g.adj[v])
            elif mode is Mode.TWO_DISTANCE:
                bad = g.has_edge(u, v) or bool(g.adj[u] & g.adj[v])
            else:
                bad = has_p4_between(g, u, v)
            if bad:
                out.append(Violation(kind, (u, v)))
    return out


def greedy_coloring(g: Graph, mode: Mode, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring of the derived graph along ``order``.

    Always valid for ``mode``; uses at most max-degree(derived)+1 colors.
    ``order`` defaults to the identity permutation.
    """
    h = derived_graph(g, mode)
    if order is None:
        order = range(h.n)
    else:
        if sorted(order) != list(range(h.n)):
            raise ValueError("order is not a permutation of the vertices")
    colors = [0] * h.n
    for v in order:
        used = 0
        for u in iter_bits(h.adj[v]):
            if colors[u]:
                used |= 1 << colors[u]
        c = 1
        while used & (1 << c):
            c += 1
        colors[v] = c
    if h.n == 0:
        return Coloring((), mode)
    return Coloring(tuple(colors), mode)
