"""Derived-graph transforms that reduce each coloring regime to proper coloring.

The central object is the three-step graph S3(g): same vertices, an edge
wherever g has a simple path on 4 distinct vertices between the endpoints.
Proper colorings of S3(g) are exactly the e-injective colorings of g, and
the analogous reductions hold for the common-neighbor (two-step) graph and
the square graph.
"""

from __future__ import annotations

import enum

from .graph import Graph, iter_bits


class Mode(enum.Enum):
    """Coloring regime, named by the constraint it enforces."""

    PROPER = "proper"
    INJECTIVE = "injective"
    TWO_DISTANCE = "twodistance"
    E_INJECTIVE = "einjective"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        key = text.strip().lower().replace("-", "").replace("_", "")
        for mode in cls:
            if mode.value == key:
                return mode
        raise ValueError(f"unknown mode {text!r}; expected one of "
                         f"{', '.join(m.value for m in cls)}")


def has_p4_between(g: Graph, u: int, v: int) -> bool:
    """True iff some simple path u-x-y-v on 4 distinct vertices exists."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise ValueError("a vertex is never its own path partner")
    bit_u, bit_v = 1 << u, 1 << v
    xs = g.adj[u] & ~bit_v
    ys = g.adj[v] & ~bit_u
    if not xs or not ys:
        return False
    for x in iter_bits(xs):
        if g.adj[x] & ys & ~(1 << x):
            return True
    return False


def three_step_graph(g: Graph) -> Graph:
    """S3(g): edge (u,v) iff a simple path of length 3 joins u and v."""
    adj = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if has_p4_between(g, u, v):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def square_graph(g: Graph) -> Graph:
    """g^2: edge (u,v) iff 1 <= d(u,v) <= 2."""
    adj = [0] * g.n
    for u in range(g.n):
        mask = g.adj[u]
        for x in iter_bits(g.adj[u]):
            mask |= g.adj[x]
        adj[u] = mask & ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def two_step_graph(g: Graph) -> Graph:
    """Common-neighbor graph: edge (u,v) iff N(u) and N(v) intersect."""
    adj = [0] * g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] & g.adj[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def derived_graph(g: Graph, mode: Mode) -> Graph:
    """The graph whose proper colorings are exactly mode-colorings of g."""
    if mode is Mode.PROPER:
        return g
    if mode is Mode.INJECTIVE:
        return two_step_graph(g)
    if mode is Mode.TWO_DISTANCE:
        return square_graph(g)
    if mode is Mode.E_INJECTIVE:
        return three_step_graph(g)
    raise ValueError(f"unknown mode {mode!r}")


class StructureCondition(enum.Enum):
    """Quantified structural hypotheses relating the coloring regimes."""

    ADJ_IMPLIES_P4 = "adj-implies-p4"
    P4_IMPLIES_ADJ = "p4-implies-adj"
    NEIGHBORS_PAIRWISE_P4 = "neighbors-pairwise-p4"
    P4_IMPLIES_COMMON_NEIGHBOR = "p4-implies-common-neighbor"
    P3_PAIRS_ARE_P4_ENDS = "p3-pairs-are-p4-ends"
    P4_IMPLIES_ADJ_OR_COMMON_NEIGHBOR = "p4-implies-adj-or-common-neighbor"


def _p4_pairs(g: Graph):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if has_p4_between(g, u, v):
                yield u, v


def structure_predicate(g: Graph, kind: StructureCondition) -> bool:
    """Evaluate the condition over all relevant vertex tuples of ``g``.

    All conditions quantify pointwise: e.g. the adjacent-or-common-neighbor
    form may be witnessed by adjacency for one pair and by a common
    neighbor for another.
    """
    if kind is StructureCondition.ADJ_IMPLIES_P4:
        return all(has_p4_between(g, u, v) for u, v in g.edges())
    if kind is StructureCondition.P4_IMPLIES_ADJ:
        return all(g.has_edge(u, v) for u, v in _p4_pairs(g))
    if kind is StructureCondition.NEIGHBORS_PAIRWISE_P4:
        for v in range(g.n):
            nbrs = list(iter_bits(g.adj[v]))
            for i, x in enumerate(nbrs):
                for y in nbrs[i + 1:]:
                    if not has_p4_between(g, x, y):
                        return False
        return True
    if kind is StructureCondition.P4_IMPLIES_COMMON_NEIGHBOR:
        return all(bool(g.adj[u] & g.adj[v]) for u, v in _p4_pairs(g))
    if kind is StructureCondition.P3_PAIRS_ARE_P4_ENDS:
        for mid in range(g.n):
            nbrs = list(iter_bits(g.adj[mid]))
            for i, x in enumerate(nbrs):
                for y in nbrs[i + 1:]:
                    if not (has_p4_between(g, x, y)
                            and has_p4_between(g, x, mid)
                            and has_p4_between(g, mid, y)):
                        return False
        return True
    if kind is StructureCondition.P4_IMPLIES_ADJ_OR_COMMON_NEIGHBOR:
        return all(g.has_edge(u, v) or bool(g.adj[u] & g.adj[v])
                   for u, v in _p4_pairs(g))
    raise ValueError(f"unknown structure condition {kind!r}")
