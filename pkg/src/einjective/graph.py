"""Immutable simple undirected graphs over dense vertex indices.

Adjacency is stored as one Python int bitset per vertex, which keeps
neighborhood intersection tests (the workhorse of every derived-graph
transform) at a single ``&`` per pair.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A finite simple graph on vertices ``0..n-1``.

    Instances are immutable after construction: all transforms and
    products build new graphs.  ``labels`` are cosmetic annotations only
    and never affect structure.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj: tuple[int, ...], labels: tuple[str, ...] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        if labels is not None and len(labels) != n:
            raise ValueError("labels length does not match vertex count")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask >> n:
                raise ValueError(f"adjacency of {v} references vertices >= {n}")
            if mask & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            if mask & ~full:
                raise ValueError("corrupt adjacency mask")
        for v, mask in enumerate(adj):
            for u in _bits(mask):
                if not adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- basic accessors ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] & (1 << v))

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    # -- structure ------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from ``source``; unreachable vertices get -1."""
        self._check_vertex(source)
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in _bits(self.adj[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in _bits(self.adj[u]):
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.bfs_distances(0).count(-1) == 0

    def subgraph(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph; vertex i of the result is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("duplicate vertices")
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in _bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in vertices)
        return Graph(len(vertices), tuple(adj), labels)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image under the permutation ``perm`` (vertex v becomes perm[v])."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        adj = [0] * self.n
        labels = [""] * self.n if self.labels is not None else None
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                adj[perm[v]] |= 1 << perm[u]
            if labels is not None:
                labels[perm[v]] = self.labels[v]
        return Graph(self.n, tuple(adj), tuple(labels) if labels is not None else None)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((m.bit_count() for m in self.adj), reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def from_edge_list(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from unordered endpoint pairs.

    Duplicate edges collapse; self-loops and out-of-range endpoints are
    rejected with the offending pair in the message.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has endpoint out of range 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def diameter(g: Graph) -> int | float:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = g.bfs_distances(s)
        if -1 in dist:
            return math.inf
        best = max(best, max(dist))
    return best


def iter_bits(mask: int) -> Iterator[int]:
    """Public alias for bitset iteration (used by sibling modules)."""
    return _bits(mask)
