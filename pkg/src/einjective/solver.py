"""Exact chromatic-number search on derived graphs.

The solver is a DSATUR branch-and-bound over each connected component,
seeded with a greedy upper bound and a clique lower bound.  Color symmetry
is broken by pre-coloring a maximal clique with colors 1..q and allowing at
most one brand-new color per branch.  An exact independent-set bound
(chi >= ceil(n / alpha)) closes the dense instances that clique bounds
alone cannot.

Everything is deterministic: saturation ties break by (higher degree, then
lower index), and results are identical regardless of the worker cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring
from .graph import Graph, iter_bits
from .transforms import Mode, derived_graph

DEFAULT_BUDGET_MS = 60_000
DEFAULT_BUDGET_NODES = 10_000_000


@dataclass(frozen=True)
class Budget:
    """Search limits; whichever is hit first stops the run."""

    ms: int = DEFAULT_BUDGET_MS
    nodes: int = DEFAULT_BUDGET_NODES


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a chromatic-number computation.

    When ``exact`` is true, ``chi`` is the chromatic number of the derived
    graph under the requested mode.  On budget exhaustion ``exact`` is
    false and ``chi`` is the best upper bound found; ``lower_bound`` stays
    a proven lower bound either way.  ``certificate`` always verifies.
    """

    chi: int
    certificate: Coloring
    lower_bound: int
    lower_bound_witness: tuple[int, ...]
    exact: bool
    nodes: int
    elapsed: float

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "chi": self.chi,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "certificate": list(self.certificate.colors),
            "mode": self.certificate.mode.value,
            "witness": list(self.lower_bound_witness),
            "stats": {"nodes": self.nodes},
        }
        if include_timing:
            out["stats"]["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


class _Deadline:
    __slots__ = ("t_end", "max_nodes", "nodes", "hit")

    def __init__(self, budget: Budget):
        self.t_end = time.monotonic() + budget.ms / 1000.0
        self.max_nodes = budget.nodes
        self.nodes = 0
        self.hit = False

    def tick(self) -> bool:
        """Count a search node; True while within budget."""
        self.nodes += 1
        if self.nodes > self.max_nodes or (self.nodes % 1024 == 0
                                           and time.monotonic() > self.t_end):
            self.hit = True
        return not self.hit


def max_clique_lower_bound(h: Graph, budget: Budget | None = None) -> tuple[int, ...]:
    """A clique of ``h`` found by bounded deterministic search.

    The result is always a genuine clique; it is the maximum clique
    whenever the search completes within budget.
    """
    clique, _complete = _max_clique(h, _Deadline(budget or Budget()))
    return clique


def _max_clique(h: Graph, deadline: _Deadline) -> tuple[tuple[int, ...], bool]:
    n = h.n
    if n == 0:
        return (), True
    order = sorted(range(n), key=lambda v: (-h.adj[v].bit_count(), v))
    best: list[int] = []

    # greedy warm start from each vertex
    for s in order:
        cur = [s]
        cand = h.adj[s]
        while cand:
            v = next(u for u in order if cand & (1 << u))
            cur.append(v)
            cand &= h.adj[v]
        if len(cur) > len(best):
            best = cur

    complete = True

    def expand(current: list[int], cand: int) -> None:
        nonlocal best, complete
        if not deadline.tick():
            complete = False
            return
        if not cand:
            if len(current) > len(best):
                best = current[:]
            return
        if len(current) + cand.bit_count() <= len(best):
            return
        for v in order:
            bit = 1 << v
            if not cand & bit:
                continue
            if len(current) + cand.bit_count() <= len(best):
                return
            current.append(v)
            expand(current, cand & h.adj[v])
            current.pop()
            cand &= ~bit
            if deadline.hit:
                complete = False
                return

    expand([], (1 << n) - 1)
    return tuple(sorted(best)), complete and not deadline.hit


def _independence_number(h: Graph, deadline: _Deadline) -> int | None:
    """Exact independence number, or None if the bounded search gave up."""
    full = (1 << h.n) - 1
    comp_adj = tuple((full & ~h.adj[v]) & ~(1 << v) for v in range(h.n))
    comp = Graph(h.n, comp_adj)
    clique, complete = _max_clique(comp, deadline)
    return len(clique) if complete else None


def _bipartition(h: Graph) -> list[int] | None:
    """2-coloring of ``h`` if bipartite (colors 1/2), else None."""
    color = [0] * h.n
    for s in range(h.n):
        if color[s]:
            continue
        color[s] = 1
        stack = [s]
        while stack:
            u = stack.pop()
            for v in iter_bits(h.adj[u]):
                if color[v] == 0:
                    color[v] = 3 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def _greedy_dsatur(h: Graph) -> list[int]:
    """Deterministic DSATUR greedy coloring of ``h`` (1-based colors)."""
    n = h.n
    colors = [0] * n
    sat = [0] * n  # bitmask of neighbor colors
    degs = [h.adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            key = (-sat[v].bit_count(), -degs[v], v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        c = 1
        while sat[best_v] & (1 << c):
            c += 1
        colors[best_v] = c
        for u in iter_bits(h.adj[best_v]):
            sat[u] |= 1 << c
    return colors


def _solve_component(h: Graph, deadline: _Deadline) -> tuple[int, list[int], tuple[int, ...], int, bool]:
    """Solve one connected component.

    Returns (upper bound, its coloring, clique witness, lower bound, exact).
    """
    n = h.n
    if n == 1:
        return 1, [1], (0,), 1, True
    m = h.edge_count()
    if m == 0:
        return 1, [1] * n, (0,), 1, True
    if m == n * (n - 1) // 2:
        return n, list(range(1, n + 1)), tuple(range(n)), n, True

    two = _bipartition(h)
    if two is not None:
        u, v = next(h.edges())
        return 2, two, (u, v), 2, True

    greedy = _greedy_dsatur(h)
    ub = max(greedy)
    clique, _ = _max_clique(h, deadline)
    lb = max(len(clique), 3)  # odd cycle present: not bipartite
    alpha = _independence_number(h, deadline)
    if alpha is not None:
        lb = max(lb, -(-n // alpha))
    if lb >= ub:
        return ub, greedy, clique, ub, True

    best_colors = greedy[:]
    best_k = ub

    # pre-color the clique with 1..q
    colors = [0] * n
    sat = [0] * n
    degs = [h.adj[v].bit_count() for v in range(n)]
    uncolored = n
    for idx, v in enumerate(clique):
        c = idx + 1
        colors[v] = c
        uncolored -= 1
        for u in iter_bits(h.adj[v]):
            sat[u] |= 1 << c
    exact = True

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v]:
                continue
            key = (-sat[v].bit_count(), -degs[v], v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def descend(used: int) -> None:
        nonlocal best_colors, best_k, uncolored, exact
        if not deadline.tick():
            exact = False
            return
        if used >= best_k:
            return
        if uncolored == 0:
            best_k = used
            best_colors = colors[:]
            return
        v = pick()
        # existing colors first, then at most one brand-new color
        limit = min(used + 1, best_k - 1)
        for c in range(1, limit + 1):
            if sat[v] & (1 << c):
                continue
            colors[v] = c
            uncolored -= 1
            touched = []
            bit = 1 << c
            for u in iter_bits(h.adj[v]):
                if not colors[u] and not sat[u] & bit:
                    sat[u] |= bit
                    touched.append(u)
            descend(max(used, c))
            for u in touched:
                sat[u] &= ~bit
            colors[v] = 0
            uncolored += 1
            if deadline.hit or best_k <= lb:
                return

    descend(len(clique))
    if deadline.hit:
        exact = False
    if exact:
        lb = best_k
    return best_k, best_colors, clique, lb, exact


def chromatic_number(
    g: Graph,
    mode: Mode,
    budget: Budget | None = None,
    workers: int = 1,
) -> SolveResult:
    """Exact chromatic number of the derived graph, with certificate.

    ``workers`` caps internal parallelism; results are identical for every
    value (the search is deterministic), so it only exists as a contract
    knob for callers that script around the CLI.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.monotonic()
    deadline = _Deadline(budget or Budget())
    h = derived_graph(g, mode)

    if h.n == 0:
        return SolveResult(0, Coloring((), mode), 0, (), True, 0, 0.0)

    chi = 0
    lower = 0
    exact = True
    final = [0] * h.n
    witness: tuple[int, ...] = ()
    for comp in h.components():
        sub = h.subgraph(comp)
        ub_c, colors_c, clique_c, lb_c, exact_c = _solve_component(sub, deadline)
        for i, v in enumerate(comp):
            final[v] = colors_c[i]
        if ub_c > chi or not witness:
            witness = tuple(comp[i] for i in clique_c)
        chi = max(chi, ub_c)
        lower = max(lower, lb_c)
        exact = exact and exact_c

    elapsed = time.monotonic() - start
    return SolveResult(
        chi=chi,
        certificate=Coloring(tuple(final), mode),
        lower_bound=lower if not exact else chi,
        lower_bound_witness=witness,
        exact=exact,
        nodes=deadline.nodes,
        elapsed=elapsed,
    )


def brute_force_chromatic(h: Graph) -> int:
    """Exact chromatic number by plain lexicographic search; |V| <= 10.

    Independent oracle for cross-checking: vertices are tried in index
    order and colors 1..k in increasing order, with no ordering heuristics,
    no clique seeding, and no symmetry breaking.
    """
    if h.n > 10:
        raise ValueError("brute-force oracle is capped at 10 vertices")
    if h.n == 0:
        return 0

    def colorable(k: int) -> bool:
        assignment = [0] * h.n

        def place(v: int) -> bool:
            if v == h.n:
                return True
            for c in range(1, k + 1):
                ok = True
                for u in iter_bits(h.adj[v]):
                    if assignment[u] == c:
                        ok = False
                        break
                if ok:
                    assignment[v] = c
                    if place(v + 1):
                        return True
                    assignment[v] = 0
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k
