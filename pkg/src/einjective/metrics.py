"""Exact packing, open packing, and 2-distance domination numbers.

All three are exhaustive subset searches with branch pruning, capped at 32
vertices: large enough for every witness the bound chain
chi_ei >= packing >= 2-distance domination ever needs at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits

VERTEX_CAP = 32


@dataclass(frozen=True)
class MetricResult:
    value: int
    witness: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness)}


def _check_cap(g: Graph) -> None:
    if g.n > VERTEX_CAP:
        raise ValueError(f"exhaustive search is capped at {VERTEX_CAP} vertices")


def _max_compatible_set(g: Graph, compat: list[int]) -> tuple[int, ...]:
    """Largest vertex set pairwise related by the ``compat`` bitmasks."""
    n = g.n
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        if len(current) + cand.bit_count() <= len(best):
            return
        if not cand:
            best = current[:]
            return
        v = (cand & -cand).bit_length() - 1
        current.append(v)
        expand(current, cand & compat[v] & ~((1 << (v + 1)) - 1))
        current.pop()
        expand(current, cand & ~(1 << v))

    expand([], (1 << n) - 1)
    return tuple(best)


def packing_number(g: Graph) -> MetricResult:
    """Maximum set with pairwise-disjoint closed neighborhoods."""
    _check_cap(g)
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    compat = [0] * g.n
    for u in range(g.n):
        for v in range(g.n):
            if u != v and not closed[u] & closed[v]:
                compat[u] |= 1 << v
    witness = _max_compatible_set(g, compat)
    return MetricResult(len(witness), witness)


def open_packing_number(g: Graph) -> MetricResult:
    """Maximum set with pairwise-disjoint open neighborhoods."""
    _check_cap(g)
    compat = [0] * g.n
    for u in range(g.n):
        for v in range(g.n):
            if u != v and not g.adj[u] & g.adj[v]:
                compat[u] |= 1 << v
    witness = _max_compatible_set(g, compat)
    return MetricResult(len(witness), witness)


def two_distance_domination_number(g: Graph) -> MetricResult:
    """Minimum set with every vertex within distance 2 of the set."""
    _check_cap(g)
    n = g.n
    if n == 0:
        return MetricResult(0, ())
    ball = [0] * n
    for v in range(n):
        mask = g.adj[v] | (1 << v)
        for u in iter_bits(g.adj[v]):
            mask |= g.adj[u]
        ball[v] = mask
    full = (1 << n) - 1
    best: list[int] | None = None

    def cover(chosen: list[int], covered: int) -> None:
        nonlocal best
        if best is not None and len(chosen) >= len(best):
            return
        if covered == full:
            best = chosen[:]
            return
        # branch on the uncovered vertex with fewest coverers
        uncovered = full & ~covered
        pick, pick_count = -1, n + 1
        for v in iter_bits(uncovered):
            cnt = ball[v].bit_count()
            if cnt < pick_count:
                pick, pick_count = v, cnt
        for d in iter_bits(ball[pick]):
            chosen.append(d)
            cover(chosen, covered | ball[d])
            chosen.pop()

    cover([], 0)
    assert best is not None
    return MetricResult(len(best), tuple(sorted(best)))
