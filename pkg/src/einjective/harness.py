"""Executable claim registry: closed-form value vs exact solver vs pattern.

Every registered claim names a parametric statement with a known value.
``check`` runs the solver on the instance, compares against the closed-form
oracle, and validates the constructive pattern when one exists.  A solver
disagreement is reported, never papered over; a budget timeout is
inconclusive, which is distinct from failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .coloring import verify_coloring
from .families import FamilySpec, generate, parse_spec
from .graph import Graph, from_edge_list, diameter
from .oracle import oracle_chi_ei
from .patterns import pattern_coloring
from .solver import Budget, chromatic_number
from .transforms import Mode


@dataclass(frozen=True)
class CheckReport:
    claim: str
    params: dict
    oracle: int | None
    solver: int | None            # None when the budget ran out
    solver_exact: bool
    pattern_colors: int | None    # None when no pattern exists
    pattern_valid: bool | None
    status: str                   # "pass" | "fail" | "inconclusive"
    elapsed: float

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "params": self.params,
            "oracle": self.oracle,
            "solver": self.solver,
            "pattern_colors": self.pattern_colors,
            "pattern_valid": self.pattern_valid,
            "status": self.status,
        }
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out


def _tree_from_seed(seed: int, n: int) -> Graph:
    """Deterministic random tree on n vertices (uniform over labelled trees)."""
    rng = random.Random(seed)
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = sorted(leaves)[:2]
    edges.append((u, w))
    return from_edge_list(n, edges)


# -- claim registry ---------------------------------------------------------

_FAMILY_CLAIMS = {
    "path", "cycle", "complete", "star", "doublestar", "wheel", "bipartite",
    "multipartite", "fan", "ladder", "grid", "prism", "cylinder", "torus",
    "cliquebridge", "fixture",
}

# default parameter sweeps, kept small enough for an interactive run
_DEFAULT_PARAMS: dict[str, list[tuple]] = {
    "path": [(n,) for n in range(1, 13)],
    "cycle": [(n,) for n in range(3, 16)],
    "complete": [(n,) for n in range(1, 9)],
    "star": [(n,) for n in range(1, 9)],
    "doublestar": [(m, n) for m in range(1, 4) for n in range(1, 4)],
    "wheel": [(n,) for n in range(3, 9)],
    "bipartite": [(m, n) for m in range(2, 6) for n in range(2, 6)],
    "multipartite": [(1, 1, 1), (2, 1, 1), (3, 1, 1), (4, 1, 1), (5, 1, 1),
                     (2, 2, 2), (1, 2, 2), (2, 2, 3), (1, 1, 1, 1)],
    "fan": [(1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (1, 3), (1, 4), (1, 5), (1, 6),
            (2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (4, 5)],
    "ladder": [(n,) for n in range(2, 9)],
    "grid": [(m, n) for m in range(2, 7) for n in range(2, 7)],
    "prism": [(n,) for n in range(3, 13)],
    "cylinder": [(m, n) for m in range(2, 5) for n in range(3, 10)],
    "torus": [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 9),
              (4, 4), (4, 6), (4, 7), (5, 4), (5, 5)],
    "cliquebridge": [(m, n) for m in range(4, 7) for n in range(4, 7) if n <= m],
    "fixture": [(name,) for name in ("M3", "M4", "M5", "M6", "M7", "M8")],
    "tree": [(seed, 4 + seed % 12) for seed in range(20)],
    "join": [(seed,) for seed in range(10)],
}

CLAIM_IDS = tuple(sorted(_DEFAULT_PARAMS))


def _params_dict(claim: str, params: tuple) -> dict:
    if claim == "tree":
        return {"seed": params[0], "n": params[1]}
    if claim == "join":
        return {"seed": params[0]}
    if claim == "fixture":
        return {"name": params[0]}
    if len(params) == 1:
        return {"n": params[0]}
    if claim == "multipartite":
        return {"parts": list(params)}
    return {"m": params[0], "n": params[1]}


def _join_pair(seed: int) -> tuple[Graph, Graph]:
    """Deterministic random pair of graphs, both with at least one edge."""
    rng = random.Random(10_000 + seed)
    def one() -> Graph:
        while True:
            n = rng.randint(2, 6)
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < 0.5]
            if edges:
                return from_edge_list(n, edges)
    return one(), one()


def check(claim: str, params: tuple, budget: Budget | None = None) -> CheckReport:
    """Confront one claim instance with the exact solver."""
    if claim not in _DEFAULT_PARAMS:
        raise ValueError(f"unregistered claim {claim!r}; known: {', '.join(CLAIM_IDS)}")

    from time import monotonic
    start = monotonic()

    if claim == "tree":
        seed, n = params
        g = _tree_from_seed(seed, n)
        oracle = 1 if diameter(g) <= 2 else 2
        pattern = None
    elif claim == "join":
        (seed,) = params
        ga, gb = _join_pair(seed)
        from .families import join as join_graphs
        g = join_graphs(ga, gb)
        oracle = ga.n + gb.n
        pattern = None
    else:
        spec = FamilySpec(claim, tuple(params))
        oracle = oracle_chi_ei(spec)
        if oracle is None:
            raise ValueError(f"claim {claim}:{params} is outside the stated range")
        g = generate(spec)
        pattern = pattern_coloring(spec)

    result = chromatic_number(g, Mode.E_INJECTIVE, budget=budget)
    solver_value = result.chi if result.exact else None

    pattern_valid: bool | None = None
    pattern_colors: int | None = None
    if pattern is not None:
        pattern_valid = not verify_coloring(g, pattern, Mode.E_INJECTIVE)
        pattern_colors = pattern.k

    if solver_value is None:
        status = "inconclusive"
    elif solver_value == oracle and (pattern is None
                                     or (pattern_valid and pattern_colors == oracle)):
        status = "pass"
    else:
        status = "fail"

    return CheckReport(
        claim=claim,
        params=_params_dict(claim, tuple(params)),
        oracle=oracle,
        solver=solver_value,
        solver_exact=result.exact,
        pattern_colors=pattern_colors,
        pattern_valid=pattern_valid,
        status=status,
        elapsed=monotonic() - start,
    )


def run_suite(
    claims: Iterable[str] | None = None,
    params_override: dict[str, list[tuple]] | None = None,
    budget: Budget | None = None,
) -> list[CheckReport]:
    """Run every registered instance of the selected claims, in claim-id order."""
    selected = sorted(claims) if claims is not None else list(CLAIM_IDS)
    for claim in selected:
        if claim not in _DEFAULT_PARAMS:
            raise ValueError(f"unregistered claim {claim!r}; known: {', '.join(CLAIM_IDS)}")
    reports = []
    for claim in selected:
        plist = (params_override or {}).get(claim, _DEFAULT_PARAMS[claim])
        for params in plist:
            reports.append(check(claim, tuple(params), budget=budget))
    return reports


def suite_summary(reports: list[CheckReport]) -> dict:
    return {
        "total": len(reports),
        "pass": sum(r.status == "pass" for r in reports),
        "fail": sum(r.status == "fail" for r in reports),
        "inconclusive": sum(r.status == "inconclusive" for r in reports),
    }
