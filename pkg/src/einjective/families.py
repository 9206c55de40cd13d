"""Parametric graph families, graph products, and combination operators.

Every family carries a canonical text syntax used by the CLI and the claim
harness, e.g. ``cycle:7``, ``torus:3x7``, ``multipartite:2,2,3``,
``fixture:M4``.  Product vertex indexing is row-major: vertex (i, j) of
``product(g, h, ...)`` is ``i * h.n + j``, so table-driven colorings can be
applied by index arithmetic.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from importlib import resources

from .graph import Graph, from_edge_list, iter_bits

FIXTURE_NAMES = ("M3", "M4", "M5", "M6", "M7", "M8")

_KINDS = (
    "path", "cycle", "complete", "star", "doublestar", "wheel",
    "bipartite", "multipartite", "fan", "ladder", "prism", "grid",
    "cylinder", "torus", "cliquebridge", "fixture", "hypercube",
)


class ProductKind(enum.Enum):
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    STRONG = "strong"


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters (ints, or a fixture name)."""

    kind: str
    params: tuple

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "fixture":
            return f"fixture:{self.params[0]}"
        if self.kind == "multipartite":
            return "multipartite:" + ",".join(str(p) for p in self.params)
        if len(self.params) == 1:
            return f"{self.kind}:{self.params[0]}"
        return f"{self.kind}:{'x'.join(str(p) for p in self.params)}"


def parse_spec(text: str) -> FamilySpec:
    """Parse the canonical ``family:params`` syntax."""
    if ":" not in text:
        raise ValueError(f"expected 'family:params', got {text!r}")
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    arg = arg.strip()
    if kind not in _KINDS:
        raise ValueError(f"unknown family {kind!r}")
    if kind == "fixture":
        name = arg.upper()
        if name not in FIXTURE_NAMES:
            raise ValueError(f"unknown fixture {arg!r}; expected one of {FIXTURE_NAMES}")
        return FamilySpec(kind, (name,))
    if kind == "multipartite":
        parts = tuple(int(p) for p in arg.split(","))
        return FamilySpec(kind, parts)
    if "x" in arg:
        a, _, b = arg.partition("x")
        return FamilySpec(kind, (int(a), int(b)))
    return FamilySpec(kind, (int(arg),))


# -- elementary families ---------------------------------------------------


def _path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _star(n: int) -> Graph:
    # center is vertex 0, n leaves
    if n < 1:
        raise ValueError("star needs at least 1 leaf")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def _double_star(m: int, n: int) -> Graph:
    # support vertices 0 and 1, m leaves on 0, n leaves on 1
    if m < 1 or n < 1:
        raise ValueError("double star needs at least 1 leaf on each side")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(m)]
    edges += [(1, 2 + m + i) for i in range(n)]
    return from_edge_list(m + n + 2, edges)


def _wheel(n: int) -> Graph:
    # hub is vertex 0, rim is 1..n
    if n < 3:
        raise ValueError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return from_edge_list(n + 1, edges)


def _complete_multipartite(sizes: tuple[int, ...]) -> Graph:
    if len(sizes) < 2:
        raise ValueError("multipartite graph needs at least 2 parts")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    edges = []
    for a, (sa, ea) in enumerate(bounds):
        for sb, eb in bounds[a + 1:]:
            edges += [(u, v) for u in range(sa, ea) for v in range(sb, eb)]
    return from_edge_list(start, edges)


def _hypercube(d: int) -> Graph:
    if d < 0:
        raise ValueError("hypercube dimension must be nonnegative")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)]
    return from_edge_list(n, edges)


def _clique_bridge(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("clique sizes must be positive")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges += [(m + i, m + j) for i in range(n) for j in range(i + 1, n)]
    edges.append((0, m))
    return from_edge_list(m + n, edges)


# -- products and combinations ----------------------------------------------


def product(g: Graph, h: Graph, kind: ProductKind) -> Graph:
    """Graph product on row-major index pairs: (i, j) -> i*h.n + j."""
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be nonempty")
    n = g.n * h.n
    adj = [0] * n
    cartesian = kind in (ProductKind.CARTESIAN, ProductKind.STRONG)
    direct = kind in (ProductKind.DIRECT, ProductKind.STRONG)
    for i in range(g.n):
        for j in range(h.n):
            v = i * h.n + j
            mask = 0
            if cartesian:
                for i2 in iter_bits(g.adj[i]):
                    mask |= 1 << (i2 * h.n + j)
                for j2 in iter_bits(h.adj[j]):
                    mask |= 1 << (i * h.n + j2)
            if direct:
                for i2 in iter_bits(g.adj[i]):
                    for j2 in iter_bits(h.adj[j]):
                        mask |= 1 << (i2 * h.n + j2)
            adj[v] = mask
    labels = tuple(f"v_{{{i + 1},{j + 1}}}" for i in range(g.n) for j in range(h.n))
    return Graph(n, tuple(adj), labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies plus every cross edge."""
    n = g.n + h.n
    adj = list(g.adj) + [m << g.n for m in h.adj]
    g_side = (1 << g.n) - 1
    h_side = ((1 << n) - 1) ^ g_side
    for v in range(g.n):
        adj[v] |= h_side
    for v in range(g.n, n):
        adj[v] |= g_side
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Shifted copies with no cross edges."""
    adj = list(g.adj) + [m << g.n for m in h.adj]
    return Graph(g.n + h.n, tuple(adj))


# -- fixtures ----------------------------------------------------------------


def _load_fixture(name: str) -> Graph:
    path = resources.files("einjective.data").joinpath(f"{name.lower()}.json")
    payload = json.loads(path.read_text())
    g = from_edge_list(payload["n"], [tuple(e) for e in payload["edges"]])
    if g.max_degree() != payload["max_degree"]:
        raise ValueError(f"fixture {name} data corrupt: max degree "
                         f"{g.max_degree()} != {payload['max_degree']}")
    return g


# -- the generator -----------------------------------------------------------


def generate(spec: FamilySpec) -> Graph:
    """Instantiate a family; out-of-range parameters are rejected, not clamped."""
    kind, p = spec.kind, spec.params
    if kind == "path":
        return _path(*p)
    if kind == "cycle":
        return _cycle(*p)
    if kind == "complete":
        return _complete(*p)
    if kind == "star":
        return _star(*p)
    if kind == "doublestar":
        return _double_star(*p)
    if kind == "wheel":
        return _wheel(*p)
    if kind == "bipartite":
        if len(p) != 2:
            raise ValueError("bipartite needs two part sizes, e.g. bipartite:3x4")
        return _complete_multipartite(p)
    if kind == "multipartite":
        return _complete_multipartite(p)
    if kind == "fan":
        m, n = p
        if m < 1 or n < 1:
            raise ValueError("fan parameters must be positive")
        # m independent vertices joined to a path on n vertices
        return join(from_edge_list(m, []), _path(n))
    if kind == "ladder":
        (n,) = p
        if n < 1:
            raise ValueError("ladder length must be positive")
        return product(_path(2), _path(n), ProductKind.CARTESIAN)
    if kind == "prism":
        (n,) = p
        if n < 3:
            raise ValueError("prism cycle length must be at least 3")
        return product(_path(2), _cycle(n), ProductKind.CARTESIAN)
    if kind == "grid":
        m, n = p
        return product(_path(m), _path(n), ProductKind.CARTESIAN)
    if kind == "cylinder":
        m, n = p
        return product(_path(m), _cycle(n), ProductKind.CARTESIAN)
    if kind == "torus":
        m, n = p
        return product(_cycle(m), _cycle(n), ProductKind.CARTESIAN)
    if kind == "cliquebridge":
        return _clique_bridge(*p)
    if kind == "fixture":
        return _load_fixture(p[0])
    if kind == "hypercube":
        return _hypercube(*p)
    raise ValueError(f"unknown family {kind!r}")
