"""Serialization: graph JSON, DIMACS .col, DOT, coloring files, CNF export.

Graph JSON is ``{"n": int, "edges": [[u, v], ...], "labels": [...]?}``.
DIMACS .col uses 1-based vertices with a ``p edge n m`` header.  Coloring
files are JSON arrays of 1-based colors indexed by vertex.  ``export_cnf``
writes a DIMACS CNF that is satisfiable iff the graph is k-colorable.
"""

from __future__ import annotations

import json
from typing import IO

from .coloring import Coloring
from .graph import Graph, from_edge_list
from .transforms import Mode


def graph_to_json_dict(g: Graph) -> dict:
    out: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_json_dict(payload: dict) -> Graph:
    labels = payload.get("labels")
    return from_edge_list(payload["n"], [tuple(e) for e in payload["edges"]], labels)


def dump_graph_json(g: Graph, sink: IO[str]) -> None:
    json.dump(graph_to_json_dict(g), sink)
    sink.write("\n")


def load_graph_json(text: str) -> Graph:
    return graph_from_json_dict(json.loads(text))


def dump_graph_col(g: Graph, sink: IO[str]) -> None:
    sink.write(f"p edge {g.n} {g.edge_count()}\n")
    for u, v in g.edges():
        sink.write(f"e {u + 1} {v + 1}\n")


def load_graph_col(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {lineno}: expected 'p edge n m'")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before 'p' header")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'p edge' header")
    return from_edge_list(n, edges)


def dump_graph_dot(g: Graph, sink: IO[str]) -> None:
    sink.write("graph {\n")
    for v in range(g.n):
        label = g.label(v)
        sink.write(f'  {v} [label="{label}"];\n')
    for u, v in g.edges():
        sink.write(f"  {u} -- {v};\n")
    sink.write("}\n")


def detect_and_load_graph(text: str) -> Graph:
    """Auto-detect JSON vs DIMACS .col by the first non-blank byte."""
    stripped = text.lstrip()
    if not stripped:
        raise ValueError("empty graph input")
    if stripped[0] == "{":
        return load_graph_json(text)
    return load_graph_col(text)


def dump_coloring(coloring: Coloring, sink: IO[str]) -> None:
    json.dump(list(coloring.colors), sink)
    sink.write("\n")


def load_coloring(text: str, mode: Mode) -> Coloring:
    payload = json.loads(text)
    if not isinstance(payload, list) or not all(isinstance(c, int) for c in payload):
        raise ValueError("coloring file must be a JSON array of integers")
    return Coloring(tuple(payload), mode)


def export_cnf(h: Graph, k: int, sink: IO[str]) -> None:
    """k-colorability as CNF: n*k variables, one-of-k per vertex, edge conflicts.

    Variable of (vertex v, color c in 0..k-1) is ``v*k + c + 1``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    clauses = []
    for v in range(h.n):
        clauses.append([v * k + c + 1 for c in range(k)])
    for u, v in h.edges():
        for c in range(k):
            clauses.append([-(u * k + c + 1), -(v * k + c + 1)])
    sink.write(f"p cnf {h.n * k} {len(clauses)}\n")
    for clause in clauses:
        sink.write(" ".join(str(lit) for lit in clause) + " 0\n")
