"""JSON and DOT formats used by the command line.

Graphs are read from ``{"a": 2, "b": 1, "edges": [[0, 0], [1, 0]], "cap": {"b0": 2}}``
where omitted capacities default to 1. Vertices are always named ``a<i>`` /
``b<j>`` in output so internal ids never leak.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Any

from bdm.decomposition import transitive_reduction
from bdm.errors import BdmError, GraphError
from bdm.graph import BipartiteGraph, build_graph
from bdm.pipeline import PipelineResult

SCHEMA_VERSION = "1"


class ParseError(BdmError, ValueError):
    """Input document does not match the expected schema."""


def _int(value: Any, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def graph_from_obj(obj: Any) -> BipartiteGraph:
    if not isinstance(obj, dict):
        raise ParseError("graph document must be a JSON object")
    unknown = set(obj) - {"a", "b", "edges", "cap"}
    if unknown:
        raise ParseError(f"unknown keys: {sorted(unknown)}")
    for key in ("a", "b", "edges"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}")
    a = _int(obj["a"], "'a'")
    b = _int(obj["b"], "'b'")
    if not isinstance(obj["edges"], list):
        raise ParseError("'edges' must be a list")
    edges = []
    for item in obj["edges"]:
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"edge {item!r} is not a pair")
        edges.append((_int(item[0], "edge end"), _int(item[1], "edge end")))
    caps = obj.get("cap", {})
    if not isinstance(caps, dict):
        raise ParseError("'cap' must be an object keyed by vertex name")
    try:
        g = build_graph(a, b, edges)
        by_id = {g.vertex_by_name(name): _int(k, f"capacity of {name}") for name, k in caps.items()}
        return build_graph(a, b, edges, by_id)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph(text: str) -> BipartiteGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_obj(obj)


def graph_to_obj(g: BipartiteGraph) -> dict:
    return {
        "a": g.n_a,
        "b": g.n_b,
        "edges": [[u, v - g.n_a] for u, v in g.edges],
        "cap": {g.name(v): g.cap[v] for v in range(g.n)},
    }


def names(g: BipartiteGraph, vs) -> list[str]:
    return [g.name(v) for v in sorted(vs)]


@dataclass
class DecompositionDocument:
    schema_version: str
    matching: list[list[str]]
    max_size: int
    components: list[dict]
    order_arcs: list[list[int]]
    ext_A: list[str]
    ext_B: list[str]
    D_set: list[str]
    edge_classes: dict[str, str]
    canonical_verifying: list[list[str]]

    @classmethod
    def from_result(cls, r: PipelineResult, reduce: bool = False) -> "DecompositionDocument":
        g, d = r.graph, r.decomposition
        arcs = transitive_reduction(d) if reduce else d.order_arcs
        matched = (g.edges[e] for e in sorted(r.matching.edges))
        return cls(
            schema_version=SCHEMA_VERSION,
            matching=[[g.name(u), g.name(v)] for u, v in matched],
            max_size=r.matching.size,
            components=[
                {
                    "id": c.id,
                    "vertices": names(g, c.vertices),
                    "kind": c.kind.value,
                    "trivial": c.trivial,
                }
                for c in d.components
            ],
            order_arcs=[[s, t] for s, t in arcs],
            ext_A=names(g, d.ext_a),
            ext_B=names(g, d.ext_b),
            D_set=names(g, r.d_set),
            edge_classes={g.edge_name(e): c.value for e, c in enumerate(r.classification.classes)},
            canonical_verifying=[names(g, z) for z in r.canonical],
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "DecompositionDocument":
        obj = json.loads(text)
        expected = {f.name for f in fields(cls)}
        if not isinstance(obj, dict) or set(obj) != expected:
            raise ParseError("not a decomposition document")
        if obj["schema_version"] != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema_version {obj['schema_version']!r}")
        return cls(**obj)


def to_dot(r: PipelineResult, reduce: bool = False) -> str:
    d = r.decomposition
    arcs = transitive_reduction(d) if reduce else sorted(set(d.order_arcs))
    lines = ["digraph order {", "  rankdir=LR;"]
    for c in d.components:
        members = " ".join(names(r.graph, c.vertices))
        lines.append(f'  C{c.id} [label="C{c.id}[{c.kind.value}]", tooltip="{members}"];')
    lines.extend(f"  C{s} -> C{t};" for s, t in arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"
