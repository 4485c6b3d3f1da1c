"""JSON network documents, JSON reports and DOT rendering.

A document looks like::

    {"version": 1,
     "state_nodes": [1, 2, 3],
     "state_edges": [[1, 2], [2, 3]],
     "inputs": [{"id": "u1", "target": 1}],
     "decomposition": [{"nodes": [1, 2, 3], "kind": "path"}]}

``inputs`` and ``decomposition`` are optional. Every state node carries a
self-loop, so ``"self_loops": false`` is rejected rather than ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .composer import InputPlacement, StageRecord
from .errors import DocumentError, InvalidNetwork
from .exact import DEFAULT_LIMIT, SscReport, ssc_nodes
from .graph import StructuredNetwork, build_network
from .pactus import Kind, PactusDecomposition, decompose

FORMAT_VERSION = 1
_KEYS = {"version", "state_nodes", "state_edges", "inputs", "decomposition", "self_loops"}


@dataclass(frozen=True)
class NetworkDocument:
    network: StructuredNetwork
    decomposition: tuple[tuple[tuple[int, ...], Kind], ...] | None = None

    def pactus(self) -> PactusDecomposition:
        """Decomposition from the document seeds, or inferred when absent."""
        return decompose(self.network, self.decomposition)


def _locate(text: str, needle: str) -> tuple[int | None, int | None]:
    at = text.find(needle)
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    return line, at - (text.rfind("\n", 0, at) + 1) + 1


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(text: str) -> NetworkDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object", 1, 1)

    def fail(msg: str, key: str) -> DocumentError:
        return DocumentError(msg, *_locate(text, f'"{key}"'))

    if unknown := set(raw) - _KEYS:
        key = sorted(unknown)[0]
        raise fail(f"unknown field {key!r}", key)
    if raw.get("version", FORMAT_VERSION) != FORMAT_VERSION:
        raise fail(f"unsupported version {raw['version']!r}", "version")
    if raw.get("self_loops", True) is not True:
        raise fail("every state node carries a self-loop; self_loops must be true", "self_loops")

    try:
        for key in ("state_nodes", "state_edges"):
            if not isinstance(raw.get(key), list):
                raise fail(f"{key} must be a list", key)
        nodes = [_int(v, "state node") for v in raw["state_nodes"]]
        edges = []
        for e in raw["state_edges"]:
            if not isinstance(e, list) or len(e) != 2:
                raise ValueError(f"edge {e!r} must be a 2-element array")
            edges.append((_int(e[0], "edge endpoint"), _int(e[1], "edge endpoint")))
        inputs = []
        for item in raw.get("inputs", []):
            if not isinstance(item, dict) or set(item) != {"id", "target"} or not isinstance(item["id"], str):
                raise ValueError(f"input {item!r} must be {{'id': str, 'target': int}}")
            inputs.append((item["id"], _int(item["target"], "input target")))
        net = build_network(nodes, edges, inputs)
    except (ValueError, InvalidNetwork) as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc), *_locate(text, '"state_nodes"')) from None

    groups = None
    if "decomposition" in raw:
        try:
            groups = tuple(
                (tuple(sorted(_int(v, "component node") for v in g["nodes"])), Kind(g["kind"]))
                for g in raw["decomposition"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise fail(f"bad decomposition entry: {exc}", "decomposition") from None
    return NetworkDocument(net, groups)


def load_document(path: str | Path) -> NetworkDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def document_dict(doc: NetworkDocument) -> dict[str, Any]:
    net = doc.network
    out: dict[str, Any] = {
        "version": FORMAT_VERSION,
        "state_nodes": list(net.state_nodes),
        "state_edges": [list(e) for e in net.state_edges],
        "inputs": [{"id": u.name, "target": t} for u, t in net.inputs],
    }
    if doc.decomposition is not None:
        out["decomposition"] = [{"nodes": list(nodes), "kind": kind.value} for nodes, kind in doc.decomposition]
    return out


def dump_document(doc: NetworkDocument) -> str:
    return json.dumps(document_dict(doc), indent=2) + "\n"


def decomposition_json(dec: PactusDecomposition) -> list[dict[str, Any]]:
    return [{"nodes": sorted(c.nodes), "kind": c.kind.value} for c in dec.components]


def report_json(report: SscReport) -> dict[str, Any]:
    return {
        "is_ssc": report.is_ssc,
        "witness": None if report.witness is None else sorted(report.witness),
        "subsets_examined": report.subsets_examined,
    }


def _externals(pairs) -> list[dict[str, Any]]:
    return [{"id": u.name, "target": t} for u, t in pairs]


def _stage_json(rec: StageRecord) -> dict[str, Any]:
    return {
        "component": rec.component,
        "graph_type": rec.graph_type.value,
        "component_inputs": sorted(rec.component_inputs),
        "externals_added": _externals(rec.externals_added),
        "ssc_nodes": sorted(rec.ssc_nodes),
        "cumulative_ssc": sorted(rec.cumulative_ssc),
    }


def placement_json(placement: InputPlacement, dec: PactusDecomposition) -> dict[str, Any]:
    return {
        "size": placement.size,
        "external": _externals(placement.external),
        "component_inputs": {str(i): sorted(v) for i, v in sorted(placement.component_inputs.items())},
        "stages": [_stage_json(r) for r in placement.per_stage],
        "decomposition": decomposition_json(dec),
    }


# DOT rendering ------------------------------------------------------------

_BLUE = "#3b6fd4"
_GREY = "#d9d9d9"


def to_dot(
    net: StructuredNetwork,
    annotate: str | None = None,
    dec: PactusDecomposition | None = None,
    limit: int = DEFAULT_LIMIT,
) -> str:
    """Render ``net`` as an undirected DOT graph with a stable line order.

    State nodes are filled circles and input nodes open circles. With
    ``annotate="ssc-nodes"`` SSC nodes are filled blue; with
    ``annotate="components"`` each component becomes a cluster and bridge
    edges are drawn red and dashed (``dec`` is required).
    """
    if annotate not in (None, "ssc-nodes", "components"):
        raise ValueError(f"unknown annotation {annotate!r}")
    blue = ssc_nodes(net, limit=limit) if annotate == "ssc-nodes" else frozenset()
    lines = ["graph G {", "  node [shape=circle, style=filled, fillcolor=\"" + _GREY + "\"];"]

    def state(v: int) -> str:
        return f"  {v} [fillcolor=\"{_BLUE}\"];" if v in blue else f"  {v};"

    if annotate == "components":
        if dec is None:
            raise ValueError("component annotation needs a decomposition")
        for c in dec.components:
            lines.append(f"  subgraph cluster_{c.index} {{")
            lines.append(f"    label=\"G{c.index} ({c.kind.value})\";")
            lines += ["  " + state(v) for v in sorted(c.nodes)]
            lines.append("  }")
        inner = set().union(*(c.edges for c in dec.components))
    else:
        lines += [state(v) for v in net.state_nodes]
        inner = set(net.state_edges)

    for a, b in net.state_edges:
        style = "" if (a, b) in inner else " [color=red, style=dashed]"
        lines.append(f"  {a} -- {b}{style};")
    for u, t in net.inputs:
        lines.append(f"  \"{u.name}\" [style=solid, fillcolor=none];")
        lines.append(f"  \"{u.name}\" -- {t} [dir=forward];")
    lines.append("}")
    return "\n".join(lines) + "\n"
