"""Minimum external input placement for pactus graphs by stage-wise composition.

Components are visited in breadth-first order over the component adjacency
graph, starting from component 1. Stage ``i`` looks at the stage graph: the
component's own nodes and edges, plus the bridge edges to components not yet
visited, whose far endpoints join as leaves. Bridge edges arriving from
components already processed carry component inputs: a processed bridge
endpoint with exactly one leaf in its own stage graph acts on this component
like an external input attached to the far end of the bridge.

A stage is settled when every subset touching the component has a dedicated
node among the inputs (external or component) and the component's own nodes.
Leaves only count as possible members of a subset, never as its dedicated
node, because in the full network a leaf may have further neighbours in the
subset. With that reading, any subset of the full network is covered by the
first component it touches in the visiting order, so the composed placement
is SSC.

If a stage is not settled, the fewest external inputs on component nodes that
settle it are added. Within a size, candidate target sets are tried in
lexicographic order of node id (or reverse order for the ``largest``
tie-break), so results are reproducible. Stage graphs are small, so the stage
decision is taken by exact enumeration.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .errors import NotNeighbors, StageUnsatisfiable, TooLarge
from .exact import DEFAULT_LIMIT, SscReport, anchored_failure, is_ssc_exact, ssc_nodes
from .graph import InputNode, StructuredNetwork, build_network
from .pactus import PactusDecomposition, is_path_graph, is_tree_graph

AUDIT_BUDGET = 12


class StageType(str, enum.Enum):
    PATH = "path-type"
    TREE = "tree-type"
    CYCLE = "cycle-type"


@dataclass(frozen=True)
class StageRecord:
    component: int
    graph_type: StageType
    component_inputs: frozenset[int]
    externals_added: tuple[tuple[InputNode, int], ...]
    ssc_nodes: frozenset[int]
    cumulative_ssc: frozenset[int]


@dataclass
class InputPlacement:
    external: list[tuple[InputNode, int]] = field(default_factory=list)
    component_inputs: dict[int, frozenset[int]] = field(default_factory=dict)
    per_stage: list[StageRecord] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.external)

    def targets(self) -> list[int]:
        return [t for _, t in self.external]


def bfs_order(dec: PactusDecomposition, start: int = 1) -> list[int]:
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for j in sorted(dec.neighbor_sets[i]):
            if j not in seen:
                seen.add(j)
                order.append(j)
                queue.append(j)
    return order


def check_order(dec: PactusDecomposition, order: Sequence[int]) -> list[int]:
    order = list(order)
    if sorted(order) != list(range(1, dec.m + 1)):
        raise ValueError(f"order must list components 1..{dec.m} once each")
    for q in range(1, len(order)):
        if not dec.neighbor_sets[order[q]] & set(order[:q]):
            raise ValueError(f"component {order[q]} is not adjacent to any earlier component")
    return order


def connected_orders(dec: PactusDecomposition) -> Iterator[list[int]]:
    """Every visiting order in which each component touches an earlier one."""

    def grow(prefix: list[int]) -> Iterator[list[int]]:
        if len(prefix) == dec.m:
            yield list(prefix)
            return
        seen = set(prefix)
        for j in range(1, dec.m + 1):
            if j not in seen and (not prefix or dec.neighbor_sets[j] & seen):
                prefix.append(j)
                yield from grow(prefix)
                prefix.pop()

    return grow([])


def stage_edges(dec: PactusDecomposition, i: int, later: set[int]) -> tuple[set[int], set[tuple[int, int]]]:
    """Nodes and edges of the stage graph of component ``i``."""
    comp = dec.component(i)
    nodes = set(comp.nodes)
    edges = set(comp.edges)
    for j in dec.neighbor_sets[i] & later:
        for a, b in dec.bridge(i, j).edges:
            nodes.update((a, b))
            edges.add((a, b))
    return nodes, edges


def _classify(nodes: set[int], edges: set[tuple[int, int]]) -> StageType:
    if is_path_graph(nodes, edges):
        return StageType.PATH
    if is_tree_graph(nodes, edges):
        return StageType.TREE
    return StageType.CYCLE


def stage_type(dec: PactusDecomposition, i: int) -> StageType:
    """Classify the stage graph of component ``i`` under the breadth-first order."""
    order = bfs_order(dec)
    later = set(order[order.index(i) + 1 :])
    return _classify(*stage_edges(dec, i, later))


def component_input_nodes(
    dec: PactusDecomposition, i: int, j: int, current_subgraph_ssc: bool
) -> frozenset[int]:
    """Bridge endpoints on the ``i`` side that act as inputs for component ``j``."""
    if j not in dec.neighbor_sets[i]:
        raise NotNeighbors(f"components {i} and {j} share no bridge edge")
    if not current_subgraph_ssc:
        return frozenset()
    return dec.bridge(i, j).endpoints(dec.component(i))


def min_inputs(
    net_state_only: StructuredNetwork,
    dec: PactusDecomposition,
    tie_break: str = "smallest",
    stage_limit: int = DEFAULT_LIMIT,
    order: Sequence[int] | None = None,
) -> InputPlacement:
    """Place the fewest external inputs, stage by stage, so the pactus is SSC.

    ``order`` overrides the breadth-first visiting order; it must list every
    component once, each one adjacent to some component listed before it.
    """
    if net_state_only.inputs:
        raise ValueError("min_inputs expects a network without input nodes")
    if tie_break not in ("smallest", "largest"):
        raise ValueError(f"unknown tie-break {tie_break!r}")

    placement = InputPlacement()
    order = bfs_order(dec) if order is None else check_order(dec, order)
    stage_ssc: dict[int, bool] = {}
    single_leaf: set[int] = set()
    cumulative: set[int] = set()

    for pos, i in enumerate(order):
        comp = dec.component(i)
        later = set(order[pos + 1 :])
        nodes, edges = stage_edges(dec, i, later)
        if len(nodes) > stage_limit:
            raise TooLarge(f"stage graph of component {i} has {len(nodes)} nodes")

        # component inputs arrive over bridges from processed neighbours
        virtual: list[tuple[str, int]] = []
        arrived: set[int] = set()
        for p in sorted(dec.neighbor_sets[i] - later):
            senders = component_input_nodes(dec, p, i, stage_ssc[p]) & single_leaf
            arrived |= senders
            for a, b in sorted(dec.bridge(p, i).edges):
                k, l = (a, b) if a in senders else (b, a)
                if k in senders:
                    virtual.append((f"c{k}->{l}", l))
        placement.component_inputs[i] = frozenset(arrived)

        existing = [(u, t) for u, t in placement.external if t in nodes]

        def stage_net(extra: tuple[int, ...]) -> StructuredNetwork:
            added = [(f"x{t}", t) for t in extra]
            return build_network(nodes, edges, [*existing, *virtual, *added])

        chosen = _search(stage_net, comp.nodes, tie_break, stage_limit)
        if chosen is None:
            raise StageUnsatisfiable(f"no input placement settles the stage graph of component {i}")

        added = []
        for t in chosen:
            u = InputNode(f"u{len(placement.external) + 1}")
            placement.external.append((u, t))
            added.append((u, t))
        stage_ssc[i] = True
        final = stage_net(chosen)
        for v in comp.nodes:
            if (final.adjacency[final.index[v]] & ~final.mask_of(comp.nodes)).bit_count() == 1:
                single_leaf.add(v)
        local = ssc_nodes(final, limit=stage_limit)
        cumulative |= local
        placement.per_stage.append(
            StageRecord(
                component=i,
                graph_type=_classify(nodes, edges),
                component_inputs=frozenset(arrived),
                externals_added=tuple(added),
                ssc_nodes=local,
                cumulative_ssc=frozenset(cumulative),
            )
        )
    return placement


def _search(stage_net, own: frozenset[int], tie_break: str, limit: int) -> tuple[int, ...] | None:
    """Smallest set of component nodes whose inputs settle the stage."""
    reverse = tie_break == "largest"
    base = stage_net(())
    if anchored_failure(base, own, limit=limit) is None:
        return ()
    fed = {t for _, t in base.inputs}
    pool = sorted((v for v in own if v not in fed), reverse=reverse)
    for size in range(1, len(pool) + 1):
        for extra in combinations(pool, size):
            if anchored_failure(stage_net(extra), own, limit=limit) is None:
                return extra
    return None


def apply_placement(net_state_only: StructuredNetwork, placement: InputPlacement) -> StructuredNetwork:
    return net_state_only.with_inputs(placement.external)


def verify_placement(
    net_state_only: StructuredNetwork, placement: InputPlacement, limit: int = DEFAULT_LIMIT
) -> SscReport:
    """Attach the placed inputs and run the exact check on the whole network.

    Raises AssertionError if a per-stage SSC-node set is not contained in the
    SSC-node set of the final network.
    """
    out = apply_placement(net_state_only, placement)
    report = is_ssc_exact(out, limit=limit, require_accessible=False)
    final = ssc_nodes(out, limit=limit)
    for rec in placement.per_stage:
        if not rec.ssc_nodes <= final:
            raise AssertionError(
                f"stage {rec.component} SSC nodes {sorted(rec.ssc_nodes - final)} are not SSC in the output"
            )
    return report


def minimality_audit(
    net_state_only: StructuredNetwork, placement: InputPlacement, budget: int = AUDIT_BUDGET
) -> bool:
    """True iff no placement with fewer external inputs makes the network SSC.

    Adding inputs never destroys SSC, so it suffices to try every set of
    ``size - 1`` distinct targets.
    """
    if net_state_only.n > budget:
        raise TooLarge(f"{net_state_only.n} state nodes exceeds the audit budget of {budget}")
    k = placement.size - 1
    if k < 1:
        return True
    for targets in combinations(net_state_only.state_nodes, k):
        trial = net_state_only.with_inputs((f"a{t}", t) for t in targets)
        if is_ssc_exact(trial, limit=budget, require_accessible=False).is_ssc:
            return False
    return True
