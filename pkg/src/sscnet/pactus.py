"""Path/cycle decompositions of state graphs and the structural SSC shortcuts.

A pactus is a connected state graph split into disjoint components, each of
which induces a path or a cycle, joined by bridge graphs. Within one bridge
graph the edges pair nodes one-to-one, so ``1 <= |E_ij| <= min(|V_i|, |V_j|)``.

The shortcut checks here are the closed-form SSC conditions for paths (input
on a terminal node), trees (split into single-input paths) and two-input
cycles (input nodes adjacent), plus the sufficient component-wise test for a
pactus whose bridge graphs each hold one edge.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import (
    ComponentNotSsc,
    DisconnectedState,
    MultiBridge,
    NotACycle,
    NotAPactus,
    NotAPath,
    NotATree,
    TooFewInputs,
    WrongInputCount,
)
from .exact import DEFAULT_LIMIT, is_ssc_exact
from .graph import StructuredNetwork, build_network, is_connected


SEARCH_BUDGET = 256


class Kind(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Component:
    index: int
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]
    kind: Kind


@dataclass(frozen=True)
class BridgeGraph:
    from_index: int
    to_index: int
    edges: frozenset[tuple[int, int]]

    def endpoints(self, side: Component) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e if v in side.nodes)


@dataclass(frozen=True)
class PactusDecomposition:
    components: tuple[Component, ...]
    bridges: dict[tuple[int, int], BridgeGraph]
    neighbor_sets: dict[int, frozenset[int]]

    @property
    def m(self) -> int:
        return len(self.components)

    def component(self, index: int) -> Component:
        return self.components[index - 1]

    def component_of(self, node: int) -> Component:
        for c in self.components:
            if node in c.nodes:
                return c
        raise KeyError(node)

    def bridge(self, i: int, j: int) -> BridgeGraph:
        """Bridge graph between components ``i`` and ``j`` (either order)."""
        return self.bridges[(min(i, j), max(i, j))]

    def edge_set(self) -> set[tuple[int, int]]:
        out = set()
        for c in self.components:
            out |= c.edges
        for b in self.bridges.values():
            out |= b.edges
        return out


# shape predicates on plain node/edge sets ------------------------------------


def _degrees(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> dict[int, int]:
    deg = {v: 0 for v in nodes}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return deg


def _connected(nodes: set[int], edges: Iterable[tuple[int, int]]) -> bool:
    if not nodes:
        return False
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    start = next(iter(nodes))
    seen = {start}
    queue = deque([start])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == nodes


def is_path_graph(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    nodes, edges = set(nodes), list(edges)
    return (
        _connected(nodes, edges)
        and len(edges) == len(nodes) - 1
        and all(d <= 2 for d in _degrees(nodes, edges).values())
    )


def is_cycle_graph(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    nodes, edges = set(nodes), list(edges)
    return (
        len(nodes) >= 3
        and _connected(nodes, edges)
        and all(d == 2 for d in _degrees(nodes, edges).values())
    )


def is_tree_graph(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    nodes, edges = set(nodes), list(edges)
    return _connected(nodes, edges) and len(edges) == len(nodes) - 1


# decomposition ---------------------------------------------------------------


def _assemble(net: StructuredNetwork, groups: Sequence[tuple[Iterable[int], Kind | str | None]]) -> PactusDecomposition:
    """Validate a component assignment against the pactus rules."""
    where: dict[int, int] = {}
    components = []
    for k, (nodes, kind) in enumerate(groups, start=1):
        nodes = frozenset(nodes)
        if not nodes:
            raise NotAPactus(f"component {k} is empty")
        for v in nodes:
            if v not in net.index:
                raise NotAPactus(f"component {k} names unknown node {v}")
            if v in where:
                raise NotAPactus(f"node {v} appears in components {where[v]} and {k}")
            where[v] = k
        edges = frozenset(e for e in net.state_edges if e[0] in nodes and e[1] in nodes)
        if kind is None:
            kind = Kind.CYCLE if is_cycle_graph(nodes, edges) else Kind.PATH
        kind = Kind(kind)
        ok = is_path_graph(nodes, edges) if kind is Kind.PATH else is_cycle_graph(nodes, edges)
        if not ok:
            raise NotAPactus(f"component {k} {sorted(nodes)} does not induce a {kind.value}")
        components.append(Component(k, nodes, edges, kind))
    if len(where) != net.n:
        missing = sorted(set(net.state_nodes) - where.keys())
        raise NotAPactus(f"nodes {missing} are not covered by any component")

    cross: dict[tuple[int, int], set[tuple[int, int]]] = {}
    for a, b in net.state_edges:
        i, j = where[a], where[b]
        if i != j:
            cross.setdefault((min(i, j), max(i, j)), set()).add((a, b))

    bridges = {}
    neighbors: dict[int, set[int]] = {c.index: set() for c in components}
    for (i, j), edges in sorted(cross.items()):
        ci, cj = components[i - 1], components[j - 1]
        ends_i = [v for e in edges for v in e if v in ci.nodes]
        ends_j = [v for e in edges for v in e if v in cj.nodes]
        if len(set(ends_i)) != len(ends_i) or len(set(ends_j)) != len(ends_j):
            raise NotAPactus(f"bridge graph between components {i} and {j} is not one-to-one")
        if len(edges) > min(len(ci.nodes), len(cj.nodes)):
            raise NotAPactus(f"bridge graph between components {i} and {j} exceeds its edge bound")
        bridges[(i, j)] = BridgeGraph(i, j, frozenset(edges))
        neighbors[i].add(j)
        neighbors[j].add(i)

    return PactusDecomposition(
        tuple(components), bridges, {k: frozenset(v) for k, v in neighbors.items()}
    )


def _greedy_paths(net: StructuredNetwork, free: set[int]) -> list[list[int]]:
    """Group ``free`` nodes into maximal induced paths, smallest ids first."""
    paths = []
    while free:
        # prefer a start with few free neighbours so paths run end to end
        start = min(free, key=lambda v: (len(net.neighbors(v) & free), v))
        path = [start]
        free.discard(start)
        for _ in range(2):
            while True:
                tail = path[-1]
                inside = set(path)
                options = sorted(
                    w for w in net.neighbors(tail) & free if not (net.neighbors(w) & inside) - {tail}
                )
                if not options:
                    break
                path.append(options[0])
                free.discard(options[0])
            path.reverse()
        paths.append(path)
    return paths


def decompose(
    net: StructuredNetwork, seeds: Sequence[tuple[Iterable[int], Kind | str | None]] | None = None
) -> PactusDecomposition:
    """Split the state graph into path/cycle components joined by bridge graphs.

    Seeds, when given, are validated and used as is. Otherwise vertex-disjoint
    chordless cycles become cycle components (largest first, then backtracking
    over alternative selections) and the remaining nodes are grouped greedily
    into maximal induced paths. The search is capped at ``SEARCH_BUDGET``
    candidate decompositions and can miss ones that exist; NotAPactus then
    means "supply seeds".
    """
    if not is_connected(net):
        raise DisconnectedState("the state graph is not connected")
    if seeds is not None:
        return _assemble(net, seeds)

    g = nx.Graph()
    g.add_nodes_from(net.state_nodes)
    g.add_edges_from(net.state_edges)
    cycles = sorted(
        (sorted(c) for c in nx.chordless_cycles(g) if len(c) >= 3),
        key=lambda c: (-len(c), c),
    )
    tries = 0
    last: NotAPactus | None = None
    for chosen in _disjoint_selections(cycles):
        groups = [(c, Kind.CYCLE) for c in chosen]
        free = set(net.state_nodes).difference(*map(set, chosen))
        groups.extend((p, Kind.PATH) for p in _greedy_paths(net, free))
        groups.sort(key=lambda grp: min(grp[0]))
        try:
            return _assemble(net, groups)
        except NotAPactus as exc:
            last = exc
        tries += 1
        if tries >= SEARCH_BUDGET:
            break
    raise NotAPactus(f"heuristic decomposition failed ({last}); supply seeds")


def _disjoint_selections(cycles: list[list[int]]):
    """Sets of vertex-disjoint cycles, greedy (largest first) selection first."""

    def walk(k: int, used: set[int], chosen: list[list[int]]):
        if k == len(cycles):
            yield list(chosen)
            return
        c = cycles[k]
        if not used & set(c):
            chosen.append(c)
            yield from walk(k + 1, used | set(c), chosen)
            chosen.pop()
        yield from walk(k + 1, used, chosen)

    seen = set()
    for sel in walk(0, set(), []):
        key = tuple(map(tuple, sel))
        if key not in seen:
            seen.add(key)
            yield sel


def all_decompositions(net: StructuredNetwork) -> Iterator[PactusDecomposition]:
    """Every valid decomposition of a connected state graph (desk scale only).

    Nodes are assigned to blocks in id order. Induced degree above 2 and a
    node touching another block twice can only get worse as nodes are added,
    so such partial assignments are pruned; block shapes are checked at the end.
    """
    if not is_connected(net):
        raise DisconnectedState("the state graph is not connected")
    nb = {v: net.neighbors(v) for v in net.state_nodes}
    order = list(net.state_nodes)
    block_of: dict[int, int] = {}
    blocks: list[set[int]] = []

    def fits(v: int, k: int) -> bool:
        members = blocks[k]
        inside = nb[v] & members
        if len(inside) > 2 or any(len(nb[w] & members) >= 2 for w in inside):
            return False
        for w in nb[v]:
            j = block_of.get(w)
            if j is not None and j != k and (len(nb[v] & blocks[j]) > 1 or nb[w] & members):
                return False
        return True

    def finish() -> PactusDecomposition | None:
        groups = []
        for b in blocks:
            edges = [e for e in net.state_edges if e[0] in b and e[1] in b]
            if is_path_graph(b, edges):
                groups.append((sorted(b), Kind.PATH))
            elif is_cycle_graph(b, edges):
                groups.append((sorted(b), Kind.CYCLE))
            else:
                return None
        try:
            return _assemble(net, groups)
        except NotAPactus:
            return None

    def rec(i: int) -> Iterator[PactusDecomposition]:
        if i == len(order):
            dec = finish()
            if dec is not None:
                yield dec
            return
        v = order[i]
        for k in range(len(blocks) + 1):
            if k == len(blocks):
                blocks.append(set())
            if fits(v, k):
                blocks[k].add(v)
                block_of[v] = k
                yield from rec(i + 1)
                del block_of[v]
                blocks[k].discard(v)
            if not blocks[k]:
                blocks.pop()

    return rec(0)


# structural shortcut checks --------------------------------------------------


def check_path_ssc(comp_net: StructuredNetwork) -> bool:
    """A single-input path is SSC iff its input sits on a terminal node.

    With several inputs the path is treated as a tree, where the terminal
    condition alone is no longer necessary.
    """
    if not is_path_graph(comp_net.state_nodes, comp_net.state_edges):
        raise NotAPath("state graph is not a path")
    if len(comp_net.inputs) >= 2:
        return check_tree_ssc(comp_net)
    return any(comp_net.degree(t) <= 1 for _, t in comp_net.inputs)


def check_tree_ssc(net: StructuredNetwork) -> bool:
    """Tree rule: SSC iff the tree splits into m single-input paths.

    Each piece must carry exactly one input, placed on one of its terminal
    nodes; pieces are joined by single bridge edges (automatic in a tree).
    The split is searched exhaustively over sets of m - 1 cut edges.
    """
    if not is_tree_graph(net.state_nodes, net.state_edges):
        raise NotATree("state graph is not a tree")
    m = len(net.inputs)
    if m < 2:
        raise TooFewInputs("the tree rule needs at least two inputs")
    if m > net.n:
        return False
    targets = [t for _, t in net.inputs]
    for cut in combinations(net.state_edges, m - 1):
        kept = [e for e in net.state_edges if e not in cut]
        if all(_piece_ok(piece, kept, targets) for piece in _pieces(net.state_nodes, kept)):
            return True
    return False


def _pieces(nodes: Iterable[int], edges: list[tuple[int, int]]) -> list[set[int]]:
    g = nx.Graph()
    g.add_nodes_from(nodes)
    g.add_edges_from(edges)
    return [set(c) for c in nx.connected_components(g)]


def _piece_ok(piece: set[int], edges: list[tuple[int, int]], targets: list[int]) -> bool:
    inner = [e for e in edges if e[0] in piece and e[1] in piece]
    if not is_path_graph(piece, inner):
        return False
    hits = [t for t in targets if t in piece]
    if len(hits) != 1:
        return False
    return _degrees(piece, inner)[hits[0]] <= 1


def check_cycle_ssc(net: StructuredNetwork) -> bool:
    """A two-input cycle is SSC iff the two input-attached nodes are adjacent."""
    if not is_cycle_graph(net.state_nodes, net.state_edges):
        raise NotACycle("state graph is not a cycle")
    if len(net.inputs) != 2:
        raise WrongInputCount(f"the cycle rule needs exactly two inputs, got {len(net.inputs)}")
    (_, k), (_, l) = net.inputs
    return (min(k, l), max(k, l)) in set(net.state_edges)


def component_network(dec: PactusDecomposition, index: int, net: StructuredNetwork) -> StructuredNetwork:
    comp = dec.component(index)
    inputs = [(u, t) for u, t in net.inputs if t in comp.nodes]
    return build_network(comp.nodes, comp.edges, inputs)


def check_pactus_ssc(
    dec: PactusDecomposition, net: StructuredNetwork, limit: int = DEFAULT_LIMIT
) -> bool:
    """Sufficient test for a pactus whose bridge graphs each hold one edge.

    True means SSC. False is inconclusive: some component fails on its own,
    and the whole graph may still be SSC.
    """
    for (i, j), b in dec.bridges.items():
        if len(b.edges) > 1:
            raise MultiBridge(f"bridge graph ({i}, {j}) has {len(b.edges)} edges")
    for comp in dec.components:
        sub = component_network(dec, comp.index, net)
        if not sub.inputs:
            return False
        if comp.kind is Kind.PATH:
            ok = check_path_ssc(sub)
        elif len(sub.inputs) == 2 and len({t for _, t in sub.inputs}) == 2:
            ok = check_cycle_ssc(sub)
        else:
            ok = is_ssc_exact(sub, limit=limit).is_ssc
        if not ok:
            return False
    return True


def merge_preserves_ssc(
    net_i: StructuredNetwork,
    net_j: StructuredNetwork,
    bridge: tuple[int, int],
    limit: int = DEFAULT_LIMIT,
) -> bool:
    """Join two disjoint SSC networks by one bridge edge and re-check exactly."""
    if set(net_i.state_nodes) & set(net_j.state_nodes):
        raise ValueError("networks share state nodes")
    if set(net_i.input_nodes) & set(net_j.input_nodes):
        raise ValueError("networks share input names")
    for side in (net_i, net_j):
        if not is_ssc_exact(side, limit=limit).is_ssc:
            raise ComponentNotSsc("both networks must be SSC before merging")
    a, b = bridge
    if not ((a in net_i.index and b in net_j.index) or (b in net_i.index and a in net_j.index)):
        raise ValueError("bridge must join the two networks")
    merged = build_network(
        [*net_i.state_nodes, *net_j.state_nodes],
        [*net_i.state_edges, *net_j.state_edges, bridge],
        [*net_i.inputs, *net_j.inputs],
    )
    return is_ssc_exact(merged, limit=limit).is_ssc
