"""Structured network data model.

A network is the zero/nonzero pattern of a diffusively-coupled system with a
self-loop on every state node: undirected state edges plus directed input
attachments, each input feeding exactly one state node.

State nodes are positive integers. Input nodes are :class:`InputNode` values
(wrapping a string label such as ``"u1"``), so the two label spaces can never
collide. At build time state nodes receive a dense index ``0..n-1`` in sorted
order; subsets of state nodes are bitmasks over that index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import (
    DanglingEdge,
    DuplicateInputAttachment,
    EmptyStateSet,
    InvalidNetwork,
)


@dataclass(frozen=True, order=True)
class InputNode:
    name: str

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return self.name


NodeId = Union[int, InputNode]


@dataclass(frozen=True)
class SubsetAlpha:
    """Non-empty subset of state nodes, as a bitmask over the dense index."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask <= 0:
            raise ValueError("alpha must be a non-empty subset of the state nodes")

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class StructuredNetwork:
    state_nodes: tuple[int, ...]
    state_edges: tuple[tuple[int, int], ...]
    inputs: tuple[tuple[InputNode, int], ...]
    index: dict[int, int] = field(init=False, repr=False, compare=False)
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)
    input_mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {v: k for k, v in enumerate(self.state_nodes)}
        adj = [0] * len(self.state_nodes)
        for a, b in self.state_edges:
            adj[index[a]] |= 1 << index[b]
            adj[index[b]] |= 1 << index[a]
        mask = 0
        for _, target in self.inputs:
            mask |= 1 << index[target]
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "adjacency", tuple(adj))
        object.__setattr__(self, "input_mask", mask)

    @property
    def n(self) -> int:
        return len(self.state_nodes)

    @property
    def self_loops(self) -> bool:
        # every state node carries a strictly negative self-loop; not configurable
        return True

    @property
    def input_nodes(self) -> tuple[InputNode, ...]:
        return tuple(u for u, _ in self.inputs)

    def neighbors(self, node: int) -> frozenset[int]:
        return frozenset(self._nodes_of(self.adjacency[self.index[node]]))

    def degree(self, node: int) -> int:
        return self.adjacency[self.index[node]].bit_count()

    def inputs_at(self, node: int) -> tuple[InputNode, ...]:
        return tuple(u for u, t in self.inputs if t == node)

    def target_of(self, u: InputNode | str) -> int:
        u = as_input(u)
        for name, t in self.inputs:
            if name == u:
                return t
        raise KeyError(f"unknown input node {u}")

    def alpha(self, nodes: Iterable[int]) -> SubsetAlpha:
        return SubsetAlpha(self.mask_of(nodes))

    def mask_of(self, nodes: Iterable[int]) -> int:
        mask = 0
        for v in nodes:
            try:
                mask |= 1 << self.index[v]
            except KeyError:
                raise KeyError(f"{v!r} is not a state node") from None
        return mask

    def members(self, alpha: SubsetAlpha | int) -> frozenset[int]:
        mask = alpha.mask if isinstance(alpha, SubsetAlpha) else alpha
        return frozenset(self._nodes_of(mask))

    def _nodes_of(self, mask: int) -> Iterable[int]:
        while mask:
            low = mask & -mask
            yield self.state_nodes[low.bit_length() - 1]
            mask ^= low

    def with_inputs(self, extra: Iterable[tuple[InputNode | str, int]]) -> StructuredNetwork:
        """Return a copy with additional input attachments."""
        return build_network(self.state_nodes, self.state_edges, [*self.inputs, *extra])

    def subnetwork(self, nodes: Iterable[int]) -> StructuredNetwork:
        """Induced state subgraph on ``nodes`` keeping inputs that land inside it."""
        keep = set(nodes)
        edges = [e for e in self.state_edges if e[0] in keep and e[1] in keep]
        inputs = [(u, t) for u, t in self.inputs if t in keep]
        return build_network(keep, edges, inputs)


def as_input(u: InputNode | str) -> InputNode:
    return u if isinstance(u, InputNode) else InputNode(str(u))


def build_network(
    state_nodes: Iterable[int],
    state_edges: Iterable[tuple[int, int]],
    input_attachments: Iterable[tuple[InputNode | str, int]] = (),
) -> StructuredNetwork:
    """Validate raw node/edge/input lists and return a canonical network.

    Duplicate undirected edges collapse; edges are stored as sorted pairs in
    sorted order. Input attachments keep their given order.
    """
    nodes = set()
    for v in state_nodes:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidNetwork(f"state node ids must be positive integers, got {v!r}")
        nodes.add(v)
    if not nodes:
        raise EmptyStateSet("a network needs at least one state node")

    edges = set()
    for a, b in state_edges:
        if a not in nodes or b not in nodes:
            raise DanglingEdge(f"edge ({a}, {b}) references an unknown state node")
        if a == b:
            raise InvalidNetwork(f"self-pair ({a}, {a}); self-loops are implicit on every node")
        edges.add((min(a, b), max(a, b)))

    seen: set[InputNode] = set()
    inputs = []
    for u, target in input_attachments:
        u = as_input(u)
        if not u.name:
            raise InvalidNetwork("input node ids must be non-empty")
        if u in seen:
            raise DuplicateInputAttachment(f"input {u} is attached more than once")
        if target not in nodes:
            raise DanglingEdge(f"input {u} attaches to unknown state node {target!r}")
        seen.add(u)
        inputs.append((u, target))

    return StructuredNetwork(tuple(sorted(nodes)), tuple(sorted(edges)), tuple(inputs))


def neighbors_of_set(net: StructuredNetwork, alpha: SubsetAlpha | Iterable[int]) -> set[NodeId]:
    """N(alpha) minus alpha, over state and input nodes."""
    mask = as_mask(net, alpha)
    reach = 0
    for k, adj in enumerate(net.adjacency):
        if mask >> k & 1:
            reach |= adj
    out: set[NodeId] = set(net.members(reach & ~mask))
    out.update(u for u, t in net.inputs if mask >> net.index[t] & 1)
    return out


def is_accessible(net: StructuredNetwork) -> bool:
    """True iff every state node can be reached from some input node."""
    seen = {t for _, t in net.inputs}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in net.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == net.n


def is_connected(net: StructuredNetwork) -> bool:
    start = net.state_nodes[0]
    seen = {start}
    queue = deque([start])
    while queue:
        for w in net.neighbors(queue.popleft()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == net.n


def as_mask(net: StructuredNetwork, alpha: SubsetAlpha | Iterable[int]) -> int:
    if isinstance(alpha, SubsetAlpha):
        if alpha.mask >> net.n:
            raise ValueError("alpha has bits outside the state-node index")
        return alpha.mask
    mask = net.mask_of(alpha)
    if not mask:
        raise ValueError("alpha must be non-empty")
    return mask
