"""Random instance generators for property suites and experiment scripts."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import StructuredNetwork, build_network
from .pactus import Kind, PactusDecomposition, decompose


def _inputs(targets: Sequence[int], prefix: str = "u") -> list[tuple[str, int]]:
    return [(f"{prefix}{k}", t) for k, t in enumerate(targets, start=1)]


def random_path(rng: random.Random, n: int, m: int = 1, offset: int = 0) -> StructuredNetwork:
    order = rng.sample(range(offset + 1, offset + n + 1), n)
    targets = rng.sample(order, m)
    return build_network(order, list(zip(order, order[1:])), _inputs(targets))


def random_cycle(rng: random.Random, n: int, m: int = 2, offset: int = 0) -> StructuredNetwork:
    order = rng.sample(range(offset + 1, offset + n + 1), n)
    targets = rng.sample(order, m)
    return build_network(order, list(zip(order, order[1:] + order[:1])), _inputs(targets))


def random_tree(rng: random.Random, n: int, m: int, offset: int = 0) -> StructuredNetwork:
    labels = rng.sample(range(offset + 1, offset + n + 1), n)
    edges = [(labels[rng.randrange(k)], labels[k]) for k in range(1, n)]
    targets = rng.sample(labels, m)
    return build_network(labels, edges, _inputs(targets))


def random_ssc_path(rng: random.Random, n: int, offset: int = 0, prefix: str = "u") -> StructuredNetwork:
    """Path with one input on a terminal node (SSC by construction)."""
    order = rng.sample(range(offset + 1, offset + n + 1), n)
    end = order[0] if rng.random() < 0.5 else order[-1]
    return build_network(order, list(zip(order, order[1:])), _inputs([end], prefix))


def random_ssc_component(rng: random.Random, n: int, offset: int = 0, prefix: str = "u") -> StructuredNetwork:
    """SSC path (terminal input) or SSC cycle (two adjacent inputs)."""
    if n >= 3 and rng.random() < 0.5:
        order = rng.sample(range(offset + 1, offset + n + 1), n)
        k = rng.randrange(n)
        targets = [order[k], order[(k + 1) % n]]
        edges = list(zip(order, order[1:] + order[:1]))
        return build_network(order, edges, _inputs(targets, prefix))
    return random_ssc_path(rng, n, offset, prefix)


def random_pactus(
    rng: random.Random, max_n: int = 12, max_m: int = 4
) -> tuple[StructuredNetwork, PactusDecomposition]:
    """State-only pactus with known seeds.

    Components are paths (1-4 nodes) or cycles (3-5 nodes) joined along a
    random spanning tree of components, occasionally with an extra component
    adjacency; every bridge graph holds 1..min(|V_i|, |V_j|) one-to-one edges.
    """
    while True:
        m = rng.randint(1, max_m)
        sizes, kinds = [], []
        for _ in range(m):
            if rng.random() < 0.5:
                kinds.append(Kind.CYCLE)
                sizes.append(rng.randint(3, 5))
            else:
                kinds.append(Kind.PATH)
                sizes.append(rng.randint(1, 4))
        if sum(sizes) <= max_n:
            break

    labels = rng.sample(range(1, sum(sizes) + 1), sum(sizes))
    groups, edges = [], []
    at = 0
    for size, kind in zip(sizes, kinds):
        nodes = labels[at : at + size]
        at += size
        groups.append((nodes, kind))
        edges += list(zip(nodes, nodes[1:]))
        if kind is Kind.CYCLE:
            edges.append((nodes[-1], nodes[0]))

    pairs = [(rng.randrange(j), j) for j in range(1, m)]
    if m >= 3 and rng.random() < 0.25:
        i, j = rng.sample(range(m), 2)
        if (min(i, j), max(i, j)) not in pairs:
            pairs.append((min(i, j), max(i, j)))
    for i, j in pairs:
        a, b = groups[i][0], groups[j][0]
        count = rng.randint(1, min(len(a), len(b)))
        edges += list(zip(rng.sample(a, count), rng.sample(b, count)))

    net = build_network(labels, edges)
    return net, decompose(net, groups)
