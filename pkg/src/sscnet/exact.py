"""Exact strong structural controllability by exhaustive subset enumeration.

A network is SSC iff every non-empty subset ``alpha`` of state nodes has a
dedicated node: a node outside ``alpha`` (state or input) with exactly one
neighbour inside ``alpha``. An input attached to a member of ``alpha`` is
always dedicated, so the input side reduces to one mask test.

The sweep is vectorised over contiguous ranges of bitmasks. Ranges are
independent, so they can be spread over threads (``SSC_THREADS`` caps the
pool); the reported witness is the minimum failing subset under the
(cardinality, bitmask value) order, which keeps results independent of
scheduling.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from .errors import NodeInAlpha, NotAccessible, TooLarge
from .graph import InputNode, NodeId, StructuredNetwork, SubsetAlpha, as_input, as_mask, is_accessible

DEFAULT_LIMIT = 24
CHUNK_BITS = 18


class NodeRole(enum.Enum):
    DEDICATED = "dedicated"
    SHARING = "sharing"
    NOT_NEIGHBOR = "not-neighbor"


@dataclass(frozen=True)
class SscReport:
    is_ssc: bool
    witness: frozenset[int] | None
    subsets_examined: int


def classify_node(net: StructuredNetwork, i: NodeId | str, alpha: SubsetAlpha | Iterable[int]) -> NodeRole:
    mask = as_mask(net, alpha)
    if isinstance(i, int) and not isinstance(i, bool):
        k = net.index[i]
        if mask >> k & 1:
            raise NodeInAlpha(f"node {i} is a member of alpha")
        hits = (net.adjacency[k] & mask).bit_count()
    else:
        hits = mask >> net.index[net.target_of(as_input(i))] & 1
    if hits == 1:
        return NodeRole.DEDICATED
    if hits > 1:
        return NodeRole.SHARING
    return NodeRole.NOT_NEIGHBOR


def has_dedicated(net: StructuredNetwork, alpha: SubsetAlpha | Iterable[int]) -> bool:
    mask = as_mask(net, alpha)
    if mask & net.input_mask:
        return True
    for k, adj in enumerate(net.adjacency):
        if not mask >> k & 1 and (adj & mask).bit_count() == 1:
            return True
    return False


def _failing(
    adjacency: tuple[int, ...], input_mask: int, lo: int, hi: int, helpers: int = -1, touch: int = 0
) -> np.ndarray:
    alphas = np.arange(lo, hi, dtype=np.uint64)
    ok = (alphas & np.uint64(input_mask)) != 0
    if touch:
        ok |= (alphas & np.uint64(touch)) == 0
    for k, adj in enumerate(adjacency):
        if not adj or not helpers >> k & 1:
            continue
        x = alphas & np.uint64(adj)
        # exactly one bit set, and node k itself outside alpha
        ded = (x != 0) & ((x & (x - np.uint64(1))) == 0) & (((alphas >> np.uint64(k)) & np.uint64(1)) == 0)
        ok |= ded
    return alphas[~ok]


def _threads() -> int:
    env = os.environ.get("SSC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _sweep(net: StructuredNetwork, helpers: int = -1, touch: int = 0) -> tuple[int | None, int]:
    """Return (first failing mask or None, OR of every failing mask).

    ``helpers`` restricts which state nodes may serve as dedicated nodes and
    ``touch`` skips subsets disjoint from it; the defaults give the plain test.
    """
    n = net.n
    total = 1 << n
    step = 1 << CHUNK_BITS
    ranges = [(max(lo, 1), min(lo + step, total)) for lo in range(0, total, step)]

    def run(bounds: tuple[int, int]) -> tuple[int | None, int]:
        bad = _failing(net.adjacency, net.input_mask, *bounds, helpers=helpers, touch=touch)
        if bad.size == 0:
            return None, 0
        counts = np.bitwise_count(bad)
        smallest = counts.min()
        first = int(bad[counts == smallest].min())
        return first, int(np.bitwise_or.reduce(bad))

    workers = min(_threads(), len(ranges))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, ranges))
    else:
        results = [run(r) for r in ranges]

    firsts = [f for f, _ in results if f is not None]
    union = 0
    for _, u in results:
        union |= u
    first = min(firsts, key=lambda m: (m.bit_count(), m)) if firsts else None
    return first, union


def colex_rank(mask: int) -> int:
    """Number of masks with the same popcount and a smaller value."""
    rank = 0
    j = 0
    for pos in range(mask.bit_length()):
        if mask >> pos & 1:
            j += 1
            rank += comb(pos, j)
    return rank


def _examined(n: int, mask: int) -> int:
    c = mask.bit_count()
    return sum(comb(n, k) for k in range(1, c)) + colex_rank(mask) + 1


def _check_size(net: StructuredNetwork, limit: int) -> None:
    if net.n > limit:
        raise TooLarge(f"{net.n} state nodes exceeds the exact-check limit of {limit}")


def is_ssc_exact(
    net: StructuredNetwork, limit: int = DEFAULT_LIMIT, require_accessible: bool = True
) -> SscReport:
    """Decide SSC by checking every non-empty subset of state nodes.

    Raises TooLarge above ``limit`` state nodes and NotAccessible for
    inaccessible networks unless ``require_accessible`` is False (in which
    case the enumeration itself reports the failure).
    """
    _check_size(net, limit)
    if require_accessible and not is_accessible(net):
        raise NotAccessible("some state node is unreachable from every input")
    first, _ = _sweep(net)
    if first is None:
        return SscReport(True, None, (1 << net.n) - 1)
    return SscReport(False, net.members(first), _examined(net.n, first))


def ssc_nodes(net: StructuredNetwork, limit: int = DEFAULT_LIMIT) -> frozenset[int]:
    """State nodes k such that every subset containing k has a dedicated node."""
    _check_size(net, limit)
    _, bad = _sweep(net)
    return frozenset(net.state_nodes) - net.members(bad)


def anchored_failure(
    net: StructuredNetwork, anchor: Iterable[int], limit: int = DEFAULT_LIMIT
) -> frozenset[int] | None:
    """First subset touching ``anchor`` whose only dedicated nodes lie outside it.

    Dedicated nodes are drawn from the inputs and the ``anchor`` nodes alone;
    the remaining state nodes only count as possible members of the subset.
    Returns None when every subset touching ``anchor`` is covered.
    """
    _check_size(net, limit)
    mask = net.mask_of(anchor)
    first, _ = _sweep(net, helpers=mask, touch=mask)
    return None if first is None else net.members(first)


def dedicated_nodes(net: StructuredNetwork, alpha: SubsetAlpha | Iterable[int]) -> set[NodeId]:
    mask = as_mask(net, alpha)
    out: set[NodeId] = {u for u, t in net.inputs if mask >> net.index[t] & 1}
    for k, adj in enumerate(net.adjacency):
        if not mask >> k & 1 and (adj & mask).bit_count() == 1:
            out.add(net.state_nodes[k])
    return out


__all__ = [
    "DEFAULT_LIMIT",
    "InputNode",
    "NodeRole",
    "SscReport",
    "classify_node",
    "dedicated_nodes",
    "colex_rank",
    "has_dedicated",
    "is_ssc_exact",
    "ssc_nodes",
]
