import pytest
from hypothesis import given, strategies as st

from sscnet import InputNode, build_network, is_accessible
from sscnet.errors import DanglingEdge, DuplicateInputAttachment, EmptyStateSet, InvalidNetwork
from sscnet.graph import SubsetAlpha, neighbors_of_set

from conftest import networks

TREE = [(1, 2), (2, 3), (2, 4), (4, 5)]
FIG1A = build_network(range(1, 6), TREE, [("u1", 3), ("u2", 5)])
FIG2B = build_network(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)], [("u1", 1), ("u2", 3)])


def test_canonical_order_and_duplicate_edges():
    net = build_network([3, 1, 2], [(2, 1), (1, 2), (3, 2)])
    assert net.state_nodes == (1, 2, 3)
    assert net.state_edges == ((1, 2), (2, 3))
    assert net.self_loops


def test_single_node_with_input():
    net = build_network([1], [], [("u1", 1)])
    assert net.n == 1 and is_accessible(net)


@pytest.mark.parametrize(
    "nodes, edges, inputs, err",
    [
        (range(1, 6), TREE, [("u1", 3), ("u1", 5)], DuplicateInputAttachment),
        ([1, 2], [(1, 3)], [], DanglingEdge),
        ([1], [], [("u1", 2)], DanglingEdge),
        ([], [], [], EmptyStateSet),
        ([1, 2], [(1, 1)], [], InvalidNetwork),
        ([0, 1], [], [], InvalidNetwork),
    ],
)
def test_build_rejects(nodes, edges, inputs, err):
    with pytest.raises(err):
        build_network(nodes, edges, inputs)


def test_neighbours_of_set_examples():
    assert neighbors_of_set(FIG1A, [1, 3]) == {2, InputNode("u1")}
    assert neighbors_of_set(FIG2B, [2, 4]) == {1, 3}
    bare = build_network(range(1, 4), [(1, 2), (2, 3)])
    assert neighbors_of_set(bare, [1, 2, 3]) == set()


def test_subset_alpha_must_be_nonempty():
    with pytest.raises(ValueError):
        SubsetAlpha(0)


@pytest.mark.parametrize(
    "edges, inputs, expected",
    [([], [("u1", 1)], False), ([(1, 2)], [("u1", 1)], True), ([(1, 2)], [], False)],
)
def test_accessibility(edges, inputs, expected):
    assert is_accessible(build_network([1, 2], edges, inputs)) is expected


@given(networks(), st.data())
def test_neighbourhood_excludes_alpha(net, data):
    alpha = data.draw(st.sets(st.sampled_from(net.state_nodes), min_size=1))
    assert not neighbors_of_set(net, alpha) & alpha


@given(networks(), st.data())
def test_neighbourhood_relabelling(net, data):
    perm = data.draw(st.permutations(net.state_nodes))
    rename = dict(zip(net.state_nodes, (p + 100 for p in perm)))
    moved = build_network(
        rename.values(),
        [(rename[a], rename[b]) for a, b in net.state_edges],
        [(u, rename[t]) for u, t in net.inputs],
    )
    alpha = data.draw(st.sets(st.sampled_from(net.state_nodes), min_size=1))
    want = {rename.get(v, v) if isinstance(v, int) else v for v in neighbors_of_set(net, alpha)}
    assert neighbors_of_set(moved, {rename[v] for v in alpha}) == want


@given(networks(), st.integers(1, 8), st.integers(1, 8))
def test_accessibility_monotone(net, a, b):
    if not is_accessible(net):
        return
    if a <= net.n and b <= net.n and a != b:
        assert is_accessible(build_network(net.state_nodes, [*net.state_edges, (a, b)], net.inputs))
    if a <= net.n:
        assert is_accessible(net.with_inputs([("extra", a)]))
