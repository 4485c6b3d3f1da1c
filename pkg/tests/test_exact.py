import pytest
from hypothesis import given, strategies as st

import brute
from conftest import networks
from sscnet import NodeRole, build_network, classify_node, is_ssc_exact, ssc_nodes
from sscnet.errors import NodeInAlpha, NotAccessible, TooLarge
from sscnet.exact import anchored_failure, colex_rank, dedicated_nodes, has_dedicated
from sscnet import exact
from sscnet.fixtures import load

CYCLE4 = [(1, 2), (2, 3), (3, 4), (4, 1)]


def test_worked_classification():
    net = load("fig1a").network
    assert classify_node(net, 2, [1, 3]) is NodeRole.SHARING
    assert classify_node(net, "u1", [1, 3]) is NodeRole.DEDICATED
    assert classify_node(net, 5, [1, 3]) is NodeRole.NOT_NEIGHBOR
    with pytest.raises(NodeInAlpha):
        classify_node(net, 1, [1, 3])


def test_input_on_singleton_is_dedicated():
    net = build_network([1, 2], [(1, 2)], [("u", 2)])
    assert classify_node(net, "u", [2]) is NodeRole.DEDICATED


@pytest.mark.parametrize("name, alpha, expected", [("fig1a", [1, 3], True), ("fig1b", [1, 3], False), ("fig2b", [2, 4], False)])
def test_has_dedicated(name, alpha, expected):
    assert has_dedicated(load(name).network, alpha) is expected


@pytest.mark.parametrize(
    "name, ssc, witness",
    [("fig1a", True, None), ("fig1b", False, {1, 3}), ("fig2a", True, None), ("fig2b", False, {2, 4}), ("fig3", True, None)],
)
def test_fixture_verdicts(name, ssc, witness):
    report = is_ssc_exact(load(name).network)
    assert report.is_ssc is ssc
    assert report.witness == (None if witness is None else frozenset(witness))


def test_subsets_examined_counts():
    assert is_ssc_exact(load("fig2b").network).subsets_examined == 9
    assert is_ssc_exact(load("fig1a").network).subsets_examined == 31


def test_ssc_node_sets():
    assert ssc_nodes(load("fig2b").network) == {1, 3}
    assert ssc_nodes(load("fig4a").network) == {1, 2, 3, 4, 6}
    assert ssc_nodes(load("fig1a").network) == set(range(1, 6))


def test_star_with_leaf_inputs_is_ssc():
    # brute-force verdict, frozen
    net = build_network([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)], [("a", 2), ("b", 3), ("d", 4)])
    assert is_ssc_exact(net).is_ssc


def test_limits_and_accessibility():
    path = build_network(range(1, 26), [(k, k + 1) for k in range(1, 25)], [("u", 1)])
    with pytest.raises(TooLarge):
        is_ssc_exact(path)
    with pytest.raises(TooLarge):
        ssc_nodes(path)
    loose = build_network([1, 2], [], [("u", 1)])
    with pytest.raises(NotAccessible):
        is_ssc_exact(loose)
    assert not is_ssc_exact(loose, require_accessible=False).is_ssc


def test_colex_rank():
    masks = sorted((m for m in range(1, 64) if m.bit_count() == 3))
    assert [colex_rank(m) for m in masks] == list(range(len(masks)))


def test_threaded_sweep_is_deterministic(monkeypatch):
    net = build_network(range(1, 13), [(k, k + 1) for k in range(1, 12)] + [(1, 7)], [("u", 4)])
    single = is_ssc_exact(net, require_accessible=False)
    monkeypatch.setattr(exact, "CHUNK_BITS", 5)
    monkeypatch.setenv("SSC_THREADS", "4")
    assert is_ssc_exact(net, require_accessible=False) == single
    monkeypatch.setenv("SSC_THREADS", "1")
    assert is_ssc_exact(net, require_accessible=False) == single


@given(networks())
def test_matches_brute_force(net):
    targets = [t for _, t in net.inputs]
    ok, witness = brute.is_ssc(net.state_nodes, net.state_edges, targets)
    report = is_ssc_exact(net, require_accessible=False)
    assert report.is_ssc is ok
    assert report.witness == witness
    assert ssc_nodes(net) == brute.ssc_nodes(net.state_nodes, net.state_edges, targets)


@given(networks(), st.data())
def test_anchored_matches_brute_force(net, data):
    anchor = data.draw(st.sets(st.sampled_from(net.state_nodes), min_size=1))
    targets = [t for _, t in net.inputs]
    assert anchored_failure(net, anchor) == brute.anchored_failure(net.state_nodes, net.state_edges, targets, anchor)


@given(networks())
def test_report_invariants(net):
    report = is_ssc_exact(net, require_accessible=False)
    assert report.subsets_examined <= 2**net.n - 1
    assert (report.subsets_examined == 2**net.n - 1) is report.is_ssc or report.witness == net.members(2**net.n - 1)
    assert report.is_ssc == (ssc_nodes(net) == set(net.state_nodes))
    if not report.is_ssc:
        assert not has_dedicated(net, report.witness)
        assert not dedicated_nodes(net, report.witness)


@given(networks(), st.data())
def test_roles_partition(net, data):
    alpha = data.draw(st.sets(st.sampled_from(net.state_nodes), min_size=1))
    outside = [v for v in net.state_nodes if v not in alpha] + list(net.input_nodes)
    ded = {v for v in outside if classify_node(net, v, alpha) is NodeRole.DEDICATED}
    assert ded == dedicated_nodes(net, alpha)


@given(networks(), st.integers(1, 8))
def test_adding_an_input_keeps_ssc(net, t):
    if t > net.n or not is_ssc_exact(net, require_accessible=False).is_ssc:
        return
    assert is_ssc_exact(net.with_inputs([("extra", t)]), require_accessible=False).is_ssc
