import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import networks
from sscnet import build_network, is_ssc_exact
from sscnet.errors import ExtraWeight, MissingWeight, SignViolation
from sscnet.fixtures import load
from sscnet.oracle import (
    OracleConfig,
    WeightedRealization,
    check_full_rank,
    controllability_rank,
    eigenspace_rank,
    krylov_rank,
    random_realization,
    realize,
    sample,
    sample_verdict,
)


def uniform(net, coupling=1.0, loop=-1.0, gain=1.0):
    return WeightedRealization(
        {e: coupling for e in net.state_edges},
        {v: loop for v in net.state_nodes},
        {u: gain for u in net.input_nodes},
    )


def test_single_node_assembly():
    net = build_network([1], [], [("u1", 1)])
    sys = realize(net, uniform(net))
    assert sys.l_tilde.tolist() == [[1.0]]
    assert sys.b.tolist() == [[1.0]]
    assert controllability_rank(sys) == 1


def test_two_node_path_by_hand():
    net = build_network([1, 2], [(1, 2)], [("u1", 1)])
    sys = realize(net, uniform(net))
    assert sys.l_tilde.tolist() == [[2.0, -1.0], [-1.0, 2.0]]
    assert np.allclose(np.linalg.eigvalsh(sys.l_tilde), [1.0, 3.0])
    assert check_full_rank(sys)
    assert controllability_rank(sys, "eigen") == controllability_rank(sys, "krylov") == 2


def test_symmetric_cycle_loses_rank():
    # eigenvector (0, 1, 0, -1) is orthogonal to e_1
    net = build_network(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)], [("u1", 1)])
    sys = realize(net, uniform(net))
    v = np.array([0.0, 1.0, 0.0, -1.0])
    assert np.allclose(sys.l_tilde @ v, 3.0 * v)
    assert eigenspace_rank(sys) == krylov_rank(sys) == 3


def test_weight_validation():
    net = load("fig2a").network
    good = uniform(net)
    with pytest.raises(MissingWeight):
        realize(net, WeightedRealization({}, good.loop, good.gain))
    with pytest.raises(ExtraWeight):
        realize(net, WeightedRealization({**good.coupling, (1, 3): 1.0}, good.loop, good.gain))
    with pytest.raises(MissingWeight):
        realize(net, WeightedRealization(good.coupling, good.loop, {}))
    with pytest.raises(SignViolation):
        realize(net, uniform(net, coupling=-1.0))
    with pytest.raises(SignViolation):
        realize(net, uniform(net, loop=0.0))
    with pytest.raises(SignViolation):
        realize(net, uniform(net, gain=0.0))


def test_sign_violation_can_break_definiteness():
    net = build_network([1, 2], [(1, 2)], [("u1", 1)])
    sys = realize(net, uniform(net, loop=5.0), strict=False)
    assert not check_full_rank(sys)


def test_sampling_is_seeded():
    net = load("fig2b").network
    assert sample(net, 20, seed=3) == sample(net, 20, seed=3)
    with pytest.raises(ValueError):
        sample(net, 0, seed=3)


def test_fixture_fractions():
    assert sample_verdict(load("fig1a").network, 200, seed=7) == 1.0
    assert sample_verdict(build_network([1], [], [("u", 1)]), 5, seed=0) == 1.0
    # non-SSC but generic draws are controllable
    assert sample_verdict(load("fig2b").network, 50, seed=7) > 0.9


@given(networks(max_n=7), st.integers(0, 2**32 - 1))
def test_realizations_positive_definite_and_methods_agree(net, seed):
    sys = realize(net, random_realization(net, np.random.default_rng(seed)))
    assert np.array_equal(sys.l_tilde, sys.l_tilde.T)
    assert check_full_rank(sys)
    assert eigenspace_rank(sys) == krylov_rank(sys)


@given(networks(max_n=7), st.integers(0, 2**32 - 1))
def test_ssc_implies_controllable(net, seed):
    if not net.inputs or not is_ssc_exact(net, require_accessible=False).is_ssc:
        return
    summary = sample(net, 10, seed)
    assert summary.controllable == summary.krylov_controllable == 10


def test_config_ranges_are_respected():
    net = load("fig1a").network
    cfg = OracleConfig(coupling=(1.0, 1.0), loop=(-2.0, -2.0), gain=(3.0, 3.0))
    w = random_realization(net, np.random.default_rng(0), cfg)
    assert set(w.coupling.values()) == {1.0} and set(w.loop.values()) == {-2.0} and set(w.gain.values()) == {3.0}
