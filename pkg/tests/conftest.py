import random

import pytest
from hypothesis import settings, strategies as st

from sscnet import build_network

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def networks(draw, max_n=8, min_n=1):
    """Connected-or-not small networks with distinct input targets."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    targets = draw(st.lists(st.integers(1, n), unique=True, max_size=n))
    return build_network(range(1, n + 1), edges, [(f"u{k}", t) for k, t in enumerate(targets, 1)])


@pytest.fixture
def rng():
    return random.Random(20240617)
