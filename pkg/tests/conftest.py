import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from oracles import random_graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, dims=(1, 2, 3), max_steps=6):
    dim = draw(st.sampled_from(dims))
    seed = draw(st.integers(0, 2**32 - 1))
    steps = draw(st.integers(0, max_steps))
    return random_graph(random.Random(seed), dim, steps)


@st.composite
def perms(draw, size=None):
    size = size or draw(st.integers(2, 6))
    return tuple(draw(st.permutations(range(size))))


@pytest.fixture
def rng():
    return random.Random(20261016)
