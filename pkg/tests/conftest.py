import os
import sys

import pytest
from hypothesis import HealthCheck, assume, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from planarcube.errors import SamplingExhausted  # noqa: E402
from planarcube.generators import random_partial_cube, random_planar_partial_cube  # noqa: E402
from planarcube.graph import Graph  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def small_graphs(draw, max_n=8, connected=False):
    n = draw(st.integers(1 if connected else 0, max_n))
    vs = [f"v{i}" for i in range(n)]
    pairs = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    edges = set(chosen)
    if connected:
        # a random spanning tree keeps the sample connected
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            edges.add((vs[j], vs[i]))
    return Graph(vs, edges)


def _sample(gen, steps, seed, max_vertices):
    try:
        return gen(steps, seed, max_vertices=max_vertices)
    except SamplingExhausted:
        return None


@st.composite
def partial_cubes(draw, max_steps=7, max_vertices=40):
    steps = draw(st.integers(0, max_steps))
    seed = draw(st.integers(0, 2**32))
    g = _sample(random_partial_cube, steps, seed, max_vertices)
    assume(g is not None)
    return g


@st.composite
def planar_partial_cubes(draw, max_steps=7, max_vertices=40):
    steps = draw(st.integers(0, max_steps))
    seed = draw(st.integers(0, 2**32))
    g = _sample(random_planar_partial_cube, steps, seed, max_vertices)
    assume(g is not None)
    return g


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
