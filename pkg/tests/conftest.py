import os

import pytest
from hypothesis import HealthCheck, settings

from pathideals.graphs import load_graph

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURE_DIR, name)


@pytest.fixture(scope="session")
def caterpillar():
    """7-vertex caterpillar: spine x1..x6, extra leaf x7 at x2. nu3 = 2."""
    return load_graph(fixture_path("caterpillar_7.txt"))


@pytest.fixture(scope="session")
def c5_pendant():
    """5-cycle with one pendant vertex; reg = 2, nu3 = 1."""
    return load_graph(fixture_path("c5_pendant_6.txt"))


@pytest.fixture(scope="session")
def c6_pendant():
    """6-cycle with one pendant vertex; reg = 3, nu3 = 1."""
    return load_graph(fixture_path("c6_pendant_7.txt"))


@pytest.fixture(scope="session")
def c7_tail():
    """7-cycle with a pendant 4-vertex path; reg = 6, nu3 = 2."""
    return load_graph(fixture_path("c7_tail_11.txt"))
