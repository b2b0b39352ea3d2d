import pytest
from hypothesis import HealthCheck, settings

from localmodels.root_datum import build_root_datum
from oracles import C2_EPS, datum

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def a1():
    return datum("A", 1)


@pytest.fixture
def a2():
    return datum("A", 2)


@pytest.fixture
def gl3():
    return datum("A", 2, "gl")


@pytest.fixture
def c2():
    return datum("C", 2)


@pytest.fixture
def c2eps():
    return build_root_datum(C2_EPS)
