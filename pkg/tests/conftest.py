import pytest

from firefighter import TrialBudget, load_fixture

EXHAUSTIVE_BUDGET = TrialBudget(mode="exhaustive")


def _graph(name):
    g, _ = load_fixture(name)
    return g


@pytest.fixture
def p4():
    return _graph("P4")


@pytest.fixture
def star4():
    return _graph("STAR4")


@pytest.fixture
def spider():
    return _graph("SPIDER")


@pytest.fixture
def uni6():
    return _graph("UNI6")


@pytest.fixture
def c4():
    return _graph("C4")


@pytest.fixture
def ex():
    return EXHAUSTIVE_BUDGET


def ids(g, *names):
    return [g.vid(x) for x in names]
