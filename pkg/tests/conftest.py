import pytest

from sweff.model import parse_profile


@pytest.fixture
def p1():
    """Two agents with opposed strict preferences."""
    return parse_profile("1: a > b\n2: b > a")


@pytest.fixture
def p2():
    return parse_profile("1: a > b\n2: a > b")


@pytest.fixture
def p3():
    """a and b are Pareto indifferent, c is worse for everyone."""
    return parse_profile("1: a ~ b > c\n2: a ~ b > c")
