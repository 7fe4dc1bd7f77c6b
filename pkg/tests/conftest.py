import sys
import random

import pytest

from sepdiff.diffpoly import DiffRing
from sepdiff.field import make_presentation
from sepdiff.parsing import parse_dpoly


@pytest.fixture
def K5():
    return make_presentation(5)


@pytest.fixture
def K3c():
    return make_presentation(3, ["c"])


@pytest.fixture
def R5(K5):
    return DiffRing(K5)


@pytest.fixture
def P5(R5):
    """Parser for differential polynomials over GF(5)(t)."""
    return lambda text: parse_dpoly(text, R5)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
