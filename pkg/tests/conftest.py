import pathlib
import sys

import pytest

from approxre.comparison import CostFunction, cost_symmetrize, hamming, levenshtein, subword, uniform
from approxre.derivation import DerivationSession
from approxre.syntax import CostRegistry, parse_are

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def asym_cost():
    # a -> c costs 4, c -> a costs 3, a -> b and c -> b cost 1
    return CostFunction("C", "abc", {("a", "c"): 4, ("c", "a"): 3, ("a", "b"): 1, ("c", "b"): 1})


@pytest.fixture
def C():
    return asym_cost()


@pytest.fixture
def C_sym():
    return cost_symmetrize(asym_cost())


@pytest.fixture
def f2():
    return uniform("ab", 2, "f2")


@pytest.fixture
def H3():
    return hamming("abc")


@pytest.fixture
def L2():
    return levenshtein("ab")


@pytest.fixture
def D3():
    return subword("abc")


@pytest.fixture
def abc():
    return DerivationSession("abc")


@pytest.fixture
def ab():
    return DerivationSession("ab")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def parse_abc():
    reg = CostRegistry("abc")
    return lambda text: parse_are(text, reg)


@pytest.fixture
def parse_ab(f2):
    reg = CostRegistry("ab")
    reg.add(f2)
    return lambda text: parse_are(text, reg)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
