from pathlib import Path

import pytest
from hypothesis import settings

from apw.fixedpoint import FixedPointStream
from apw.substitution import parse_spec

DATA_DIR = Path(__file__).parent.resolve() / "data"

settings.register_profile("apw", deadline=None)
settings.load_profile("apw")


def pytest_addoption(parser):
    parser.addoption(
        "--slow", action="store_true", default=False, help="run slow tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return

    skip_slow = pytest.mark.skip(reason="run slow tests with --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session", autouse=True)
def max_window():
    """
    Ignore any resource cap set in the environment running the tests
    """
    with pytest.MonkeyPatch.context() as monkeypatch:
        monkeypatch.delenv("APW_MAX_WINDOW", raising=False)
        yield


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def thue_morse():
    return parse_spec("0 -> 01\n1 -> 10\n")


@pytest.fixture(scope="session")
def period_doubling():
    return parse_spec("0 -> 01\n1 -> 00\n")


@pytest.fixture(scope="session")
def cantor():
    return parse_spec("0 -> 010\n1 -> 111\n")


@pytest.fixture(scope="session")
def alternating():
    """
    Primitive substitution whose fixed point is (01)^∞
    """
    return parse_spec("0 -> 01\n1 -> 01\n")


@pytest.fixture(scope="session")
def tm_stream(thue_morse):
    return FixedPointStream(thue_morse, 0)


@pytest.fixture(scope="session")
def tm_stream_1(thue_morse):
    """
    Thue-Morse fixed point starting with 1
    """
    return FixedPointStream(thue_morse, 1)


@pytest.fixture(scope="session")
def pd_stream(period_doubling):
    return FixedPointStream(period_doubling, 0)


@pytest.fixture(scope="session")
def cantor_stream(cantor):
    return FixedPointStream(cantor, 0)


@pytest.fixture(scope="session")
def alternating_stream(alternating):
    return FixedPointStream(alternating, 0)
