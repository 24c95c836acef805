"""Pytest configuration and shared examples for the clutter SDK tests"""

import logging
import os
import sys

import pytest

SRC = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
if SRC not in sys.path:
    sys.path.insert(0, SRC)

from clutter_sdk import (  # noqa: E402
    SimplicialComplex,
    SquarefreeMonomialIdeal,
    UniformClutter,
)


def _debug_enabled() -> bool:
    return os.getenv("CLUTTER_DEBUG", "").lower() in ("1", "true", "yes")


def pytest_configure(config):
    """Enable debug logging if CLUTTER_DEBUG is set"""
    if _debug_enabled():
        config.option.log_cli = True
        config.option.log_cli_level = "DEBUG"


@pytest.fixture(scope="session", autouse=True)
def setup_logging():
    """Setup test logging"""
    test_logger = logging.getLogger("test")
    level = logging.DEBUG if _debug_enabled() else logging.INFO
    test_logger.setLevel(level)
    logging.getLogger("clutter_sdk").setLevel(level)
    if _debug_enabled():
        test_logger.info("Debug logging enabled (CLUTTER_DEBUG=1)")
    yield test_logger


# Full-size fixture checks and sweeps run only with CLUTTER_SLOW=1
slow = pytest.mark.skipif(
    os.getenv("CLUTTER_SLOW", "").lower() not in ("1", "true", "yes"),
    reason="CLUTTER_SLOW not set",
)


def clutter(n, d, *circuits):
    return UniformClutter.from_circuits(n, d, [[int(c) for c in str(x)] for x in circuits])


def ideal(n, *generators):
    return SquarefreeMonomialIdeal.from_generators(
        n, [[int(c) for c in str(g)] for g in generators]
    )


def digits(face):
    """Vertices of a face written together, as in the helpers above."""
    return "".join(str(v) for v in face.vertices)


DUNCE_HAT = [
    (1, 5, 6), (1, 3, 5), (2, 3, 5), (2, 4, 5), (1, 2, 4), (1, 3, 4),
    (3, 4, 8), (2, 3, 8), (1, 2, 8), (1, 7, 8), (1, 2, 7), (2, 3, 7),
    (3, 6, 7), (1, 3, 6), (4, 5, 6), (4, 6, 8), (6, 7, 8),
]

BING_HOUSE = [
    (2, 4, 5), (2, 3, 5), (3, 5, 6), (3, 4, 6), (1, 2, 7), (2, 7, 8), (2, 3, 8),
    (3, 8, 9), (3, 7, 9), (4, 7, 8), (4, 5, 8), (5, 6, 8), (6, 8, 9), (6, 7, 9),
    (4, 6, 7), (1, 4, 7), (3, 4, 7), (1, 2, 3), (2, 3, 6), (2, 5, 6), (1, 3, 10),
    (3, 10, 11), (2, 3, 11), (2, 11, 12), (2, 10, 12), (4, 10, 11), (4, 6, 11),
    (5, 6, 11), (5, 11, 12), (5, 10, 12), (4, 5, 10), (1, 4, 10), (2, 4, 10),
]


@pytest.fixture
def figure1_c():
    return clutter(6, 3, 123, 124, 134, 234, 125, 126, 156, 256)


@pytest.fixture
def figure1_d():
    return clutter(5, 3, 123, 124, 134, 235, 245, 345)


@pytest.fixture
def figure1_order():
    """The six-step simplicial order of figure1_c."""
    return [(1, 3), (1, 4), (2, 4), (1, 2), (2, 6), (1, 5)]


@pytest.fixture
def figure2_graph():
    return clutter(9, 2, 12, 13, 15, 23, 25, 34, 35, 45, 56, 57, 67, 78, 79)


@pytest.fixture
def bowtie():
    return clutter(5, 2, 12, 13, 23, 34, 35, 45)


@pytest.fixture
def example1_ideal():
    return ideal(5, 145, 235)


@pytest.fixture
def five_cycle():
    return ideal(5, 12, 23, 34, 45, 15)


@pytest.fixture
def stable5():
    return ideal(5, 123, 124, 134, 234, 125)


@pytest.fixture
def dunce_hat():
    return SimplicialComplex.from_faces(8, DUNCE_HAT)


@pytest.fixture
def bing_house():
    return SimplicialComplex.from_faces(12, BING_HOUSE)


@pytest.fixture
def rp2():
    return SimplicialComplex.from_faces(
        6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
            (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    )
