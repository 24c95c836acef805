"""Pytest configuration for the clutter CLI tests"""

import logging
import os
import sys

import pytest
from click.testing import CliRunner

HERE = os.path.dirname(__file__)
for src in (os.path.join(HERE, "..", "src"), os.path.join(HERE, "..", "..", "sdk", "src")):
    src = os.path.abspath(src)
    if src not in sys.path:
        sys.path.insert(0, src)


def _debug_enabled() -> bool:
    return os.getenv("CLUTTER_DEBUG", "").lower() in ("1", "true", "yes")


def pytest_configure(config):
    """Enable debug logging if CLUTTER_DEBUG is set"""
    if _debug_enabled():
        config.option.log_cli = True
        config.option.log_cli_level = "DEBUG"


@pytest.fixture(scope="session", autouse=True)
def setup_logging():
    test_logger = logging.getLogger("test")
    level = logging.DEBUG if _debug_enabled() else logging.INFO
    test_logger.setLevel(level)
    for name in ("clutter_sdk", "clutter_cli"):
        logging.getLogger(name).setLevel(level)
    yield test_logger


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope="session")
def catalog():
    from clutter_cli.fixtures import FixtureCatalog

    return FixtureCatalog.load()
