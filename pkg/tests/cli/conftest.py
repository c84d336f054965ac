import logging

import pytest


@pytest.fixture(autouse=True)
def restore_package_logger():
    """main() installs its own handler on the package logger; undo it after each test."""
    logger = logging.getLogger("odds_ratio_mc")
    saved = (logger.handlers[:], logger.level, logger.propagate)
    yield
    logger.handlers[:], logger.level, logger.propagate = saved
