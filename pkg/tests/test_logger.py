from __future__ import annotations

import logging

from src import config
from src.logger import attach_to_log, set_level


def test_default_level_comes_from_config(monkeypatch):
    monkeypatch.setattr(config, "LOG_LEVEL", "debug")
    assert attach_to_log("src.level_from_config").level == logging.DEBUG
    assert attach_to_log("src.level_given", "error").level == logging.ERROR


def test_set_level_reaches_library_loggers():
    logger = attach_to_log("src.set_level_target", "WARNING")
    other = logging.getLogger("elsewhere")
    before = other.level
    set_level("INFO")
    assert logger.level == logging.INFO
    assert other.level == before
    set_level(config.LOG_LEVEL)
