"""Logging setup shared by all modules"""

import logging

from src import config

_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


def attach_to_log(name: str = "coxeterfold", level: str = None) -> logging.Logger:
    """
    Return a logger with a single stream handler

    Args:
        name: Logger name, usually the module's __name__
        level: Level name; defaults to config.LOG_LEVEL

    Returns:
        logging.Logger: Configured logger
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel((level or config.LOG_LEVEL).upper())
    return logger


def set_level(level: str) -> None:
    """Change the level of every logger created through attach_to_log"""
    for name, logger in logging.Logger.manager.loggerDict.items():
        if isinstance(logger, logging.Logger) and (name == "coxeterfold" or name.startswith(("src.", "generators."))):
            logger.setLevel(level.upper())
