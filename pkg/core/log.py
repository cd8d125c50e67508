# core/log.py
import logging
import sys

from core.settings import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(verbose: bool = False) -> None:
    """
    Configure the root logger with a single stderr handler.
    Stdout stays reserved for command results.
    """
    level = logging.DEBUG if verbose or settings.app.debug else settings.app.log_level.upper()
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
