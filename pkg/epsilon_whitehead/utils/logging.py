import logging

from rich.console import Console
from rich.logging import RichHandler

PACKAGE_LOGGER = "epsilon_whitehead"


def configure_logging(level: str | int = logging.WARNING) -> logging.Logger:
    """Route package logs through a rich handler on stderr. Safe to call repeatedly."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    return logger
