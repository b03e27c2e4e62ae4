"""Small helpers shared by the rhkit sub-packages."""

import logging

LOG_FORMAT = "[%(asctime)s | %(levelname)s] %(name)s -> %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def default_logger(name: str) -> logging.Logger:
    """
    Build the default logger used by the orchestration classes.

    Args:
        name: Logger name, usually the module ``__name__``

    Returns:
        Logger writing to stderr with the project formatter
    """
    logger = logging.getLogger(name)
    if not logger.handlers and not logging.getLogger().handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
        logger.addHandler(handler)
        logger.setLevel(logging.INFO)
    return logger


def setup_logging(level: str = "INFO"):
    """Configura el logging global del proyecto."""
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(
        level=numeric_level,
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        datefmt=LOG_DATEFMT,
    )
