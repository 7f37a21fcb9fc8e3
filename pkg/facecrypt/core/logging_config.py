import logging
import sys

from facecrypt.config import Settings

PACKAGE_LOGGER = "facecrypt"
HANDLER_NAME = "facecrypt.stderr"


def remove_package_handler(logger: logging.Logger) -> None:
    for handler in list(logger.handlers):
        if handler.get_name() == HANDLER_NAME:
            logger.removeHandler(handler)
            handler.close()


def configure_logging(settings: Settings, verbose: bool = False) -> logging.Logger:
    """Attach a single stderr handler to the package logger."""
    logger = logging.getLogger(PACKAGE_LOGGER)
    level = "DEBUG" if verbose else settings.effective_log_level

    # main() may run several times in one process
    remove_package_handler(logger)

    handler = logging.StreamHandler(sys.stderr)
    handler.set_name(HANDLER_NAME)
    handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger
