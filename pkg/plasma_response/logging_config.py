"""
Logging configuration for the plasma response library.
"""

import logging
import logging.config
from pathlib import Path
from typing import Optional

from plasma_response.config import settings


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Set up logging configuration for the CLI.

    Console output goes to stderr so that stdout carries only CSV/JSON data.
    A rotating file handler is added when LOG_FILE is configured.
    """
    console_level = (level or settings.LOG_LEVEL).upper()

    handlers = {
        "console": {
            "class": "logging.StreamHandler",
            "level": console_level,
            "formatter": "default",
            "stream": "ext://sys.stderr"
        }
    }
    root_handlers = ["console"]

    if settings.LOG_FILE:
        Path(settings.LOG_FILE).parent.mkdir(parents=True, exist_ok=True)
        handlers["file"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": "DEBUG",
            "formatter": "detailed",
            "filename": settings.LOG_FILE,
            "maxBytes": settings.MAX_LOG_SIZE,
            "backupCount": settings.LOG_BACKUP_COUNT
        }
        root_handlers.append("file")

    logging_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S"
            },
            "detailed": {
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(module)s - %(funcName)s - %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S"
            }
        },
        "handlers": handlers,
        "loggers": {
            "": {  # Root logger
                "level": "DEBUG",
                "handlers": root_handlers,
                "propagate": False
            }
        }
    }

    # Apply the configuration
    logging.config.dictConfig(logging_config)

    logger = logging.getLogger(__name__)
    logger.debug("Logging configuration initialized")

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance for the given name."""
    return logging.getLogger(name)
