"""
Console + optional rotating file logging.
"""

import logging
import logging.handlers
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

LOG_FILE_NAME = "shortwords.log"

# Logs go to stderr so stdout carries only results
stderr_console = Console(stderr=True)


def setup_logging(log_level: str = "WARNING", logs_dir: Path | None = None):
    """
    Configure console and (optionally) file logging.

    Args:
        log_level: Console level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        logs_dir: Directory for shortwords.log; no file logging when None
    """
    level = getattr(logging, log_level.upper(), logging.WARNING)

    root_logger = logging.getLogger()
    root_logger.handlers.clear()
    root_logger.setLevel(logging.DEBUG if logs_dir else level)

    console_handler = RichHandler(console=stderr_console, rich_tracebacks=True, show_path=False)
    console_handler.setLevel(level)
    root_logger.addHandler(console_handler)

    if logs_dir:
        logs_dir.mkdir(parents=True, exist_ok=True)
        # midnight rotation, 14 days kept
        file_handler = logging.handlers.TimedRotatingFileHandler(
            logs_dir / LOG_FILE_NAME, when="midnight", interval=1, backupCount=14, encoding="utf-8"
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
        root_logger.addHandler(file_handler)
        logging.debug(f"Logging to {logs_dir / LOG_FILE_NAME} (14-day rotation)")
