"""
Unit tests for logging configuration.
"""

import logging
import logging.handlers
from unittest.mock import MagicMock, patch

from shortwords.logging_config import LOG_FILE_NAME, setup_logging, stderr_console


def test_setup_logging_with_file(tmp_path):
    """Console and rotating file handlers are installed."""
    logs_dir = tmp_path / "logs"

    with patch("logging.getLogger") as mock_get_logger:
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        setup_logging("INFO", logs_dir)

        assert logs_dir.exists()
        # file handler needs everything
        mock_logger.setLevel.assert_called_with(logging.DEBUG)
        mock_logger.handlers.clear.assert_called_once()
        assert mock_logger.addHandler.call_count == 2

        handlers = [call.args[0] for call in mock_logger.addHandler.call_args_list]
        console = next(h for h in handlers if "RichHandler" in str(type(h)))
        assert console.level == logging.INFO
        assert console.console is stderr_console

        file_handler = next(
            h for h in handlers if isinstance(h, logging.handlers.TimedRotatingFileHandler)
        )
        assert file_handler.baseFilename == str(logs_dir / LOG_FILE_NAME)
        assert file_handler.when == "MIDNIGHT"
        assert file_handler.backupCount == 14
        assert file_handler.encoding == "utf-8"
        assert file_handler.level == logging.DEBUG
        file_handler.close()


def test_setup_logging_console_only():
    with patch("logging.getLogger") as mock_get_logger:
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        setup_logging("ERROR")

        mock_logger.setLevel.assert_called_with(logging.ERROR)
        assert mock_logger.addHandler.call_count == 1


def test_unknown_level_defaults_to_warning():
    with patch("logging.getLogger") as mock_get_logger:
        mock_logger = MagicMock()
        mock_get_logger.return_value = mock_logger

        setup_logging("chatty")

        mock_logger.setLevel.assert_called_with(logging.WARNING)


def test_console_writes_to_stderr():
    assert stderr_console.stderr is True
