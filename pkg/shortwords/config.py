"""
Configuration loader for toolkit limits and environment settings.
"""

import logging
import os
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Setup logger
logger = logging.getLogger(__name__)

# Library defaults (every operation takes these as explicit keyword arguments)
DEFAULT_ELEMENT_LIMIT = 20000
DEFAULT_FRONTIER_CAP = 20_000_000
DEFAULT_COSET_INDEX_LIMIT = 5000

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _env_int(name: str, default: int) -> int:
    """Read a positive integer from the environment, falling back on bad values."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


class ToolkitConfig:
    """Toolkit-wide configuration: limits, search defaults and logging."""

    def __init__(self, config_dict: dict[str, Any] | None = None):
        self._config = config_dict or {}
        self._section_errors: list[str] = []

        # Environment first
        self.log_level = os.getenv("SHORTWORDS_LOG_LEVEL", "WARNING")
        logs_dir = os.getenv("SHORTWORDS_LOGS_DIR", "")
        self.logs_dir: Path | None = Path(logs_dir) if logs_dir else None
        self.element_limit = _env_int("SHORTWORDS_ELEMENT_LIMIT", DEFAULT_ELEMENT_LIMIT)
        self.frontier_cap = _env_int("SHORTWORDS_FRONTIER_CAP", DEFAULT_FRONTIER_CAP)
        self.coset_index_limit = _env_int(
            "SHORTWORDS_COSET_INDEX_LIMIT", DEFAULT_COSET_INDEX_LIMIT
        )
        self.reduce_first = True
        self.reduce_more = True

        # YAML sections override the environment
        limits = self._section("limits")
        self.element_limit = limits.get("element_limit", self.element_limit)
        self.frontier_cap = limits.get("frontier_cap", self.frontier_cap)
        self.coset_index_limit = limits.get("coset_index_limit", self.coset_index_limit)

        search = self._section("search")
        self.reduce_first = search.get("reduce_first", self.reduce_first)
        self.reduce_more = search.get("reduce_more", self.reduce_more)

        logging_section = self._section("logging")
        self.log_level = logging_section.get("level", self.log_level)
        if logging_section.get("logs_dir"):
            self.logs_dir = Path(str(logging_section["logs_dir"]))

    def _section(self, name: str) -> dict[str, Any]:
        """A YAML section as a mapping; anything else is reported by validate()."""
        section = self._config.get(name) or {}
        if not isinstance(section, dict):
            self._section_errors.append(
                f"{name} must be a mapping, got {type(section).__name__}"
            )
            return {}
        return section

    @classmethod
    def from_file(cls, config_path: Path) -> "ToolkitConfig":
        """Load a YAML settings file on top of the environment."""
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_path, encoding="utf-8") as f:
            config_dict = yaml.safe_load(f) or {}

        if not isinstance(config_dict, dict):
            raise ValueError(f"Configuration file must contain a mapping: {config_path}")

        logger.debug(f"Loaded settings from {config_path}")
        return cls(config_dict)

    def validate(self) -> list[str]:
        """Validate configuration and return list of errors."""
        errors = list(self._section_errors)

        for name in ("element_limit", "frontier_cap", "coset_index_limit"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                errors.append(f"{name} must be a positive integer, got {value!r}")

        for name in ("reduce_first", "reduce_more"):
            if not isinstance(getattr(self, name), bool):
                errors.append(f"search.{name} must be boolean")

        if str(self.log_level).upper() not in VALID_LOG_LEVELS:
            errors.append(f"Invalid log level: {self.log_level}")

        return errors

    def to_dict(self) -> dict[str, Any]:
        """Return the effective settings as a dictionary."""
        return {
            "limits": {
                "element_limit": self.element_limit,
                "frontier_cap": self.frontier_cap,
                "coset_index_limit": self.coset_index_limit,
            },
            "search": {
                "reduce_first": self.reduce_first,
                "reduce_more": self.reduce_more,
            },
            "logging": {
                "level": self.log_level,
                "logs_dir": str(self.logs_dir) if self.logs_dir else None,
            },
        }


def load_config() -> ToolkitConfig:
    """Build the process configuration, honouring SHORTWORDS_CONFIG."""
    config_file = os.getenv("SHORTWORDS_CONFIG", "")
    if config_file:
        return ToolkitConfig.from_file(Path(config_file))
    return ToolkitConfig()


# Global config instance
toolkit_config = load_config()
