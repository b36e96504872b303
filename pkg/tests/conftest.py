"""
Root pytest configuration and fixtures for shortwords tests.

Provides:
- Temporary directory fixtures for generator files
- Standard small groups (S3, S4, A4, D8, C4, S8)
- Logging isolation
"""

import logging
import tempfile
from collections.abc import Generator
from pathlib import Path

import pytest

from shortwords.perm import GeneratorSet, PermGroup
from tests.utils.helpers import alternating_gens, gens_of, symmetric_gens, write_gens_file

# ============================================================================
# Temporary Directory Fixtures
# ============================================================================


@pytest.fixture
def tmp_dir() -> Generator[Path, None, None]:
    """
    Temporary directory for test files.

    Yields:
        Path: Temporary directory path
    """
    with tempfile.TemporaryDirectory(prefix="shortwords_test_") as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def s8_file(tmp_dir: Path) -> Path:
    """Generator file of S8 = <g1=(1,2), g2=(1,...,8)>."""
    return write_gens_file(tmp_dir, "S8.gens", 8, {"g1": "(1,2)", "g2": "(1,2,3,4,5,6,7,8)"})


@pytest.fixture
def s4_file(tmp_dir: Path) -> Path:
    return write_gens_file(tmp_dir, "S4.gens", 4, ["(1,2)", "(1,2,3,4)"])


@pytest.fixture
def d8_file(tmp_dir: Path) -> Path:
    return write_gens_file(tmp_dir, "D8.gens", 4, ["(1,2,3,4)", "(1,3)"])


# ============================================================================
# Group Fixtures
# ============================================================================


@pytest.fixture
def s8_gens() -> GeneratorSet:
    """The worked-example generators g1 = (1,2), g2 = (1,...,8)."""
    return gens_of(8, "(1,2)", "(1,2,3,4,5,6,7,8)", names=("g1", "g2"))


@pytest.fixture
def s3_gens() -> GeneratorSet:
    return gens_of(3, "(1,2)", "(1,2,3)")


@pytest.fixture
def s4_gens() -> GeneratorSet:
    return symmetric_gens(4)


@pytest.fixture
def s4(s4_gens: GeneratorSet) -> PermGroup:
    return PermGroup(s4_gens)


@pytest.fixture
def a4() -> PermGroup:
    return PermGroup(alternating_gens(4))


@pytest.fixture
def d8() -> PermGroup:
    """Dihedral group of order 8 on the square."""
    return PermGroup(gens_of(4, "(1,2,3,4)", "(1,3)"))


@pytest.fixture
def c4() -> PermGroup:
    return PermGroup(gens_of(4, "(1,2,3,4)"))


# ============================================================================
# Logging Isolation
# ============================================================================


@pytest.fixture(autouse=True)
def restore_root_logger():
    """CLI invocations reconfigure the root logger; put it back afterwards."""
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def pytest_configure(config):
    """Configure custom pytest markers."""
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line("markers", "integration: mark test as an integration test")
    config.addinivalue_line("markers", "slow: mark test as slow (>5 seconds)")
