from __future__ import annotations

import sys
from pathlib import Path

import pytest

from fubiniflat import Limits

TESTS_DIR = Path(__file__).parent
sys.path.insert(0, str(TESTS_DIR))

DATA_DIR = TESTS_DIR / "data"


@pytest.fixture(scope="session")
def limits() -> Limits:
    return Limits()


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR
