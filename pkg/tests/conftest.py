"""Shared fixtures for the cosbound test suite."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add src directory to path
src_path = Path(__file__).resolve().parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from cosbound.common.config import Settings
from cosbound.extremal import pipeline
from cosbound.extremal.witnesses import FACTOR_V4, FACTOR_V8


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def fast_settings():
    """Coarse grid and published upper bounds keep pipeline tests short."""
    return Settings(grid=101, strict_paper_bounds=True)


@pytest.fixture
def v4_factor():
    return np.array(FACTOR_V4)


@pytest.fixture
def v8_factor():
    v = np.array(FACTOR_V8)
    return v / np.linalg.norm(v)


@pytest.fixture(autouse=True)
def fresh_results():
    pipeline.clear_cache()
    yield
    pipeline.clear_cache()
