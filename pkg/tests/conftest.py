# tests/conftest.py
import os

import pytest
from hypothesis import HealthCheck, settings

from diagram_engine.services.algebra import CategoryContext, ContextKind

settings.register_profile("default", max_examples=50, derandomize=True, deadline=None)
settings.register_profile(
    "ci", max_examples=200, derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def partition_ctx():
    return CategoryContext(3, ContextKind.PARTITION)


@pytest.fixture
def brauer_ctx():
    return CategoryContext(3, ContextKind.BRAUER)


@pytest.fixture
def bg2_ctx():
    return CategoryContext(2, ContextKind.BRAUER_GROOD)


@pytest.fixture
def symplectic_ctx():
    return CategoryContext(2, ContextKind.SYMPLECTIC)
