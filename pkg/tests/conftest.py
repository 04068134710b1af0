"""
Pytest configuration and shared fixtures for thompx tests.
"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from thompx.circuits.netlist import Circuit, CircuitBuilder, GateKind
from thompx.core.config import reload_config
from thompx.generators.catalog import gen_table
from thompx.metrics.search import clear_index_cache
from thompx.thompson.element import ThompsonElement, identity_element

settings.register_profile(
    "thompx", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("thompx")


# ============================================================================
# CONFIGURATION FIXTURES
# ============================================================================

@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Reset the global configuration so env leaks do not cross tests."""
    for name in (
        "THOMPX_JOBS",
        "THOMPX_SEED",
        "THOMPX_FRONTIER_LIMIT",
        "THOMPX_SUITE_FRONTIER_LIMIT",
        "THOMPX_DEBUG_SLICES",
    ):
        monkeypatch.delenv(name, raising=False)
    config = reload_config(env_file=None)
    yield config
    monkeypatch.undo()
    reload_config(env_file=None)


@pytest.fixture
def rng():
    """Seeded generator for the samplers."""
    return np.random.default_rng(20240601)


@pytest.fixture
def search_cache():
    """Empty reachability cache before and after a search test."""
    clear_index_cache()
    yield
    clear_index_cache()


# ============================================================================
# ELEMENT FIXTURES
# ============================================================================

@pytest.fixture
def identity() -> ThompsonElement:
    return identity_element()


@pytest.fixture
def phi_not() -> ThompsonElement:
    """The bit flip {0 -> 1, 1 -> 0}."""
    return gen_table("phi_not")


@pytest.fixture
def sigma() -> ThompsonElement:
    """sigma = {0 -> 00, 10 -> 01, 11 -> 1}."""
    return gen_table("sigma")


# ============================================================================
# CIRCUIT FIXTURES
# ============================================================================

@pytest.fixture
def and_circuit() -> Circuit:
    """Single AND gate on two inputs."""
    builder = CircuitBuilder(2)
    a, b = builder.inputs
    return builder.build([builder.add1(GateKind.AND, a, b)], name="and")


@pytest.fixture
def half_adder() -> Circuit:
    """Sum and carry of two bits, with XOR sugar."""
    builder = CircuitBuilder(2)
    a, b = builder.inputs
    total = builder.add1(GateKind.XOR, a, b)
    carry = builder.add1(GateKind.AND, a, b)
    return builder.build([total, carry], name="half_adder")


# ============================================================================
# PYTEST CONFIGURATION
# ============================================================================

def pytest_configure(config):
    """Configure pytest."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )


def pytest_collection_modifyitems(config, items):
    """Modify test collection."""
    for item in items:
        if "integration" in item.nodeid:
            item.add_marker(pytest.mark.integration)
