"""
Shared test configuration and fixtures for nctorus-curvature tests
"""

import pytest

from nctorus_curvature.core import get_metric
from nctorus_curvature.curvature import one_form_density, ricci_density, scalar_density
from tests.utils import FlatMetric


@pytest.fixture(scope="session")
def conformal3():
    return get_metric("conformal3")


@pytest.fixture(scope="session")
def nonconformal3():
    return get_metric("nonconformal3")


@pytest.fixture(scope="session")
def conformal2():
    return get_metric("conformal2")


@pytest.fixture(scope="session")
def flat3():
    """Unregistered flat metric"""
    return FlatMetric()


@pytest.fixture(scope="session")
def conformal3_scalar(conformal3):
    return scalar_density(conformal3)


@pytest.fixture(scope="session")
def nonconformal3_scalar(nonconformal3):
    return scalar_density(nonconformal3)


@pytest.fixture(scope="session")
def nonconformal3_ricci(nonconformal3):
    return ricci_density(nonconformal3)


@pytest.fixture(scope="session")
def conformal3_one_form(conformal3):
    return one_form_density(conformal3)


@pytest.fixture
def clean_env(monkeypatch):
    """Remove every NCG_ variable so configuration falls back to defaults"""
    for name in ("NCG_QUAD_TOL", "NCG_F_BACKEND", "NCG_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
