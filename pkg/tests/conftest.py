#!/usr/bin/env python3
"""
Shared fixtures for shearlift tests

@brief Fresh global configuration per test and common shear problems
"""

from collections.abc import Iterator

import pytest

from shearlift.analytic_families import ConformalFamily, Dilatation
from shearlift.shear_engine import ShearSpec
from shearlift_config import reset_config


@pytest.fixture(autouse=True)
def fresh_config() -> Iterator[None]:
    """Reset the configuration singleton around every test"""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def helicoid_spec() -> ShearSpec:
    """Fc with c=0 and omega = z^2 (the helicoid piece)"""
    return ShearSpec(ConformalFamily.fc(0.0), Dilatation.mobius(0.0))


@pytest.fixture
def enneper_spec() -> ShearSpec:
    """Fc with c=-2 and omega = z^2"""
    return ShearSpec(ConformalFamily.fc(-2.0), Dilatation.mobius(0.0))

