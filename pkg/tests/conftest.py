"""Shared fixtures."""

import pytest

from recyclopt.hjb import ShootConfig, shoot_kstar
from recyclopt.model import ModelParams


@pytest.fixture(scope="session")
def params():
    """Reference parameters (a1 > 1 regime)."""
    return ModelParams()


@pytest.fixture(scope="session")
def params_capped():
    """Reference parameters in the a1 <= 1 (price-capped) regime."""
    return ModelParams(a1=0.3, p0=1.0)


@pytest.fixture(scope="session")
def shoot_cfg():
    return ShootConfig()


@pytest.fixture(scope="session")
def solution(params, shoot_cfg):
    return shoot_kstar(params, shoot_cfg, r0=0.5)


@pytest.fixture(scope="session")
def solution_capped(params_capped, shoot_cfg):
    return shoot_kstar(params_capped, shoot_cfg, r0=0.5)
