#!/usr/bin/env python3
"""
Tests for quadrature module

@brief Vectorised path integrals, pole detection and subdivision limits
"""

import numpy as np
import pytest

from shearlift.errors import InvalidParameter, QuadratureFailure, SingularPath
from shearlift.quadrature import QuadratureConfig, check_path, path_integral
from shearlift.special_functions import hyp2f1
from shearlift_config import get_config, set_config


class TestQuadratureConfig:
    """Test configuration validation and defaults"""

    def test_defaults_follow_global_config(self) -> None:
        set_config(get_config().with_overrides(abs_tol=1e-10, max_depth=10))
        cfg = QuadratureConfig.from_config()
        assert cfg.abs_tol == 1e-10
        assert cfg.subinterval_limit == 1024

    @pytest.mark.parametrize(
        "kwargs",
        [{"abs_tol": 0.0}, {"rel_tol": -1.0}, {"max_depth": 0}, {"path_strategy": "spiral"}],
    )
    def test_invalid(self, kwargs: dict) -> None:
        with pytest.raises(InvalidParameter):
            QuadratureConfig(**kwargs)


class TestPathIntegral:
    """Test path_integral on integrands with known antiderivatives"""

    def test_polynomials(self) -> None:
        z = np.array([0.5 + 0.5j, -0.3j, 0.9, 0.0])
        np.testing.assert_allclose(path_integral(lambda t: np.ones_like(t), z), z, atol=1e-14)
        np.testing.assert_allclose(path_integral(lambda t: t**2, z), z**3 / 3, atol=1e-14)

    def test_shape_is_preserved(self) -> None:
        z = (np.arange(6).reshape(2, 3) / 10.0) * (1 + 1j)
        assert path_integral(lambda t: t, z).shape == (2, 3)

    def test_stacked_integrands(self) -> None:
        z = np.array([0.2 + 0.1j, -0.4])
        result = path_integral(lambda t: np.stack([np.ones_like(t), 2 * t]), z)
        assert result.shape == (2, 2)
        np.testing.assert_allclose(result[1], z**2, atol=1e-14)

    def test_empty_input(self) -> None:
        result = path_integral(lambda t: np.stack([t, t]), np.zeros(0, dtype=complex))
        assert result.shape == (2, 0)

    @pytest.mark.parametrize("strategy", ["radial", "two_segment"])
    def test_path_independence(self, strategy: str) -> None:
        cfg = QuadratureConfig(path_strategy=strategy)
        z = np.array([0.6 + 0.6j, -0.7 - 0.2j])
        result = path_integral(lambda t: 1.0 / (1.0 - t), z, cfg, singularities=[1.0])
        np.testing.assert_allclose(result, -np.log(1.0 - z), atol=1e-11)

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_hypergeometric_antiderivative(self, n: int) -> None:
        rng = np.random.default_rng(n)
        z = 0.9 * np.sqrt(rng.random(100)) * np.exp(2j * np.pi * rng.random(100))
        roots = np.exp(2j * np.pi * np.arange(n) / n)
        numeric = path_integral(lambda t: 1.0 / (1.0 - t**n), z, singularities=roots)
        series = z * hyp2f1(1.0, 1.0 / n, 1.0 + 1.0 / n, z**n)
        assert np.max(np.abs(numeric - series)) <= 1e-10


class TestFailures:
    """Test SingularPath and QuadratureFailure"""

    def test_path_through_pole(self) -> None:
        with pytest.raises(SingularPath):
            path_integral(lambda t: 1.0 / (1.0 - t), np.array([0.5, 1.0]), singularities=[1.0])

    def test_check_path_two_segment(self) -> None:
        # the horizontal leg to Re z = 0.5 passes through the pole at 0.5
        with pytest.raises(SingularPath):
            check_path(np.array([0.5 + 0.5j]), np.array([0.5 + 0j]), "two_segment")
        check_path(np.array([0.5 + 0.5j]), np.array([0.5 + 0j]), "radial")

    def test_subdivision_budget(self) -> None:
        cfg = QuadratureConfig(abs_tol=1e-14, rel_tol=1e-14, max_depth=1)
        with pytest.raises(QuadratureFailure):
            path_integral(lambda t: 1.0 / (1.0000001 - t), 0.9999, cfg)
