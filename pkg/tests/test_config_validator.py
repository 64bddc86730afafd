#!/usr/bin/env python3
"""
Tests for config_validator module

@brief Range checks for the numerical settings
"""

import pytest

from shearlift.config_validator import ConfigValidator, validate_config
from shearlift_config import ShearLiftConfig, get_config, set_config


class TestConfigValidator:
    """Test ConfigValidator functionality"""

    @pytest.fixture
    def config_validator(self) -> ConfigValidator:
        """Create ConfigValidator for the default settings"""
        return ConfigValidator(ShearLiftConfig())

    def test_initialization(self, config_validator: ConfigValidator) -> None:
        """Test ConfigValidator initialization"""
        assert isinstance(config_validator.config, ShearLiftConfig)
        assert config_validator.validation_results["valid"] is True

    def test_defaults_are_valid(self, config_validator: ConfigValidator) -> None:
        """Default settings pass without warnings"""
        result = config_validator.validate_all()
        assert result["valid"] is True
        assert result["errors"] == []
        assert result["warnings"] == []

    def test_validation_results_structure(self, config_validator: ConfigValidator) -> None:
        """Test that validation results carry every component"""
        results = config_validator.validate_all()
        assert set(results["component_validations"]) == {
            "radii",
            "quadrature",
            "series",
            "thresholds",
            "steps",
            "sampling",
            "workers",
        }

    @pytest.mark.parametrize(
        "overrides",
        [
            {"r_max": 1.0},
            {"lift_r_max": 0.0},
            {"abs_tol": 0.0},
            {"max_depth": 0},
            {"path_strategy": "spiral"},
            {"series_max_terms": 0},
            {"pole_eps": -1.0},
            {"fd_step": 0.5},
            {"workers": 0},
            {"chunk_size": 0},
            {"seed": -1},
            {"seed": 1.5},
        ],
    )
    def test_invalid_values(self, overrides: dict) -> None:
        """Out-of-range settings are errors"""
        result = ConfigValidator(ShearLiftConfig().with_overrides(**overrides)).validate_all()
        assert result["valid"] is False
        assert result["errors"]

    def test_resonance_ordering(self) -> None:
        """The exact resonance threshold must be below the near threshold"""
        config = ShearLiftConfig(resonance_exact=1e-6, resonance_near=1e-8)
        result = ConfigValidator(config).validate_all()
        assert not result["component_validations"]["thresholds"]["valid"]

    def test_unusual_values_warn(self) -> None:
        """Values outside the tuned range only warn"""
        result = ConfigValidator(ShearLiftConfig(abs_tol=1e-6, r_max=0.5)).validate_all()
        assert result["valid"] is True
        assert len(result["warnings"]) == 2

    def test_booleans_rejected(self) -> None:
        """Booleans are not accepted as numbers"""
        result = ConfigValidator(ShearLiftConfig(max_depth=True)).validate_all()  # type: ignore[arg-type]
        assert result["valid"] is False

    def test_module_function_uses_global_config(self) -> None:
        """validate_config reads the global configuration by default"""
        set_config(get_config().with_overrides(workers=-3))
        assert validate_config()["valid"] is False
        assert validate_config(ShearLiftConfig())["valid"] is True
