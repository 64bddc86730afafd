#!/usr/bin/env python3
"""
@brief Range validation for shearlift settings
@file config_validator.py

Checks every numeric setting of ShearLiftConfig before a run.

Features:
- Radius validation (planar images and lifts)
- Quadrature and series tolerance validation
- Threshold ordering (resonance, pole and branch thresholds)
- Finite-difference step validation
- Sampling seed validation
- Worker pool validation

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

from typing import Any

from shearlift_config import ShearLiftConfig, get_config


class ConfigValidator:
    """
    @brief Validator for ShearLiftConfig

    Errors make the configuration unusable; warnings flag values outside
    the range the defaults were tuned for.
    """

    def __init__(self, config: ShearLiftConfig) -> None:
        """
        @brief Initialize validator with configuration
        @param config Settings to validate
        """
        self.config = config
        self.validation_results: dict[str, Any] = self._empty_results()

    @staticmethod
    def _empty_results() -> dict[str, Any]:
        return {
            "valid": True,
            "errors": [],
            "warnings": [],
            "component_validations": {},
        }

    def validate_all(self) -> dict[str, Any]:
        """
        @brief Run all validation checks
        @return Dict with valid, errors, warnings and per-component results
        """
        self.validation_results = self._empty_results()

        validations = {
            "radii": self.validate_radii(),
            "quadrature": self.validate_quadrature(),
            "series": self.validate_series(),
            "thresholds": self.validate_thresholds(),
            "steps": self.validate_steps(),
            "sampling": self.validate_sampling(),
            "workers": self.validate_workers(),
        }

        for component_name, result in validations.items():
            self.validation_results["component_validations"][component_name] = result
            if not result["valid"]:
                self.validation_results["valid"] = False
            self.validation_results["warnings"].extend(result["warnings"])
            self.validation_results["errors"].extend(result["errors"])

        return self.validation_results

    def _create_validation_result(self) -> dict[str, Any]:
        return {"valid": True, "errors": [], "warnings": []}

    def _validate_numeric_range(
        self,
        value: Any,
        min_val: float,
        max_val: float,
        name: str,
        result: dict[str, Any],
        warning_range: tuple[float, float] | None = None,
    ) -> None:
        """
        @brief Validate an exclusive numeric range with an optional typical range
        @param value Value to validate
        @param min_val Exclusive lower bound
        @param max_val Exclusive upper bound
        @param name Setting name for messages
        @param result Validation result dictionary to update
        @param warning_range Inclusive range outside which a warning is added
        """
        is_number = isinstance(value, int | float) and not isinstance(value, bool)
        if not is_number or not min_val < value < max_val:
            result["errors"].append(
                f"Invalid {name}: {value} (expected {min_val} < {name} < {max_val})"
            )
            result["valid"] = False
        elif warning_range and not warning_range[0] <= value <= warning_range[1]:
            low, high = warning_range
            result["warnings"].append(
                f"{name} {value} is outside typical range ({low}-{high})"
            )

    def _validate_setting(
        self,
        name: str,
        min_val: float,
        max_val: float,
        result: dict[str, Any],
        warning_range: tuple[float, float] | None = None,
    ) -> None:
        value = getattr(self.config, name)
        self._validate_numeric_range(
            value, min_val, max_val, name, result, warning_range
        )

    def validate_radii(self) -> dict[str, Any]:
        result = self._create_validation_result()
        self._validate_setting("r_max", 0.0, 1.0, result, (0.9, 0.9999))
        self._validate_setting("lift_r_max", 0.0, 1.0, result, (0.5, 0.99))
        return result

    def validate_quadrature(self) -> dict[str, Any]:
        result = self._create_validation_result()
        self._validate_setting("abs_tol", 0.0, 1.0, result, (1e-15, 1e-8))
        self._validate_setting("rel_tol", 0.0, 1.0, result, (1e-14, 1e-8))
        self._validate_setting("max_depth", 0, 31, result, (8, 20))
        strategy = self.config.path_strategy
        if strategy not in ("radial", "two_segment"):
            result["errors"].append(f"Unknown path strategy: {strategy!r}")
            result["valid"] = False
        return result

    def validate_series(self) -> dict[str, Any]:
        result = self._create_validation_result()
        self._validate_setting("series_tol", 0.0, 1.0, result, (1e-16, 1e-10))
        self._validate_setting(
            "series_max_terms", 0, float("inf"), result, (1_000, 10_000_000)
        )
        return result

    def validate_thresholds(self) -> dict[str, Any]:
        result = self._create_validation_result()
        for name in ("branch_tol", "pole_eps", "resonance_exact", "resonance_near"):
            self._validate_setting(name, 0.0, 1.0, result)
        exact, near = self.config.resonance_exact, self.config.resonance_near
        if result["valid"] and not exact < near:
            result["errors"].append(
                "resonance_exact must be smaller than resonance_near"
            )
            result["valid"] = False
        return result

    def validate_steps(self) -> dict[str, Any]:
        result = self._create_validation_result()
        self._validate_setting("fd_step", 0.0, 0.1, result, (1e-7, 1e-4))
        self._validate_setting("certificate_step", 0.0, 0.1, result, (1e-4, 1e-2))
        return result

    def validate_sampling(self) -> dict[str, Any]:
        result = self._create_validation_result()
        seed = self.config.seed
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            result["errors"].append(f"Invalid seed: {seed} (expected an integer >= 0)")
            result["valid"] = False
        return result

    def validate_workers(self) -> dict[str, Any]:
        result = self._create_validation_result()
        if self.config.workers is not None:
            self._validate_setting("workers", 0, 4097, result)
        self._validate_setting("chunk_size", 0, float("inf"), result, (8, 4096))
        return result


def validate_config(config: ShearLiftConfig | None = None) -> dict[str, Any]:
    """
    @brief Validate a configuration (the global one by default)
    @return Validation results from ConfigValidator.validate_all
    """
    return ConfigValidator(get_config() if config is None else config).validate_all()


__all__ = ["ConfigValidator", "validate_config"]
