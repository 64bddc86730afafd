#!/usr/bin/env python3
"""
Centralized configuration for shearlift

@brief Single source of numerical defaults for shears, lifts and checks
@author shearlift configuration system

All tunable tolerances, radii and worker settings live in one place so the
library modules never hard-code them. Call sites take explicit arguments
and fall back to these values when an argument is omitted.

Key settings:
- Disk radii for plots and lifts
- Quadrature and series tolerances
- Pole, branch-cut and resonance thresholds
- Finite-difference steps for the verification checks
- Sampling seed and worker pool sizing
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Any

import psutil

logger = logging.getLogger(__name__)


@dataclass
class ShearLiftConfig:
    """
    @brief Numerical defaults for every shearlift module

    Values follow the figure conventions (|z| = 0.999 for planar images)
    while lifts default to a smaller radius to keep quadrature cost and
    surface extent bounded.
    """

    r_max: float = 0.999
    lift_r_max: float = 0.95
    abs_tol: float = 1e-12
    rel_tol: float = 1e-11
    max_depth: int = 14
    path_strategy: str = "radial"
    series_tol: float = 1e-14
    series_max_terms: int = 100_000
    branch_tol: float = 1e-14
    pole_eps: float = 1e-9
    resonance_exact: float = 1e-12
    resonance_near: float = 1e-6
    fd_step: float = 1e-5
    certificate_step: float = 1e-3
    seed: int = 42
    chunk_size: int = 64
    workers: int | None = None
    grid_settings: dict[str, Any] = field(
        default_factory=lambda: {
            "n_circles": 16,
            "n_rays": 64,
            "include_center": True,
        }
    )

    @property
    def worker_count(self) -> int:
        """
        @brief Resolve the worker pool size
        @return Configured worker count, or the machine's logical CPU count
        """
        if self.workers is not None:
            return max(1, self.workers)
        detected = psutil.cpu_count(logical=True)
        if not detected:
            logger.debug("psutil could not detect CPU count, using 1 worker")
            return 1
        return detected

    @property
    def quadrature_settings(self) -> dict[str, Any]:
        return {
            "abs_tol": self.abs_tol,
            "rel_tol": self.rel_tol,
            "max_depth": self.max_depth,
            "path_strategy": self.path_strategy,
        }

    @property
    def series_settings(self) -> dict[str, Any]:
        return {"tol": self.series_tol, "max_terms": self.series_max_terms}

    def with_overrides(self, **overrides: Any) -> ShearLiftConfig:
        """
        @brief Copy of this configuration with selected fields replaced
        @param overrides Field names and new values
        @return New configuration instance
        @throws TypeError when an unknown field is given
        """
        return replace(self, **overrides)


# Global instance
_config_instance: ShearLiftConfig | None = None


def get_config() -> ShearLiftConfig:
    """Get singleton configuration"""
    global _config_instance
    if _config_instance is None:
        _config_instance = ShearLiftConfig()
    return _config_instance


def set_config(config: ShearLiftConfig) -> None:
    """
    @brief Replace the global configuration (CLI overrides and tests)
    @param config New configuration instance
    """
    global _config_instance
    _config_instance = config


def reset_config() -> None:
    """@brief Drop the global configuration so defaults are rebuilt"""
    global _config_instance
    _config_instance = None
