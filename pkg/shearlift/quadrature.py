#!/usr/bin/env python3
"""
@brief Vectorised adaptive quadrature of analytic integrands along paths from 0
@file quadrature.py

Every integral in this package has the form int_0^z phi(zeta) d zeta with
phi analytic inside the unit disk. All requested endpoints share the path
parameter t in [0, 1], so a single adaptive Gauss-Kronrod run
(scipy.integrate.quad_vec) integrates every point at once; the error
criterion uses the max norm over all points and both real and imaginary
parts.

Paths:
- radial: zeta(t) = t z
- two_segment: 0 -> Re z along the real axis, then Re z -> z vertically

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.integrate import quad_vec

from shearlift.analytic_families import ComplexArray, ComplexInput, as_complex_array
from shearlift.errors import InvalidParameter, QuadratureFailure, SingularPath
from shearlift_config import get_config

logger = logging.getLogger(__name__)

Integrand = Callable[[ComplexArray], npt.NDArray[np.complex128]]

_STATUS_SUBDIVISION_LIMIT = 1


@dataclass(frozen=True)
class QuadratureConfig:
    """
    @brief Tolerances and path choice for adaptive quadrature

    max_depth bounds the bisection depth; quad_vec receives the matching
    subinterval budget 2**max_depth.
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-11
    max_depth: int = 14
    path_strategy: Literal["radial", "two_segment"] = "radial"

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise InvalidParameter(f"abs_tol must be > 0, got {self.abs_tol}")
        if not self.rel_tol > 0.0:
            raise InvalidParameter(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_depth < 1:
            raise InvalidParameter(f"max_depth must be >= 1, got {self.max_depth}")
        if self.path_strategy not in ("radial", "two_segment"):
            raise InvalidParameter(f"unknown path strategy {self.path_strategy!r}")

    @classmethod
    def from_config(cls) -> QuadratureConfig:
        """Build from the global shearlift configuration"""
        return cls(**get_config().quadrature_settings)

    @property
    def subinterval_limit(self) -> int:
        return 2**self.max_depth


def _segments(
    z: ComplexArray, strategy: str
) -> list[tuple[ComplexArray, ComplexArray]]:
    origin = np.zeros_like(z)
    if strategy == "radial":
        return [(origin, z)]
    corner = z.real.astype(np.complex128)
    return [(origin, corner), (corner, z)]


def _segment_distance(
    start: ComplexArray, end: ComplexArray, pole: complex
) -> npt.NDArray[np.float64]:
    direction = end - start
    length2 = np.abs(direction) ** 2
    safe = np.where(length2 > 0.0, length2, 1.0)
    t = np.clip(np.real(np.conj(direction) * (pole - start)) / safe, 0.0, 1.0)
    t = np.where(length2 > 0.0, t, 0.0)
    return np.abs(start + t * direction - pole)


def check_path(
    z: ComplexArray,
    singularities: ComplexArray,
    strategy: str,
    pole_eps: float | None = None,
) -> None:
    """
    @brief Reject paths that pass within pole_eps of a singularity
    @param z Endpoints
    @param singularities Poles of the integrand
    @param strategy Path strategy name
    @param pole_eps Minimum allowed distance
    @throws SingularPath when a path comes too close to a pole
    """
    eps = get_config().pole_eps if pole_eps is None else pole_eps
    for start, end in _segments(z.ravel(), strategy):
        for pole in np.atleast_1d(singularities):
            distance = _segment_distance(start, end, complex(pole))
            if distance.size and float(distance.min()) < eps:
                worst = complex(end[int(np.argmin(distance))])
                raise SingularPath(
                    f"{strategy} path to z={worst} passes within {eps:g} "
                    f"of pole {complex(pole)}"
                )


def path_integral(
    integrand: Integrand,
    z: ComplexInput,
    cfg: QuadratureConfig | None = None,
    singularities: npt.ArrayLike | None = None,
) -> ComplexArray:
    """
    @brief Integrate phi from 0 to each z along the configured path
    @param integrand phi, called with a complex array shaped like z.ravel();
           may return shape (k, N) to integrate k functions together
    @param z Endpoints
    @param cfg Quadrature configuration
    @param singularities Poles of phi used for SingularPath detection
    @return Integrals shaped (k, *z.shape) or z.shape
    @throws QuadratureFailure when the subdivision budget is exhausted
    @throws SingularPath when a path passes too close to a pole
    """
    cfg = QuadratureConfig.from_config() if cfg is None else cfg
    values = as_complex_array(z)
    flat = values.ravel()
    if singularities is not None:
        poles = np.asarray(singularities, dtype=np.complex128)
        check_path(flat, poles, cfg.path_strategy)

    # phi is analytic at the origin, so probing there is always safe
    lead_shape = np.asarray(integrand(np.zeros(1, dtype=np.complex128))).shape[:-1]
    if flat.size == 0:
        return np.zeros(lead_shape + values.shape, dtype=np.complex128)

    total: npt.NDArray[np.complex128] | None = None
    for start, end in _segments(flat, cfg.path_strategy):
        delta = end - start

        def real_integrand(
            t: float, start: ComplexArray = start, delta: ComplexArray = delta
        ) -> npt.NDArray[np.float64]:
            sampled = np.asarray(integrand(start + t * delta)) * delta
            return np.concatenate([sampled.real.ravel(), sampled.imag.ravel()])

        result, error, info = quad_vec(
            real_integrand,
            0.0,
            1.0,
            epsabs=cfg.abs_tol,
            epsrel=cfg.rel_tol,
            norm="max",
            limit=cfg.subinterval_limit,
            full_output=True,
        )
        if info.status == _STATUS_SUBDIVISION_LIMIT:
            raise QuadratureFailure(
                f"quadrature exhausted {cfg.subinterval_limit} subintervals "
                f"(max_depth={cfg.max_depth}), error estimate {error:.3g}"
            )
        if info.status != 0:
            logger.warning("quad_vec reported: %s (error %.3g)", info.message, error)
        logger.debug(
            "quad_vec: %d points, %d intervals, %d evaluations",
            flat.size,
            len(info.intervals),
            info.neval,
        )
        half = result.size // 2
        piece = (result[:half] + 1j * result[half:]).reshape(lead_shape + (flat.size,))
        total = piece if total is None else total + piece

    assert total is not None
    return total.reshape(total.shape[:-1] + values.shape)


__all__ = ["Integrand", "QuadratureConfig", "check_path", "path_integral"]
