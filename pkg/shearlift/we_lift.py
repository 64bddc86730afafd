#!/usr/bin/env python3
"""
@brief Weierstrass-Enneper lift of a harmonic shear to a minimal graph
@file we_lift.py

When the dilatation is a square, omega = q^2 with q analytic, the shear
f = h + conj(g) lifts to the minimal surface

    X(z) = (Re f, Im f, 2 Im int_0^z q h' d zeta)

so x1, x2 always come from the shear's own h and g evaluators. The third
coordinate is either integrated numerically or taken from one of the
closed forms below. Two sampled certificates check the result: a scaled
5-point Laplacian (harmonic coordinates) and the first fundamental form
(E = G, F = 0).

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt

from shearlift.analytic_families import (
    ComplexArray,
    ComplexInput,
    as_complex_array,
    eval_F,
    sqrt_dilatation,
)
from shearlift.errors import InvalidParameter, NoClosedForm, PoleAtBoundary
from shearlift.partial_fractions import PartialFractionContext, pole_integral
from shearlift.quadrature import QuadratureConfig, path_integral
from shearlift.reports import CheckResult
from shearlift.shear_engine import (
    CLOSED_FORM_MARGIN,
    HarmonicShear,
    ShearSpec,
    closed_g_ca,
    closed_g_n,
    closed_h_ca,
    closed_h_n,
)
from shearlift.special_functions import atan_c, atanh_c, hyp2f1, sigma_values
from shearlift_config import get_config

logger = logging.getLogger(__name__)

RealArray = npt.NDArray[np.float64]


@dataclass(frozen=True)
class MinimalGraphPoint:
    """
    @brief Coordinates (x1, x2, x3) of lifted points, one array per axis
    """

    x1: RealArray
    x2: RealArray
    x3: RealArray

    def as_array(self) -> RealArray:
        """Points stacked along a trailing axis of length 3"""
        return np.stack([self.x1, self.x2, self.x3], axis=-1)

    @classmethod
    def from_array(cls, points: npt.ArrayLike) -> MinimalGraphPoint:
        values = np.asarray(points, dtype=np.float64)
        return cls(x1=values[..., 0], x2=values[..., 1], x3=values[..., 2])


SurfaceEvaluator = Callable[[ComplexArray], MinimalGraphPoint]


def _from_shear(
    h: ComplexArray, g: ComplexArray, x3: RealArray
) -> MinimalGraphPoint:
    f = h + np.conj(g)
    x3 = np.asarray(x3, dtype=np.float64)
    return MinimalGraphPoint(x1=np.real(f), x2=np.imag(f), x3=x3)


def lift_numeric(
    shear: HarmonicShear, z: ComplexInput, cfg: QuadratureConfig | None = None
) -> MinimalGraphPoint:
    """
    @brief Lift a shear with the third coordinate by quadrature
    @param shear Shear whose dilatation is a square
    @param z Points in the open disk
    @param cfg Quadrature configuration
    @return Lifted points
    @throws NotASquare when omega has no analytic square root
    """
    q = sqrt_dilatation(shear.spec.dilatation)
    values = as_complex_array(z)
    spec = shear.spec

    def integrand(zeta: ComplexArray) -> ComplexArray:
        return q(zeta) * spec.h_prime(zeta)

    h, g = shear.evaluate(values)
    third = path_integral(integrand, values, cfg, singularities=spec.singularities())
    return _from_shear(h, g, 2.0 * np.imag(third))


def x3_closed_fc(c: float, z: ComplexInput) -> RealArray:
    """
    @brief x3 for F_c, c in (-2, 2), with omega = z^2
    @param c Family parameter
    @param z Points in the open disk
    @return 2 Im of the closed antiderivative, zero at the origin
    """
    values = as_complex_array(z)
    sigma = sigma_values(c, values)
    s34 = sigma.product34
    k = c * c - 4.0
    denominator = values**2 + c * values + 1.0
    rational = (2.0 + c * values) / (k * denominator) - 2.0 / k
    # atanh(c (c^2-4)/s34) = -sigma2 by oddness
    inverse = (2.0 * c / s34) * (-sigma.sigma2 - sigma.sigma1)
    return 2.0 * np.imag(rational + inverse)


def x3_closed_case(c: float, z: ComplexInput) -> MinimalGraphPoint:
    """
    @brief Full lifted point for the three canonical cases c in {-2, 0, 2}, a = 0
    @param c -2, 0 or 2
    @param z Points in the open disk
    @return Lifted points
    @throws PoleAtBoundary at z = 1 (c = -2) or z = -1 (c = 2)
    """
    values = as_complex_array(z)
    eps = get_config().pole_eps
    if c == -2.0:
        if np.any(np.abs(values - 1.0) < eps):
            raise PoleAtBoundary("case c=-2 is singular at z=1")
        cubic = (values - 1.0) ** 3
        x1 = np.real(-(values**2 - values + 2.0 / 3.0) / cubic - 2.0 / 3.0)
        x2 = np.imag(values / (1.0 - values) ** 2)
        x3 = 2.0 * np.imag(1.0 / 6.0 - (3.0 * values - 1.0) / (6.0 * cubic))
    elif c == 0.0:
        x1 = np.real(atan_c(values))
        x2 = np.imag(values / (1.0 + values**2))
        x3 = 2.0 * np.imag(0.5 - 1.0 / (2.0 * (values**2 + 1.0)))
    elif c == 2.0:
        if np.any(np.abs(values + 1.0) < eps):
            raise PoleAtBoundary("case c=2 is singular at z=-1")
        cubic = (values + 1.0) ** 3
        x1 = np.real(2.0 / 3.0 - (values**2 + values + 2.0 / 3.0) / cubic)
        x2 = np.imag(values / (1.0 + values) ** 2)
        x3 = 2.0 * np.imag(1.0 / 6.0 - (values / 2.0 + 1.0 / 6.0) / cubic)
    else:
        raise InvalidParameter(
            f"closed-form cases exist for c in {{-2, 0, 2}}, got c={c}"
        )
    return MinimalGraphPoint(x1=x1, x2=x2, x3=x3)


def x3_closed_eq9(m: int, z: ComplexInput) -> RealArray:
    """
    @brief x3 for F_n with omega = z^n, n = 2m
    @param m Half the family index, m >= 1
    @param z Points in the open disk
    @return 2 Im{1/2 [z 2F1(1, 1/m; 1 + 1/m; z^m) - z 2F1(1, 1/m; 1 + 1/m; -z^m)]
            - (atanh(z^m) - z^m) / (2 m^2)}
    """
    if m < 1:
        raise InvalidParameter(f"x3 for F_2m needs m >= 1, got m={m}")
    values = as_complex_array(z)
    zm = values**m
    b, c = 1.0 / m, 1.0 + 1.0 / m
    series = 0.5 * values * (hyp2f1(1.0, b, c, zm) - hyp2f1(1.0, b, c, -zm))
    return 2.0 * np.imag(series - (atanh_c(zm) - zm) / (2.0 * m * m))


def assemble_x3_gamma(ctx: PartialFractionContext, z: ComplexInput) -> RealArray:
    """
    @brief x3 for F_c with omega = z^(2n) from the four pole integrals
    @param ctx Partial-fraction context with n the power of q = z^n
    @param z Points in the open disk
    @return Third coordinate
    """
    values = as_complex_array(z)
    eta = ctx.eta
    eta_bar = eta.conjugate()
    conj_plus = pole_integral(ctx, eta_bar, values)
    eta_plus = pole_integral(ctx, eta, values)
    conj_minus = pole_integral(ctx, eta_bar, values, negative=True)
    eta_minus = pole_integral(ctx, eta, values, negative=True)
    combined = eta_bar * (conj_plus - conj_minus) - eta * (eta_plus - eta_minus)
    return 2.0 * np.imag(-1j / (2.0 * math.sin(ctx.gamma)) * 0.5 * combined)


def lift_closed(spec: ShearSpec, z: ComplexInput) -> MinimalGraphPoint:
    """
    @brief Lift using closed forms for every coordinate
    @param spec Shear problem with a square dilatation
    @param z Points in the open disk
    @return Lifted points
    @throws NoClosedForm when the pair has no closed-form lift, or for Fc
        with 4 - c^2 < CLOSED_FORM_MARGIN
    """
    family, dilatation = spec.family, spec.dilatation
    sqrt_dilatation(dilatation)
    values = as_complex_array(z)

    if family.kind == "fc" and dilatation.kind == "mobius":
        c = family.c
        if family.is_boundary_case:
            return x3_closed_case(c, values)
        if 4.0 - c**2 < CLOSED_FORM_MARGIN:
            raise NoClosedForm(f"closed lift is ill-conditioned at c={c:g}")
        h, g = closed_h_ca(c, 0.0, values), closed_g_ca(c, 0.0, values)
        return _from_shear(h, g, x3_closed_fc(c, values))

    power_pair = family.kind == "fc" and dilatation.kind == "power"
    if power_pair and not family.is_boundary_case:
        from shearlift.partial_fractions import assemble_h_gamma

        ctx_h = PartialFractionContext(n=dilatation.n, gamma=family.gamma)
        ctx_x3 = PartialFractionContext(n=dilatation.n // 2, gamma=family.gamma)
        h = assemble_h_gamma(ctx_h, values)
        g = h - eval_F(family, values)
        return _from_shear(h, g, assemble_x3_gamma(ctx_x3, values))

    if family.kind == "fn" and dilatation.n == family.n:
        n = family.n
        h, g = closed_h_n(n, values), closed_g_n(n, values)
        return _from_shear(h, g, x3_closed_eq9(n // 2, values))

    raise NoClosedForm(f"no closed-form lift for {spec.label}")


def _stencil(z: ComplexArray, offsets: list[complex]) -> ComplexArray:
    return np.concatenate([z + offset for offset in offsets])


def _evaluate_stencil(
    surface: SurfaceEvaluator, z: ComplexArray, offsets: list[complex]
) -> RealArray:
    if z.size == 0:
        raise InvalidParameter("certificates need at least one sample point")
    # one evaluator call for all stencil points; shape (len(offsets), N, 3)
    points = surface(_stencil(z, offsets)).as_array()
    return points.reshape(len(offsets), z.size, 3)


def harmonic_certificate(
    surface: SurfaceEvaluator,
    samples: ComplexInput,
    step: float | None = None,
    tolerance: float = 1e-4,
    floor_fraction: float = 1e-3,
) -> CheckResult:
    """
    @brief Scaled 5-point Laplacian of every coordinate
    @param surface Evaluator z -> MinimalGraphPoint
    @param samples Sample points in the disk
    @param step Stencil step
    @param tolerance Pass threshold on the scaled residual
    @param floor_fraction Scale floor relative to the largest local scale
    @return CheckResult named 'harmonic_coordinates'

    Each residual is divided by the local second-derivative size
    |X_xx| + |X_yy| + 2 |X_xy|, floored at floor_fraction of its maximum.
    """
    h = get_config().certificate_step if step is None else step
    z = as_complex_array(samples).ravel()
    offsets = [0, h, -h, 1j * h, -1j * h]
    offsets += [h + 1j * h, h - 1j * h, -h + 1j * h, -h - 1j * h]
    x = _evaluate_stencil(surface, z, offsets)
    centre = x[0]
    xx = (x[1] - 2.0 * centre + x[2]) / h**2
    yy = (x[3] - 2.0 * centre + x[4]) / h**2
    xy = (x[5] - x[6] - x[7] + x[8]) / (4.0 * h**2)
    laplacian = (x[1] + x[2] + x[3] + x[4] - 4.0 * centre) / h**2
    scale = np.abs(xx) + np.abs(yy) + 2.0 * np.abs(xy)
    floor = np.maximum(floor_fraction * scale.max(axis=0), np.finfo(float).tiny)
    residual = np.abs(laplacian) / np.maximum(scale, floor)
    worst = np.unravel_index(int(np.argmax(residual)), residual.shape)
    return CheckResult(
        name="harmonic_coordinates",
        max_residual=float(residual.max()),
        tolerance=tolerance,
        details={
            "samples": int(z.size),
            "step": h,
            "worst_point": complex(z[worst[0]]),
            "worst_coordinate": int(worst[1]) + 1,
        },
    )


def isothermal_certificate(
    surface: SurfaceEvaluator,
    samples: ComplexInput,
    step: float | None = None,
    tolerance: float = 1e-4,
) -> CheckResult:
    """
    @brief E = G and F = 0 from fourth-order central differences
    @return CheckResult named 'isothermal'; residual max(|E-G|, |F|) / (E+G)
    """
    h = get_config().certificate_step if step is None else step
    z = as_complex_array(samples).ravel()
    offsets = [h, -h, 2 * h, -2 * h, 1j * h, -1j * h, 2j * h, -2j * h]
    x = _evaluate_stencil(surface, z, offsets)
    dx = (8.0 * (x[0] - x[1]) - (x[2] - x[3])) / (12.0 * h)
    dy = (8.0 * (x[4] - x[5]) - (x[6] - x[7])) / (12.0 * h)
    e = np.sum(dx * dx, axis=-1)
    g = np.sum(dy * dy, axis=-1)
    f = np.sum(dx * dy, axis=-1)
    residual = np.maximum(np.abs(e - g), np.abs(f)) / (e + g)
    return CheckResult(
        name="isothermal",
        max_residual=float(residual.max()),
        tolerance=tolerance,
        details={
            "samples": int(z.size),
            "step": h,
            "max_abs_E_minus_G": float(np.abs(e - g).max()),
            "max_abs_F": float(np.abs(f).max()),
        },
    )


def surface_evaluator(
    shear: HarmonicShear, closed: bool = False, cfg: QuadratureConfig | None = None
) -> SurfaceEvaluator:
    """
    @brief Bind a lift method to a shear
    @param shear Shear with a square dilatation
    @param closed Use lift_closed instead of lift_numeric
    @param cfg Quadrature configuration for lift_numeric
    """

    def evaluate(z: Any) -> MinimalGraphPoint:
        if closed:
            return lift_closed(shear.spec, z)
        return lift_numeric(shear, z, cfg)

    return evaluate


__all__ = [
    "MinimalGraphPoint",
    "SurfaceEvaluator",
    "assemble_x3_gamma",
    "harmonic_certificate",
    "isothermal_certificate",
    "lift_closed",
    "lift_numeric",
    "surface_evaluator",
    "x3_closed_case",
    "x3_closed_eq9",
    "x3_closed_fc",
]
