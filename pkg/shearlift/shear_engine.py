#!/usr/bin/env python3
"""
@brief Harmonic shears f = h + conj(g) from a conformal map and a dilatation
@file shear_engine.py

Shearing solves h - g = F and g' = omega h', i.e.

    h' = F' / (1 - omega),    g' = omega h'

with h(0) = g(0) = 0. This module builds h and g either by adaptive
quadrature of those integrands (shear_numeric) or from closed forms:

- Fc with c in (-2, 2) and omega_a: the sigma-polynomial forms p/q, r/q
- Fc with c = +-2 and omega_a: the slit shears (real part given in u, v form)
- Fn with omega = z^n: hypergeometric forms
- Fc with omega = z^n: partial-fraction assembly (see partial_fractions)

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np

from shearlift.analytic_families import (
    ComplexArray,
    ComplexEvaluator,
    ComplexInput,
    ConformalFamily,
    Dilatation,
    as_complex_array,
    eval_F,
    eval_F_prime,
    eval_omega,
)
from shearlift.errors import (
    DegenerateShear,
    DomainViolation,
    EndpointParameter,
    InvalidParameter,
    NoClosedForm,
)
from shearlift.quadrature import QuadratureConfig, path_integral
from shearlift.special_functions import hyp2f1, log_c, sigma_values
from shearlift_config import get_config

logger = logging.getLogger(__name__)

Provenance = Literal["closed_form", "quadrature"]
PairEvaluator = Callable[[Any], tuple[ComplexArray, ComplexArray]]

_SUPPORTED_PAIRS = {("fc", "mobius"), ("fc", "power"), ("fn", "power")}

# Below this value of 4 - c^2 the closed h_ca, g_ca cancel too many digits
CLOSED_FORM_MARGIN = 0.05


@dataclass(frozen=True)
class ShearSpec:
    """
    @brief One shear problem: a conformal family paired with a dilatation
    """

    family: ConformalFamily
    dilatation: Dilatation

    def __post_init__(self) -> None:
        pair = (self.family.kind, self.dilatation.kind)
        if pair not in _SUPPORTED_PAIRS:
            raise InvalidParameter(
                f"unsupported pairing {self.family.label} with {self.dilatation.label}"
            )

    @property
    def label(self) -> str:
        return f"{self.family.label} x {self.dilatation.label}"

    @property
    def is_degenerate(self) -> bool:
        """(c, a) = (2, 1) collapses the boundary image onto 1/2"""
        return (
            self.family.kind == "fc"
            and self.family.c == 2.0
            and self.dilatation.kind == "mobius"
            and self.dilatation.a == 1.0
        )

    def h_prime(self, z: ComplexInput) -> ComplexArray:
        """h' = F' / (1 - omega)"""
        return eval_F_prime(self.family, z) / (1.0 - eval_omega(self.dilatation, z))

    def g_prime(self, z: ComplexInput) -> ComplexArray:
        """g' = omega h'"""
        return eval_omega(self.dilatation, z) * self.h_prime(z)

    def singularities(self) -> ComplexArray:
        """
        @brief Poles of h' on the unit circle
        @return Complex array of pole locations
        """
        poles: list[complex] = []
        if self.family.kind == "fc":
            gamma = self.family.gamma
            root = complex(math.cos(gamma), math.sin(gamma))
            poles.extend([root, root.conjugate()])
        if self.dilatation.kind == "power":
            n = self.dilatation.n
            poles.extend(np.exp(2j * np.pi * np.arange(n) / n).tolist())
        return np.asarray(poles, dtype=np.complex128)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.to_dict(),
            "dilatation": self.dilatation.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ShearSpec:
        family_data = data["family"]
        dilatation_data = data["dilatation"]
        family = (
            ConformalFamily.fc(family_data["c"])
            if family_data["kind"] == "fc"
            else ConformalFamily.fn(family_data["n"])
        )
        dilatation = (
            Dilatation.mobius(dilatation_data["a"])
            if dilatation_data["kind"] == "mobius"
            else Dilatation.power(dilatation_data["n"])
        )
        return cls(family=family, dilatation=dilatation)


@dataclass(frozen=True)
class HarmonicShear:
    """
    @brief Paired evaluators for h and g with their origin

    Normalised so that h(0) = g(0) = 0, h'(0) = 1, g'(0) = 0. The optional
    pair evaluator computes h and g together (one quadrature pass).
    """

    h: ComplexEvaluator
    g: ComplexEvaluator
    spec: ShearSpec
    provenance: Provenance
    pair: PairEvaluator | None = None

    def evaluate(self, z: ComplexInput) -> tuple[ComplexArray, ComplexArray]:
        """
        @brief Evaluate h and g at once
        @param z Points in the disk
        @return (h(z), g(z))
        """
        if self.pair is not None:
            return self.pair(z)
        return self.h(z), self.g(z)

    def __call__(self, z: ComplexInput) -> ComplexArray:
        """f(z) = h(z) + conj(g(z))"""
        h, g = self.evaluate(z)
        return h + np.conj(g)

    def h_prime(self, z: ComplexInput) -> ComplexArray:
        return self.spec.h_prime(z)

    def g_prime(self, z: ComplexInput) -> ComplexArray:
        return self.spec.g_prime(z)


def shear_numeric(
    spec: ShearSpec, cfg: QuadratureConfig | None = None
) -> HarmonicShear:
    """
    @brief Shear by adaptive quadrature of h' and g'
    @param spec Shear problem
    @param cfg Quadrature configuration
    @return HarmonicShear with provenance "quadrature"
    @throws QuadratureFailure, SingularPath on evaluation
    """
    cfg = QuadratureConfig.from_config() if cfg is None else cfg
    poles = spec.singularities()

    def integrand(zeta: ComplexArray) -> ComplexArray:
        h_prime = spec.h_prime(zeta)
        return np.stack([h_prime, eval_omega(spec.dilatation, zeta) * h_prime])

    def pair(z: Any) -> tuple[ComplexArray, ComplexArray]:
        integrals = path_integral(integrand, z, cfg, singularities=poles)
        return integrals[0], integrals[1]

    def h(z: Any) -> ComplexArray:
        return pair(z)[0]

    def g(z: Any) -> ComplexArray:
        return pair(z)[1]

    logger.debug("numeric shear for %s (%s path)", spec.label, cfg.path_strategy)
    return HarmonicShear(h=h, g=g, spec=spec, provenance="quadrature", pair=pair)


# Closed forms for Fc, c in (-2, 2), with omega_a


def _pqr(
    c: float, a: float, z: ComplexArray
) -> tuple[ComplexArray, ComplexArray, ComplexArray]:
    s = sigma_values(c, z)
    quadratic = 1 + c * z + z**2
    # every sigma_1 and sigma_2 term of p and r collects into this product
    shared = 2 * (4 - c**2) * (2 - a * c) * quadratic * (s.sigma1 + s.sigma2)
    tail = (2 * a - c) * z**2 + (a * c - c**2) * z
    p = shared + s.product34 * (tail + 2 * z)
    r = shared + s.product34 * (tail + c**2 * z - 2 * z)
    q = (c**2 - 4) * s.product34 * quadratic
    return p, q, r


def _check_ca(c: float, a: float) -> None:
    if abs(c) >= 2.0:
        raise EndpointParameter(
            f"closed h_ca/g_ca need c in (-2, 2), got c={c}; use closed_f_special"
        )
    if abs(a) > 1.0:
        raise InvalidParameter(f"closed h_ca/g_ca need |a| <= 1, got a={a}")


def _normalised(values: ComplexArray, at_origin: complex) -> ComplexArray:
    if at_origin != 0.0:
        logger.debug("removing constant offset %s from closed form", at_origin)
        return values - at_origin
    return values


def closed_h_ca(c: float, a: float, z: ComplexInput) -> ComplexArray:
    """
    @brief h_{c,a} = -p/q

    The sigma part and the rational part of -p/q each grow as |c| -> 2 while
    h stays bounded, so digits cancel near the slit parameters. shear_closed
    defers to quadrature once 4 - c^2 < CLOSED_FORM_MARGIN.

    @param c Family parameter in (-2, 2)
    @param a Dilatation parameter in [-1, 1]
    @param z Points in the disk
    @return h values, normalised to h(0) = 0
    @throws EndpointParameter at |c| = 2
    """
    _check_ca(c, a)
    values = as_complex_array(z)
    p, q, _ = _pqr(c, a, values)
    p0, q0, _ = _pqr(c, a, np.zeros(1, dtype=np.complex128))
    return _normalised(-p / q, complex(-p0[0] / q0[0]))


def closed_g_ca(c: float, a: float, z: ComplexInput) -> ComplexArray:
    """
    @brief g_{c,a} = -r/q
    @throws EndpointParameter at |c| = 2
    """
    _check_ca(c, a)
    values = as_complex_array(z)
    _, q, r = _pqr(c, a, values)
    _, q0, r0 = _pqr(c, a, np.zeros(1, dtype=np.complex128))
    return _normalised(-r / q, complex(-r0[0] / q0[0]))


# Slit shears c = +-2


def _warn_if_degenerate(c: float, a: float) -> None:
    if c == 2.0 and a == 1.0:
        message = "shear (c=2, a=1) collapses the boundary circle onto the point 1/2"
        logger.warning(message)
        warnings.warn(DegenerateShear(message), stacklevel=3)


def _check_slit(c: float, a: float, values: ComplexArray) -> None:
    if c not in (-2.0, 2.0):
        raise InvalidParameter(f"slit shears need c = -2 or c = 2, got c={c}")
    if abs(a) > 1.0:
        raise InvalidParameter(f"slit shears need |a| <= 1, got a={a}")
    pole = 1.0 if c == -2.0 else -1.0
    if np.any(np.abs(values - pole) < get_config().pole_eps):
        raise DomainViolation(f"slit shear with c={c:g} is singular at z={pole:g}")


def closed_f_special(
    c: float, a: float, z: ComplexInput
) -> tuple[np.ndarray, np.ndarray]:
    """
    @brief Real and imaginary parts of the slit shears f_{-2,a}, f_{2,a}
    @param c -2 or 2
    @param a Dilatation parameter in [-1, 1]
    @param z Points, z != 1 (c=-2) and z != -1 (c=2)
    @return (u, v)

    Warns DegenerateShear for (c, a) = (2, 1) and still evaluates.
    """
    values = as_complex_array(z)
    _check_slit(c, a, values)
    _warn_if_degenerate(c, a)
    if c == -2.0:
        w = (1 + values) / (1 - values)
        numerator = values**2 + (a - 1) * values - a / 3 + 2 / 3
        u = np.real(a / 3 - numerator / (values - 1) ** 3 - 2 / 3)
        v = np.imag(0.25 * (w**2 - 1))
        return u, v
    numerator = values**2 + (a + 1) * values + a / 3 + 2 / 3
    u = np.real(a / 3 - numerator / (values + 1) ** 3 + 2 / 3)
    v = np.imag(values / (1 + values) ** 2)
    return u, v


def closed_h_slit(c: float, a: float, z: ComplexInput) -> ComplexArray:
    """
    @brief Analytic part of the slit shear
    @return h_{-2,a}(z) = -(6z + 3az^2 - az^3 - 6z^2 + 2z^3) / (6 (z-1)^3),
            h_{2,a}(z) = -h_{-2,-a}(-z)
    """
    values = as_complex_array(z)
    _check_slit(c, a, values)
    if c == 2.0:
        return -closed_h_slit(-2.0, -a, -values)
    numerator = (2 - a) * values**3 + (3 * a - 6) * values**2 + 6 * values
    return -numerator / (6 * (values - 1) ** 3)


def closed_g_slit(c: float, a: float, z: ComplexInput) -> ComplexArray:
    """g = h - F for the slit shears"""
    values = as_complex_array(z)
    return closed_h_slit(c, a, values) - eval_F(ConformalFamily.fc(c), values)


# Epicycloid family with omega = z^n


def _log_zn_minus_one(zn: ComplexArray) -> ComplexArray:
    # branch of log(z^n - 1) continuous from z = 0, where it equals i*pi
    return log_c(1.0 - zn) + 1j * np.pi


def closed_h_n(n: int, z: ComplexInput) -> ComplexArray:
    """
    @brief h_n = z 2F1(1, 1/n; 1/n + 1; z^n) + log(z^n - 1)/n^2 - pi i/n^2
    @param n Family index, n >= 2
    @param z Points in the open disk
    @return h_n values
    """
    if n < 2:
        raise InvalidParameter(f"h_n needs n >= 2, got n={n}")
    values = as_complex_array(z)
    zn = values**n
    series = values * hyp2f1(1.0, 1.0 / n, 1.0 / n + 1.0, zn)
    return series + _log_zn_minus_one(zn) / n**2 - 1j * np.pi / n**2


def closed_g_n(n: int, z: ComplexInput) -> ComplexArray:
    """
    @brief g_n = z 2F1(1, 1/n; (n+1)/n; z^n) - z + (log(z^n - 1) + z^n)/n^2 - pi i/n^2
    """
    if n < 2:
        raise InvalidParameter(f"g_n needs n >= 2, got n={n}")
    values = as_complex_array(z)
    zn = values**n
    series = values * hyp2f1(1.0, 1.0 / n, (n + 1.0) / n, zn)
    return series - values + (_log_zn_minus_one(zn) + zn) / n**2 - 1j * np.pi / n**2


def shear_closed(spec: ShearSpec) -> HarmonicShear:
    """
    @brief Closed-form shear for the pairs that have one
    @param spec Shear problem
    @return HarmonicShear with provenance "closed_form"
    @throws NoClosedForm for (Fn n, z^m) with m != n, and for Fc with omega_a
        when 4 - c^2 < CLOSED_FORM_MARGIN
    """
    family, dilatation = spec.family, spec.dilatation
    h: ComplexEvaluator
    g: ComplexEvaluator

    if family.kind == "fc" and dilatation.kind == "mobius":
        c, a = family.c, dilatation.a
        if family.is_boundary_case:
            _warn_if_degenerate(c, a)

            def h(z: Any) -> ComplexArray:
                return closed_h_slit(c, a, z)

            def g(z: Any) -> ComplexArray:
                return closed_g_slit(c, a, z)

        else:
            if 4.0 - c**2 < CLOSED_FORM_MARGIN:
                raise NoClosedForm(
                    f"closed h_ca/g_ca are ill-conditioned at c={c:g}; "
                    f"4 - c^2 < {CLOSED_FORM_MARGIN}"
                )

            def h(z: Any) -> ComplexArray:
                return closed_h_ca(c, a, z)

            def g(z: Any) -> ComplexArray:
                return closed_g_ca(c, a, z)

    elif family.kind == "fn" and dilatation.n == family.n:
        n = family.n

        def h(z: Any) -> ComplexArray:
            return closed_h_n(n, z)

        def g(z: Any) -> ComplexArray:
            return closed_g_n(n, z)

    elif family.kind == "fc" and not family.is_boundary_case:
        from shearlift.partial_fractions import PartialFractionContext, assemble_h_gamma

        ctx = PartialFractionContext(n=dilatation.n, gamma=family.gamma)

        def h(z: Any) -> ComplexArray:
            return assemble_h_gamma(ctx, z)

        def g(z: Any) -> ComplexArray:
            return assemble_h_gamma(ctx, z) - eval_F(family, z)

    else:
        raise NoClosedForm(f"no closed-form shear for {spec.label}")

    return HarmonicShear(h=h, g=g, spec=spec, provenance="closed_form")


def build_shear(spec: ShearSpec, cfg: QuadratureConfig | None = None) -> HarmonicShear:
    """
    @brief Closed-form shear when available, quadrature otherwise
    """
    try:
        return shear_closed(spec)
    except NoClosedForm:
        logger.info("no closed form for %s, using quadrature", spec.label)
        return shear_numeric(spec, cfg)


__all__ = [
    "CLOSED_FORM_MARGIN",
    "HarmonicShear",
    "ShearSpec",
    "build_shear",
    "closed_f_special",
    "closed_g_ca",
    "closed_g_n",
    "closed_g_slit",
    "closed_h_ca",
    "closed_h_n",
    "closed_h_slit",
    "shear_closed",
    "shear_numeric",
]
