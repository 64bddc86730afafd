#!/usr/bin/env python3
"""
@brief Closed-form shears of F_c with omega = z^n by partial fractions
@file partial_fractions.py

With c = -2 cos(gamma) and eta = e^{i gamma}, the integrand of h factors as

    h' = (1 - z^2) / ((z - eta)^2 (z - conj(eta))^2 (1 - z^n))

and splits into integrals of the form

    I_eta(z) = int_0^z d zeta / ((zeta - eta)^2 (1 -+ zeta^n))

which are expanded over the roots z_k of z^n = +-1. When eta coincides
with a root (resonance) the double pole becomes triple and the k = m term
is integrated separately (I_3m). Near resonance the expansion cancels
catastrophically, so the defining integral is evaluated by quadrature.

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from shearlift.analytic_families import ComplexArray, ComplexInput, as_complex_array
from shearlift.errors import InvalidParameter, PoleCollision
from shearlift.quadrature import QuadratureConfig, path_integral
from shearlift.special_functions import log_c
from shearlift_config import get_config

logger = logging.getLogger(__name__)


def _resonant_index(angle: float, offset: float, n: int, tol: float) -> int | None:
    # solve angle = (2k + offset) pi / n for an integer k within tol
    k = round((angle * n / math.pi - offset) / 2.0)
    if 0 <= k < n and abs(angle - (2 * k + offset) * math.pi / n) <= tol:
        return k
    return None


@dataclass(frozen=True)
class PartialFractionContext:
    """
    @brief Roots and resonance indices for one (n, gamma) pair

    roots_unity are z_k = e^{2 pi i k/n}, roots_neg are e^{(2k+1) pi i/n}.
    m_index is set when gamma = 2 pi m/n and s_index when
    gamma = (2s+1) pi/n, both within the configured exact threshold.
    """

    n: int
    gamma: float
    roots_unity: ComplexArray = field(init=False, repr=False, compare=False)
    roots_neg: ComplexArray = field(init=False, repr=False, compare=False)
    m_index: int | None = field(init=False)
    s_index: int | None = field(init=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameter(f"partial fractions need n >= 1, got n={self.n}")
        if not 0.0 < self.gamma < math.pi:
            raise InvalidParameter(f"gamma must lie in (0, pi), got {self.gamma}")
        k = np.arange(self.n)
        object.__setattr__(self, "roots_unity", np.exp(2j * np.pi * k / self.n))
        object.__setattr__(self, "roots_neg", np.exp(1j * np.pi * (2 * k + 1) / self.n))
        tol = get_config().resonance_exact
        m_index = _resonant_index(self.gamma, 0.0, self.n, tol)
        s_index = _resonant_index(self.gamma, 1.0, self.n, tol)
        object.__setattr__(self, "m_index", m_index)
        object.__setattr__(self, "s_index", s_index)

    @classmethod
    def from_c(cls, c: float, n: int) -> PartialFractionContext:
        if not -2.0 < c < 2.0:
            raise InvalidParameter(f"partial fractions need c in (-2, 2), got c={c}")
        return cls(n=n, gamma=math.acos(-c / 2.0))

    @property
    def eta(self) -> complex:
        return complex(math.cos(self.gamma), math.sin(self.gamma))

    @property
    def c(self) -> float:
        return -2.0 * math.cos(self.gamma)

    @property
    def case(self) -> str:
        """Resonance label: 'generic', 'resonant_unity' or 'resonant_neg'"""
        if self.m_index is not None:
            return "resonant_unity"
        if self.s_index is not None:
            return "resonant_neg"
        return "generic"

    def roots(self, negative: bool = False) -> ComplexArray:
        return self.roots_neg if negative else self.roots_unity


def _root_term(root: complex, pole: complex, z: ComplexArray) -> ComplexArray:
    logs = log_c(1.0 - z / root) - log_c(1.0 - z / pole)
    rational = 1.0 / (pole - z) - 1.0 / pole
    return root * (logs / (root - pole) ** 2 + rational / (pole - root))


def integral_I_eta(
    ctx: PartialFractionContext, pole: complex, z: ComplexInput, negative: bool = False
) -> ComplexArray:
    """
    @brief int_0^z d zeta / ((zeta - pole)^2 (1 - zeta^n)), or (1 + zeta^n) if negative
    @param ctx Roots for n
    @param pole Double pole on the unit circle, distinct from every root
    @param z Points in the open disk
    @param negative Use the roots of z^n = -1
    @return Integral values
    @throws PoleCollision when pole lies within pole_eps of a root
    """
    roots = ctx.roots(negative)
    distance = np.abs(roots - pole)
    if float(distance.min()) < get_config().pole_eps:
        k = int(np.argmin(distance))
        raise PoleCollision(
            f"pole {pole} coincides with root z_{k} = {complex(roots[k])}"
        )
    values = as_complex_array(z)
    total = np.zeros_like(values)
    for root in roots:
        total = total + _root_term(complex(root), pole, values)
    return -total / ctx.n


def integral_I_3m(
    ctx: PartialFractionContext, m: int, z: ComplexInput, negative: bool = False
) -> ComplexArray:
    """
    @brief Resonant integral with pole = z_m: the k = m term has a triple pole
    @param ctx Roots for n
    @param m Root index, 0 <= m < n
    @param z Points in the open disk
    @param negative Use the roots of z^n = -1
    @return Integral values
    """
    if not 0 <= m < ctx.n:
        raise InvalidParameter(f"root index must satisfy 0 <= m < {ctx.n}, got m={m}")
    roots = ctx.roots(negative)
    pole = complex(roots[m])
    values = as_complex_array(z)
    total = np.zeros_like(values)
    for k, root in enumerate(roots):
        if k != m:
            total = total + _root_term(complex(root), pole, values)
    triple = pole / (2 * ctx.n) * (1.0 / (values - pole) ** 2 - 1.0 / pole**2)
    return -total / ctx.n + triple


def _defining_integral(
    ctx: PartialFractionContext, pole: complex, z: ComplexArray, negative: bool
) -> ComplexArray:
    sign = 1.0 if negative else -1.0
    n = ctx.n

    def integrand(zeta: ComplexArray) -> ComplexArray:
        return 1.0 / ((zeta - pole) ** 2 * (1.0 + sign * zeta**n))

    poles = np.concatenate([[pole], ctx.roots(negative)])
    cfg = QuadratureConfig.from_config()
    return path_integral(integrand, z, cfg, singularities=poles)


def pole_integral(
    ctx: PartialFractionContext, pole: complex, z: ComplexInput, negative: bool = False
) -> ComplexArray:
    """
    @brief Pick the generic, resonant or quadrature form for one pole
    @param ctx Roots for n
    @param pole eta or conj(eta)
    @param z Points in the open disk
    @param negative Use the roots of z^n = -1
    @return int_0^z d zeta / ((zeta - pole)^2 (1 -+ zeta^n))

    The resonant root is matched by nearest distance, which also covers
    the conjugate pole (conj(z_m) = z_{n-m}, conj of a root of -1 is z_{n-1-s}).
    """
    settings = get_config()
    values = as_complex_array(z)
    distance = np.abs(ctx.roots(negative) - pole)
    k = int(np.argmin(distance))
    gap = float(distance[k])
    if gap <= settings.resonance_exact:
        logger.debug("resonant pole %s matches root index %d", pole, k)
        return integral_I_3m(ctx, k, values, negative)
    if gap <= settings.resonance_near:
        logger.warning(
            "pole %s is %.3g from root %d; falling back to quadrature", pole, gap, k
        )
        return _defining_integral(ctx, pole, values, negative)
    return integral_I_eta(ctx, pole, values, negative)


def assemble_h_gamma(ctx: PartialFractionContext, z: ComplexInput) -> ComplexArray:
    """
    @brief h for F_c with omega = z^n, c = -2 cos(gamma)
    @param ctx Partial-fraction context
    @param z Points in the open disk
    @return h(z) = -(i / (2 sin gamma)) (conj(eta) I_conj(eta) - eta I_eta)
    """
    values = as_complex_array(z)
    eta = ctx.eta
    logger.debug("assembling h for n=%d gamma=%.6g (%s)", ctx.n, ctx.gamma, ctx.case)
    conj_part = pole_integral(ctx, eta.conjugate(), values)
    eta_part = pole_integral(ctx, eta, values)
    prefactor = -1j / (2.0 * math.sin(ctx.gamma))
    return prefactor * (eta.conjugate() * conj_part - eta * eta_part)


def context_for(spec: Any) -> PartialFractionContext:
    """Context for a ShearSpec pairing F_c with a power dilatation"""
    if spec.family.kind != "fc" or spec.dilatation.kind != "power":
        raise InvalidParameter(
            f"partial fractions need F_c with omega = z^n, got {spec.label}"
        )
    return PartialFractionContext.from_c(spec.family.c, spec.dilatation.n)


__all__ = [
    "PartialFractionContext",
    "assemble_h_gamma",
    "context_for",
    "integral_I_3m",
    "integral_I_eta",
    "pole_integral",
]
