#!/usr/bin/env python3
"""
@brief Conformal families and dilatations as evaluable analytic functions
@file analytic_families.py

Two conformal families and two dilatation families, each validated at
construction so downstream code never re-checks parameters:

- F_c(z) = z / (1 + c z + z^2), c in [-2, 2] (slit domains at the endpoints)
- F_n(z) = z - z^n / n^2, n >= 2 (interior of an epicycloid with n - 1 cusps)
- omega_a(z) = z (z + a) / (1 + a z), a in [-1, 1]
- omega(z) = z^n, n >= 1

All evaluators take a complex scalar or array and return a complex ndarray
of the same shape. They are immutable and safe to share between threads.

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Literal

import numpy as np
import numpy.typing as npt

from shearlift.errors import (
    DegenerateDenominator,
    DomainViolation,
    InvalidParameter,
    NotASquare,
)
from shearlift_config import get_config

logger = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]
ComplexInput = complex | float | npt.ArrayLike
ComplexEvaluator = Callable[[Any], ComplexArray]

_DENOMINATOR_FLOOR = float(np.finfo(float).eps)


def as_complex_array(z: ComplexInput) -> ComplexArray:
    """
    @brief Convert input to a complex array, rejecting NaN and Inf
    @param z Scalar or array-like of complex values
    @return Complex ndarray
    @throws DomainViolation when any component is not finite
    """
    values = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(values)):
        raise DomainViolation(f"non-finite complex input: {z!r}")
    return values


def validate_disk_points(z: ComplexInput, r_max: float | None = None) -> ComplexArray:
    """
    @brief Validate points of the closed disk |z| <= r_max
    @param z Scalar or array-like of complex values
    @param r_max Radius bound, defaults to the configured r_max
    @return Complex ndarray of the validated points
    @throws DomainViolation when a point is non-finite or outside the disk
    """
    limit = get_config().r_max if r_max is None else r_max
    if not 0.0 < limit < 1.0:
        raise InvalidParameter(f"r_max must lie in (0, 1), got {limit}")
    values = as_complex_array(z)
    modulus = np.abs(values)
    if np.any(modulus > limit):
        worst = float(np.max(modulus))
        raise DomainViolation(f"point with |z| = {worst:.6g} exceeds r_max = {limit}")
    return values


@dataclass(frozen=True)
class ConformalFamily:
    """
    @brief Selector for one of the two conformal families

    Use the fc() and fn() constructors; kind picks the variant and only the
    matching parameter is meaningful.
    """

    kind: Literal["fc", "fn"]
    c: float = 0.0
    n: int = 2

    def __post_init__(self) -> None:
        if self.kind == "fc":
            if not math.isfinite(self.c) or not -2.0 <= self.c <= 2.0:
                raise InvalidParameter(f"Fc requires c in [-2, 2], got c={self.c}")
            if self.is_boundary_case:
                logger.debug("Fc with c=%s is a boundary (slit) case", self.c)
        elif self.kind == "fn":
            if self.n < 2:
                raise InvalidParameter(f"Fn requires n >= 2, got n={self.n}")
        else:
            raise InvalidParameter(f"unknown conformal family kind: {self.kind!r}")

    @classmethod
    def fc(cls, c: float) -> ConformalFamily:
        return cls(kind="fc", c=float(c))

    @classmethod
    def fn(cls, n: int) -> ConformalFamily:
        return cls(kind="fn", n=int(n))

    @property
    def is_boundary_case(self) -> bool:
        """True for the slit maps c = -2 and c = 2"""
        return self.kind == "fc" and abs(self.c) == 2.0

    @property
    def gamma(self) -> float:
        """
        @brief Angle gamma with c = -2 cos(gamma)
        @return gamma in [0, pi]
        @throws InvalidParameter for the Fn family
        """
        if self.kind != "fc":
            raise InvalidParameter("gamma is only defined for the Fc family")
        return math.acos(-self.c / 2.0)

    @property
    def label(self) -> str:
        return f"Fc(c={self.c:g})" if self.kind == "fc" else f"Fn(n={self.n})"

    def to_dict(self) -> dict[str, Any]:
        if self.kind == "fc":
            return {"kind": "fc", "c": self.c}
        return {"kind": "fn", "n": self.n}


@dataclass(frozen=True)
class Dilatation:
    """
    @brief Selector for the Moebius-product or power dilatation
    """

    kind: Literal["mobius", "power"]
    a: float = 0.0
    n: int = 1

    def __post_init__(self) -> None:
        if self.kind == "mobius":
            if not math.isfinite(self.a) or not -1.0 <= self.a <= 1.0:
                raise InvalidParameter(
                    f"MobiusProduct requires a in [-1, 1], got a={self.a}"
                )
        elif self.kind == "power":
            if self.n < 1:
                raise InvalidParameter(f"Power requires n >= 1, got n={self.n}")
        else:
            raise InvalidParameter(f"unknown dilatation kind: {self.kind!r}")

    @classmethod
    def mobius(cls, a: float) -> Dilatation:
        return cls(kind="mobius", a=float(a))

    @classmethod
    def power(cls, n: int) -> Dilatation:
        return cls(kind="power", n=int(n))

    @property
    def label(self) -> str:
        if self.kind == "mobius":
            return f"MobiusProduct(a={self.a:g})"
        return f"Power(n={self.n})"

    def to_dict(self) -> dict[str, Any]:
        if self.kind == "mobius":
            return {"kind": "mobius", "a": self.a}
        return {"kind": "power", "n": self.n}


def _fc_denominator(c: float, z: ComplexArray) -> ComplexArray:
    denominator = 1.0 + c * z + z * z
    if np.any(np.abs(denominator) < _DENOMINATOR_FLOOR):
        raise DegenerateDenominator(
            f"|1 + cz + z^2| vanishes for c={c} near the unit circle"
        )
    return denominator


def eval_F(family: ConformalFamily, z: ComplexInput) -> ComplexArray:
    """
    @brief Evaluate the conformal map F
    @param family Conformal family selector
    @param z Points (finite); callers restrict them to the disk
    @return z/(1+cz+z^2) for Fc, z - z^n/n^2 for Fn
    @throws DegenerateDenominator when 1+cz+z^2 vanishes
    """
    values = as_complex_array(z)
    if family.kind == "fc":
        return values / _fc_denominator(family.c, values)
    n = family.n
    return values - values**n / n**2


def eval_F_prime(family: ConformalFamily, z: ComplexInput) -> ComplexArray:
    """
    @brief Evaluate F'
    @param family Conformal family selector
    @param z Points
    @return (1-z^2)/(1+cz+z^2)^2 for Fc, 1 - z^(n-1)/n for Fn
    """
    values = as_complex_array(z)
    if family.kind == "fc":
        denominator = _fc_denominator(family.c, values)
        return (1.0 - values * values) / denominator**2
    n = family.n
    return 1.0 - values ** (n - 1) / n


def eval_omega(dilatation: Dilatation, z: ComplexInput) -> ComplexArray:
    """
    @brief Evaluate the dilatation omega = g'/h'
    @param dilatation Dilatation selector
    @param z Points in the disk
    @return z(z+a)/(1+az) or z^n
    """
    values = as_complex_array(z)
    if dilatation.kind == "mobius":
        a = dilatation.a
        return values * (values + a) / (1.0 + a * values)
    return values**dilatation.n


@dataclass(frozen=True)
class SquareRoot:
    """Analytic square root q(z) = z^power of a square dilatation"""

    power: int

    def __call__(self, z: ComplexInput) -> ComplexArray:
        return as_complex_array(z) ** self.power


def sqrt_dilatation(dilatation: Dilatation) -> SquareRoot:
    """
    @brief Analytic square root of the dilatation
    @param dilatation Dilatation selector
    @return q with q^2 = omega: z for omega = z^2, z^m for omega = z^(2m)
    @throws NotASquare for a != 0 and for odd powers
    """
    if dilatation.kind == "mobius":
        if dilatation.a != 0.0:
            raise NotASquare(
                f"omega_a with a={dilatation.a:g} has a simple zero "
                f"at z={-dilatation.a:g}"
            )
        return SquareRoot(power=1)
    if dilatation.n % 2:
        raise NotASquare(f"z^{dilatation.n} is not the square of an analytic function")
    return SquareRoot(power=dilatation.n // 2)


def conformal_map(family: ConformalFamily) -> ComplexEvaluator:
    """
    @brief Bind eval_F to a family
    @param family Conformal family selector
    @return Evaluator z -> F(z)
    """

    def evaluate(z: Any) -> ComplexArray:
        return eval_F(family, z)

    return evaluate


__all__ = [
    "ComplexArray",
    "ComplexEvaluator",
    "ComplexInput",
    "ConformalFamily",
    "Dilatation",
    "SquareRoot",
    "as_complex_array",
    "conformal_map",
    "eval_F",
    "eval_F_prime",
    "eval_omega",
    "sqrt_dilatation",
    "validate_disk_points",
]
