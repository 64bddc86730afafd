#!/usr/bin/env python3
"""
@brief Canonical minimal surfaces and the pipelines that align lifts with them
@file normalization.py

A pipeline pairs a Moebius change of parameter with an ordered list of
rigid/affine steps applied to the lifted points. Applying the steps to
X_case(z) must reproduce the canonical surface at the mapped parameter.

Canonical surfaces:
- Enneper:  Y2(w) = (Re(w - w^3/3), Im(w + w^3/3), -Re(w^2))
- Helicoid: Y0(w) = (Re(w - 1/w), Im(w + 1/w), 2 Im log w)

Axes are 0-based (0 = x1, 1 = x2, 2 = x3).

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
import numpy.typing as npt

from shearlift.analytic_families import ComplexArray, ComplexInput, as_complex_array
from shearlift.errors import DomainViolation, InvalidParameter, PipelineMismatch

logger = logging.getLogger(__name__)

RealArray = npt.NDArray[np.float64]

CASE_IDS = (-2, 0, 2)


class CanonicalSurface(Enum):
    """Canonical minimal surfaces used for identification"""

    ENNEPER = "enneper"
    HELICOID = "helicoid"


def canonical_eval(surface: CanonicalSurface, w: ComplexInput) -> RealArray:
    """
    @brief Evaluate a canonical surface
    @param surface Enneper or helicoid
    @param w Parameter value(s)
    @return Points with a trailing axis of length 3
    @throws DomainViolation for the helicoid at w = 0 or on the log cut
    """
    values = as_complex_array(w)
    if surface is CanonicalSurface.ENNEPER:
        x1 = np.real(values - values**3 / 3.0)
        x2 = np.imag(values + values**3 / 3.0)
        x3 = -np.real(values**2)
        return np.stack([x1, x2, x3], axis=-1)
    if np.any((values.imag == 0.0) & (values.real <= 0.0)):
        raise DomainViolation(
            "helicoid parameter must avoid w = 0 and the negative real axis"
        )
    x1 = np.real(values - 1.0 / values)
    x2 = np.imag(values + 1.0 / values)
    x3 = 2.0 * np.imag(np.log(values))
    return np.stack([x1, x2, x3], axis=-1)


@dataclass(frozen=True)
class MobiusMap:
    """z -> (a z + b) / (c z + d) with ad - bc != 0"""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self) -> None:
        if self.a * self.d - self.b * self.c == 0:
            raise InvalidParameter(f"singular Moebius map {self}")

    def __call__(self, z: ComplexInput) -> ComplexArray:
        values = as_complex_array(z)
        return (self.a * values + self.b) / (self.c * values + self.d)

    def inverse(self) -> MobiusMap:
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    @classmethod
    def identity(cls) -> MobiusMap:
        return cls(1, 0, 0, 1)


@dataclass(frozen=True)
class Scale:
    factor: float

    def __post_init__(self) -> None:
        if self.factor == 0.0:
            raise InvalidParameter("scale factor must be non-zero")

    def apply(self, points: RealArray) -> RealArray:
        return points * self.factor

    def inverse(self) -> Scale:
        return Scale(1.0 / self.factor)


@dataclass(frozen=True)
class Translate:
    vector: tuple[float, float, float]

    def apply(self, points: RealArray) -> RealArray:
        return points + np.asarray(self.vector)

    def inverse(self) -> Translate:
        x, y, z = self.vector
        return Translate((-x, -y, -z))


@dataclass(frozen=True)
class SwapAxes:
    i: int
    j: int

    def __post_init__(self) -> None:
        if {self.i, self.j} - {0, 1, 2} or self.i == self.j:
            raise InvalidParameter(f"cannot swap axes {self.i} and {self.j}")

    def apply(self, points: RealArray) -> RealArray:
        out = points.copy()
        out[..., [self.i, self.j]] = points[..., [self.j, self.i]]
        return out

    def inverse(self) -> SwapAxes:
        return self


@dataclass(frozen=True)
class Reflect:
    axis: int

    def __post_init__(self) -> None:
        if self.axis not in (0, 1, 2):
            raise InvalidParameter(f"unknown axis {self.axis}")

    def apply(self, points: RealArray) -> RealArray:
        out = points.copy()
        out[..., self.axis] = -out[..., self.axis]
        return out

    def inverse(self) -> Reflect:
        return self


@dataclass(frozen=True)
class Rotate:
    """Right-handed rotation by angle about one coordinate axis"""

    axis: int
    angle: float

    def __post_init__(self) -> None:
        if self.axis not in (0, 1, 2):
            raise InvalidParameter(f"unknown axis {self.axis}")

    def apply(self, points: RealArray) -> RealArray:
        p, q = [k for k in (0, 1, 2) if k != self.axis]
        if self.axis == 1:
            p, q = q, p
        cos, sin = math.cos(self.angle), math.sin(self.angle)
        out = points.copy()
        out[..., p] = points[..., p] * cos - points[..., q] * sin
        out[..., q] = points[..., p] * sin + points[..., q] * cos
        return out

    def inverse(self) -> Rotate:
        return Rotate(self.axis, -self.angle)


PipelineStep = Scale | Translate | SwapAxes | Reflect | Rotate


@dataclass(frozen=True)
class NormalizationPipeline:
    """
    @brief Parameter change plus spatial steps mapping a lift onto a canonical surface
    """

    case_id: int | None
    surface: CanonicalSurface
    parameter_map: MobiusMap = field(default_factory=MobiusMap.identity)
    steps: tuple[PipelineStep, ...] = ()

    def apply(self, points: npt.ArrayLike) -> RealArray:
        """Apply the spatial steps in order to points shaped (..., 3)"""
        out = np.asarray(points, dtype=np.float64)
        for step in self.steps:
            out = step.apply(out)
        return out

    def map_parameter(self, z: ComplexInput) -> ComplexArray:
        return self.parameter_map(z)

    def inverse(self) -> NormalizationPipeline:
        """Pipeline taking canonical points back to the lift's coordinates"""
        return NormalizationPipeline(
            case_id=self.case_id,
            surface=self.surface,
            parameter_map=self.parameter_map.inverse(),
            steps=tuple(step.inverse() for step in reversed(self.steps)),
        )

    def describe(self) -> list[dict[str, Any]]:
        return [
            {"step": type(step).__name__.lower(), **vars(step)} for step in self.steps
        ]


def case_pipeline(case_id: int) -> NormalizationPipeline:
    """
    @brief Documented pipeline for one of the canonical cases
    @param case_id -2 (Enneper), 0 (helicoid) or 2 (Enneper)
    @return NormalizationPipeline
    @throws PipelineMismatch for any other case id
    """
    quarter_turn = cmath.exp(1j * math.pi / 4.0)
    if case_id == -2:
        return NormalizationPipeline(
            case_id=-2,
            surface=CanonicalSurface.ENNEPER,
            parameter_map=MobiusMap(quarter_turn, quarter_turn, -1, 1),
            steps=(
                SwapAxes(1, 2),
                Translate((1.0 / 3.0, 0.0, 0.0)),
                Scale(4.0),
                Reflect(1),
                Rotate(2, math.pi / 4.0),
            ),
        )
    if case_id == 0:
        return NormalizationPipeline(
            case_id=0,
            surface=CanonicalSurface.HELICOID,
            parameter_map=MobiusMap(1, 1j, -1, 1j),
            steps=(Scale(4.0), Reflect(0), Reflect(2), SwapAxes(0, 1), SwapAxes(1, 2)),
        )
    if case_id == 2:
        return NormalizationPipeline(
            case_id=2,
            surface=CanonicalSurface.ENNEPER,
            parameter_map=MobiusMap(-quarter_turn, quarter_turn, 1, 1),
            steps=(
                Translate((-1.0 / 3.0, 0.0, 0.0)),
                Scale(-4.0),
                SwapAxes(1, 2),
                Rotate(2, math.pi / 4.0),
            ),
        )
    raise PipelineMismatch(
        f"no documented pipeline for case {case_id}; expected one of {CASE_IDS}"
    )


__all__ = [
    "CASE_IDS",
    "CanonicalSurface",
    "MobiusMap",
    "NormalizationPipeline",
    "PipelineStep",
    "Reflect",
    "Rotate",
    "Scale",
    "SwapAxes",
    "Translate",
    "canonical_eval",
    "case_pipeline",
]
