#!/usr/bin/env python3
"""
@brief Exception hierarchy for shearlift
@file errors.py

Every failure the library can report derives from ShearLiftError so callers
(and the CLI) can catch the whole family at once. DegenerateShear is also a
UserWarning: evaluators warn with it and keep going, checks raise it.
"""

from __future__ import annotations


class ShearLiftError(Exception):
    """Base class for all shearlift errors"""


class InvalidParameter(ShearLiftError, ValueError):
    """A parameter lies outside its documented range"""


class DegenerateDenominator(ShearLiftError, ZeroDivisionError):
    """|1 + cz + z^2| fell below the machine floor"""


class NotASquare(ShearLiftError):
    """The dilatation has no analytic square root, so no lift exists"""


class NoConvergence(ShearLiftError):
    """A series exhausted its term budget before meeting its tolerance"""


class BranchCutHit(ShearLiftError):
    """An argument lies on the branch cut of a principal-branch function"""


class EndpointParameter(ShearLiftError):
    """A sigma-based closed form was asked for at |c| = 2"""


class QuadratureFailure(ShearLiftError):
    """Adaptive quadrature exhausted its subdivision budget"""


class SingularPath(ShearLiftError):
    """An integration path passes within eps of a pole of the integrand"""


class PoleCollision(ShearLiftError):
    """A partial-fraction pole coincides with a root of 1 - z^n"""


class PoleAtBoundary(ShearLiftError):
    """A closed-form parameterization was evaluated at its boundary pole"""


class PipelineMismatch(ShearLiftError):
    """A normalization pipeline does not belong to the requested case"""


class DomainViolation(ShearLiftError, ValueError):
    """A point lies outside the domain of an evaluator"""


class IoFailure(ShearLiftError, OSError):
    """Reading or writing an export file failed"""


class NoClosedForm(ShearLiftError):
    """The (family, dilatation) pair has no closed-form shear"""


class DegenerateShear(ShearLiftError, UserWarning):
    """The shear collapses its boundary image onto a point"""


__all__ = [
    "BranchCutHit",
    "DegenerateDenominator",
    "DegenerateShear",
    "DomainViolation",
    "EndpointParameter",
    "InvalidParameter",
    "IoFailure",
    "NoClosedForm",
    "NoConvergence",
    "NotASquare",
    "PipelineMismatch",
    "PoleAtBoundary",
    "PoleCollision",
    "QuadratureFailure",
    "ShearLiftError",
    "SingularPath",
]
