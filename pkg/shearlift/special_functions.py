#!/usr/bin/env python3
"""
@brief Complex special functions used by the closed-form shears
@file special_functions.py

Provides:
- Gauss 2F1 by forward power-series summation inside the unit disk
- Pochhammer products
- Principal-branch log, atan and atanh with branch-cut detection
- The sigma helpers of the closed-form h_{c,a}, g_{c,a}

All functions are pure and vectorised over the complex argument.

@note This module follows Python 3.10+ standards and project guidelines
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from shearlift.analytic_families import ComplexArray, ComplexInput, as_complex_array
from shearlift.errors import (
    BranchCutHit,
    DomainViolation,
    EndpointParameter,
    InvalidParameter,
    NoConvergence,
)
from shearlift_config import get_config

logger = logging.getLogger(__name__)


def pochhammer(x: complex, k: int) -> complex:
    """
    @brief Rising factorial (x)_k = x (x+1) ... (x+k-1)
    @param x Base value
    @param k Number of factors, k >= 0
    @return (x)_k, with (x)_0 = 1
    """
    if k < 0:
        raise InvalidParameter(f"Pochhammer order must be >= 0, got {k}")
    product = complex(1.0)
    for j in range(k):
        product *= x + j
    return product


def _is_nonpositive_integer(value: complex) -> bool:
    return value.imag == 0.0 and value.real <= 0.0 and float(value.real).is_integer()


def hyp2f1(
    a: complex,
    b: complex,
    c: complex,
    z: ComplexInput,
    tol: float | None = None,
    max_terms: int | None = None,
) -> ComplexArray:
    """
    @brief Gauss hypergeometric series 2F1(a, b; c; z) for |z| < 1
    @param a First numerator parameter
    @param b Second numerator parameter
    @param c Denominator parameter, not a non-positive integer
    @param z Argument(s) with |z| < 1
    @param tol Relative tolerance on the geometric tail bound
    @param max_terms Term budget before NoConvergence
    @return Series sums, same shape as z
    @throws NoConvergence when the budget is exhausted
    @throws DomainViolation when |z| >= 1

    Terms are accumulated in fixed forward order and each point stops once
    |term_k| |z| / (1 - |z|) <= tol |sum|, so a point's value never depends
    on which other points are evaluated alongside it.
    """
    settings = get_config().series_settings
    tol = settings["tol"] if tol is None else tol
    max_terms = settings["max_terms"] if max_terms is None else max_terms
    a, b, c = complex(a), complex(b), complex(c)
    if _is_nonpositive_integer(c):
        raise InvalidParameter(
            f"2F1 denominator parameter c={c} is a non-positive integer"
        )

    values = as_complex_array(z)
    flat = values.ravel()
    modulus = np.abs(flat)
    if np.any(modulus >= 1.0):
        raise DomainViolation(
            f"2F1 series needs |z| < 1, got max |z| = {modulus.max():.6g}"
        )

    result = np.ones_like(flat)
    index = np.flatnonzero(modulus > 0.0)
    points = flat[index]
    tail_factor = modulus[index] / (1.0 - modulus[index])
    terms = np.ones_like(points)
    sums = np.ones_like(points)

    k = 0
    while index.size:
        if k >= max_terms:
            raise NoConvergence(
                f"2F1({a}, {b}; {c}; z) did not converge in {max_terms} terms "
                f"for {index.size} point(s), max |z| = {np.abs(points).max():.6g}"
            )
        terms = terms * ((a + k) * (b + k) / ((c + k) * (k + 1))) * points
        sums = sums + terms
        k += 1
        done = np.abs(terms) * tail_factor <= tol * np.abs(sums)
        if np.any(done):
            result[index[done]] = sums[done]
            keep = ~done
            index, points = index[keep], points[keep]
            terms, sums = terms[keep], sums[keep]
            tail_factor = tail_factor[keep]

    logger.debug("2F1(%s, %s; %s) summed with %d terms", a, b, c, k)
    return result.reshape(values.shape)


def _check_cut(hit: np.ndarray, name: str, values: ComplexArray) -> None:
    if np.any(hit):
        bad = complex(values.ravel()[np.flatnonzero(hit.ravel())[0]])
        raise BranchCutHit(f"{name} argument {bad} lies on the branch cut")


def log_c(z: ComplexInput, tol: float | None = None) -> ComplexArray:
    """
    @brief Principal logarithm, cut along (-inf, 0]
    @throws BranchCutHit when an argument lies on the cut within tol
    """
    tol = get_config().branch_tol if tol is None else tol
    values = as_complex_array(z)
    _check_cut((np.abs(values.imag) <= tol) & (values.real <= 0.0), "log", values)
    return np.log(values)


def atanh_c(z: ComplexInput, tol: float | None = None) -> ComplexArray:
    """
    @brief Principal atanh(z) = 1/2 log((1+z)/(1-z)), cuts (-inf,-1] and [1,inf)
    @throws BranchCutHit when an argument lies on a cut within tol
    """
    tol = get_config().branch_tol if tol is None else tol
    values = as_complex_array(z)
    on_cut = (np.abs(values.imag) <= tol) & (np.abs(values.real) >= 1.0)
    _check_cut(on_cut, "atanh", values)
    return np.arctanh(values)


def atan_c(z: ComplexInput, tol: float | None = None) -> ComplexArray:
    """
    @brief Principal atan(z) = (i/2) log((i+z)/(i-z))

    Cuts lie on the imaginary axis beyond +-i.

    @throws BranchCutHit when an argument lies on a cut within tol
    """
    tol = get_config().branch_tol if tol is None else tol
    values = as_complex_array(z)
    on_cut = (np.abs(values.real) <= tol) & (np.abs(values.imag) >= 1.0)
    _check_cut(on_cut, "atan", values)
    return np.arctan(values)


def principal_power(x: ComplexInput, p: float) -> ComplexArray:
    """
    @brief exp(p Log x) with no cut detection; negative bases are intended
    """
    return np.exp(p * np.log(as_complex_array(x)))


@dataclass(frozen=True)
class SigmaValues:
    """
    @brief sigma helpers of the closed-form h_{c,a}, g_{c,a}

    sigma1 depends on z (array), sigma2..sigma4 on c only.
    """

    sigma1: ComplexArray
    sigma2: complex
    sigma3: complex
    sigma4: complex

    @property
    def product34(self) -> complex:
        return self.sigma3 * self.sigma4


def sigma_values(c: float, z: ComplexInput) -> SigmaValues:
    """
    @brief Evaluate sigma1..sigma4 for c in (-2, 2)
    @param c Family parameter
    @param z Points
    @return SigmaValues with principal powers and principal atanh
    @throws EndpointParameter for |c| >= 2
    """
    if abs(c) >= 2.0:
        raise EndpointParameter(
            f"sigma-based closed forms need c in (-2, 2), got c={c}"
        )
    values = as_complex_array(z)
    sigma3 = complex(principal_power(c - 2.0, 1.5))
    sigma4 = complex(principal_power(c + 2.0, 1.5))
    product = sigma3 * sigma4
    sigma1 = atanh_c((c * c - 4.0) * (c + 2.0 * values) / product)
    sigma2 = complex(atanh_c((4.0 * c - c**3) / product))
    return SigmaValues(sigma1=sigma1, sigma2=sigma2, sigma3=sigma3, sigma4=sigma4)


__all__ = [
    "SigmaValues",
    "atan_c",
    "atanh_c",
    "hyp2f1",
    "log_c",
    "pochhammer",
    "principal_power",
    "sigma_values",
]
