#!/usr/bin/env python3
"""
Tests for shear_engine module

@brief Numeric and closed-form shears, slit shears and the epicycloid family
"""

import math
from collections.abc import Callable

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shearlift.analytic_families import ConformalFamily, Dilatation, eval_F, eval_omega
from shearlift.errors import (
    DegenerateShear,
    DomainViolation,
    EndpointParameter,
    InvalidParameter,
    NoClosedForm,
)
from shearlift.geometry_verify import disk_samples
from shearlift.shear_engine import (
    CLOSED_FORM_MARGIN,
    ShearSpec,
    build_shear,
    closed_f_special,
    closed_g_ca,
    closed_g_n,
    closed_g_slit,
    closed_h_ca,
    closed_h_n,
    closed_h_slit,
    shear_closed,
    shear_numeric,
)
from shearlift_config import get_config

INTERIOR_C = [-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5]
MOBIUS_A = [-1.0, -0.5, 0.0, 0.5, 1.0]


def spec_fc(c: float, a: float = 0.0) -> ShearSpec:
    return ShearSpec(ConformalFamily.fc(c), Dilatation.mobius(a))


def spec_power(family: ConformalFamily, n: int) -> ShearSpec:
    return ShearSpec(family, Dilatation.power(n))


def _max_gap(first: np.ndarray, second: np.ndarray) -> float:
    return float(np.max(np.abs(first - second)))


class TestShearSpec:
    """Test pairing rules, derivatives and serialization"""

    def test_unsupported_pair(self) -> None:
        with pytest.raises(InvalidParameter):
            ShearSpec(ConformalFamily.fn(3), Dilatation.mobius(0.0))

    def test_normalised_derivatives(self) -> None:
        spec = spec_fc(0.7, -0.4)
        assert spec.h_prime(0.0) == pytest.approx(1.0)
        assert spec.g_prime(0.0) == pytest.approx(0.0)

    def test_dilatation_ratio(self) -> None:
        spec = spec_power(ConformalFamily.fn(3), 3)
        z = 0.3 - 0.5j
        assert spec.g_prime(z) / spec.h_prime(z) == pytest.approx(z**3)

    def test_singularities(self) -> None:
        poles = spec_fc(0.0).singularities()
        np.testing.assert_allclose(sorted(poles, key=lambda p: p.imag), [-1j, 1j], atol=1e-15)
        assert spec_power(ConformalFamily.fn(4), 4).singularities().size == 4

    def test_degenerate_flag(self) -> None:
        assert spec_fc(2.0, 1.0).is_degenerate
        assert not spec_fc(2.0, 0.5).is_degenerate

    def test_dict_round_trip(self) -> None:
        spec = spec_power(ConformalFamily.fc(-1.25), 6)
        assert ShearSpec.from_dict(spec.to_dict()) == spec


class TestNumericShear:
    """Test the quadrature shear"""

    def test_origin_and_identity(self) -> None:
        shear = shear_numeric(spec_fc(0.5, 0.3))
        z = disk_samples(40, 0.9, seed=1)
        h, g = shear.evaluate(np.concatenate([[0.0], z]))
        assert abs(h[0]) == 0.0 and abs(g[0]) == 0.0
        assert _max_gap(h[1:] - g[1:], eval_F(ConformalFamily.fc(0.5), z)) <= 1e-10

    def test_call_returns_f(self) -> None:
        shear = shear_numeric(spec_power(ConformalFamily.fn(2), 2))
        z = np.array([0.4 + 0.1j])
        h, g = shear.evaluate(z)
        np.testing.assert_array_equal(shear(z), h + np.conj(g))

    def test_simple_closed_value(self) -> None:
        # h' = 1 / (1 + z^2)^2 for c = 0, a = 0
        shear = shear_numeric(spec_fc(0.0, 0.0))
        expected = 0.5 * (0.5 / 1.25 + math.atan(0.5))
        assert shear.h(0.5) == pytest.approx(expected, abs=1e-12)


class TestClosedFormInterior:
    """Test the sigma-based closed forms against quadrature"""

    @pytest.mark.parametrize("c", INTERIOR_C)
    @pytest.mark.parametrize("a", MOBIUS_A)
    def test_matches_quadrature(self, c: float, a: float) -> None:
        z = disk_samples(50, 0.9, seed=7)
        numeric = shear_numeric(spec_fc(c, a))
        h_numeric, g_numeric = numeric.evaluate(z)
        assert _max_gap(closed_h_ca(c, a, z), h_numeric) <= 1e-8
        assert _max_gap(closed_g_ca(c, a, z), g_numeric) <= 1e-8

    @pytest.mark.slow
    @pytest.mark.parametrize("c", INTERIOR_C)
    @pytest.mark.parametrize("a", MOBIUS_A)
    def test_matches_quadrature_dense(self, c: float, a: float) -> None:
        z = disk_samples(500, 0.9, seed=11)
        h_numeric, g_numeric = shear_numeric(spec_fc(c, a)).evaluate(z)
        assert _max_gap(closed_h_ca(c, a, z), h_numeric) <= 1e-8
        assert _max_gap(closed_g_ca(c, a, z), g_numeric) <= 1e-8

    def test_normalised_at_origin(self) -> None:
        assert abs(closed_h_ca(1.2, -0.3, 0.0)) <= 1e-15
        assert abs(closed_g_ca(1.2, -0.3, 0.0)) <= 1e-15

    @settings(max_examples=25, deadline=None)
    @given(
        c=st.floats(min_value=-1.9, max_value=1.9),
        a=st.floats(min_value=-1.0, max_value=1.0),
        r=st.floats(min_value=0.0, max_value=0.85),
        t=st.floats(min_value=0.0, max_value=2 * math.pi),
    )
    def test_shear_identity(self, c: float, a: float, r: float, t: float) -> None:
        z = r * complex(math.cos(t), math.sin(t))
        difference = closed_h_ca(c, a, z) - closed_g_ca(c, a, z)
        assert abs(difference - eval_F(ConformalFamily.fc(c), z)) <= 1e-9

    @pytest.mark.parametrize("c", [-2.0, 2.0])
    def test_endpoint(self, c: float) -> None:
        with pytest.raises(EndpointParameter):
            closed_h_ca(c, 0.0, 0.1)


class TestSlitShears:
    """Test the c = -2 and c = 2 shears"""

    @pytest.mark.parametrize("c", [-2.0, 2.0])
    @pytest.mark.parametrize("a", [-1.0, -0.5, 0.0, 0.5])
    def test_identity_and_special_form(self, c: float, a: float) -> None:
        z = disk_samples(200, 0.9, seed=3)
        h, g = closed_h_slit(c, a, z), closed_g_slit(c, a, z)
        assert _max_gap(h - g, eval_F(ConformalFamily.fc(c), z)) <= 1e-10
        u, v = closed_f_special(c, a, z)
        assert _max_gap(h + np.conj(g), u + 1j * v) <= 1e-10

    @pytest.mark.parametrize("c", [-2.0, 2.0])
    @pytest.mark.parametrize("a", [-1.0, 0.0, 0.5])
    def test_matches_quadrature(self, c: float, a: float) -> None:
        z = disk_samples(50, 0.85, seed=5)
        h_numeric, g_numeric = shear_numeric(spec_fc(c, a)).evaluate(z)
        assert _max_gap(closed_h_slit(c, a, z), h_numeric) <= 1e-8
        assert _max_gap(closed_g_slit(c, a, z), g_numeric) <= 1e-8

    def test_origin(self) -> None:
        u, v = closed_f_special(-2.0, 0.0, 0.0)
        assert u == pytest.approx(0.0, abs=1e-15)
        assert v == pytest.approx(0.0, abs=1e-15)

    def test_degenerate_warning(self) -> None:
        with pytest.warns(DegenerateShear):
            closed_f_special(2.0, 1.0, 0.5)

    def test_pole(self) -> None:
        with pytest.raises(DomainViolation):
            closed_f_special(-2.0, 0.0, 1.0)
        with pytest.raises(DomainViolation):
            closed_h_slit(2.0, 0.0, -1.0)

    def test_interior_parameter_rejected(self) -> None:
        with pytest.raises(InvalidParameter):
            closed_f_special(1.0, 0.0, 0.2)


class TestEpicycloidShear:
    """Test the hypergeometric shears of F_n with omega = z^n"""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_quadrature(self, n: int) -> None:
        z = disk_samples(60, 0.9, seed=n)
        h_numeric, g_numeric = shear_numeric(spec_power(ConformalFamily.fn(n), n)).evaluate(z)
        assert _max_gap(closed_h_n(n, z), h_numeric) <= 1e-8
        assert _max_gap(closed_g_n(n, z), g_numeric) <= 1e-8

    def test_branch_continuity_below_real_axis(self) -> None:
        z = 0.5 * np.exp(-1j * np.pi / 3)
        numeric = shear_numeric(spec_power(ConformalFamily.fn(3), 3)).h(z)
        assert abs(closed_h_n(3, z) - numeric) <= 1e-10

    def test_origin(self) -> None:
        assert abs(closed_h_n(4, 0.0)) <= 1e-15
        assert abs(closed_g_n(4, 0.0)) <= 1e-15

    def test_small_index(self) -> None:
        with pytest.raises(InvalidParameter):
            closed_h_n(1, 0.1)


class TestDispatch:
    """Test shear_closed and build_shear"""

    def test_no_closed_form(self) -> None:
        spec = spec_power(ConformalFamily.fn(3), 2)
        with pytest.raises(NoClosedForm):
            shear_closed(spec)
        assert build_shear(spec).provenance == "quadrature"

    def test_closed_provenance(self) -> None:
        assert build_shear(spec_fc(0.3, 0.2)).provenance == "closed_form"
        assert build_shear(spec_fc(-2.0, 0.5)).provenance == "closed_form"
        assert build_shear(spec_power(ConformalFamily.fn(5), 5)).provenance == "closed_form"

    def test_degenerate_closed_shear_warns(self) -> None:
        with pytest.warns(DegenerateShear):
            shear_closed(spec_fc(2.0, 1.0))

    @pytest.mark.parametrize("c", [-1.999, 1.99, 1.999])
    def test_near_slit_uses_quadrature(self, c: float) -> None:
        spec = spec_fc(c, 0.5)
        with pytest.raises(NoClosedForm):
            shear_closed(spec)
        shear = build_shear(spec)
        assert shear.provenance == "quadrature"
        z = disk_samples(20, 0.9, seed=29)
        h, g = shear.evaluate(z)
        conformal = eval_F(spec.family, z)
        scale = max(1.0, float(np.max(np.abs(conformal))))
        assert _max_gap(h - g, conformal) <= 1e-9 * scale

    def test_margin_keeps_acceptance_range_closed(self) -> None:
        assert 4.0 - 1.5**2 > CLOSED_FORM_MARGIN
        assert build_shear(spec_fc(1.9, 0.5)).provenance == "closed_form"

    @pytest.mark.parametrize(("c", "n"), [(1.0, 2), (0.0, 4), (1.0, 3), (-0.6, 5)])
    def test_partial_fraction_shear_matches_quadrature(self, c: float, n: int) -> None:
        spec = spec_power(ConformalFamily.fc(c), n)
        z = disk_samples(40, 0.9, seed=n)
        closed = shear_closed(spec)
        h_closed, g_closed = closed.evaluate(z)
        h_numeric, g_numeric = shear_numeric(spec).evaluate(z)
        assert _max_gap(h_closed, h_numeric) <= 1e-8
        assert _max_gap(g_closed, g_numeric) <= 1e-8


def _contour_derivative(
    evaluate: Callable[[np.ndarray], np.ndarray],
    z: np.ndarray,
    radius: float = 0.05,
    nodes: int = 48,
) -> np.ndarray:
    """Derivative from the trapezoidal rule on the circle |w - z| = radius"""
    phase = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    ring = (z[:, None] + radius * phase[None, :]).ravel()
    values = evaluate(ring).reshape(z.size, nodes)
    return np.mean(values / phase[None, :], axis=1) / radius


CLOSED_SPECS = [
    *(spec_fc(c, a) for c in (-1.0, 0.0, 0.5, 1.0) for a in (-0.5, 0.0, 0.5)),
    *(spec_fc(c, a) for c in (-2.0, 2.0) for a in (-0.5, 0.0, 0.5)),
    *(spec_power(ConformalFamily.fn(n), n) for n in (2, 3, 4)),
    spec_power(ConformalFamily.fc(1.0), 3),
    spec_power(ConformalFamily.fc(0.0), 4),
]


class TestShearInvariants:
    """Test conjugation symmetry and the dilatation identity of the closed shears"""

    @pytest.mark.parametrize("spec", CLOSED_SPECS, ids=lambda spec: spec.label)
    def test_real_symmetry(self, spec: ShearSpec) -> None:
        shear = shear_closed(spec)
        z = disk_samples(100, 0.9, seed=17)
        h, g = shear.evaluate(z)
        h_conj, g_conj = shear.evaluate(np.conj(z))
        assert _max_gap(h_conj, np.conj(h)) <= 1e-12
        assert _max_gap(g_conj, np.conj(g)) <= 1e-12

    @pytest.mark.parametrize("spec", CLOSED_SPECS, ids=lambda spec: spec.label)
    def test_dilatation_identity(self, spec: ShearSpec) -> None:
        shear = shear_closed(spec)
        z = disk_samples(20, 0.6, seed=23)
        h_prime = _contour_derivative(shear.h, z)
        g_prime = _contour_derivative(shear.g, z)
        omega = eval_omega(spec.dilatation, z)
        bound = 10 * get_config().abs_tol * np.maximum(1.0, np.abs(h_prime))
        assert np.all(np.abs(g_prime - omega * h_prime) <= bound)
        assert _max_gap(h_prime, spec.h_prime(z)) <= 1e-10
