#!/usr/bin/env python3
"""
Tests for analytic_families module

@brief Conformal maps, dilatations, square roots and disk validation
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shearlift.analytic_families import (
    ConformalFamily,
    Dilatation,
    SquareRoot,
    conformal_map,
    eval_F,
    eval_F_prime,
    eval_omega,
    sqrt_dilatation,
    validate_disk_points,
)
from shearlift.errors import (
    DegenerateDenominator,
    DomainViolation,
    InvalidParameter,
    NotASquare,
)

disk_points = st.builds(
    lambda r, t: r * complex(math.cos(t), math.sin(t)),
    st.floats(min_value=0.0, max_value=0.95),
    st.floats(min_value=0.0, max_value=2.0 * math.pi),
)


class TestFamilySelectors:
    """Test parameter validation of the family and dilatation selectors"""

    @pytest.mark.parametrize("c", [-2.5, 2.0001, math.nan, math.inf])
    def test_fc_rejects_out_of_range(self, c: float) -> None:
        with pytest.raises(InvalidParameter):
            ConformalFamily.fc(c)

    def test_fn_rejects_small_n(self) -> None:
        with pytest.raises(InvalidParameter):
            ConformalFamily.fn(1)

    @pytest.mark.parametrize("a", [-1.5, 1.0001, math.nan])
    def test_mobius_rejects_out_of_range(self, a: float) -> None:
        with pytest.raises(InvalidParameter):
            Dilatation.mobius(a)

    def test_power_rejects_zero(self) -> None:
        with pytest.raises(InvalidParameter):
            Dilatation.power(0)

    def test_boundary_cases(self) -> None:
        assert ConformalFamily.fc(-2).is_boundary_case
        assert ConformalFamily.fc(2).is_boundary_case
        assert not ConformalFamily.fc(1.5).is_boundary_case
        assert not ConformalFamily.fn(3).is_boundary_case

    def test_gamma_angle(self) -> None:
        assert ConformalFamily.fc(0).gamma == pytest.approx(math.pi / 2)
        assert ConformalFamily.fc(-2).gamma == pytest.approx(0.0)
        assert ConformalFamily.fc(2).gamma == pytest.approx(math.pi)
        assert ConformalFamily.fc(-1).gamma == pytest.approx(math.pi / 3)

    def test_gamma_undefined_for_fn(self) -> None:
        with pytest.raises(InvalidParameter):
            _ = ConformalFamily.fn(3).gamma

    def test_to_dict(self) -> None:
        assert ConformalFamily.fc(1.5).to_dict() == {"kind": "fc", "c": 1.5}
        assert Dilatation.power(4).to_dict() == {"kind": "power", "n": 4}


class TestConformalMaps:
    """Test eval_F and eval_F_prime"""

    def test_normalisation_at_origin(self) -> None:
        for family in (ConformalFamily.fc(-2), ConformalFamily.fc(0.7), ConformalFamily.fn(5)):
            assert abs(eval_F(family, 0.0)) == 0.0
            assert eval_F_prime(family, 0.0) == pytest.approx(1.0)

    def test_known_values(self) -> None:
        assert eval_F(ConformalFamily.fc(0), 0.5) == pytest.approx(0.4)
        assert eval_F(ConformalFamily.fn(2), 0.5) == pytest.approx(0.4375)
        assert eval_F(ConformalFamily.fc(-2), 0.5) == pytest.approx(2.0)

    def test_derivative_matches_difference_quotient(self) -> None:
        family = ConformalFamily.fc(1.2)
        z = 0.3 + 0.4j
        step = 1e-6
        quotient = (eval_F(family, z + step) - eval_F(family, z - step)) / (2 * step)
        assert abs(quotient - eval_F_prime(family, z)) < 1e-8

    def test_degenerate_denominator(self) -> None:
        with pytest.raises(DegenerateDenominator):
            eval_F(ConformalFamily.fc(2), -1.0)

    def test_vectorised_shape(self) -> None:
        z = np.linspace(-0.5, 0.5, 12).reshape(3, 4) * (1 + 1j)
        assert eval_F(ConformalFamily.fn(3), z).shape == (3, 4)

    def test_conformal_map_binding(self) -> None:
        family = ConformalFamily.fc(0.3)
        evaluate = conformal_map(family)
        assert evaluate(0.2j) == pytest.approx(eval_F(family, 0.2j))

    @given(z=disk_points, c=st.floats(min_value=-2.0, max_value=2.0))
    def test_real_coefficients_commute_with_conjugation(self, z: complex, c: float) -> None:
        family = ConformalFamily.fc(c)
        lhs = eval_F(family, np.conj(z))
        rhs = np.conj(eval_F(family, z))
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


class TestDilatations:
    """Test eval_omega and sqrt_dilatation"""

    def test_known_values(self) -> None:
        assert eval_omega(Dilatation.mobius(0.5), 0.5) == pytest.approx(0.4)
        assert eval_omega(Dilatation.power(3), 0.5j) == pytest.approx(-0.125j)

    def test_mobius_endpoints_reduce_to_monomials(self) -> None:
        z = np.array([0.3 + 0.2j, -0.6j, 0.9])
        np.testing.assert_allclose(eval_omega(Dilatation.mobius(1.0), z), z, atol=1e-15)
        np.testing.assert_allclose(eval_omega(Dilatation.mobius(-1.0), z), -z, atol=1e-15)
        np.testing.assert_allclose(eval_omega(Dilatation.mobius(0.0), z), z**2, atol=1e-15)

    @given(z=disk_points, a=st.floats(min_value=-1.0, max_value=1.0))
    def test_mobius_bounded_by_one(self, z: complex, a: float) -> None:
        assert abs(eval_omega(Dilatation.mobius(a), z)) < 1.0

    def test_square_roots(self) -> None:
        assert sqrt_dilatation(Dilatation.mobius(0.0)) == SquareRoot(power=1)
        assert sqrt_dilatation(Dilatation.power(4)) == SquareRoot(power=2)
        q = sqrt_dilatation(Dilatation.power(6))
        z = 0.4 - 0.3j
        assert q(z) ** 2 == pytest.approx(eval_omega(Dilatation.power(6), z))

    @pytest.mark.parametrize("dilatation", [Dilatation.mobius(0.5), Dilatation.mobius(1.0), Dilatation.power(3)])
    def test_not_a_square(self, dilatation: Dilatation) -> None:
        with pytest.raises(NotASquare):
            sqrt_dilatation(dilatation)


class TestDiskValidation:
    """Test validate_disk_points"""

    def test_accepts_points_inside(self) -> None:
        values = validate_disk_points([0.0, 0.5j, -0.9], r_max=0.95)
        assert values.dtype == np.complex128

    def test_rejects_points_outside(self) -> None:
        with pytest.raises(DomainViolation):
            validate_disk_points(1.2)

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(DomainViolation):
            validate_disk_points(complex(math.nan, 0.0))

    def test_rejects_bad_radius(self) -> None:
        with pytest.raises(InvalidParameter):
            validate_disk_points(0.1, r_max=1.0)
