#!/usr/bin/env python3
"""
Tests for normalization module

@brief Canonical surfaces, rigid steps and the case pipelines
"""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from shearlift.errors import DomainViolation, InvalidParameter, PipelineMismatch
from shearlift.normalization import (
    CASE_IDS,
    CanonicalSurface,
    MobiusMap,
    NormalizationPipeline,
    Reflect,
    Rotate,
    Scale,
    SwapAxes,
    Translate,
    canonical_eval,
    case_pipeline,
)
from shearlift.we_lift import x3_closed_case

coordinates = st.floats(min_value=-10.0, max_value=10.0)
points3 = st.tuples(coordinates, coordinates, coordinates)


class TestCanonicalSurfaces:
    """Test Enneper and helicoid evaluation"""

    def test_enneper_values(self) -> None:
        np.testing.assert_allclose(
            canonical_eval(CanonicalSurface.ENNEPER, 0.5), [0.4583333333, 0.0, -0.25], atol=1e-9
        )
        np.testing.assert_array_equal(canonical_eval(CanonicalSurface.ENNEPER, 0.0), [0.0, 0.0, -0.0])

    def test_helicoid_values(self) -> None:
        np.testing.assert_allclose(canonical_eval(CanonicalSurface.HELICOID, 0.5), [-1.5, 0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(canonical_eval(CanonicalSurface.HELICOID, 1j), [0.0, 0.0, math.pi], atol=1e-15)

    @pytest.mark.parametrize("w", [0.0, -0.5])
    def test_helicoid_domain(self, w: complex) -> None:
        with pytest.raises(DomainViolation):
            canonical_eval(CanonicalSurface.HELICOID, w)

    def test_vector_shape(self) -> None:
        w = np.array([[0.1, 0.2j], [0.3, -0.4j]])
        assert canonical_eval(CanonicalSurface.ENNEPER, w).shape == (2, 2, 3)


class TestSteps:
    """Test the rigid and affine steps"""

    def test_rotation_is_right_handed(self) -> None:
        np.testing.assert_allclose(Rotate(2, math.pi / 2).apply(np.array([1.0, 0.0, 0.0])), [0, 1, 0], atol=1e-15)
        np.testing.assert_allclose(Rotate(0, math.pi / 2).apply(np.array([0.0, 1.0, 0.0])), [0, 0, 1], atol=1e-15)
        np.testing.assert_allclose(Rotate(1, math.pi / 2).apply(np.array([0.0, 0.0, 1.0])), [1, 0, 0], atol=1e-15)

    def test_swap_and_reflect(self) -> None:
        point = np.array([1.0, 2.0, 3.0])
        np.testing.assert_array_equal(SwapAxes(0, 2).apply(point), [3.0, 2.0, 1.0])
        np.testing.assert_array_equal(Reflect(1).apply(point), [1.0, -2.0, 3.0])

    def test_invalid_steps(self) -> None:
        with pytest.raises(InvalidParameter):
            Scale(0.0)
        with pytest.raises(InvalidParameter):
            SwapAxes(1, 1)
        with pytest.raises(InvalidParameter):
            Reflect(3)
        with pytest.raises(InvalidParameter):
            MobiusMap(1, 2, 2, 4)

    @given(point=points3, angle=st.floats(min_value=-math.pi, max_value=math.pi))
    def test_steps_invert(self, point: tuple[float, float, float], angle: float) -> None:
        values = np.array(point)
        for step in (Scale(-4.0), Translate((1 / 3, -2.0, 0.5)), SwapAxes(0, 2), Reflect(1), Rotate(1, angle)):
            np.testing.assert_allclose(step.inverse().apply(step.apply(values)), values, atol=1e-12)


class TestPipelines:
    """Test the documented case pipelines"""

    @pytest.mark.parametrize("case_id", CASE_IDS)
    def test_identification(self, case_id: int) -> None:
        rng = np.random.default_rng(case_id + 10)
        z = 0.9 * np.sqrt(rng.random(500)) * np.exp(2j * np.pi * rng.random(500))
        pipeline = case_pipeline(case_id)
        lifted = pipeline.apply(x3_closed_case(float(case_id), z).as_array())
        canonical = canonical_eval(pipeline.surface, pipeline.map_parameter(z))
        assert np.max(np.linalg.norm(lifted - canonical, axis=-1)) <= 1e-8

    def test_helicoid_case_point(self) -> None:
        pipeline = case_pipeline(0)
        w = pipeline.map_parameter(0.5j)
        assert complex(w) == pytest.approx(3.0)
        moved = pipeline.apply(x3_closed_case(0.0, 0.5j).as_array())
        np.testing.assert_allclose(moved, [8.0 / 3.0, 0.0, 0.0], atol=1e-12)

    def test_enneper_case_origin(self) -> None:
        pipeline = case_pipeline(-2)
        moved = pipeline.apply(x3_closed_case(-2.0, 0.0).as_array())
        expected = canonical_eval(CanonicalSurface.ENNEPER, pipeline.map_parameter(0.0))
        np.testing.assert_allclose(moved, expected, atol=1e-12)
        np.testing.assert_allclose(moved, [2 * math.sqrt(2) / 3, 2 * math.sqrt(2) / 3, 0.0], atol=1e-12)

    @pytest.mark.parametrize("case_id", CASE_IDS)
    def test_inverse_replay(self, case_id: int) -> None:
        pipeline = case_pipeline(case_id)
        z = np.array([0.1 + 0.2j, -0.4j, 0.6])
        lifted = x3_closed_case(float(case_id), z).as_array()
        canonical = canonical_eval(pipeline.surface, pipeline.map_parameter(z))
        back = pipeline.inverse()
        np.testing.assert_allclose(back.apply(canonical), lifted, atol=1e-10)
        np.testing.assert_allclose(back.map_parameter(pipeline.map_parameter(z)), z, atol=1e-12)

    def test_identity_pipeline(self) -> None:
        identity = NormalizationPipeline(case_id=None, surface=CanonicalSurface.ENNEPER)
        points = canonical_eval(CanonicalSurface.ENNEPER, np.array([0.3 + 0.1j, -0.2]))
        np.testing.assert_array_equal(identity.apply(points), points)

    def test_unknown_case(self) -> None:
        with pytest.raises(PipelineMismatch):
            case_pipeline(1)

    def test_describe(self) -> None:
        steps = case_pipeline(2).describe()
        assert [step["step"] for step in steps] == ["translate", "scale", "swapaxes", "rotate"]
