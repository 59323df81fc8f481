import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gauss_bs.beamsplitter import (
    BeamSplitterParams,
    apply,
    apply_closed_form,
    matched_params,
    mix,
    output_blocks,
    partial_trace_product,
    phase_condition,
    unitary,
)
from gauss_bs.covariance import from_eigenvalues, new_single_mode, pure_state, tensor, vacuum
from gauss_bs.exceptions import InvalidCovariance
from gauss_bs.measures import log_negativity, oracle_log_negativity
from gauss_bs.sampling import random_params, random_single_mode, random_two_mode

thetas = st.floats(0.0, math.pi / 2)
phis = st.floats(-math.pi, math.pi, exclude_min=True)


@st.composite
def single_modes(draw):
    lam = draw(st.floats(0.02, 2.0))
    extra = draw(st.floats(0.0, 3.0))
    return from_eigenvalues(lam, max(lam, 0.25 / lam) + extra, draw(st.floats(-math.pi, math.pi)))


class TestParams:
    @pytest.mark.parametrize("theta,phi", [(-0.1, 0.0), (2.0, 0.0), (0.3, -math.pi), (0.3, 4.0)])
    def test_out_of_range(self, theta, phi):
        with pytest.raises(InvalidCovariance):
            BeamSplitterParams(theta, phi)

    def test_edges_allowed(self):
        BeamSplitterParams(0.0, math.pi)
        BeamSplitterParams(math.pi / 2, 0.0)


class TestUnitary:
    def test_identity_at_zero(self):
        np.testing.assert_array_equal(unitary(BeamSplitterParams(0.0, 1.3)), np.eye(4))

    def test_swap_at_right_angle(self):
        u = unitary(BeamSplitterParams(math.pi / 2, 0.0))
        expected = np.zeros((4, 4))
        expected[0, 2] = expected[1, 3] = -1.0
        expected[2, 0] = expected[3, 1] = 1.0
        np.testing.assert_allclose(u, expected, atol=1e-16)

    @given(thetas, phis)
    def test_unitary(self, theta, phi):
        u = unitary(BeamSplitterParams(theta, phi))
        np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-14)

    def test_entries(self):
        theta, phi = 0.4, 0.9
        u = unitary(BeamSplitterParams(theta, phi))
        c, s, e = math.cos(theta), math.sin(theta), cmath.exp(1j * phi)
        assert u[0, 2] == pytest.approx(-s * e)
        assert u[1, 3] == pytest.approx(-s / e)
        assert u[2, 0] == pytest.approx(s / e)
        assert u[3, 1] == pytest.approx(s * e)
        assert u[0, 0] == u[3, 3] == pytest.approx(c)


class TestApply:
    @pytest.mark.parametrize("theta,phi", [(0.3, 0.0), (math.pi / 4, 1.0), (1.5, -2.0)])
    def test_vacuum_unchanged(self, theta, phi):
        v = tensor(vacuum(), vacuum())
        np.testing.assert_allclose(apply(v, BeamSplitterParams(theta, phi)).matrix, v.matrix, atol=1e-16)

    def test_squeezed_with_vacuum_balanced(self):
        out = mix(pure_state(0.25), vacuum(), BeamSplitterParams(math.pi / 4, 0.0))
        # A = [[a/2 + 1/4, b/2], ...] with a = 0.625, b = 0.375
        assert out.A.a == pytest.approx(0.5625, abs=1e-15)
        assert out.A.b == pytest.approx(0.1875, abs=1e-15)
        assert (out.A.lambda_min, out.A.lambda_max) == pytest.approx((0.375, 0.75), abs=1e-15)
        assert (out.B.lambda_min, out.B.lambda_max) == pytest.approx((0.375, 0.75), abs=1e-15)
        assert np.max(np.abs(out.C)) > 0.01
        ref = np.linalg.eigvalsh(out.matrix[:2, :2])
        assert ref == pytest.approx([0.375, 0.75], abs=1e-15)

    @given(st.floats(0.5, 3.0), st.floats(0.0, 1.0), st.floats(0.5, 3.0), st.floats(0.0, 1.0), thetas)
    def test_real_b_entry(self, a, fb, c, fd, theta):
        b = fb * math.sqrt(a * a - 0.25)
        d = fd * math.sqrt(c * c - 0.25)
        out = mix(new_single_mode(a, b), new_single_mode(c, d), BeamSplitterParams(theta, 0.0))
        expected = b * math.cos(theta) ** 2 + d * math.sin(theta) ** 2
        assert out.matrix[0, 1] == pytest.approx(expected, abs=1e-12)

    def test_determinant_preserved(self, rng):
        for _ in range(300):
            v = random_two_mode(rng)
            out = apply(v, random_params(rng))
            assert out.det == pytest.approx(v.det, abs=1e-12 * max(1.0, v.det))

    def test_hermitian_output(self, rng):
        out = apply(random_two_mode(rng), random_params(rng))
        np.testing.assert_array_equal(out.matrix, out.matrix.conj().T)

    def test_composition(self, rng):
        for _ in range(200):
            v = random_two_mode(rng)
            p1, p2 = random_params(rng), random_params(rng)
            u = unitary(p1) @ unitary(p2)
            np.testing.assert_allclose(apply(apply(v, p1), p2).matrix, u.conj().T @ v.matrix @ u,
                                       atol=1e-12)


class TestOutputBlocks:
    def test_zero_angle(self):
        v1, v2 = new_single_mode(0.9, 0.3 + 0.4j), new_single_mode(0.7, 0.1 - 0.2j)
        a, b, c = output_blocks(v1, v2, BeamSplitterParams(0.0, 0.7))
        assert a == v1 and b == v2
        np.testing.assert_array_equal(c, 0)

    def test_right_angle_swaps(self):
        v1, v2 = new_single_mode(0.9, 0.3 + 0.4j), new_single_mode(0.7, 0.1 - 0.2j)
        phi = 0.7
        a, b, c = output_blocks(v1, v2, BeamSplitterParams(math.pi / 2, phi))
        assert a.a == pytest.approx(v2.a) and b.a == pytest.approx(v1.a)
        assert a.b == pytest.approx(v2.b * cmath.exp(2j * phi))
        assert b.b == pytest.approx(v1.b * cmath.exp(-2j * phi))
        np.testing.assert_allclose(c, 0, atol=1e-16)

    def test_cross_block_determinant(self):
        v1 = pure_state(0.2, 0.6)
        _, _, c = output_blocks(v1, vacuum(), BeamSplitterParams(math.pi / 4, 0.0))
        det_c = c[0, 0] * c[1, 1] - c[0, 1] * c[1, 0]
        assert det_c.real == pytest.approx(((v1.a - 0.5) ** 2 - abs(v1.b) ** 2) / 4, abs=1e-15)
        assert det_c.imag == pytest.approx(0.0, abs=1e-16)

    @given(single_modes(), single_modes(), thetas, phis)
    def test_matches_matrix_product(self, v1, v2, theta, phi):
        p = BeamSplitterParams(theta, phi)
        np.testing.assert_allclose(apply_closed_form(v1, v2, p).matrix, mix(v1, v2, p).matrix,
                                   atol=1e-12)

    def test_matches_matrix_product_sweep(self, rng):
        for _ in range(1000):
            v1, v2, p = random_single_mode(rng), random_single_mode(rng), random_params(rng)
            np.testing.assert_allclose(apply_closed_form(v1, v2, p).matrix, mix(v1, v2, p).matrix,
                                       atol=1e-12)


class TestPartialTrace:
    def test_product_unchanged(self):
        v = tensor(pure_state(0.3), vacuum())
        assert partial_trace_product(v) == v

    def test_keeps_marginals(self, rng):
        out = mix(random_single_mode(rng), random_single_mode(rng), random_params(rng))
        traced = partial_trace_product(out)
        assert traced.A == out.A and traced.B == out.B
        np.testing.assert_array_equal(traced.C, 0)

    def test_separable(self, rng):
        for _ in range(200):
            traced = partial_trace_product(random_two_mode(rng))
            assert log_negativity(traced) == 0.0
            assert oracle_log_negativity(traced) == 0.0


class TestPhaseCondition:
    def test_real_positive(self):
        assert phase_condition(0.3, 0.2) == 0.0

    def test_imaginary_b(self):
        assert phase_condition(0.3j, 0.2) == pytest.approx(math.pi / 4)

    def test_zero_convention(self):
        assert phase_condition(0.0, 0.0) == 0.0
        assert phase_condition(0.3j, 0.0) == pytest.approx(math.pi / 4)
        assert phase_condition(0.0, 0.3j) == pytest.approx(-math.pi / 4)

    @given(single_modes(), single_modes(), thetas)
    def test_minimum_eigenvalues_add(self, v1, v2, theta):
        out = mix(v1, v2, matched_params(v1, v2, theta))
        c2, s2 = math.cos(theta) ** 2, math.sin(theta) ** 2
        assert out.A.lambda_min + out.B.lambda_min == pytest.approx(
            v1.lambda_min + v2.lambda_min, abs=1e-12)
        assert out.A.lambda_min == pytest.approx(v1.lambda_min * c2 + v2.lambda_min * s2, abs=1e-12)

    def test_wrong_phase_breaks_conservation(self):
        v1, v2 = pure_state(0.2, 0.0), pure_state(0.3, 0.0)
        out = mix(v1, v2, BeamSplitterParams(math.pi / 4, math.pi / 2))
        assert out.A.lambda_min + out.B.lambda_min > v1.lambda_min + v2.lambda_min + 0.01
