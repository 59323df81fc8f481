import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gauss_bs.covariance import (
    eigenvalues,
    from_eigenvalues,
    from_matrix,
    from_real_quadrature,
    new_single_mode,
    pure_state,
    purity,
    squeezed_state,
    state_with_purity,
    symplectic_eigenvalues,
    tensor,
    thermal_state,
    to_real_quadrature,
    vacuum,
)
from gauss_bs.exceptions import InvalidCovariance, UnphysicalState
from gauss_bs.sampling import random_single_mode, random_two_mode

# pure state with lambda_min = 0.335: a = (l + 1/(4l))/2, b = (1/(4l) - l)/2
LAM_FIG4 = 0.335
A_FIG4 = 0.5 * (LAM_FIG4 + 0.25 / LAM_FIG4)
B_FIG4 = 0.5 * (0.25 / LAM_FIG4 - LAM_FIG4)


phases = st.floats(-math.pi, math.pi)
lam_mins = st.floats(0.01, 2.0)


@st.composite
def single_modes(draw):
    lam = draw(lam_mins)
    extra = draw(st.floats(0.0, 3.0))
    return from_eigenvalues(lam, max(lam, 0.25 / lam) + extra, draw(phases))


class TestNewSingleMode:
    def test_vacuum_accepted(self):
        v = new_single_mode(0.5, 0)
        assert (v.a, v.b) == (0.5, 0)
        assert v.is_pure()

    def test_fig4_state_is_pure(self):
        assert A_FIG4 == pytest.approx(0.540634, abs=1e-6)
        assert B_FIG4 == pytest.approx(0.205634, abs=1e-6)
        v = new_single_mode(A_FIG4, B_FIG4)
        assert v.det == pytest.approx(0.25, abs=1e-15)

    def test_rounded_literals_fall_below_floor(self):
        # six-digit rounding leaves a^2 - b^2 about 2.2e-7 below 1/4
        with pytest.raises(UnphysicalState):
            new_single_mode(0.540634, 0.205634)

    def test_unphysical_rejected(self):
        with pytest.raises(UnphysicalState):
            new_single_mode(0.4, 0.4)

    @pytest.mark.parametrize("a", [0.0, -1.0, float("nan")])
    def test_nonpositive_a(self, a):
        with pytest.raises(UnphysicalState):
            new_single_mode(a, 0)

    def test_clamps_within_tolerance(self):
        b = 0.3 + 0.4j
        a = math.sqrt(abs(b) ** 2 + 0.25 - 5e-13)
        v = new_single_mode(a, b)
        assert v.det >= 0.25 - 1e-15
        assert v.a == pytest.approx(a, abs=1e-12)

    @given(single_modes())
    def test_constructed_states_are_physical(self, v):
        assert v.a ** 2 - abs(v.b) ** 2 >= 0.25 - 1e-12


class TestEigenvalues:
    def test_vacuum(self):
        assert eigenvalues(vacuum()) == (0.5, 0.5)

    def test_thermal(self):
        assert eigenvalues(thermal_state(1.0)) == (1.5, 1.5)

    def test_fig4_state(self):
        lo, hi = eigenvalues(new_single_mode(A_FIG4, B_FIG4))
        assert lo == pytest.approx(0.335, abs=1e-12)
        assert hi == pytest.approx(0.746268, abs=1e-6)

    @given(single_modes())
    def test_closed_form_relations(self, v):
        lo, hi = eigenvalues(v)
        assert lo <= hi
        assert lo + hi == pytest.approx(2 * v.a, abs=1e-12)
        assert hi - lo == pytest.approx(2 * abs(v.b), abs=1e-12)
        assert lo * hi == pytest.approx(v.a ** 2 - abs(v.b) ** 2, rel=1e-12)

    @given(single_modes())
    def test_match_numpy_spectrum(self, v):
        ref = np.linalg.eigvalsh(v.matrix)
        np.testing.assert_allclose(eigenvalues(v), ref, atol=1e-12, rtol=1e-12)


class TestPurity:
    def test_vacuum(self):
        assert purity(vacuum()) == 1.0

    def test_thermal_one(self):
        assert purity(thermal_state(1.0)) == pytest.approx(1 / 3, abs=1e-15)

    @pytest.mark.parametrize("r", [0.0, 0.1, 0.7, 1.5])
    def test_pure_squeezed(self, r):
        assert purity(squeezed_state(r)) == pytest.approx(1.0, abs=1e-12)

    @given(st.floats(0.0, 50.0))
    def test_thermal_formula(self, n):
        assert purity(thermal_state(n)) == pytest.approx(1 / (2 * n + 1), rel=1e-14)

    @pytest.mark.parametrize("u", [1.0, 0.8, 0.5, 0.1])
    def test_state_with_purity(self, u):
        v = state_with_purity(0.335, u)
        assert purity(v) == pytest.approx(u, rel=1e-12)
        assert v.lambda_min == pytest.approx(0.335, abs=1e-13)


class TestStandardStates:
    def test_squeezed_zero_is_vacuum(self):
        v = squeezed_state(0.0)
        assert (v.a, v.b) == (0.5, 0)

    def test_squeezed_eigenvalues(self):
        assert squeezed_state(0.2).lambda_min == pytest.approx(math.exp(-0.4) / 2, abs=1e-15)
        assert squeezed_state(0.2).lambda_min == pytest.approx(0.335160, abs=1e-6)

    def test_squeezed_one(self):
        v = squeezed_state(1.0)
        assert v.a == pytest.approx(math.cosh(2) / 2, rel=1e-15)
        assert v.b == pytest.approx(math.sinh(2) / 2, rel=1e-15)
        assert v.lambda_max == pytest.approx(math.exp(2) / 2, rel=1e-14)

    def test_thermal(self):
        assert thermal_state(0.0) == vacuum()
        assert (thermal_state(0.5).a, thermal_state(0.5).b) == (1.0, 0)
        assert eigenvalues(thermal_state(2.0)) == (2.5, 2.5)

    def test_negative_arguments(self):
        with pytest.raises(UnphysicalState):
            squeezed_state(-0.1)
        with pytest.raises(UnphysicalState):
            thermal_state(-1.0)

    def test_pure_state(self):
        v = pure_state(0.25)
        assert (v.a, v.b) == (0.625, 0.375)
        with pytest.raises(UnphysicalState):
            pure_state(0.6)


class TestTensor:
    def test_vacuum_pair(self):
        v = tensor(vacuum(), vacuum())
        np.testing.assert_array_equal(v.matrix, 0.5 * np.eye(4))

    def test_block_diagonal(self):
        v1 = squeezed_state(0.2)
        v = tensor(v1, vacuum())
        np.testing.assert_array_equal(v.matrix[:2, :2], v1.matrix)
        np.testing.assert_array_equal(v.matrix[:2, 2:], 0)
        assert v.A == v1 and v.B == vacuum()

    def test_determinant_against_numpy(self, rng):
        for _ in range(50):
            v1, v2 = random_single_mode(rng), random_single_mode(rng)
            ref = np.linalg.det(tensor(v1, v2).matrix).real
            assert ref == pytest.approx(v1.det * v2.det, rel=1e-12)

    def test_read_only(self):
        v = tensor(vacuum(), vacuum())
        with pytest.raises(ValueError):
            v.matrix[0, 0] = 1.0


class TestRealQuadrature:
    def test_vacuum(self):
        np.testing.assert_allclose(to_real_quadrature(tensor(vacuum(), vacuum())), 0.5 * np.eye(4),
                                   atol=1e-16)

    @pytest.mark.parametrize("r", [0.1, 0.5, 1.2])
    def test_squeezed(self, r):
        sigma = to_real_quadrature(tensor(squeezed_state(r), vacuum()))
        assert sigma[0, 0] == pytest.approx(math.exp(2 * r) / 2, rel=1e-14)
        assert sigma[1, 1] == pytest.approx(math.exp(-2 * r) / 2, rel=1e-14)
        assert sigma[0, 1] == pytest.approx(0.0, abs=1e-15)

    def test_mapping_entries(self):
        v = new_single_mode(1.0, 0.3 + 0.4j)
        sigma = to_real_quadrature(tensor(v, vacuum()))
        np.testing.assert_allclose(sigma[:2, :2], [[1.3, 0.4], [0.4, 0.7]], atol=1e-15)

    def test_determinant_preserved(self, rng):
        for _ in range(1000):
            v = random_two_mode(rng)
            sigma = to_real_quadrature(v)
            np.testing.assert_allclose(sigma, sigma.T, atol=0)
            assert np.linalg.det(sigma) == pytest.approx(v.det, abs=1e-12 * max(1.0, abs(v.det)))

    def test_round_trip(self, rng):
        for _ in range(100):
            v = random_two_mode(rng)
            back = from_real_quadrature(to_real_quadrature(v))
            np.testing.assert_allclose(back.matrix, v.matrix, atol=1e-13)

    def test_physical_states_have_symplectic_spectrum_above_vacuum(self, rng):
        for _ in range(100):
            nu = symplectic_eigenvalues(to_real_quadrature(random_two_mode(rng)))
            assert np.all(nu >= 0.5 - 1e-10)


class TestFromMatrix:
    def test_rejects_non_hermitian(self):
        m = 0.5 * np.eye(4, dtype=complex)
        m[0, 2] = 0.1
        with pytest.raises(InvalidCovariance):
            from_matrix(m)

    def test_rejects_bad_shape(self):
        with pytest.raises(InvalidCovariance):
            from_matrix(np.eye(3))

    def test_rejects_unphysical(self):
        with pytest.raises(UnphysicalState):
            from_matrix(0.4 * np.eye(4))

    def test_accepts_product(self):
        v = from_matrix(tensor(squeezed_state(0.3), thermal_state(1.0)).matrix)
        assert v.A.lambda_min == pytest.approx(squeezed_state(0.3).lambda_min)
