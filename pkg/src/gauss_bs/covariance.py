"""Zero-mean Gaussian covariances in the complex-amplitude convention.

A single mode is described by the Hermitian matrix ``[[a, b], [b*, a]]``
over the amplitudes ``(alpha, alpha*)``, with symmetric ordering so that the
vacuum is ``diag(1/2, 1/2)``.  Two modes are stacked in the order
``(alpha_1, alpha_1*, alpha_2, alpha_2*)``, giving a 4x4 matrix with blocks
``[[A, C], [C^dagger, B]]``.

The real-quadrature form uses ``alpha = (x + i p) / sqrt(2)`` and the
ordering ``(x_1, p_1, x_2, p_2)``.  The change of basis is unitary, so
determinants and spectra are shared between the two forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidCovariance, UnphysicalState

PHYSICALITY_TOL = 1e-12

# y = T z maps quadratures z = (x, p) to amplitudes y = (alpha, alpha*).
_T1 = np.array([[1.0, 1.0j], [1.0, -1.0j]]) / math.sqrt(2.0)
_T2 = np.kron(np.eye(2), _T1)

OMEGA = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class SingleModeCovariance:
    """Covariance ``[[a, b], [b*, a]]`` of one zero-mean Gaussian mode.

    Use :func:`new_single_mode` (or one of the state constructors) to build
    instances; it enforces ``a**2 >= |b|**2 + 1/4``.
    """

    a: float
    b: complex

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [np.conj(self.b), self.a]], dtype=complex)

    @property
    def lambda_min(self) -> float:
        return self.a - abs(self.b)

    @property
    def lambda_max(self) -> float:
        return self.a + abs(self.b)

    @property
    def det(self) -> float:
        return self.a * self.a - abs(self.b) ** 2

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(self.det - 0.25) <= tol


def new_single_mode(a: float, b: complex = 0.0) -> SingleModeCovariance:
    """Build a single-mode covariance, checking the uncertainty relation.

    Values within ``PHYSICALITY_TOL`` of the pure boundary are clamped onto it
    by raising ``a`` to ``sqrt(|b|**2 + 1/4)``.

    Raises:
        UnphysicalState: if ``a <= 0`` or ``a**2 < |b|**2 + 1/4 - tol``.
    """
    a = float(a)
    b = complex(b)
    if not (math.isfinite(a) and math.isfinite(b.real) and math.isfinite(b.imag)):
        raise UnphysicalState(f"non-finite covariance entries a={a}, b={b}")
    if a <= 0.0:
        raise UnphysicalState(f"a must be positive, got {a}")
    floor = abs(b) ** 2 + 0.25
    gap = a * a - floor
    if gap < -PHYSICALITY_TOL:
        raise UnphysicalState(f"a^2 - |b|^2 = {a * a - abs(b) ** 2:.17g} < 1/4")
    if gap < 0.0:
        a = math.sqrt(floor)
    return SingleModeCovariance(a, b)


def from_eigenvalues(lambda_min: float, lambda_max: float, phase: float = 0.0) -> SingleModeCovariance:
    """Single mode with the given eigenvalues; ``phase`` is ``arg(b)``."""
    if lambda_min > lambda_max:
        raise InvalidCovariance(f"lambda_min={lambda_min} exceeds lambda_max={lambda_max}")
    a = 0.5 * (lambda_min + lambda_max)
    b = 0.5 * (lambda_max - lambda_min) * complex(math.cos(phase), math.sin(phase))
    return new_single_mode(a, b)


def pure_state(lambda_min: float, phase: float = 0.0) -> SingleModeCovariance:
    """Pure Gaussian state with minimum eigenvalue ``lambda_min``."""
    if not 0.0 < lambda_min <= 0.5:
        raise UnphysicalState(f"a pure state needs 0 < lambda_min <= 1/2, got {lambda_min}")
    return from_eigenvalues(lambda_min, 0.25 / lambda_min, phase)


def state_with_purity(lambda_min: float, purity: float, phase: float = 0.0) -> SingleModeCovariance:
    """Mixed state with minimum eigenvalue ``lambda_min`` and purity ``u``.

    The maximum eigenvalue is ``1 / (4 u**2 lambda_min)``.
    """
    if not 0.0 < purity <= 1.0:
        raise UnphysicalState(f"purity must lie in (0, 1], got {purity}")
    return from_eigenvalues(lambda_min, 0.25 / (purity * purity * lambda_min), phase)


def vacuum() -> SingleModeCovariance:
    return SingleModeCovariance(0.5, 0j)


def squeezed_state(r: float) -> SingleModeCovariance:
    """Pure squeezed vacuum, ``lambda_min = exp(-2 r) / 2`` and ``b`` real positive."""
    if r < 0:
        raise UnphysicalState(f"squeezing parameter must be non-negative, got {r}")
    return new_single_mode(0.5 * math.cosh(2 * r), complex(0.5 * math.sinh(2 * r)))


def thermal_state(n: float) -> SingleModeCovariance:
    """Thermal state with mean photon number ``n``."""
    if n < 0:
        raise UnphysicalState(f"mean photon number must be non-negative, got {n}")
    return SingleModeCovariance(n + 0.5, 0j)


def eigenvalues(v: SingleModeCovariance) -> tuple[float, float]:
    """Return ``(lambda_min, lambda_max) = (a - |b|, a + |b|)``."""
    return v.lambda_min, v.lambda_max


def purity(v: SingleModeCovariance) -> float:
    """Purity ``1 / (2 sqrt(lambda_min lambda_max))``, equal to 1 for pure states."""
    return 1.0 / (2.0 * math.sqrt(v.det))


@dataclass(frozen=True, eq=False)
class TwoModeCovariance:
    """Hermitian 4x4 covariance of two modes, blocks ``[[A, C], [C^dagger, B]]``.

    The underlying array is read-only.  Construct through :func:`tensor`,
    :func:`from_matrix` or :func:`from_real_quadrature`.
    """

    matrix: np.ndarray

    @property
    def A(self) -> SingleModeCovariance:
        return _block_to_single(self.matrix[:2, :2])

    @property
    def B(self) -> SingleModeCovariance:
        return _block_to_single(self.matrix[2:, 2:])

    @property
    def C(self) -> np.ndarray:
        return self.matrix[:2, 2:]

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix).real)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoModeCovariance):
            return NotImplemented
        return bool(np.array_equal(self.matrix, other.matrix))

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())


def _block_to_single(block: np.ndarray) -> SingleModeCovariance:
    # Averaging the two diagonal entries absorbs rounding from U^dagger V U.
    a = 0.5 * (block[0, 0].real + block[1, 1].real)
    return SingleModeCovariance(float(a), complex(block[0, 1]))


def _freeze(m: np.ndarray) -> np.ndarray:
    m = np.array(m, dtype=complex)
    m.setflags(write=False)
    return m


def _check_structure(m: np.ndarray, tol: float) -> None:
    if m.shape != (4, 4):
        raise InvalidCovariance(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidCovariance("covariance has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.conj().T)) > tol * scale:
        raise InvalidCovariance("covariance is not Hermitian")
    # Each 2x2 block of a real-quadrature covariance has the form [[p, q], [q*, p*]].
    for i in (0, 2):
        for j in (0, 2):
            blk = m[i:i + 2, j:j + 2]
            if abs(blk[0, 0] - np.conj(blk[1, 1])) > tol * scale or \
                    abs(blk[0, 1] - np.conj(blk[1, 0])) > tol * scale:
                raise InvalidCovariance(f"block ({i // 2}, {j // 2}) does not map to real quadratures")


def from_matrix(m: np.ndarray, check_physical: bool = True, tol: float = 1e-9) -> TwoModeCovariance:
    """Wrap a 4x4 complex-amplitude covariance after validating it.

    Raises:
        InvalidCovariance: wrong shape, not Hermitian, or blocks lacking the
            amplitude/conjugate structure.
        UnphysicalState: the uncertainty relation ``sigma + i Omega / 2 >= 0``
            fails by more than ``tol``.
    """
    m = np.asarray(m, dtype=complex)
    _check_structure(m, tol)
    v = TwoModeCovariance(_freeze(m))
    if check_physical:
        sigma = to_real_quadrature(v)
        scale = max(1.0, float(np.max(np.abs(sigma))))
        lowest = np.linalg.eigvalsh(sigma + 0.5j * OMEGA)[0]
        if lowest < -tol * scale:
            raise UnphysicalState(f"uncertainty relation violated (min eigenvalue {lowest:.3g})")
    return v


def tensor(v1: SingleModeCovariance, v2: SingleModeCovariance) -> TwoModeCovariance:
    """Block-diagonal product covariance ``diag(V1, V2)``."""
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = v1.matrix
    m[2:, 2:] = v2.matrix
    return TwoModeCovariance(_freeze(m))


def to_real_quadrature(v: TwoModeCovariance) -> np.ndarray:
    """Real symmetric covariance in the ordering ``(x1, p1, x2, p2)``.

    Per mode ``sigma_xx = a + Re b``, ``sigma_pp = a - Re b`` and
    ``sigma_xp = Im b``.
    """
    sigma = _T2.conj().T @ v.matrix @ _T2
    sigma = sigma.real
    return 0.5 * (sigma + sigma.T)


def from_real_quadrature(sigma: np.ndarray, check_physical: bool = True) -> TwoModeCovariance:
    """Inverse of :func:`to_real_quadrature`."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (4, 4):
        raise InvalidCovariance(f"expected a 4x4 matrix, got shape {sigma.shape}")
    m = _T2 @ sigma @ _T2.conj().T
    m = 0.5 * (m + m.conj().T)
    return from_matrix(m, check_physical=check_physical)


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a real 4x4 covariance, ascending."""
    ev = np.abs(np.linalg.eigvals(1j * OMEGA @ sigma))
    return np.sort(ev)[::2]
