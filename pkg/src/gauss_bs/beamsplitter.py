"""Lossless beam splitter acting on two-mode covariances."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .covariance import (
    SingleModeCovariance,
    TwoModeCovariance,
    _freeze,
    tensor,
)
from .exceptions import InvalidCovariance


@dataclass(frozen=True)
class BeamSplitterParams:
    """Mixing angle ``theta`` (transmittance ``cos(theta)**2``) and phase ``phi``."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi / 2:
            raise InvalidCovariance(f"theta must lie in [0, pi/2], got {self.theta}")
        if not -math.pi < self.phi <= math.pi:
            raise InvalidCovariance(f"phi must lie in (-pi, pi], got {self.phi}")


def unitary(p: BeamSplitterParams) -> np.ndarray:
    """4x4 matrix ``U(theta, phi)`` acting on ``(alpha_1, alpha_1*, alpha_2, alpha_2*)``."""
    c, s = math.cos(p.theta), math.sin(p.theta)
    e = cmath.exp(1j * p.phi)
    ec = e.conjugate()
    return np.array([
        [c, 0, -s * e, 0],
        [0, c, 0, -s * ec],
        [s * ec, 0, c, 0],
        [0, s * e, 0, c],
    ], dtype=complex)


def apply(v_in: TwoModeCovariance, p: BeamSplitterParams) -> TwoModeCovariance:
    """Output covariance ``U^dagger V_in U``."""
    u = unitary(p)
    m = u.conj().T @ v_in.matrix @ u
    return TwoModeCovariance(_freeze(0.5 * (m + m.conj().T)))


def output_blocks(v1: SingleModeCovariance, v2: SingleModeCovariance,
                  p: BeamSplitterParams) -> tuple[SingleModeCovariance, SingleModeCovariance, np.ndarray]:
    """Closed-form ``(A, B, C)`` for product inputs, without matrix products.

    The sign of ``C`` follows ``U^dagger V U``; determinants are unaffected
    by the overall sign.
    """
    a, b = v1.a, v1.b
    c, d = v2.a, v2.b
    cos2 = math.cos(p.theta) ** 2
    sin2 = math.sin(p.theta) ** 2
    sc = math.sin(p.theta) * math.cos(p.theta)
    e = cmath.exp(1j * p.phi)
    e2 = e * e
    A = SingleModeCovariance(a * cos2 + c * sin2, b * cos2 + d * sin2 * e2)
    B = SingleModeCovariance(a * sin2 + c * cos2, b * sin2 / e2 + d * cos2)
    C = -sc * np.array([
        [(a - c) * e, b / e - d * e],
        [b.conjugate() * e - d.conjugate() / e, (a - c) / e],
    ], dtype=complex)
    return A, B, C


def apply_closed_form(v1: SingleModeCovariance, v2: SingleModeCovariance,
                      p: BeamSplitterParams) -> TwoModeCovariance:
    """Same as ``apply(tensor(v1, v2), p)`` assembled from :func:`output_blocks`."""
    A, B, C = output_blocks(v1, v2, p)
    m = np.zeros((4, 4), dtype=complex)
    m[:2, :2] = A.matrix
    m[2:, 2:] = B.matrix
    m[:2, 2:] = C
    m[2:, :2] = C.conj().T
    return TwoModeCovariance(_freeze(m))


def partial_trace_product(v: TwoModeCovariance) -> TwoModeCovariance:
    """Covariance of ``Tr_2(rho) (x) Tr_1(rho)``: keep A and B, drop C."""
    m = np.array(v.matrix)
    m[:2, 2:] = 0
    m[2:, :2] = 0
    return TwoModeCovariance(_freeze(m))


def phase_condition(b: complex, d: complex) -> float:
    """BS phase ``arg(b)/2 - arg(d)/2`` that makes minimum eigenvalues add up.

    ``arg(0)`` is taken as 0, so any vacuum or thermal input is accepted.
    """
    arg_b = cmath.phase(b) if b != 0 else 0.0
    arg_d = cmath.phase(d) if d != 0 else 0.0
    return 0.5 * arg_b - 0.5 * arg_d


def matched_params(v1: SingleModeCovariance, v2: SingleModeCovariance, theta: float) -> BeamSplitterParams:
    """Parameters at angle ``theta`` with the phase fixed by :func:`phase_condition`."""
    return BeamSplitterParams(theta, phase_condition(v1.b, v2.b))


def mix(v1: SingleModeCovariance, v2: SingleModeCovariance, p: BeamSplitterParams) -> TwoModeCovariance:
    return apply(tensor(v1, v2), p)
