"""Nonclassicality and entanglement quantifiers for beam-splitter events.

All logarithms are base 2, so nonclassicality ``N`` and the entanglement
quantities ``S_N`` and ``E_N`` are in bits.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .beamsplitter import BeamSplitterParams, mix
from .covariance import (
    SingleModeCovariance,
    TwoModeCovariance,
    symplectic_eigenvalues,
    tensor,
    to_real_quadrature,
)
from .exceptions import DegenerateCase, DegenerateEigenvalue, InvalidCovariance

RADICAND_CLAMP = 1e-12
RADICAND_FAIL = 1e-9
RADICAND_ROUNDING = 16 * np.finfo(float).eps
BOUNDARY_TOL = 1e-12
# E_N values this small are rounding in q = 1, e.g. on product states
E_N_FLOOR = 16 * np.finfo(float).eps
DEGENERATE_TOL = 1e-14

_PARTIAL_TRANSPOSE = np.diag([1.0, 1.0, 1.0, -1.0])


# ---------------------------------------------------------------- single mode

def nonclassical_depth(v: SingleModeCovariance) -> float:
    """``max(0, 1/2 - lambda_min)``; positive exactly for squeezed states."""
    return max(0.0, 0.5 - v.lambda_min)


def nonclassicality(v: SingleModeCovariance) -> float:
    """``-log2(2 lambda_min)``.  Zero for coherent states, negative for thermal ones."""
    lam = v.lambda_min
    if lam <= 0.0:
        raise DegenerateEigenvalue(f"lambda_min = {lam} is not positive")
    return -math.log2(2.0 * lam)


# ---------------------------------------------------------------- two modes

def two_mode_nonclassical_depth(v: TwoModeCovariance) -> float:
    """``max(0, 1/2 - lambda_min)`` over the full 4x4 spectrum.

    On product states this is the larger of the two single-mode depths.
    """
    lam = float(np.linalg.eigvalsh(v.matrix)[0])
    return max(0.0, 0.5 - lam)


def _det2(m: np.ndarray) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def s_quantity(v: TwoModeCovariance) -> float:
    """``S = 2 (Det A + Det B - 2 Det C)``."""
    m = v.matrix
    det_a = _det2(m[:2, :2]).real
    det_b = _det2(m[2:, 2:]).real
    det_c = _det2(m[:2, 2:]).real
    return float(2.0 * (det_a + det_b - 2.0 * det_c))


def s_closed_form(lam1_min: float, lam1_max: float, lam2_min: float, lam2_max: float,
                  theta: float) -> float:
    """S for a product input mixed at angle ``theta`` under the phase condition."""
    return ((lam1_min + lam2_min) * (lam1_max + lam2_max)
            + (lam1_min - lam2_min) * (lam1_max - lam2_max) * math.cos(4.0 * theta))


def log_negativity(v: TwoModeCovariance) -> float:
    """Logarithmic negativity from S and ``Det V``.

    ``S - sqrt(S**2 - 16 Det V)`` is evaluated in the rationalised form
    ``16 Det V / (S + sqrt(S**2 - 16 Det V))`` to avoid cancellation.

    Raises:
        InvalidCovariance: if the radicand is below ``-1e-9``.
    """
    s = s_quantity(v)
    det = v.det
    rad = s * s - 16.0 * det
    if rad < -RADICAND_FAIL:
        raise InvalidCovariance(f"S^2 - 16 Det V = {rad:.3g} < 0")
    root = math.sqrt(_clamp_radicand(rad, s))
    q = 16.0 * det / (s + root)
    e = -0.5 * math.log2(q)
    return e if e > E_N_FLOOR else 0.0


def _clamp_radicand(rad: float, s: float) -> float:
    # The square root magnifies rounding in S^2 - 16 Det V to ~1e-8 on pure
    # product states, where the radicand is exactly 0.
    if rad <= max(RADICAND_CLAMP, RADICAND_ROUNDING * s * s):
        return 0.0
    return rad


def oracle_log_negativity(v: TwoModeCovariance) -> float:
    """Logarithmic negativity from the symplectic spectrum of the partial transpose.

    Works in real quadratures and flips the sign of ``p_2``; independent of
    :func:`s_quantity`.
    """
    sigma = to_real_quadrature(v)
    sigma_pt = _PARTIAL_TRANSPOSE @ sigma @ _PARTIAL_TRANSPOSE
    nu = symplectic_eigenvalues(sigma_pt)[0]
    return max(0.0, -math.log2(2.0 * nu))


def entanglement_condition(v: TwoModeCovariance) -> bool:
    """``S > 1/2 + 8 Det V`` with a ``1e-12`` margin at the boundary."""
    return s_quantity(v) - (0.5 + 8.0 * v.det) > BOUNDARY_TOL


def s_n(v_in: TwoModeCovariance, v_out: TwoModeCovariance) -> float:
    """Input minus output single-mode nonclassicality, in bits.

    Only the diagonal blocks of each covariance are read.

    Raises:
        DegenerateEigenvalue: if a minimum eigenvalue is not positive.
    """
    lams = (v_in.A.lambda_min, v_in.B.lambda_min, v_out.A.lambda_min, v_out.B.lambda_min)
    if min(lams) <= 0.0:
        raise DegenerateEigenvalue(f"non-positive minimum eigenvalue in {lams}")
    l1, l2, t1, t2 = lams
    return math.log2((t1 * t2) / (l1 * l2))


def s_n_closed_form(lam1_min: float, lam2_min: float, theta: float) -> float:
    """S_N under the phase condition; depends only on the two minimum eigenvalues."""
    c2 = math.cos(theta) ** 2
    s2 = math.sin(theta) ** 2
    t1 = lam1_min * c2 + lam2_min * s2
    t2 = lam1_min * s2 + lam2_min * c2
    return math.log2((t1 * t2) / (lam1_min * lam2_min))


def c_constant(v1: SingleModeCovariance, v2: SingleModeCovariance) -> float:
    """``8 l1 l2 (L1 - L2) / (l2 - l1)`` with l the minimum, L the maximum eigenvalues.

    Raises:
        DegenerateCase: when the minimum eigenvalues coincide.
    """
    l1, m1 = v1.lambda_min, v1.lambda_max
    l2, m2 = v2.lambda_min, v2.lambda_max
    if abs(l2 - l1) <= DEGENERATE_TOL:
        raise DegenerateCase(f"lambda_min values coincide ({l1:.17g})")
    return 8.0 * l1 * l2 * (m1 - m2) / (l2 - l1)


def c_constant_vacuum(purity: float, depth: float) -> float:
    """C for a state of purity ``u`` and depth ``tau`` mixed with vacuum: ``1/(u^2 tau) - (1 - 2 tau)/tau``."""
    if depth <= 0.0:
        raise DegenerateCase("depth must be positive")
    return 1.0 / (purity * purity * depth) - (1.0 - 2.0 * depth) / depth


def c_constant_thermal(lam1_min: float, n: float) -> float:
    """C for a pure state mixed with a thermal state of ``n`` photons."""
    g = 2.0 * n + 1.0
    den = g - 2.0 * lam1_min
    if abs(den) <= DEGENERATE_TOL:
        raise DegenerateCase("2 n + 1 equals 2 lambda_min")
    return 2.0 * g * (1.0 - 2.0 * lam1_min * g) / den


def identity_residual(v1: SingleModeCovariance, v2: SingleModeCovariance,
                      p: BeamSplitterParams) -> float:
    """``|S - (1/2 + 8 Det V_out) - C (t1 t2 / (l1 l2) - 1)|`` for one BS event.

    The identity holds when at least one input is pure and ``p.phi`` satisfies
    the phase condition.
    """
    c = c_constant(v1, v2)
    v_out = mix(v1, v2, p)
    lhs = s_quantity(v_out) - (0.5 + 8.0 * v_out.det)
    ratio = (v_out.A.lambda_min * v_out.B.lambda_min) / (v1.lambda_min * v2.lambda_min)
    return abs(lhs - c * (ratio - 1.0))


# ---------------------------------------------------------------- constraints

def is_phase_matched(v1: SingleModeCovariance, v2: SingleModeCovariance, phi: float,
                     tol: float = 1e-9) -> bool:
    """True if ``phi`` aligns the squeezing phases (any phi works if b or d is 0)."""
    if v1.b == 0 or v2.b == 0:
        return True
    target = cmath.phase(v1.b) - cmath.phase(v2.b)
    return abs(cmath.exp(1j * (2.0 * phi - target)) - 1.0) <= tol


def satisfies_constraints(v1: SingleModeCovariance, v2: SingleModeCovariance,
                          tol: float = 1e-10) -> bool:
    """At least one pure input, and interlaced eigenvalues giving ``C > 0``."""
    if not (v1.is_pure(tol) or v2.is_pure(tol)):
        return False
    l1, m1 = v1.lambda_min, v1.lambda_max
    l2, m2 = v2.lambda_min, v2.lambda_max
    if abs(l1 - l2) <= tol and abs(m1 - m2) <= tol:
        return True
    return (l1 < l2 <= m2 < m1) or (l2 < l1 <= m1 < m2)


# ---------------------------------------------------------------- report

@dataclass(frozen=True)
class MeasureReport:
    """Every quantifier for one beam-splitter event.

    ``c_constant`` and ``residual_identity`` are ``None`` when the identity
    does not apply: degenerate minimum eigenvalues, no pure input, or a phase
    that violates the phase condition.
    """

    theta: float
    phi: float
    tau1: float
    tau2: float
    tau1_out: float
    tau2_out: float
    n_in: float
    n_out: float
    s_n: float
    e_n: float
    s_quantity: float
    c_constant: Optional[float]
    residual_conservation: float
    residual_identity: Optional[float]

    @property
    def c_defined(self) -> bool:
        return self.c_constant is not None


def report(v1: SingleModeCovariance, v2: SingleModeCovariance, p: BeamSplitterParams) -> MeasureReport:
    v_in = tensor(v1, v2)
    v_out = mix(v1, v2, p)
    a_out, b_out = v_out.A, v_out.B
    n_in = nonclassicality(v1) + nonclassicality(v2)
    n_out = nonclassicality(a_out) + nonclassicality(b_out)
    sn = s_n(v_in, v_out)
    try:
        c = c_constant(v1, v2)
    except DegenerateCase:
        c = None
    residual_identity = None
    if c is not None and (v1.is_pure() or v2.is_pure()) and is_phase_matched(v1, v2, p.phi):
        residual_identity = identity_residual(v1, v2, p)
    return MeasureReport(
        theta=p.theta,
        phi=p.phi,
        tau1=nonclassical_depth(v1),
        tau2=nonclassical_depth(v2),
        tau1_out=nonclassical_depth(a_out),
        tau2_out=nonclassical_depth(b_out),
        n_in=n_in,
        n_out=n_out,
        s_n=sn,
        e_n=log_negativity(v_out),
        s_quantity=s_quantity(v_out),
        c_constant=c,
        residual_conservation=abs(n_in - n_out - sn),
        residual_identity=residual_identity,
    )
