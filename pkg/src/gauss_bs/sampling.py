"""Seeded random Gaussian states for property checks."""

from __future__ import annotations

import math

import numpy as np

from .beamsplitter import BeamSplitterParams, phase_condition
from .covariance import (
    SingleModeCovariance,
    TwoModeCovariance,
    from_eigenvalues,
    from_real_quadrature,
    pure_state,
)

# ordering (x1, x2, p1, p2) -> (x1, p1, x2, p2)
_XXPP_TO_XPXP = np.eye(4)[[0, 2, 1, 3]]


def random_phase(rng: np.random.Generator) -> float:
    return float(rng.uniform(-math.pi, math.pi))


def random_theta(rng: np.random.Generator) -> float:
    return float(rng.uniform(0.0, math.pi / 2))


def random_params(rng: np.random.Generator) -> BeamSplitterParams:
    return BeamSplitterParams(random_theta(rng), math.pi - float(rng.uniform(0.0, 2 * math.pi)))


def random_single_mode(rng: np.random.Generator) -> SingleModeCovariance:
    """Any physical single mode: squeezed, thermal, or squeezed thermal."""
    lam_min = float(rng.uniform(0.05, 1.5))
    floor = max(lam_min, 0.25 / lam_min)
    lam_max = floor + float(rng.exponential(0.5))
    return from_eigenvalues(lam_min, lam_max, random_phase(rng))


def random_nonclassical(rng: np.random.Generator, pure: bool = False) -> SingleModeCovariance:
    """Squeezed state with ``lambda_min < 1/2``, optionally pure."""
    lam_min = float(rng.uniform(0.05, 0.49))
    phase = random_phase(rng)
    if pure:
        return pure_state(lam_min, phase)
    u = float(rng.uniform(0.3, 1.0))
    return from_eigenvalues(lam_min, 0.25 / (u * u * lam_min), phase)


def random_constrained_pair(rng: np.random.Generator) -> tuple[SingleModeCovariance, SingleModeCovariance]:
    """Inputs with one pure mode and interlaced eigenvalues.

    The pure mode has the smaller minimum eigenvalue; the pair order is
    shuffled so either slot may hold it.
    """
    l1 = float(rng.uniform(0.05, 0.49))
    m1 = 0.25 / l1
    l2 = float(rng.uniform(l1, min(m1, 3.0)))
    lo = max(l2, 0.25 / l2)
    m2 = float(rng.uniform(lo, m1))
    v1 = pure_state(l1, random_phase(rng))
    v2 = from_eigenvalues(l2, m2, random_phase(rng))
    if rng.random() < 0.5:
        return v2, v1
    return v1, v2


def random_matched_params(rng: np.random.Generator, v1: SingleModeCovariance,
                          v2: SingleModeCovariance) -> BeamSplitterParams:
    """Random angle with the phase fixed by the phase condition."""
    return BeamSplitterParams(random_theta(rng), phase_condition(v1.b, v2.b))


def random_symplectic(rng: np.random.Generator, max_squeeze: float = 1.0) -> np.ndarray:
    """Two-mode symplectic matrix: passive, single-mode squeezing, passive."""

    def passive() -> np.ndarray:
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        q, r = np.linalg.qr(z)
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        o = np.block([[q.real, -q.imag], [q.imag, q.real]])
        return _XXPP_TO_XPXP @ o @ _XXPP_TO_XPXP.T

    r = rng.uniform(-max_squeeze, max_squeeze, 2)
    sq = _XXPP_TO_XPXP @ np.diag(np.exp(np.concatenate([-r, r]))) @ _XXPP_TO_XPXP.T
    return passive() @ sq @ passive()


def random_two_mode(rng: np.random.Generator) -> TwoModeCovariance:
    """Physical two-mode covariance, generally with correlated modes."""
    nu = 0.5 + rng.exponential(0.6, 2)
    d = np.diag([nu[0], nu[0], nu[1], nu[1]])
    s = random_symplectic(rng)
    return from_real_quadrature(s @ d @ s.T)
