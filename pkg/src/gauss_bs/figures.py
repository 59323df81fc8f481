"""Sweep data behind the beam-splitter figures.

Every builder returns ``(header, rows)``; rows depend only on the sweep
coordinate and the keyword parameters, so regenerating a row from a parsed
coordinate reproduces it exactly.
"""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence

import numpy as np

from . import measures as ms
from .beamsplitter import matched_params, mix, partial_trace_product
from .cascade import depletion_run
from .covariance import (
    SingleModeCovariance,
    pure_state,
    state_with_purity,
    tensor,
    thermal_state,
    vacuum,
)

DEFAULT_POINTS = 201

Table = tuple[list[str], list[list[float]]]


def theta_grid(points: int = DEFAULT_POINTS) -> np.ndarray:
    if points < 2:
        raise ValueError(f"need at least 2 sweep points, got {points}")
    return np.linspace(0.0, math.pi / 2, points)


def _ncs(lambda1_min: float, purity: float) -> SingleModeCovariance:
    if purity == 1.0:
        return pure_state(lambda1_min)
    return state_with_purity(lambda1_min, purity)


def conservation_row(v1: SingleModeCovariance, v2: SingleModeCovariance, theta: float) -> list[float]:
    """``[theta, n_in, n_out, s_n, e_n]`` for one BS angle under the phase condition."""
    v_out = mix(v1, v2, matched_params(v1, v2, theta))
    n_in = ms.nonclassicality(v1) + ms.nonclassicality(v2)
    n_out = ms.nonclassicality(v_out.A) + ms.nonclassicality(v_out.B)
    return [theta, n_in, n_out, ms.s_n(tensor(v1, v2), v_out), ms.log_negativity(v_out)]


def fig2(lambda1_min: float = 0.335, purity: float = 1.0, points: int = DEFAULT_POINTS) -> Table:
    """Entanglement and remaining two-mode depth versus angle, input mixed with vacuum."""
    v1, v2 = _ncs(lambda1_min, purity), vacuum()
    header = ["theta", "e_n", "tau_two_mode", "tau1_out", "tau2_out"]
    rows = []
    for theta in theta_grid(points):
        theta = float(theta)
        v_out = mix(v1, v2, matched_params(v1, v2, theta))
        traced = partial_trace_product(v_out)
        rows.append([theta, ms.log_negativity(v_out), ms.two_mode_nonclassical_depth(traced),
                     ms.nonclassical_depth(v_out.A), ms.nonclassical_depth(v_out.B)])
    return header, rows


def fig3(lambda1_min: float = 0.335, purity: float = 1.0, points: int = DEFAULT_POINTS,
         stages: int = 4) -> Table:
    """Depletion protocol with the same angle at every stage, swept over that angle."""
    v1 = _ncs(lambda1_min, purity)
    header = ["theta", "tau_0"]
    for i in range(1, stages + 1):
        header += [f"e_n_bs{i}", f"tau_{i}"]
    rows = []
    for theta in theta_grid(points):
        theta = float(theta)
        run = depletion_run(v1, [theta] * stages)
        row = [theta, run.tau_initial]
        for stage in run.stages:
            row += [stage.e_n, stage.tau_two_mode]
        rows.append(row)
    return header, rows


def fig4a(lambda1_min: float = 0.335, purities: Sequence[float] = (1.0, 0.8, 0.5),
          points: int = DEFAULT_POINTS) -> Table:
    """S_N and E_N versus angle for several purities at fixed minimum eigenvalue.

    S_N is written from its closed form in the two minimum eigenvalues, which
    is the exact statement of its purity independence; E_N is computed from
    the output covariance.
    """
    states = [_ncs(lambda1_min, u) for u in purities]
    header = ["theta"] + [f"s_n_u{u:g}" for u in purities] + [f"e_n_u{u:g}" for u in purities]
    rows = []
    for theta in theta_grid(points):
        theta = float(theta)
        s_cols = [ms.s_n_closed_form(lambda1_min, 0.5, theta) for _ in states]
        e_cols = [ms.log_negativity(mix(v, vacuum(), matched_params(v, vacuum(), theta)))
                  for v in states]
        rows.append([theta] + s_cols + e_cols)
    return header, rows


def fig4b(purity: float = 1.0, points: int = DEFAULT_POINTS, x_max: float = 10.0) -> Table:
    """E_N and S_N at ``theta = pi/4`` versus ``1 / (2 lambda_min)``."""
    header = ["inv_two_lambda_min", "lambda1_min", "s_n", "e_n"]
    rows = []
    theta = math.pi / 4
    for x in np.linspace(1.0, x_max, points):
        x = float(x)
        lam = 1.0 / (2.0 * x)
        v1 = _ncs(lam, purity)
        v_out = mix(v1, vacuum(), matched_params(v1, vacuum(), theta))
        rows.append([x, lam, ms.s_n(tensor(v1, vacuum()), v_out), ms.log_negativity(v_out)])
    return header, rows


def fig5(lambda1_min: float = 0.335, purity: float = 1.0, n_thermal: Optional[float] = None,
         points: int = DEFAULT_POINTS) -> Table:
    """Conservation curves for a squeezed input mixed with vacuum, or with a thermal state."""
    v1 = _ncs(lambda1_min, purity)
    v2 = vacuum() if n_thermal is None else thermal_state(n_thermal)
    header = ["theta", "n_in", "n_out", "s_n", "e_n"]
    return header, [conservation_row(v1, v2, float(t)) for t in theta_grid(points)]


def fig6(lambda1_min: float = 0.1, lambda2_min: float = 0.335, purity: float = 1.0,
         points: int = DEFAULT_POINTS) -> Table:
    """Conservation curves for two squeezed inputs; the second is pure."""
    v1 = _ncs(lambda1_min, purity)
    v2 = pure_state(lambda2_min)
    header = ["theta", "n_in", "n_out", "s_n", "e_n"]
    return header, [conservation_row(v1, v2, float(t)) for t in theta_grid(points)]


FIGURES: dict[str, Callable[..., Table]] = {
    "fig2": fig2,
    "fig3": fig3,
    "fig4a": fig4a,
    "fig4b": fig4b,
    "fig5": fig5,
    "fig6": fig6,
}
