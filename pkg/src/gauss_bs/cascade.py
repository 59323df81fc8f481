"""Multi-beam-splitter protocols.

Two protocols are provided:

* :func:`depletion_run` -- the two outputs of a BS are traced apart and mixed
  with each other at the next BS, stage after stage.
* :func:`split_tree` -- every output mode is mixed with a fresh vacuum at its
  own BS, so level ``k`` holds ``2**k`` single-mode states.

The tree is evaluated level by level on numpy arrays.  Large trees are
processed in independent subtree chunks so that only per-level sums are
held in memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import measures
from .beamsplitter import BeamSplitterParams, apply, partial_trace_product, phase_condition
from .covariance import SingleModeCovariance, tensor, vacuum

MAX_TREE_DEPTH = 24
CHUNK_NODES = 1 << 18
LOG2E = math.log2(math.e)

AngleSource = Union[float, Sequence[float], np.random.Generator, Callable[[int, int], np.ndarray]]


# ---------------------------------------------------------------- depletion

@dataclass(frozen=True)
class DepletionStage:
    index: int
    params: BeamSplitterParams
    mode1: SingleModeCovariance
    mode2: SingleModeCovariance
    e_n: float
    s_n: float
    tau_two_mode: float
    sum_tau: float
    sum_n: float


@dataclass(frozen=True)
class DepletionRun:
    """Per-stage record of the serial depletion protocol.

    ``tau_per_stage[i]`` is the two-mode depth of the traced product state
    after stage ``i + 1``; ``tau_initial`` is the depth before the first BS.
    """

    initial: SingleModeCovariance
    stages: tuple[DepletionStage, ...]
    tau_initial: float
    n_initial: float

    @property
    def thetas(self) -> list[float]:
        return [s.params.theta for s in self.stages]

    @property
    def e_n_per_stage(self) -> list[float]:
        return [s.e_n for s in self.stages]

    @property
    def tau_per_stage(self) -> list[float]:
        return [s.tau_two_mode for s in self.stages]

    @property
    def cumulative_s_n(self) -> list[float]:
        return list(np.cumsum([s.s_n for s in self.stages]))


def depletion_run(v_ncs: SingleModeCovariance, thetas: Sequence[float],
                  phis: Optional[Sequence[float]] = None) -> DepletionRun:
    """Mix ``v_ncs`` with vacuum, then repeatedly mix the two traced outputs.

    With ``phis=None`` each stage uses the phase condition for its inputs.
    """
    thetas = list(thetas)
    if not thetas:
        raise ValueError("at least one stage is required")
    if phis is not None and len(phis) != len(thetas):
        raise ValueError(f"{len(thetas)} angles but {len(phis)} phases")

    m1, m2 = v_ncs, vacuum()
    start = tensor(m1, m2)
    stages = []
    for i, theta in enumerate(thetas):
        phi = phase_condition(m1.b, m2.b) if phis is None else phis[i]
        p = BeamSplitterParams(theta, phi)
        v_in = tensor(m1, m2)
        v_out = apply(v_in, p)
        traced = partial_trace_product(v_out)
        m1, m2 = traced.A, traced.B
        stages.append(DepletionStage(
            index=i + 1,
            params=p,
            mode1=m1,
            mode2=m2,
            e_n=measures.log_negativity(v_out),
            s_n=measures.s_n(v_in, v_out),
            tau_two_mode=measures.two_mode_nonclassical_depth(traced),
            sum_tau=measures.nonclassical_depth(m1) + measures.nonclassical_depth(m2),
            sum_n=measures.nonclassicality(m1) + measures.nonclassicality(m2),
        ))
    return DepletionRun(
        initial=v_ncs,
        stages=tuple(stages),
        tau_initial=measures.two_mode_nonclassical_depth(start),
        n_initial=measures.nonclassicality(v_ncs),
    )


# ---------------------------------------------------------------- tree

@dataclass
class LevelSummary:
    """Sums over the ``2**level`` modes of one tree level.

    ``s_n`` and ``sum_e_n`` cover the BSs that produced this level;
    ``cum_s_n`` includes every level up to and including this one.
    """

    level: int
    n_nodes: int
    sum_tau: float = 0.0
    sum_lambda_min: float = 0.0
    sum_n: float = 0.0
    s_n: float = 0.0
    sum_e_n: float = 0.0
    max_local_tau_residual: float = 0.0
    cum_s_n: float = 0.0
    residual: float = 0.0


@dataclass
class NodeLevel:
    """Raw node data of one level, kept only for small trees."""

    excess: np.ndarray   # a - 1/2
    b: np.ndarray
    theta: Optional[np.ndarray] = None   # angles of the BSs fed by these nodes
    phi: Optional[np.ndarray] = None


@dataclass
class CascadeTree:
    initial: SingleModeCovariance
    depth: int
    levels: list[LevelSummary]
    nodes: Optional[list[NodeLevel]] = field(default=None, repr=False)

    @property
    def n_initial(self) -> float:
        return measures.nonclassicality(self.initial)

    @property
    def tau_initial(self) -> float:
        return measures.nonclassical_depth(self.initial)

    def totals(self) -> tuple[float, float]:
        """``(remaining nonclassicality, cumulative S_N)`` at the deepest level."""
        last = self.levels[-1]
        return last.sum_n, last.cum_s_n

    def leaves(self) -> list[SingleModeCovariance]:
        if self.nodes is None:
            raise ValueError("tree was built without keep_nodes=True")
        last = self.nodes[-1]
        return [SingleModeCovariance(0.5 + float(e), complex(b)) for e, b in zip(last.excess, last.b)]


def _angle_fn(angles: AngleSource) -> Callable[[int, int], np.ndarray]:
    if isinstance(angles, np.random.Generator):
        return lambda level, n: angles.uniform(0.0, math.pi / 2, n)
    if callable(angles):
        return angles
    if np.isscalar(angles):
        value = float(angles)
        return lambda level, n: np.full(n, value)
    per_level = [float(x) for x in angles]
    return lambda level, n: np.full(n, per_level[level])


def _depth_of(excess: np.ndarray, b_abs: np.ndarray) -> np.ndarray:
    return np.maximum(0.0, b_abs - excess)


def _log2_one_minus(x: np.ndarray) -> np.ndarray:
    return np.log1p(-x) / math.log(2.0)


def _split_level(excess, b, theta, phi):
    """Mix every node with vacuum; returns children and per-node diagnostics."""
    c2 = np.cos(theta) ** 2
    s2 = np.sin(theta) ** 2
    e2 = np.exp(-2j * phi)
    ex_l, b_l = excess * c2, b * c2
    ex_r, b_r = excess * s2, b * s2 * e2

    babs, babs_l, babs_r = np.abs(b), np.abs(b_l), np.abs(b_r)
    # x = 1 - 2 lambda_min, formed from the excess a - 1/2 to keep precision near vacuum.
    x_p = 2.0 * (babs - excess)
    x_l = 2.0 * (babs_l - ex_l)
    x_r = 2.0 * (babs_r - ex_r)
    s_n = _log2_one_minus(x_l) + _log2_one_minus(x_r) - _log2_one_minus(x_p)

    tau_p = _depth_of(excess, babs)
    tau_l = _depth_of(ex_l, babs_l)
    tau_r = _depth_of(ex_r, babs_r)
    local = np.abs(tau_p - tau_l - tau_r)

    # log negativity of each BS output, from block determinants
    a = 0.5 + excess
    det_in = (a * a - babs ** 2) * 0.25
    det_a = (0.5 + ex_l) ** 2 - babs_l ** 2
    det_b = (0.5 + ex_r) ** 2 - babs_r ** 2
    det_c = c2 * s2 * (excess ** 2 - babs ** 2)
    s_q = 2.0 * (det_a + det_b - 2.0 * det_c)
    rad = s_q * s_q - 16.0 * det_in
    rad = np.where(rad <= np.maximum(measures.RADICAND_CLAMP, measures.RADICAND_ROUNDING * s_q * s_q),
                   0.0, rad)
    root = np.sqrt(rad)
    e_n = -0.5 * np.log2(16.0 * det_in / (s_q + root))
    e_n = np.where(e_n > measures.E_N_FLOOR, e_n, 0.0)

    ex_c = np.stack([ex_l, ex_r], axis=1).ravel()
    b_c = np.stack([b_l, b_r], axis=1).ravel()
    return ex_c, b_c, s_n, local, e_n


def _accumulate(summary: LevelSummary, excess: np.ndarray, b: np.ndarray) -> None:
    babs = np.abs(b)
    x = 2.0 * (babs - excess)
    summary.sum_tau += float(np.sum(_depth_of(excess, babs)))
    summary.sum_lambda_min += float(np.sum(0.5 + excess - babs))
    summary.sum_n += float(np.sum(-_log2_one_minus(x)))


def split_tree(v_ncs: SingleModeCovariance, depth: int, angles: AngleSource = math.pi / 4,
               keep_nodes: bool = False) -> CascadeTree:
    """Binary vacuum-splitting tree of ``depth`` BS levels.

    ``angles`` is a constant, a per-level sequence, a numpy ``Generator``
    (uniform angles in ``[0, pi/2]`` per node) or a callable
    ``(level, n_nodes) -> array``.  Every BS phase follows the phase
    condition, which for a vacuum partner is ``arg(b) / 2``.
    """
    if depth < 1:
        raise ValueError(f"depth must be at least 1, got {depth}")
    if depth > MAX_TREE_DEPTH:
        raise ValueError(f"depth is capped at {MAX_TREE_DEPTH}, got {depth}")
    if keep_nodes and depth > 16:
        raise ValueError("keep_nodes is limited to depth <= 16")
    angle_fn = _angle_fn(angles)

    levels = [LevelSummary(level=k, n_nodes=1 << k) for k in range(depth + 1)]
    nodes: Optional[list[NodeLevel]] = [] if keep_nodes else None

    root_ex = np.array([v_ncs.a - 0.5])
    root_b = np.array([complex(v_ncs.b)])
    _accumulate(levels[0], root_ex, root_b)

    def descend(excess: np.ndarray, b: np.ndarray, level: int) -> None:
        if level == depth:
            if nodes is not None:
                nodes.append(NodeLevel(excess, b))
            return
        if excess.size > CHUNK_NODES:
            for lo in range(0, excess.size, CHUNK_NODES):
                descend(excess[lo:lo + CHUNK_NODES], b[lo:lo + CHUNK_NODES], level)
            return
        theta = np.asarray(angle_fn(level, excess.size), dtype=float)
        if theta.shape != excess.shape:
            raise ValueError(f"angle source returned shape {theta.shape} at level {level}")
        phi = np.where(b != 0, 0.5 * np.angle(b), 0.0)
        if nodes is not None:
            nodes.append(NodeLevel(excess, b, theta, phi))
        ex_c, b_c, s_n, local, e_n = _split_level(excess, b, theta, phi)
        child = levels[level + 1]
        child.s_n += float(np.sum(s_n))
        child.sum_e_n += float(np.sum(e_n))
        child.max_local_tau_residual = max(child.max_local_tau_residual, float(np.max(local)))
        _accumulate(child, ex_c, b_c)
        descend(ex_c, b_c, level + 1)

    descend(root_ex, root_b, 0)

    n0 = measures.nonclassicality(v_ncs)
    cum = 0.0
    for summary in levels:
        cum += summary.s_n
        summary.cum_s_n = cum
        summary.residual = abs(n0 - summary.sum_n - cum)
    return CascadeTree(initial=v_ncs, depth=depth, levels=levels, nodes=nodes)


def limit_totals(v_ncs: SingleModeCovariance) -> tuple[float, float]:
    """Infinite-tree totals ``(N_tot, S_N_tot)``.

    ``N_tot = (1 - 2 lambda_min) log2(e)`` and ``S_N_tot = N_in - N_tot``.
    """
    lam = v_ncs.lambda_min
    n_tot = (1.0 - 2.0 * lam) * LOG2E
    s_tot = -math.log2(2.0 * lam) - n_tot
    return n_tot, s_tot
