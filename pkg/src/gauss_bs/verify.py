"""Randomised property suites behind ``gauss-bs verify``.

Each suite draws ``cases`` random instances from its own child of the seed
and returns the largest residual it saw.  Sign and equivalence checks report
the number of mismatches, so a correct implementation returns 0 for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import beamsplitter as bs
from . import measures as ms
from .cascade import split_tree
from .covariance import (
    new_single_mode,
    tensor,
    thermal_state,
    to_real_quadrature,
    vacuum,
)
from .sampling import (
    random_constrained_pair,
    random_matched_params,
    random_nonclassical,
    random_params,
    random_single_mode,
    random_theta,
    random_two_mode,
)

Suite = Callable[[np.random.Generator, int], float]


def physicality(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_single_mode(rng)
        v = new_single_mode(v.a, v.b)
        worst = max(worst, 0.25 - v.det - 1e-12)
    return max(worst, 0.0)


def eigenvalue_closed_form(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_single_mode(rng)
        lo, hi = v.lambda_min, v.lambda_max
        worst = max(worst, abs(lo + hi - 2 * v.a), abs(hi - lo - 2 * abs(v.b)),
                    abs(lo * hi - v.det))
    return worst


def real_quadrature_determinant(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_two_mode(rng) if rng.random() < 0.5 else tensor(random_single_mode(rng),
                                                                     random_single_mode(rng))
        worst = max(worst, abs(np.linalg.det(to_real_quadrature(v)) - v.det))
    return worst


def unitarity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        u = bs.unitary(random_params(rng))
        worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(4)))))
    return worst


def determinant_preserved(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_two_mode(rng)
        worst = max(worst, abs(bs.apply(v, random_params(rng)).det - v.det))
    return worst


def closed_form_blocks(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_single_mode(rng), random_single_mode(rng)
        p = random_params(rng)
        diff = bs.mix(v1, v2, p).matrix - bs.apply_closed_form(v1, v2, p).matrix
        worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def composition(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_two_mode(rng)
        p1, p2 = random_params(rng), random_params(rng)
        u = bs.unitary(p1) @ bs.unitary(p2)
        direct = u.conj().T @ v.matrix @ u
        worst = max(worst, float(np.max(np.abs(bs.apply(bs.apply(v, p1), p2).matrix - direct))))
    return worst


def eigenvalue_sum_conservation(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_single_mode(rng), random_single_mode(rng)
        p = random_matched_params(rng, v1, v2)
        out = bs.mix(v1, v2, p)
        t1, t2 = out.A.lambda_min, out.B.lambda_min
        c2, s2 = math.cos(p.theta) ** 2, math.sin(p.theta) ** 2
        worst = max(worst, abs(t1 + t2 - v1.lambda_min - v2.lambda_min),
                    abs(t1 - v1.lambda_min * c2 - v2.lambda_min * s2))
    return worst


def depth_conservation(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_nonclassical(rng, pure=rng.random() < 0.5)
        p = bs.BeamSplitterParams(random_theta(rng), bs.phase_condition(v.b, 0))
        out = bs.mix(v, vacuum(), p)
        tau = ms.nonclassical_depth(v)
        t1, t2 = ms.nonclassical_depth(out.A), ms.nonclassical_depth(out.B)
        worst = max(worst, abs(tau - t1 - t2), abs(t1 - tau * math.cos(p.theta) ** 2),
                    abs(t2 - tau * math.sin(p.theta) ** 2))
    return worst


def nonclassicality_conservation(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_constrained_pair(rng)
        worst = max(worst, ms.report(v1, v2, random_matched_params(rng, v1, v2)).residual_conservation)
    return worst


def determinant_identity(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_constrained_pair(rng)
        worst = max(worst, ms.identity_residual(v1, v2, random_matched_params(rng, v1, v2)))
    return worst


def s_closed_form(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_single_mode(rng), random_single_mode(rng)
        p = random_matched_params(rng, v1, v2)
        s = ms.s_quantity(bs.mix(v1, v2, p))
        ref = ms.s_closed_form(v1.lambda_min, v1.lambda_max, v2.lambda_min, v2.lambda_max, p.theta)
        worst = max(worst, abs(s - ref))
    return worst


def s_n_closed_form(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1, v2 = random_single_mode(rng), random_single_mode(rng)
        p = random_matched_params(rng, v1, v2)
        block = ms.s_n(tensor(v1, v2), bs.mix(v1, v2, p))
        worst = max(worst, abs(block - ms.s_n_closed_form(v1.lambda_min, v2.lambda_min, p.theta)))
    return worst


def oracle_equivalence(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v = random_two_mode(rng)
        worst = max(worst, abs(ms.log_negativity(v) - ms.oracle_log_negativity(v)))
    return worst


def separable_after_trace(rng, cases):
    worst = 0.0
    for _ in range(cases):
        traced = bs.partial_trace_product(random_two_mode(rng))
        worst = max(worst, ms.log_negativity(traced), ms.oracle_log_negativity(traced))
    return worst


def sign_equivalence(rng, cases):
    mismatches = 0
    for _ in range(cases):
        v1, v2 = random_constrained_pair(rng)
        r = ms.report(v1, v2, random_matched_params(rng, v1, v2))
        mismatches += (r.s_n > 1e-12) != (r.e_n > 1e-12)
    return float(mismatches)


def entanglement_condition(rng, cases):
    mismatches = 0
    for _ in range(cases):
        v = random_two_mode(rng)
        en = ms.log_negativity(v)
        # skip points within rounding of the separability boundary
        if 1e-9 < en or en == 0.0:
            mismatches += ms.entanglement_condition(v) != (en > 0.0)
    return float(mismatches)


def c_constant_specialisations(rng, cases):
    worst = 0.0
    for _ in range(cases):
        v1 = random_nonclassical(rng, pure=True)
        n = float(rng.uniform(0.0, 3.0))
        if abs(2 * n + 1 - 2 * v1.lambda_min) > 1e-6:
            worst = max(worst, abs(ms.c_constant(v1, thermal_state(n))
                                   - ms.c_constant_thermal(v1.lambda_min, n)))
        w = random_nonclassical(rng)
        u = 1.0 / (2.0 * math.sqrt(w.det))
        worst = max(worst, abs(ms.c_constant(w, vacuum())
                               - ms.c_constant_vacuum(u, ms.nonclassical_depth(w))))
    return worst


def tree_conservation(rng, cases):
    worst = 0.0
    for _ in range(max(1, cases // 50)):
        v = random_nonclassical(rng, pure=rng.random() < 0.5)
        tree = split_tree(v, depth=8, angles=rng)
        tau0 = ms.nonclassical_depth(v)
        for level in tree.levels:
            worst = max(worst, level.residual, level.max_local_tau_residual, abs(level.sum_tau - tau0))
    return worst


SUITES: dict[str, Suite] = {
    "physicality": physicality,
    "eigenvalue_closed_form": eigenvalue_closed_form,
    "real_quadrature_determinant": real_quadrature_determinant,
    "unitarity": unitarity,
    "determinant_preserved": determinant_preserved,
    "closed_form_blocks": closed_form_blocks,
    "composition": composition,
    "eigenvalue_sum_conservation": eigenvalue_sum_conservation,
    "depth_conservation": depth_conservation,
    "nonclassicality_conservation": nonclassicality_conservation,
    "determinant_identity": determinant_identity,
    "s_closed_form": s_closed_form,
    "s_n_closed_form": s_n_closed_form,
    "oracle_equivalence": oracle_equivalence,
    "separable_after_trace": separable_after_trace,
    "sign_equivalence": sign_equivalence,
    "entanglement_condition": entanglement_condition,
    "c_constant_specialisations": c_constant_specialisations,
    "tree_conservation": tree_conservation,
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_residual: float
    passed: bool


def run_all(seed: int, cases: int, tol: float) -> list[SuiteResult]:
    if cases < 1:
        raise ValueError(f"cases must be at least 1, got {cases}")
    children = np.random.SeedSequence(seed).spawn(len(SUITES))
    results = []
    for (name, suite), child in zip(SUITES.items(), children):
        worst = suite(np.random.default_rng(child), cases)
        results.append(SuiteResult(name, worst, worst < tol))
    return results


def format_results(results: list[SuiteResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{r.name:<{width}}  {r.max_residual:.3e}  {'ok' if r.passed else 'FAIL'}" for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} suites passed")
    return "\n".join(lines)
