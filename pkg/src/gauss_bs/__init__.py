"""Gaussian-state beam-splitter toolkit: covariance transforms, nonclassicality
and entanglement measures, and cascaded beam-splitter networks."""

from .beamsplitter import (
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
from .cascade import CascadeTree, DepletionRun, depletion_run, limit_totals, split_tree
from .covariance import (
    SingleModeCovariance,
    TwoModeCovariance,
    eigenvalues,
    from_eigenvalues,
    from_matrix,
    from_real_quadrature,
    new_single_mode,
    pure_state,
    purity,
    squeezed_state,
    state_with_purity,
    tensor,
    thermal_state,
    to_real_quadrature,
    vacuum,
)
from .exceptions import (
    DegenerateCase,
    DegenerateEigenvalue,
    GaussBSError,
    InvalidCovariance,
    UnphysicalState,
)
from .measures import (
    MeasureReport,
    c_constant,
    entanglement_condition,
    identity_residual,
    log_negativity,
    nonclassical_depth,
    nonclassicality,
    oracle_log_negativity,
    report,
    s_n,
    s_quantity,
    two_mode_nonclassical_depth,
)

__version__ = "0.1.0"

__all__ = [
    "apply",
    "apply_closed_form",
    "BeamSplitterParams",
    "c_constant",
    "CascadeTree",
    "DegenerateCase",
    "DegenerateEigenvalue",
    "depletion_run",
    "DepletionRun",
    "eigenvalues",
    "entanglement_condition",
    "from_eigenvalues",
    "from_matrix",
    "from_real_quadrature",
    "GaussBSError",
    "identity_residual",
    "InvalidCovariance",
    "limit_totals",
    "log_negativity",
    "matched_params",
    "MeasureReport",
    "mix",
    "new_single_mode",
    "nonclassical_depth",
    "nonclassicality",
    "oracle_log_negativity",
    "output_blocks",
    "partial_trace_product",
    "phase_condition",
    "pure_state",
    "purity",
    "report",
    "s_n",
    "s_quantity",
    "SingleModeCovariance",
    "split_tree",
    "squeezed_state",
    "state_with_purity",
    "tensor",
    "thermal_state",
    "to_real_quadrature",
    "two_mode_nonclassical_depth",
    "TwoModeCovariance",
    "unitary",
    "UnphysicalState",
    "vacuum",
]
