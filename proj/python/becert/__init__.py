"""Certification toolkit for a family of 4x4 bipartite quantum states.

Construct the states, evaluate the PPT and realignment criteria in closed
form and numerically, and run the range-criterion certification pipeline.
"""

from ._becert import (
    Error,
    __version__,
    certify,
    certify_symmetric,
    criterion_report,
    diag_separable,
    family_state,
    hermitian_eig,
    listed_pt_eigenvalues,
    partial_transpose,
    ppt_threshold,
    quartic_pt_roots,
    realignment,
    rho0,
    singular_values,
    spectrum_report,
    symmetric_state,
    trace_norm,
)

__all__ = [
    "Error",
    "__version__",
    "certify",
    "certify_symmetric",
    "criterion_report",
    "diag_separable",
    "family_state",
    "hermitian_eig",
    "listed_pt_eigenvalues",
    "partial_transpose",
    "ppt_threshold",
    "quartic_pt_roots",
    "realignment",
    "rho0",
    "singular_values",
    "spectrum_report",
    "symmetric_state",
    "trace_norm",
]
