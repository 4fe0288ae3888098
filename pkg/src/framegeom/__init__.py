"""Exact frame-based Riemannian geometry for almost Kenmotsu manifolds."""

from .almost_contact import (
    AlmostContactStructure,
    ContactTensors,
    Grade,
    NullityFit,
    NullityKind,
    check_kmu_identities,
    compute_h_tensors,
    fit_nullity,
    validate_structure,
)
from .catalog import emit_builtin_example, load_builtin
from .exact_algebra import LinearSolution, Rational, SolutionKind, Tensor, is_positive_definite, solve_linear
from .fields import (
    FieldClassification,
    TheoremAudit,
    classify_field,
    solve_conformal,
    solve_killing,
    theorem_audit,
    verify_conformal_consequences,
)
from .frame import FrameManifold, bracket, validate_frame
from .levi_civita import (
    ConnectionData,
    CurvatureData,
    connection,
    curvature,
    exterior_derivative,
    lie_derivative,
    wedge,
)
from .solitons import (
    EtaEinsteinFit,
    SolitonParams,
    SolitonSolution,
    eta_einstein_classify,
    predict_constants,
    solve_soliton,
)
from .spec_io import parse_manifold_spec

__all__ = [
    "AlmostContactStructure",
    "bracket",
    "check_kmu_identities",
    "classify_field",
    "compute_h_tensors",
    "connection",
    "ConnectionData",
    "ContactTensors",
    "curvature",
    "CurvatureData",
    "emit_builtin_example",
    "eta_einstein_classify",
    "EtaEinsteinFit",
    "exterior_derivative",
    "FieldClassification",
    "fit_nullity",
    "FrameManifold",
    "Grade",
    "is_positive_definite",
    "lie_derivative",
    "LinearSolution",
    "load_builtin",
    "NullityFit",
    "NullityKind",
    "parse_manifold_spec",
    "predict_constants",
    "Rational",
    "SolitonParams",
    "SolitonSolution",
    "SolutionKind",
    "solve_conformal",
    "solve_killing",
    "solve_linear",
    "solve_soliton",
    "Tensor",
    "theorem_audit",
    "TheoremAudit",
    "validate_frame",
    "validate_structure",
    "verify_conformal_consequences",
    "wedge",
]

__version__ = "0.1.0"
