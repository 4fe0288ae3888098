"""Killing, conformal and contact-transformation analysis of constant fields.

Only vector fields with constant coefficients in the frame are considered,
and conformal factors, contact factors and collinearity functions are
constants.  Solution spaces are therefore complete only within that class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .almost_contact import (
    AlmostContactStructure,
    ContactTensors,
    Grade,
    NullityFit,
    NullityKind,
    validate_structure,
)
from .checks import Check, CheckList
from .errors import ContractError
from .exact_algebra import (
    Tensor,
    basis_vector,
    canonical,
    first_nonzero,
    format_rational,
    null_space,
    rational_array,
    rref,
    solve_linear,
)
from .frame import FrameManifold, _vector
from .levi_civita import (
    ConnectionData,
    CurvatureData,
    connection,
    curvature,
    lie_derivative,
    lie_derivative_connection,
    metric_lie_derivative,
)

KENMOTSU = "Kenmotsu"
WARPED_PRODUCT = "warped product N′ ×_f M"
HYPERBOLIC_PRODUCT = "locally isometric to H^{m+1}(−4) × R^m"
STRICT_CONTACT = "strict infinitesimal contact transformation"


@dataclass(frozen=True)
class FieldClassification:
    field: tuple
    conformal: Fraction | None
    contact_sigma: Fraction | None
    lie_metric: np.ndarray = field(repr=False)
    lie_eta: np.ndarray = field(repr=False)

    @property
    def killing(self) -> bool:
        return self.conformal == 0

    @property
    def homothetic(self) -> bool:
        # constant factors are the only ones representable
        return self.conformal is not None

    @property
    def strict_contact(self) -> bool:
        return self.contact_sigma == 0

    def as_dict(self) -> dict:
        out = {
            "field": canonical(rational_array(self.field)),
            "conformal": self.conformal is not None,
            "killing": self.killing,
            "homothetic": self.homothetic,
            "contact_transformation": self.contact_sigma is not None,
            "strict_contact": self.strict_contact,
            "lie_metric": canonical(self.lie_metric),
            "lie_eta": canonical(self.lie_eta),
        }
        if self.conformal is not None:
            out["rho"] = format_rational(self.conformal)
        else:
            out["verdict"] = "not a conformal vector field"
        if self.contact_sigma is not None:
            out["sigma"] = format_rational(self.contact_sigma)
        return out


def _proportionality(target: np.ndarray, base: np.ndarray) -> Fraction | None:
    """The constant ``s`` with ``target = s * base`` entrywise, if any."""
    t = list(target.flat)
    b = list(base.flat)
    sol = solve_linear([[x] for x in b], t)
    return sol.particular[0] if sol.solvable else None


def classify_field(
    man: FrameManifold, acs: AlmostContactStructure, X, conn: ConnectionData | None = None
) -> FieldClassification:
    X = _vector(X, man.dim)
    conn = conn or connection(man)
    lie_g = metric_lie_derivative(man, X, conn)
    rho = _proportionality(lie_g, 2 * man.metric)
    lie_eta = lie_derivative(man, X, acs.eta).entries
    sigma = _proportionality(lie_eta, acs.eta.entries)
    return FieldClassification(tuple(X), rho, sigma, lie_g, lie_eta)


def _metric_lie_columns(man: FrameManifold, conn: ConnectionData) -> list[np.ndarray]:
    return [metric_lie_derivative(man, basis_vector(man.dim, a), conn) for a in range(man.dim)]


def _upper_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i, n)]


def _canonical_basis(vectors) -> list[tuple]:
    """Reduced row echelon basis of the span, so equal spans give equal output."""
    if not vectors:
        return []
    reduced, pivots = rref(vectors)
    return [tuple(reduced[r]) for r in range(len(pivots))]


def solve_killing(man: FrameManifold, conn: ConnectionData | None = None) -> list[tuple]:
    """Basis of constant-coefficient Killing fields."""
    conn = conn or connection(man)
    cols = _metric_lie_columns(man, conn)
    rows = [[col[i, j] for col in cols] for i, j in _upper_pairs(man.dim)]
    return _canonical_basis(null_space(rows))


@dataclass(frozen=True)
class ConformalSpace:
    """Solutions ``(X, rho)`` of ``L_X g = 2 rho g`` with constant ``X`` and ``rho``."""

    basis: list[tuple[tuple, Fraction]]
    killing_basis: list[tuple]

    @property
    def has_nontrivial(self) -> bool:
        return any(rho != 0 for _, rho in self.basis)

    @property
    def equals_killing(self) -> bool:
        return not self.has_nontrivial and len(self.basis) == len(self.killing_basis)

    def as_dict(self) -> dict:
        return {
            "basis": [{"field": canonical(rational_array(X)), "rho": format_rational(rho)} for X, rho in self.basis],
            "killing_basis": [canonical(rational_array(X)) for X in self.killing_basis],
            "nontrivial_conformal": self.has_nontrivial,
            "equals_killing_space": self.equals_killing,
        }


def solve_conformal(man: FrameManifold, conn: ConnectionData | None = None) -> ConformalSpace:
    conn = conn or connection(man)
    cols = _metric_lie_columns(man, conn)
    rows = [[col[i, j] for col in cols] + [-2 * man.metric[i, j]] for i, j in _upper_pairs(man.dim)]
    sols = _canonical_basis(null_space(rows))
    basis = [(tuple(v[:-1]), v[-1]) for v in sols]
    return ConformalSpace(basis, solve_killing(man, conn))


def scalar_curvature_constraint(rho, scalar) -> Check:
    """Constant conformal factor and constant scalar curvature force ``rho * r = 0``."""
    product = Fraction(rho) * Fraction(scalar)
    return Check("rho_times_scalar", product == 0, {"rho": format_rational(rho), "r": format_rational(scalar), "value": format_rational(product)})


def verify_conformal_consequences(
    man: FrameManifold,
    acs: AlmostContactStructure,
    X,
    rho,
    conn: ConnectionData | None = None,
    curv: CurvatureData | None = None,
) -> CheckList:
    """Check that a homothetic field preserves the connection, curvature and Ricci tensor."""
    conn = conn or connection(man)
    curv = curv or curvature(man, conn)
    cls = classify_field(man, acs, X, conn)
    if cls.conformal is None or cls.conformal != Fraction(rho):
        raise ContractError(
            f"field is not conformal with rho = {format_rational(rho)} (classification: "
            f"{'not conformal' if cls.conformal is None else 'rho = ' + format_rational(cls.conformal)})"
        )

    def zero_check(name, arr):
        bad = first_nonzero(arr)
        return Check(name, bad is None, {} if bad is None else {"witness": list(bad), "value": format_rational(arr[bad])})

    return CheckList(
        (
            zero_check("lie_connection", lie_derivative_connection(man, X, conn)),
            zero_check("lie_curvature", lie_derivative(man, X, curv.riemann).entries),
            zero_check("lie_ricci", lie_derivative(man, X, curv.ricci).entries),
            scalar_curvature_constraint(rho, curv.scalar),
        )
    )


@dataclass(frozen=True)
class TheoremRecord:
    hypothesis: str
    hypothesis_satisfiable: bool
    evidence: dict
    labels: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "hypothesis": self.hypothesis,
            "hypothesis_satisfiable": self.hypothesis_satisfiable,
            "evidence": self.evidence,
            "conclusion_labels": list(self.labels),
        }


@dataclass(frozen=True)
class TheoremAudit:
    records: dict

    @property
    def conclusion_labels(self) -> list[str]:
        seen = []
        for rec in self.records.values():
            for label in rec.labels:
                if label not in seen:
                    seen.append(label)
        return seen

    def as_dict(self) -> dict:
        return {
            "records": {name: rec.as_dict() for name, rec in self.records.items()},
            "conclusion_labels": self.conclusion_labels,
        }


def _killing_branch(man, acs, conn, killing):
    per_field = []
    labels = []
    for X in killing:
        cls = classify_field(man, acs, X, conn)
        lie_reeb = lie_derivative(man, X, _reeb_tensor(acs)).entries
        per_field.append(
            {
                "field": canonical(rational_array(X)),
                "lie_eta_zero": cls.strict_contact,
                "lie_reeb": canonical(lie_reeb),
            }
        )
        if cls.strict_contact and STRICT_CONTACT not in labels:
            labels.append(STRICT_CONTACT)
    return per_field, labels


def _reeb_tensor(acs):
    return Tensor(1, 0, acs.reeb)


def theorem_audit(
    man: FrameManifold,
    acs: AlmostContactStructure,
    ct: ContactTensors,
    fit: NullityFit,
    conn: ConnectionData | None = None,
) -> TheoremAudit:
    """Report hypothesis satisfiability and branch conditions for the field theorems.

    Nothing here asserts a theorem; labels are attached only when the exact
    branch condition they correspond to holds on the given manifold.
    """
    conn = conn or connection(man)
    grade = validate_structure(man, acs).grade
    if grade is not Grade.ALMOST_KENMOTSU:
        status = {"status": f"not an almost Kenmotsu structure (grade {grade.value})"}
        names = (
            "kenmotsu_criterion",
            "reeb_conformal",
            "collinear_conformal",
            "killing_warped_or_strict",
            "killing_product_or_strict",
        )
        return TheoremAudit({name: TheoremRecord("almost Kenmotsu structure", False, dict(status), ()) for name in names})
    records = {}
    h_zero = ct.h_vanishes

    records["kenmotsu_criterion"] = TheoremRecord(
        "h = 0",
        h_zero,
        {"h_zero": h_zero},
        (KENMOTSU, WARPED_PRODUCT) if h_zero else (),
    )

    reeb_cls = classify_field(man, acs, acs.reeb, conn)
    reeb_conf = reeb_cls.conformal is not None
    evidence = {"lie_metric": canonical(reeb_cls.lie_metric)}
    if reeb_conf:
        evidence["rho"] = format_rational(reeb_cls.conformal)
    else:
        evidence["certificate"] = "no constant rho solves L_reeb g = 2 rho g"
        evidence["status"] = "vacuous on this manifold"
    labels = (KENMOTSU, WARPED_PRODUCT) if reeb_conf and h_zero else ()
    records["reeb_conformal"] = TheoremRecord("Reeb field is conformal", reeb_conf, evidence, labels)

    # For constant b != 0, L_{b reeb} g = b L_reeb g, so b*reeb is conformal
    # exactly when reeb is; b = 2 is evaluated to exhibit this.
    scaled = classify_field(man, acs, 2 * acs.reeb, conn)
    col_conf = scaled.conformal is not None
    evidence = {"b": "2", "scale_equivalent_to_reeb": col_conf == reeb_conf}
    if not col_conf:
        evidence["status"] = "vacuous on this manifold"
    labels = (KENMOTSU, WARPED_PRODUCT) if col_conf and h_zero else ()
    records["collinear_conformal"] = TheoremRecord(
        "constant multiple b*reeb (b != 0) is conformal", col_conf, evidence, labels
    )

    killing = [X for X in solve_killing(man, conn) if any(x != 0 for x in X)]
    is_nullity = fit.kind is not NullityKind.NOT_NULLITY
    if is_nullity:
        per_field, field_labels = _killing_branch(man, acs, conn, killing)
        k = fit.k
        evidence = {"k": format_rational(k), "k_plus_1": format_rational(k + 1), "fields": per_field}
        labels = ([WARPED_PRODUCT] if k + 1 == 0 else []) + field_labels
        records["killing_warped_or_strict"] = TheoremRecord(
            "(k,mu)'-nullity structure with a nonzero Killing field", bool(killing), evidence, tuple(labels)
        )

        applicable = not h_zero
        evidence = {"k": format_rational(k), "k_plus_2": format_rational(k + 2), "non_kenmotsu": applicable, "fields": per_field}
        labels = []
        if applicable:
            labels = ([HYPERBOLIC_PRODUCT] if k + 2 == 0 else []) + field_labels
        records["killing_product_or_strict"] = TheoremRecord(
            "non-Kenmotsu (k,mu)'-nullity structure with a nonzero Killing field",
            applicable and bool(killing),
            evidence,
            tuple(labels),
        )
    else:
        for name in ("killing_warped_or_strict", "killing_product_or_strict"):
            records[name] = TheoremRecord(
                "(k,mu)'-nullity structure with a nonzero Killing field",
                False,
                {"status": "not a (k,mu)'-nullity structure"},
                (),
            )
    return TheoremAudit(records)
