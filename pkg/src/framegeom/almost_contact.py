"""Almost contact metric structures, the h tensors and (k, mu)'-nullity.

Conventions: ``phi[i, j]`` is the coefficient of ``e_i`` in ``phi e_j``;
the Reeb field is the frame vector ``e_r`` with ``r = reeb_index``; the
1-form is ``eta(U) = g(U, e_r)`` and the fundamental 2-form is
``Phi(U, V) = g(U, phi V)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import Check, CheckList
from .errors import ContractError, ShapeError
from .exact_algebra import (
    SolutionKind,
    Tensor,
    basis_vector,
    canonical,
    first_nonzero,
    format_rational,
    identity,
    inverse,
    rational_array,
    solve_incrementally,
    zeros,
)
from .frame import FrameManifold
from .levi_civita import (
    ConnectionData,
    CurvatureData,
    connection,
    covariant_derivative_endomorphism,
    exterior_derivative,
    lie_derivative,
    m_of,
    wedge,
)


@dataclass(frozen=True)
class AlmostContactStructure:
    phi: Tensor
    reeb_index: int
    eta: Tensor

    @classmethod
    def build(cls, man: FrameManifold, phi, reeb_index: int = 0) -> "AlmostContactStructure":
        phi = phi if isinstance(phi, Tensor) else Tensor(1, 1, rational_array(phi))
        if phi.rank != (1, 1) or phi.dim != man.dim:
            raise ShapeError(f"phi must be a {man.dim}x{man.dim} (1,1) tensor")
        if not 0 <= reeb_index < man.dim:
            raise ShapeError(f"reeb_index {reeb_index} outside the frame")
        eta = man.lower(basis_vector(man.dim, reeb_index))
        return cls(phi, reeb_index, Tensor(0, 1, eta))

    @property
    def reeb(self) -> np.ndarray:
        return basis_vector(self.phi.dim, self.reeb_index)

    def fundamental_form(self, man: FrameManifold) -> Tensor:
        return Tensor(0, 2, man.metric @ self.phi.entries)

    def eta_tensor_reeb(self) -> np.ndarray:
        """Matrix of ``U -> eta(U) reeb``."""
        return np.outer(self.reeb, self.eta.entries)


class Grade(str, enum.Enum):
    NOT_ALMOST_CONTACT = "NotAlmostContact"
    ALMOST_CONTACT_METRIC = "AlmostContactMetric"
    ALMOST_KENMOTSU = "AlmostKenmotsu"


@dataclass(frozen=True)
class StructureReport:
    checks: CheckList
    grade: Grade


def _matrix_check(name: str, lhs: np.ndarray, rhs: np.ndarray, labels=None) -> Check:
    diff = lhs - rhs
    bad = first_nonzero(diff)
    if bad is None:
        return Check(name, True)
    detail = {"witness": list(bad), "lhs": format_rational(lhs[bad]), "rhs": format_rational(rhs[bad])}
    if labels is not None:
        detail["witness_labels"] = [labels[i] for i in bad]
    return Check(name, False, detail)


def validate_structure(man: FrameManifold, acs: AlmostContactStructure) -> StructureReport:
    n = man.dim
    phi = acs.phi.entries
    eta = acs.eta.entries
    reeb = acs.reeb
    labels = man.frame_labels

    checks = [
        _matrix_check("phi_squared", phi @ phi, -identity(n) + acs.eta_tensor_reeb(), labels),
        Check("eta_reeb", eta @ reeb == 1, {"value": format_rational(eta @ reeb)}),
        _matrix_check("metric_compatibility", phi.T @ man.metric @ phi, man.metric - np.outer(eta, eta), labels),
        _matrix_check("phi_reeb", phi @ reeb, zeros(n), labels),
        _matrix_check("eta_phi", eta @ phi, zeros(n), labels),
    ]
    contact_ok = all(c.passed for c in checks)

    d_eta = exterior_derivative(man, acs.eta)
    checks.append(_matrix_check("closed_eta", d_eta.entries, d_eta.entries * 0, labels))
    Phi = acs.fundamental_form(man)
    try:
        d_Phi = exterior_derivative(man, Phi)
        target = wedge(acs.eta, Phi).scale(2)
        checks.append(_matrix_check("d_fundamental_form", d_Phi.entries, target.entries, labels))
    except ValueError as exc:
        checks.append(Check("d_fundamental_form", False, {"error": str(exc)}))
    report = CheckList(tuple(checks))

    if not contact_ok:
        grade = Grade.NOT_ALMOST_CONTACT
    elif report.passed:
        grade = Grade.ALMOST_KENMOTSU
    else:
        grade = Grade.ALMOST_CONTACT_METRIC
    return StructureReport(report, grade)


@dataclass(frozen=True)
class ContactTensors:
    h: Tensor
    h_prime: Tensor
    checks: CheckList

    @property
    def h_vanishes(self) -> bool:
        return self.h.is_zero()


def compute_h_tensors(
    man: FrameManifold, acs: AlmostContactStructure, conn: ConnectionData | None = None
) -> ContactTensors:
    """``h = 1/2 L_reeb phi`` and ``h' = h o phi``, with their standard identities checked."""
    conn = conn or connection(man)
    phi = acs.phi.entries
    h = lie_derivative(man, acs.reeb, acs.phi).entries * Fraction(1, 2)
    hp = h @ phi
    n = man.dim
    labels = man.frame_labels
    zero_vec = acs.reeb * 0
    # column u of nabla_reeb is nabla_{e_u} reeb
    nabla_reeb = conn.derivative_matrix(acs.reeb)
    expected = identity(n) - acs.eta_tensor_reeb() + hp
    checks = CheckList(
        (
            _matrix_check("h_anticommutes_phi", h @ phi + phi @ h, h * 0, labels),
            _matrix_check("h_reeb", h @ acs.reeb, zero_vec),
            _matrix_check("h_prime_reeb", hp @ acs.reeb, zero_vec),
            Check("trace_h", np.trace(h) == 0, {"value": format_rational(np.trace(h))}),
            Check("trace_h_prime", np.trace(hp) == 0, {"value": format_rational(np.trace(hp))}),
            _matrix_check("nabla_reeb", nabla_reeb, expected, labels),
        )
    )
    return ContactTensors(Tensor(1, 1, h), Tensor(1, 1, hp), checks)


class NullityKind(str, enum.Enum):
    FIT = "fit"
    KENMOTSU_DEGENERATE = "kenmotsu_degenerate"
    NOT_NULLITY = "not_nullity"


@dataclass(frozen=True)
class NullityFit:
    """Result of fitting ``R(U, V) reeb`` to the (k, mu)'-nullity form.

    ``mu_determined`` is false when the h' columns vanish; ``mu`` then holds
    the particular value 0 (or ``None`` for the degenerate Kenmotsu case).
    ``witness`` is ``(i, j, l)``: the first component of ``R(e_i, e_j) reeb``
    along ``e_l`` that no constants can reproduce.
    """

    kind: NullityKind
    k: Fraction | None = None
    mu: Fraction | None = None
    mu_determined: bool = True
    witness: tuple[int, int, int] | None = None
    witness_value: Fraction | None = None

    def as_dict(self, labels=None) -> dict:
        out = {"kind": self.kind.value}
        if self.k is not None:
            out["k"] = format_rational(self.k)
        if self.kind is NullityKind.KENMOTSU_DEGENERATE:
            out["mu"] = "indeterminate"
        elif self.mu is not None:
            out["mu"] = format_rational(self.mu)
            out["mu_determined"] = self.mu_determined
        if self.witness is not None:
            i, j, l = self.witness
            w = {"U": i, "V": j, "component": l, "value": format_rational(self.witness_value)}
            if labels is not None:
                w["labels"] = [labels[i], labels[j], labels[l]]
            out["witness"] = w
        return out


def _nullity_rows(acs: AlmostContactStructure, ct: ContactTensors, curv: CurvatureData):
    n = acs.phi.dim
    r = acs.reeb_index
    eta = acs.eta.entries
    hp = ct.h_prime.entries
    R = curv.riemann.entries
    for i in range(n):
        for j in range(n):
            for l in range(n):
                k_coef = eta[j] * (l == i) - eta[i] * (l == j)
                mu_coef = eta[j] * hp[l, i] - eta[i] * hp[l, j]
                yield (k_coef, mu_coef), R[l, i, j, r], (i, j, l)


def fit_nullity(man: FrameManifold, acs: AlmostContactStructure, ct: ContactTensors, curv: CurvatureData) -> NullityFit:
    sol, witness = solve_incrementally(_nullity_rows(acs, ct, curv), 2)
    if witness is not None:
        i, j, l = witness
        return NullityFit(
            NullityKind.NOT_NULLITY,
            witness=witness,
            witness_value=curv.riemann.entries[l, i, j, acs.reeb_index],
        )
    k, mu = sol.particular
    if sol.kind is SolutionKind.UNIQUE:
        return NullityFit(NullityKind.FIT, k, mu)
    if any(v[0] != 0 for v in sol.null_space):
        # R(., .)reeb never constrains k: only possible without a complement to reeb
        raise ContractError("k is undetermined; the frame has no directions transverse to the Reeb field")
    if k == -1 and ct.h_prime.is_zero():
        return NullityFit(NullityKind.KENMOTSU_DEGENERATE, k)
    return NullityFit(NullityKind.FIT, k, mu, mu_determined=False)


def check_kmu_identities(
    man: FrameManifold,
    acs: AlmostContactStructure,
    ct: ContactTensors,
    curv: CurvatureData,
    fit: NullityFit,
    killing_fields=(),
    conn: ConnectionData | None = None,
) -> CheckList:
    """Verify the identities a (k, mu)'-nullity structure must satisfy."""
    if fit.kind is NullityKind.NOT_NULLITY:
        raise ContractError("identity checks need a (k, mu)'-nullity fit")
    conn = conn or connection(man)
    n = man.dim
    m = m_of(man)
    k = fit.k
    phi = acs.phi.entries
    hp = ct.h_prime.entries
    eta = acs.eta.entries
    reeb = acs.reeb
    labels = man.frame_labels
    rows = [_matrix_check("h_prime_squared", hp @ hp, (k + 1) * (phi @ phi), labels)]

    if fit.kind is NullityKind.FIT and fit.mu_determined:
        rows.append(Check("mu_equals_minus_two", fit.mu == -2, {"mu": format_rational(fit.mu)}))
    else:
        rows.append(Check("mu_equals_minus_two", None, {"note": "mu indeterminate (h' = 0)"}))

    if k + 1 < 0:
        predicted = -2 * m * identity(n) + 2 * m * (k + 1) * acs.eta_tensor_reeb() - 2 * m * hp
        rows.append(_matrix_check("ricci_operator_formula", curv.ricci_operator.entries, predicted, labels))
    else:
        rows.append(Check("ricci_operator_formula", None, {"note": "not applicable: requires k + 1 < 0"}))

    predicted_r = 2 * m * (k - 2 * m)
    rows.append(
        Check(
            "scalar_curvature_formula",
            curv.scalar == predicted_r,
            {"computed": format_rational(curv.scalar), "predicted": format_rational(predicted_r)},
        )
    )

    D = covariant_derivative_endomorphism(conn, ct.h_prime)
    expected = np.empty_like(D)
    for i in range(n):
        W = (k + 1) * basis_vector(n, i) - hp[:, i]
        gW = man.metric @ W
        for j in range(n):
            expected[:, i, j] = gW[j] * reeb + eta[j] * W - 2 * (k + 1) * eta[i] * eta[j] * reeb
    rows.append(_matrix_check("nabla_h_prime", D, expected, labels))

    if killing_fields:
        traces = []
        for X in killing_fields:
            L = lie_derivative(man, X, ct.h_prime).entries
            traces.append(np.trace(L))
        rows.append(
            Check(
                "trace_lie_h_prime",
                all(t == 0 for t in traces),
                {"fields": [canonical(rational_array(X)) for X in killing_fields], "traces": canonical(np.array(traces, dtype=object))},
            )
        )
    else:
        rows.append(Check("trace_lie_h_prime", None, {"note": "no nonzero constant Killing fields"}))
    return CheckList(tuple(rows))


def change_structure_frame(acs: AlmostContactStructure, man_new: FrameManifold, P) -> AlmostContactStructure:
    """Transport the structure to the frame ``e'_a = sum_b P[b, a] e_b``.

    ``P`` must fix the Reeb vector so that it keeps its frame index.
    """
    P = rational_array(P, (man_new.dim, man_new.dim))
    r = acs.reeb_index
    if not np.all(P[:, r] == basis_vector(man_new.dim, r)):
        raise ShapeError("frame change must fix the Reeb vector")
    phi_new = inverse(P) @ acs.phi.entries @ P
    return AlmostContactStructure.build(man_new, phi_new, r)
