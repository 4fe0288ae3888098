"""Assemble analysis results into deterministic report sections.

Every section builder returns ``(payload, ok)``: ``payload`` is a JSON-ready
dict whose numbers are canonical rational strings, and ``ok`` is false when a
mathematical check inside the section failed.
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property

from .almost_contact import (
    Grade,
    NullityKind,
    check_kmu_identities,
    compute_h_tensors,
    fit_nullity,
    validate_structure,
)
from .checks import Check, CheckList
from .errors import ContractError
from .exact_algebra import canonical, first_nonzero, format_rational, rational_array
from .fields import classify_field, solve_conformal, solve_killing, theorem_audit, verify_conformal_consequences
from .frame import bracket_table, validate_frame
from .levi_civita import (
    connection,
    curvature,
    first_bianchi,
    lowered_riemann,
    metric_derivative,
    torsion,
)
from .solitons import SolitonParams, eta_einstein_classify, predict_constants, solve_soliton


def _zero_check(name, arr) -> Check:
    bad = first_nonzero(arr)
    if bad is None:
        return Check(name, True)
    return Check(name, False, {"witness": list(bad), "value": format_rational(arr[bad])})


def curvature_identities(man, conn, curv) -> CheckList:
    """Entrywise symmetry identities of the connection and curvature."""
    R = curv.riemann.entries
    Rl = lowered_riemann(man, curv)
    S = curv.ricci.entries
    Q = curv.ricci_operator.entries
    trace_q = sum((Q[i, i] for i in range(man.dim)), 0)
    return CheckList(
        (
            _zero_check("torsion_free", torsion(man, conn)),
            _zero_check("metric_compatible", metric_derivative(man, conn)),
            _zero_check("riemann_antisymmetric", R + R.transpose(0, 2, 1, 3)),
            _zero_check("riemann_skew_in_last_pair", Rl + Rl.transpose(0, 1, 3, 2)),
            _zero_check("riemann_pair_symmetry", Rl - Rl.transpose(2, 3, 0, 1)),
            _zero_check("first_bianchi", first_bianchi(curv)),
            _zero_check("ricci_symmetric", S - S.T),
            _zero_check("ricci_operator_lowers_to_ricci", man.metric @ Q - S),
            Check("scalar_is_trace", trace_q == curv.scalar, {"value": format_rational(curv.scalar)}),
        )
    )


class Analysis:
    """Lazily computed analyses of one manifold with its almost contact structure."""

    def __init__(self, man, acs):
        self.man = man
        self.acs = acs

    @cached_property
    def frame_checks(self):
        return validate_frame(self.man)

    @cached_property
    def conn(self):
        return connection(self.man)

    @cached_property
    def curv(self):
        return curvature(self.man, self.conn)

    @cached_property
    def structure(self):
        return validate_structure(self.man, self.acs)

    @cached_property
    def contact(self):
        if self.structure.grade is Grade.NOT_ALMOST_CONTACT:
            raise ContractError("h tensors need at least an almost contact metric structure")
        return compute_h_tensors(self.man, self.acs, self.conn)

    @cached_property
    def nullity(self):
        return fit_nullity(self.man, self.acs, self.contact, self.curv)

    @cached_property
    def killing(self):
        return solve_killing(self.man, self.conn)

    @property
    def nonzero_killing(self):
        return [X for X in self.killing if any(x != 0 for x in X)]

    @cached_property
    def conformal(self):
        return solve_conformal(self.man, self.conn)

    @property
    def labels(self):
        return self.man.frame_labels

    # -- sections --------------------------------------------------------

    def validate_section(self):
        payload = {
            "frame": self.frame_checks.as_dict(),
            "structure": self.structure.checks.as_dict(),
            "grade": self.structure.grade.value,
        }
        return payload, self.frame_checks.passed and self.structure.checks.passed

    def curvature_section(self):
        n = self.man.dim
        riemann = []
        for i, j in itertools.combinations(range(n), 2):
            for k in range(n):
                vec = self.curv.riemann.entries[:, i, j, k]
                riemann.append({"X": self.labels[i], "Y": self.labels[j], "Z": self.labels[k], "value": canonical(vec)})
        identities = curvature_identities(self.man, self.conn, self.curv)
        payload = {
            "brackets": bracket_table(self.man),
            "connection": self.conn.gamma.to_strings(),
            "riemann": riemann,
            "ricci": self.curv.ricci.to_strings(),
            "ricci_operator": self.curv.ricci_operator.to_strings(),
            "scalar": format_rational(self.curv.scalar),
            "identities": identities.as_dict(),
        }
        return payload, identities.passed

    def contact_section(self):
        ct = self.contact
        payload = {
            "grade": self.structure.grade.value,
            "h": ct.h.to_strings(),
            "h_prime": ct.h_prime.to_strings(),
            "h_zero": ct.h_vanishes,
            "identities": ct.checks.as_dict(),
        }
        return payload, ct.checks.passed

    def nullity_section(self):
        fit = self.nullity
        payload = fit.as_dict(self.labels)
        if fit.kind is NullityKind.NOT_NULLITY:
            return payload, False
        ids = check_kmu_identities(
            self.man, self.acs, self.contact, self.curv, fit, self.nonzero_killing, self.conn
        )
        payload["identities"] = ids.as_dict()
        return payload, ids.passed

    def fields_section(self):
        consequences = []
        ok = True
        for X in self.nonzero_killing:
            checks = verify_conformal_consequences(self.man, self.acs, X, 0, self.conn, self.curv)
            ok = ok and checks.passed
            consequences.append({"field": canonical(rational_array(X)), "checks": checks.as_dict()})
        payload = {
            "killing_basis": [canonical(rational_array(X)) for X in self.killing],
            "conformal": self.conformal.as_dict(),
            "killing_consequences": consequences,
            "scope": "constant-coefficient fields only",
        }
        return payload, ok

    def classify_section(self, X):
        return classify_field(self.man, self.acs, X, self.conn).as_dict(), True

    def default_soliton_field(self):
        if self.nonzero_killing:
            return self.nonzero_killing[0]
        return tuple(0 for _ in range(self.man.dim))

    def soliton_section(self, alpha, beta, X=None):
        X = self.default_soliton_field() if X is None else X
        params = SolitonParams(alpha, beta)
        sol = solve_soliton(self.man, self.acs, self.curv, X, params, self.conn)
        payload = {
            "alpha": format_rational(params.alpha),
            "beta": format_rational(params.beta),
            "field": canonical(rational_array(X)),
            **sol.as_dict(),
        }
        if self.structure.grade is Grade.ALMOST_KENMOTSU and self.nullity.kind is not NullityKind.NOT_NULLITY:
            m = (self.man.dim - 1) // 2
            lam, nu = predict_constants(m, self.nullity.k, params, sol.rho)
            payload["closed_form"] = {
                "lambda1": format_rational(lam),
                "nu1": format_rational(nu),
                "agrees": lam == sol.lambda1 and nu == sol.nu1,
            }
        return payload, True

    def audit_section(self):
        audit = theorem_audit(self.man, self.acs, self.contact, self.nullity, self.conn)
        return audit.as_dict(), True

    def eta_einstein_section(self):
        return eta_einstein_classify(self.man, self.curv, self.acs).as_dict(self.labels), True

    def all_sections(self):
        sections = {}
        ok = True
        builders = [
            ("validate", self.validate_section),
            ("curvature", self.curvature_section),
            ("contact", self.contact_section),
            ("nullity", self.nullity_section),
            ("fields", self.fields_section),
            ("eta_einstein", self.eta_einstein_section),
            ("soliton", lambda: self.soliton_section(1, 0)),
            ("audit", self.audit_section),
        ]
        informational = {"eta_einstein", "soliton", "audit"}
        for name, build in builders:
            try:
                payload, section_ok = build()
                status = "info" if name in informational else ("pass" if section_ok else "fail")
                payload = {"status": status, **payload}
            except ContractError as exc:
                payload, section_ok = {"status": "fail", "error": str(exc)}, False
            sections[name] = payload
            ok = ok and section_ok
        return {"manifold": self.man.name, "sections": sections}, ok


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _inline(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    return str(value)


def render_text(payload, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, dict) or (isinstance(value, list) and not _is_matrix_or_scalars(value)):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{key}: {_inline(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_matrix_or_scalars(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(payload)}")
    return "\n".join(line for line in lines if line) + "\n"


def _is_matrix_or_scalars(value) -> bool:
    if _is_scalar_list(value):
        return True
    return isinstance(value, list) and all(_is_matrix_or_scalars(v) for v in value) and all(isinstance(v, list) for v in value)
