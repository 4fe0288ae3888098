"""eta-Ricci-Yamabe solitons and eta-Einstein classification.

The soliton equation for a field ``X`` with constants ``alpha, beta,
lambda, nu`` is

    L_X g + 2 alpha S + (2 lambda - beta r) g + 2 nu eta (x) eta = 0.

:func:`solve_soliton` fixes ``lambda`` and ``nu`` from two scalar
projections of it (the Reeb-Reeb component and the metric trace) and then
reports the residual of the full tensor equation separately, since the two
need not agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .almost_contact import AlmostContactStructure
from .errors import ContractError
from .exact_algebra import SolutionKind, Tensor, format_rational, solve_incrementally, solve_linear
from .fields import KENMOTSU, classify_field
from .frame import FrameManifold
from .levi_civita import ConnectionData, CurvatureData, connection, metric_lie_derivative


@dataclass(frozen=True)
class SolitonParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))


ETA_RICCI = SolitonParams(1, 0)
ETA_YAMABE = SolitonParams(0, 1)
ETA_EINSTEIN = SolitonParams(1, -1)


@dataclass(frozen=True)
class SolitonSolution:
    lambda1: Fraction
    nu1: Fraction
    rho: Fraction
    projected_source: dict
    full_residual: Tensor = field(repr=False)

    @property
    def exact(self) -> bool:
        return self.full_residual.is_zero()

    def as_dict(self) -> dict:
        return {
            "lambda1": format_rational(self.lambda1),
            "nu1": format_rational(self.nu1),
            "rho": format_rational(self.rho),
            "projected_source": self.projected_source,
            "full_residual": self.full_residual.to_strings(),
            "exact": self.exact,
        }


def _residual(man, acs, curv, lie_g, params, lam, nu) -> np.ndarray:
    eta = acs.eta.entries
    return (
        lie_g
        + 2 * params.alpha * curv.ricci.entries
        + (2 * lam - params.beta * curv.scalar) * man.metric
        + 2 * nu * np.outer(eta, eta)
    )


def solve_soliton(
    man: FrameManifold,
    acs: AlmostContactStructure,
    curv: CurvatureData,
    X,
    params: SolitonParams,
    conn: ConnectionData | None = None,
) -> SolitonSolution:
    conn = conn or connection(man)
    cls = classify_field(man, acs, X, conn)
    if cls.conformal is None:
        raise ContractError("soliton field must be conformal; classification: not a conformal vector field")
    lie_g = metric_lie_derivative(man, X, conn)
    ginv = man.metric_inverse
    r = acs.reeb_index
    eta = acs.eta.entries

    # residual is affine in (lambda, nu): base + lambda * 2g + nu * 2 eta(x)eta
    base = _residual(man, acs, curv, lie_g, params, 0, 0)
    d_lam = 2 * man.metric
    d_nu = 2 * np.outer(eta, eta)

    def trace(M):
        return np.sum(ginv * M)

    rows = [
        [d_lam[r, r], d_nu[r, r]],
        [trace(d_lam), trace(d_nu)],
    ]
    rhs = [-base[r, r], -trace(base)]
    sol = solve_linear(rows, rhs)
    if sol.kind is not SolutionKind.UNIQUE:
        raise ContractError(f"projected soliton system is {sol.kind.value}")
    lam, nu = sol.particular
    source = {
        "reeb_reeb": {"lambda": format_rational(rows[0][0]), "nu": format_rational(rows[0][1]), "constant": format_rational(base[r, r])},
        "trace": {"lambda": format_rational(rows[1][0]), "nu": format_rational(rows[1][1]), "constant": format_rational(trace(base))},
    }
    residual = _residual(man, acs, curv, lie_g, params, lam, nu)
    return SolitonSolution(lam, nu, cls.conformal, source, Tensor(0, 2, residual))


def predict_constants(m: int, k, params: SolitonParams, rho) -> tuple[Fraction, Fraction]:
    """Closed-form soliton constants on a (k, mu)'-nullity structure of dimension 2m+1."""
    if m < 1:
        raise ContractError("m must be at least 1")
    k = Fraction(k)
    lam = params.beta * m * (k - 2 * m) - Fraction(rho) + 2 * m * params.alpha
    nu = -2 * m * params.alpha * (k + 1)
    return lam, nu


def k_for_vanishing_nu(m: int, params: SolitonParams) -> tuple[Fraction, str]:
    """Solve ``nu = -2m alpha (k + 1) = 0`` for ``k`` when ``alpha != 0``."""
    if m < 1:
        raise ContractError("m must be at least 1")
    if params.alpha == 0:
        raise ContractError("nu vanishes for every k when alpha = 0")
    sol = solve_linear([[-2 * m * params.alpha]], [2 * m * params.alpha])
    return sol.particular[0], KENMOTSU


class EinsteinKind(str, enum.Enum):
    EINSTEIN = "einstein"
    ETA_EINSTEIN = "eta_einstein"
    NOT_ETA_EINSTEIN = "not_eta_einstein"


@dataclass(frozen=True)
class EtaEinsteinFit:
    kind: EinsteinKind
    a1: Fraction | None = None
    b1: Fraction | None = None
    witness: tuple[int, int] | None = None
    witness_values: dict | None = None

    def as_dict(self, labels=None) -> dict:
        out = {"kind": self.kind.value}
        if self.a1 is not None:
            out["a1"] = format_rational(self.a1)
            out["b1"] = format_rational(self.b1)
            out["b1_zero"] = self.b1 == 0
            out["cross_reference"] = (
                "expected Einstein for eta-Einstein (k,mu)'-structures with constant coefficients; b1_zero holds the computed fact"
            )
        if self.witness is not None:
            i, j = self.witness
            w = {"U": i, "V": j, **self.witness_values}
            if labels is not None:
                w["labels"] = [labels[i], labels[j]]
            out["witness"] = w
        return out


def eta_einstein_classify(man: FrameManifold, curv: CurvatureData, acs: AlmostContactStructure) -> EtaEinsteinFit:
    """Fit ``S = a1 g + b1 eta (x) eta`` over all components."""
    S = curv.ricci.entries
    g = man.metric
    eta = acs.eta.entries
    n = man.dim
    rows = ((( g[i, j], eta[i] * eta[j]), S[i, j], (i, j)) for i in range(n) for j in range(i, n))
    sol, witness = solve_incrementally(rows, 2)
    if witness is not None:
        i, j = witness
        values = {"ricci": format_rational(S[i, j]), "metric": format_rational(g[i, j]), "eta_eta": format_rational(eta[i] * eta[j])}
        return EtaEinsteinFit(EinsteinKind.NOT_ETA_EINSTEIN, witness=witness, witness_values=values)
    a1, b1 = sol.particular
    if sol.kind is not SolutionKind.UNIQUE:
        raise ContractError("eta (x) eta is proportional to g; coefficients are not determined")
    kind = EinsteinKind.EINSTEIN if b1 == 0 else EinsteinKind.ETA_EINSTEIN
    return EtaEinsteinFit(kind, a1, b1)


def soliton_grid(man, acs, curv, X, grid, conn=None) -> list[dict]:
    """Solve the soliton for each ``(alpha, beta)`` in ``grid``; used by reports."""
    out = []
    for alpha, beta in grid:
        sol = solve_soliton(man, acs, curv, X, SolitonParams(alpha, beta), conn)
        out.append({"alpha": format_rational(alpha), "beta": format_rational(beta), **sol.as_dict()})
    return out

