from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from framegeom import (
    SolitonParams,
    compute_h_tensors,
    connection,
    curvature,
    eta_einstein_classify,
    fit_nullity,
    load_builtin,
    predict_constants,
    solve_killing,
    solve_soliton,
)
from framegeom.errors import ContractError
from framegeom.exact_algebra import basis_vector
from framegeom.solitons import ETA_EINSTEIN, ETA_RICCI, ETA_YAMABE, EinsteinKind, k_for_vanishing_nu, soliton_grid

from helpers import nullity_family

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@given(coeff, coeff)
def test_reference_soliton_constants(alpha, beta):
    man, acs = load_builtin("kenmotsu3")
    sol = solve_soliton(man, acs, curvature(man), (0, 1, -1), SolitonParams(alpha, beta))
    assert sol.lambda1 == 2 * alpha - 4 * beta
    assert sol.nu1 == 2 * alpha
    assert sol.rho == 0
    assert sol.full_residual.entries[1, 2] == -4 * alpha
    assert sol.exact is (alpha == 0)


def test_predicted_constants_for_named_solitons():
    # m = 1, k = -2, rho = 0
    assert predict_constants(1, -2, ETA_RICCI, 0) == (2, 2)
    assert predict_constants(1, -2, ETA_YAMABE, 0) == (-4, 0)
    assert predict_constants(1, -2, ETA_EINSTEIN, 0) == (6, 2)


def test_predicted_constants_general_dimension():
    lam, nu = predict_constants(2, Fraction(-5), SolitonParams(1, 1), Fraction(1, 3))
    assert lam == 2 * (-5 - 4) - Fraction(1, 3) + 4
    assert nu == -4 * (-5 + 1)


@pytest.mark.parametrize("m,t", [(1, 1), (1, 2), (1, Fraction(1, 2)), (2, 1), (2, 3)])
@pytest.mark.parametrize("alpha,beta", [(1, 0), (0, 1), (1, -1), (2, 3)])
def test_solved_constants_agree_with_closed_form(m, t, alpha, beta):
    man, acs = nullity_family(m, t)
    conn = connection(man)
    curv = curvature(man, conn)
    ct = compute_h_tensors(man, acs, conn)
    fit = fit_nullity(man, acs, ct, curv)
    params = SolitonParams(alpha, beta)
    for X in solve_killing(man, conn):
        sol = solve_soliton(man, acs, curv, X, params, conn)
        assert (sol.lambda1, sol.nu1) == predict_constants(m, fit.k, params, sol.rho)


def test_vanishing_nu_forces_kenmotsu():
    k, label = k_for_vanishing_nu(1, ETA_RICCI)
    assert k == -1 and label == "Kenmotsu"
    assert k_for_vanishing_nu(3, SolitonParams(Fraction(-2, 3), 5))[0] == -1
    with pytest.raises(ContractError):
        k_for_vanishing_nu(1, ETA_YAMABE)


def test_soliton_needs_conformal_field(kenmotsu3):
    man, acs = kenmotsu3
    with pytest.raises(ContractError):
        solve_soliton(man, acs, curvature(man), basis_vector(3, 0), ETA_RICCI)


def test_zero_field_soliton_on_einstein_manifold(hyperbolic3):
    man, acs = hyperbolic3
    sol = solve_soliton(man, acs, curvature(man), (0, 0, 0), ETA_RICCI)
    # S = -2g so lambda = 2 and nu = 0 solve the full equation
    assert (sol.lambda1, sol.nu1) == (2, 0)
    assert sol.exact


def test_grid_rows(kenmotsu3):
    man, acs = kenmotsu3
    rows = soliton_grid(man, acs, curvature(man), (0, 1, -1), [(1, 0), (0, 1)])
    assert [(r["lambda1"], r["nu1"]) for r in rows] == [("2", "2"), ("-4", "0")]


def test_eta_einstein_classification():
    man, acs = load_builtin("kenmotsu3")
    fit = eta_einstein_classify(man, curvature(man), acs)
    assert fit.kind is EinsteinKind.NOT_ETA_EINSTEIN and fit.witness == (1, 2)
    man, acs = load_builtin("hyperbolic_kenmotsu3")
    fit = eta_einstein_classify(man, curvature(man), acs)
    assert fit.kind is EinsteinKind.EINSTEIN and fit.a1 == -2 and fit.b1 == 0
    man, acs = load_builtin("abelian_flat3")
    fit = eta_einstein_classify(man, curvature(man), acs)
    assert fit.kind is EinsteinKind.EINSTEIN and fit.a1 == 0


def test_proper_eta_einstein():
    # scaled family: Q = -2m I + 2m(k+1) eta(x)reeb - 2m h', not eta-Einstein while h' != 0
    man, acs = nullity_family(1, 1)
    fit = eta_einstein_classify(man, curvature(man), acs)
    assert fit.kind is EinsteinKind.NOT_ETA_EINSTEIN


def test_heisenberg_frame_is_eta_einstein():
    from framegeom import AlmostContactStructure, FrameManifold
    from framegeom.exact_algebra import rational_array

    man = FrameManifold.from_brackets("heisenberg", 3, {(1, 2): [2, 0, 0]})
    acs = AlmostContactStructure.build(man, rational_array([[0, 0, 0], [0, 0, -1], [0, 1, 0]]), 0)
    fit = eta_einstein_classify(man, curvature(man), acs)
    assert fit.kind is EinsteinKind.ETA_EINSTEIN
    assert (fit.a1, fit.b1) == (-2, 4)
    assert "cross_reference" in fit.as_dict()
