import random
from fractions import Fraction

import pytest

from framegeom import (
    AlmostContactStructure,
    Grade,
    NullityKind,
    check_kmu_identities,
    compute_h_tensors,
    connection,
    curvature,
    fit_nullity,
    load_builtin,
    solve_killing,
    validate_structure,
)
from framegeom.errors import ContractError, ShapeError
from framegeom.almost_contact import change_structure_frame
from framegeom.exact_algebra import rational_array, zeros
from framegeom.frame import change_frame

from helpers import as_lists, cayley_orthogonal, nullity_family, random_symmetric, reeb_fixing_variants, semidirect_akm


def analyse(man, acs):
    conn = connection(man)
    curv = curvature(man, conn)
    ct = compute_h_tensors(man, acs, conn)
    return conn, curv, ct, fit_nullity(man, acs, ct, curv)


def test_reference_structure_is_almost_kenmotsu(kenmotsu3):
    man, acs = kenmotsu3
    report = validate_structure(man, acs)
    assert report.grade is Grade.ALMOST_KENMOTSU
    assert report.checks.passed


def test_reference_h_tensors(kenmotsu3):
    man, acs = kenmotsu3
    ct = compute_h_tensors(man, acs)
    assert as_lists(ct.h.entries) == [[0, 0, 0], [0, -1, 0], [0, 0, 1]]
    assert as_lists(ct.h_prime.entries) == [[0, 0, 0], [0, 0, 1], [0, 1, 0]]
    assert ct.checks.passed and not ct.h_vanishes


def test_reference_nullity_fit(kenmotsu3):
    man, acs = kenmotsu3
    conn, curv, ct, fit = analyse(man, acs)
    assert fit.kind is NullityKind.FIT
    assert (fit.k, fit.mu, fit.mu_determined) == (-2, -2, True)
    ids = check_kmu_identities(man, acs, ct, curv, fit, solve_killing(man, conn), conn)
    assert ids.passed
    assert all(ids[name].passed is True for name in ("ricci_operator_formula", "nabla_h_prime", "trace_lie_h_prime"))


def test_hyperbolic_is_kenmotsu(hyperbolic3):
    man, acs = hyperbolic3
    conn, curv, ct, fit = analyse(man, acs)
    assert ct.h_vanishes
    assert fit.kind is NullityKind.KENMOTSU_DEGENERATE and fit.k == -1
    ids = check_kmu_identities(man, acs, ct, curv, fit, (), conn)
    assert ids.passed
    assert ids["mu_equals_minus_two"].passed is None
    assert ids["ricci_operator_formula"].passed is None


def test_non_compatible_phi_is_rejected(kenmotsu3):
    man, _ = kenmotsu3
    phi = zeros((3, 3))
    phi[2, 1] = Fraction(2)  # phi e2 = 2 e3
    phi[1, 2] = Fraction(-1, 2)
    acs = AlmostContactStructure.build(man, phi, 0)
    report = validate_structure(man, acs)
    assert report.checks["phi_squared"].passed
    assert report.checks["metric_compatibility"].passed is False
    assert report.grade is Grade.NOT_ALMOST_CONTACT


def test_zero_phi_is_rejected(kenmotsu3):
    man, _ = kenmotsu3
    acs = AlmostContactStructure.build(man, zeros((3, 3)), 0)
    report = validate_structure(man, acs)
    assert report.checks["phi_squared"].passed is False
    assert report.grade is Grade.NOT_ALMOST_CONTACT


def test_failing_checks_carry_witnesses(kenmotsu3):
    man, _ = kenmotsu3
    acs = AlmostContactStructure.build(man, zeros((3, 3)), 0)
    detail = validate_structure(man, acs).checks["phi_squared"].detail
    assert detail["witness"] == [1, 1]
    assert detail["witness_labels"] == ["e2", "e2"]


def test_non_kenmotsu_grades(abelian3, su2):
    for man, acs in (abelian3, su2):
        report = validate_structure(man, acs)
        assert report.grade is Grade.ALMOST_CONTACT_METRIC
        assert report.checks["d_fundamental_form"].passed is False


def test_random_semidirect_members_are_almost_kenmotsu():
    rng = random.Random(2)
    for m in (1, 2):
        for _ in range(4):
            man, acs = semidirect_akm(m, random_symmetric(rng, 2 * m))
            assert validate_structure(man, acs).grade is Grade.ALMOST_KENMOTSU
            assert compute_h_tensors(man, acs).checks.passed


def test_generic_semidirect_member_is_not_nullity():
    man, acs = semidirect_akm(1, [[1, 1], [1, 2]])
    _, curv, _, fit = analyse(man, acs)
    assert fit.kind is NullityKind.NOT_NULLITY
    i, j, l = fit.witness
    assert curv.riemann.entries[l, i, j, acs.reeb_index] == fit.witness_value
    with pytest.raises(ContractError):
        check_kmu_identities(man, acs, compute_h_tensors(man, acs), curv, fit)


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("t", [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3)])
def test_scaled_family_is_nullity(m, t):
    man, acs = nullity_family(m, t)
    conn, curv, ct, fit = analyse(man, acs)
    assert fit.kind is NullityKind.FIT
    assert fit.k == -1 - t * t and fit.mu == -2
    ids = check_kmu_identities(man, acs, ct, curv, fit, solve_killing(man, conn), conn)
    assert ids.passed, ids.failures()
    assert curv.scalar == 2 * m * (fit.k - 2 * m)


def test_rotation_part_gives_kenmotsu():
    # S proportional to the identity makes J^-1 S commute with phi, so h = 0
    man, acs = semidirect_akm(2, [[3, 0, 0, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 3]])
    _, curv, ct, fit = analyse(man, acs)
    assert ct.h_vanishes
    assert fit.kind is NullityKind.KENMOTSU_DEGENERATE


def test_fit_is_frame_independent_under_reeb_fixing_rotations():
    for name, man, acs in reeb_fixing_variants(5):
        base = load_builtin(name)
        _, curv0, _, fit0 = analyse(*base)
        conn, curv, ct, fit = analyse(man, acs)
        assert validate_structure(man, acs).grade is Grade.ALMOST_KENMOTSU
        assert (fit.kind, fit.k, fit.mu) == (fit0.kind, fit0.k, fit0.mu)
        assert curv.scalar == curv0.scalar
        assert check_kmu_identities(man, acs, ct, curv, fit, solve_killing(man, conn), conn).passed


def test_structure_frame_change_must_fix_reeb(kenmotsu3):
    man, acs = kenmotsu3
    P = cayley_orthogonal(random.Random(1), 3)
    with pytest.raises(ShapeError):
        change_structure_frame(acs, change_frame(man, P), P)


def test_mu_free_when_h_prime_vanishes_but_k_not_minus_one():
    # flat frame: R = 0 so k = 0 fits and h' = 0 leaves mu undetermined
    man, acs = load_builtin("abelian_flat3")
    _, curv, ct, fit = analyse(man, acs)
    assert fit.kind is NullityKind.FIT
    assert fit.k == 0 and fit.mu_determined is False
    assert fit.as_dict()["mu_determined"] is False


def test_nullity_dict_is_flat(kenmotsu3):
    man, acs = kenmotsu3
    fit = analyse(man, acs)[3]
    assert fit.as_dict(man.frame_labels) == {"kind": "fit", "k": "-2", "mu": "-2", "mu_determined": True}


def test_reeb_index_other_than_zero():
    # same structure as the reference example with the Reeb field last
    man, _ = load_builtin("kenmotsu3")
    P = rational_array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    new = change_frame(man, P)
    phi = zeros((3, 3))
    phi[1, 0], phi[0, 1] = Fraction(1), Fraction(-1)
    acs = AlmostContactStructure.build(new, phi, 2)
    assert validate_structure(new, acs).grade is Grade.ALMOST_KENMOTSU
    fit = analyse(new, acs)[3]
    assert (fit.k, fit.mu) == (-2, -2)
