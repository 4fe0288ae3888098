"""Manifold generators shared by the tests."""

import random
from fractions import Fraction

import numpy as np

from framegeom import AlmostContactStructure, FrameManifold, load_builtin
from framegeom.almost_contact import change_structure_frame
from framegeom.exact_algebra import determinant, identity, inverse, rational_array, zeros
from framegeom.frame import change_frame

CORPUS = ("kenmotsu3", "hyperbolic_kenmotsu3", "abelian_flat3", "su2_round3")
AKM_CORPUS = ("kenmotsu3", "hyperbolic_kenmotsu3")


def random_rational(rng, lo=-3, hi=3, max_den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def cayley_orthogonal(rng, n, block=None):
    """Rational orthogonal matrix (I - A)(I + A)^-1 for a random skew A.

    ``block`` restricts A to the given indices, leaving the others fixed.
    """
    idx = list(range(n)) if block is None else list(block)
    A = zeros((n, n))
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            v = random_rational(rng, -2, 2, 2)
            A[idx[a], idx[b]] = v
            A[idx[b], idx[a]] = -v
    I = identity(n)
    return (I - A) @ inverse(I + A)


def random_invertible(rng, n):
    while True:
        P = rational_array([[random_rational(rng, -2, 2, 2) for _ in range(n)] for _ in range(n)])
        if determinant(P) != 0:
            return P


def orthogonal_variants(count_per_manifold=30, seed=20240601):
    """Yield (source name, manifold) pairs conjugated by random rational orthogonal frames."""
    rng = random.Random(seed)
    for name in CORPUS:
        man, _ = load_builtin(name)
        for t in range(count_per_manifold):
            P = cayley_orthogonal(rng, man.dim)
            yield name, change_frame(man, P, name=f"{name}~{t}")


def reeb_fixing_variants(count_per_manifold=10, seed=7):
    """Variants of the akm corpus rotated in the contact distribution only."""
    rng = random.Random(seed)
    for name in AKM_CORPUS:
        man, acs = load_builtin(name)
        for t in range(count_per_manifold):
            P = cayley_orthogonal(rng, man.dim, block=range(1, man.dim))
            new = change_frame(man, P, name=f"{name}~{t}")
            yield name, new, change_structure_frame(acs, new, P)


def semidirect_akm(m, S):
    """Almost Kenmotsu frame with [e0, e_a] = ((-I + J^-1 S) e_a), other brackets zero.

    ``S`` is a symmetric 2m x 2m matrix; J is the fundamental 2-form on the
    contact distribution, so J^-1 S is Hamiltonian and dPhi = 2 eta ^ Phi.
    """
    n = 2 * m + 1
    J = zeros((2 * m, 2 * m))
    phi = zeros((n, n))
    for i in range(m):
        J[2 * i, 2 * i + 1] = Fraction(-1)
        J[2 * i + 1, 2 * i] = Fraction(1)
        phi[2 * i + 2, 2 * i + 1] = Fraction(1)
        phi[2 * i + 1, 2 * i + 2] = Fraction(-1)
    A = -identity(2 * m) + inverse(J) @ rational_array(S)
    brackets = {(0, a + 1): [Fraction(0)] + list(A[:, a]) for a in range(2 * m)}
    man = FrameManifold.from_brackets(f"semidirect{n}", n, brackets)
    return man, AlmostContactStructure.build(man, phi, 0)


def nullity_family(m, t):
    """(k, mu)'-nullity members: S = t * diag(1, -1, 1, -1, ...), giving k = -1 - t^2."""
    S = zeros((2 * m, 2 * m))
    for a in range(2 * m):
        S[a, a] = Fraction(t) * (1 if a % 2 == 0 else -1)
    return semidirect_akm(m, S)


def random_symmetric(rng, size):
    S = zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            S[i, j] = S[j, i] = random_rational(rng)
    return S


def as_lists(arr):
    return np.asarray(arr, dtype=object).tolist()
