"""Levi-Civita connection, curvature, exterior and Lie derivatives.

All fields handled here have constant coefficients in the frame, so every
derivative of a component function vanishes and the calculus reduces to
finite sums over structure constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ShapeError, UnsupportedRankError, ValidationError
from .exact_algebra import Tensor, zeros
from .frame import FrameManifold, _vector


@dataclass(frozen=True)
class ConnectionData:
    """``gamma[k, i, j]`` is the coefficient of ``e_k`` in ``nabla_{e_i} e_j``."""

    gamma: Tensor

    def covariant(self, i: int, Y) -> np.ndarray:
        """``nabla_{e_i} Y`` for a constant-coefficient field ``Y``."""
        return self.gamma.entries[:, i, :] @ np.asarray(Y, dtype=object)

    def along(self, X, Y) -> np.ndarray:
        """``nabla_X Y`` for constant-coefficient ``X`` and ``Y``."""
        return np.einsum("kij,i,j->k", self.gamma.entries, np.asarray(X, dtype=object), np.asarray(Y, dtype=object))

    def derivative_matrix(self, X) -> np.ndarray:
        """Matrix whose column ``i`` is ``nabla_{e_i} X``."""
        return np.einsum("kij,j->ki", self.gamma.entries, np.asarray(X, dtype=object))


@dataclass(frozen=True)
class CurvatureData:
    """Riemann, Ricci and scalar curvature.

    ``riemann[l, i, j, k]`` is the coefficient of ``e_l`` in
    ``R(e_i, e_j) e_k``; ``ricci_operator[i, j]`` the coefficient of ``e_i``
    in ``Q e_j``.
    """

    riemann: Tensor
    ricci: Tensor
    ricci_operator: Tensor
    scalar: Fraction

    def apply(self, X, Y, Z) -> np.ndarray:
        """``R(X, Y) Z`` for constant-coefficient fields."""
        a = [np.asarray(v, dtype=object) for v in (X, Y, Z)]
        return np.einsum("lijk,i,j,k->l", self.riemann.entries, *a)


def lowered_christoffel(man: FrameManifold) -> np.ndarray:
    """``G[i, j, k] = g(nabla_{e_i} e_j, e_k)`` by the Koszul formula."""
    # cl[i, j, k] = g([e_i, e_j], e_k)
    cl = np.einsum("lij,lk->ijk", man.c, man.metric)
    koszul = cl - cl.transpose(2, 0, 1) + cl.transpose(1, 2, 0)
    return koszul * Fraction(1, 2)


def connection(man: FrameManifold) -> ConnectionData:
    lowered = lowered_christoffel(man)
    gamma = np.einsum("mk,ijk->mij", man.metric_inverse, lowered)
    return ConnectionData(Tensor(1, 2, gamma))


def torsion(man: FrameManifold, conn: ConnectionData) -> np.ndarray:
    """``T[k, i, j]`` of ``nabla_{e_i} e_j - nabla_{e_j} e_i - [e_i, e_j]``."""
    g = conn.gamma.entries
    return g - g.transpose(0, 2, 1) - man.c


def metric_derivative(man: FrameManifold, conn: ConnectionData) -> np.ndarray:
    """``(nabla_{e_i} g)(e_j, e_k)``; constant metric so only the Gamma terms survive."""
    lowered = np.einsum("mij,mk->ijk", conn.gamma.entries, man.metric)
    return -(lowered + lowered.transpose(0, 2, 1))


def riemann_tensor(man: FrameManifold, conn: ConnectionData) -> np.ndarray:
    G = conn.gamma.entries
    nn = np.einsum("lim,mjk->lijk", G, G)
    return nn - nn.transpose(0, 2, 1, 3) - np.einsum("mij,lmk->lijk", man.c, G)


def curvature(man: FrameManifold, conn: ConnectionData | None = None) -> CurvatureData:
    conn = conn or connection(man)
    R = riemann_tensor(man, conn)
    # S(U, V) = trace(W -> R(W, U) V); equals the g-orthonormal contraction.
    ricci = np.einsum("iiuv->uv", R)
    # Q[i, k] = coefficient of e_i in Q e_k, from S(U, V) = g(QU, V).
    Q = man.metric_inverse @ ricci
    scalar = sum((Q[i, i] for i in range(man.dim)), Fraction(0))
    return CurvatureData(Tensor(1, 3, R), Tensor(0, 2, ricci), Tensor(1, 1, Q), scalar)


def first_bianchi(curv: CurvatureData) -> np.ndarray:
    R = curv.riemann.entries
    return R + R.transpose(0, 2, 3, 1) + R.transpose(0, 3, 1, 2)


def lowered_riemann(man: FrameManifold, curv: CurvatureData) -> np.ndarray:
    """``Rl[i, j, k, w] = g(R(e_i, e_j) e_k, e_w)``."""
    return np.einsum("lijk,lw->ijkw", curv.riemann.entries, man.metric)


# -- differential forms ----------------------------------------------------


def is_alternating(arr: np.ndarray) -> bool:
    p = arr.ndim
    for perm in itertools.permutations(range(p)):
        sign = _perm_sign(perm)
        if not np.all(arr.transpose(perm) == arr * sign):
            return False
    return True


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def exterior_derivative(man: FrameManifold, omega: Tensor) -> Tensor:
    """Exterior derivative of a form with constant components.

    ``d omega(X_0..X_p) = sum_{i<j} (-1)^(i+j) omega([X_i, X_j], X_0..^i..^j..X_p)``.
    """
    if omega.contravariant != 0 or omega.covariant < 1:
        raise UnsupportedRankError(f"exterior derivative needs a (0,p) form with p >= 1, got {omega.rank}")
    w = omega.entries
    if w.shape[0] != man.dim:
        raise ShapeError("form dimension does not match the manifold")
    if not is_alternating(w):
        raise ValidationError("form is not alternating")
    p = omega.covariant
    n = man.dim
    out = zeros((n,) * (p + 1))
    for idx in itertools.product(range(n), repeat=p + 1):
        total = Fraction(0)
        for i, j in itertools.combinations(range(p + 1), 2):
            rest = tuple(idx[s] for s in range(p + 1) if s not in (i, j))
            br = man.c[:, idx[i], idx[j]]
            term = sum((br[k] * w[(k,) + rest] for k in range(n) if br[k] != 0), Fraction(0))
            total += (-1) ** (i + j) * term
        out[idx] = total
    return Tensor(0, p + 1, out)


def wedge(alpha: Tensor, beta: Tensor) -> Tensor:
    """Wedge product as a signed sum over shuffles, with no factorial prefactor.

    For a 1-form and a 2-form this is
    ``eta(X) Phi(Y, Z) - eta(Y) Phi(X, Z) + eta(Z) Phi(X, Y)``.
    """
    if alpha.contravariant or beta.contravariant:
        raise UnsupportedRankError("wedge is defined for covariant forms only")
    p, q = alpha.covariant, beta.covariant
    n = alpha.dim
    out = zeros((n,) * (p + q))
    shuffles = []
    for first in itertools.combinations(range(p + q), p):
        second = tuple(s for s in range(p + q) if s not in first)
        shuffles.append((first, second, _perm_sign(first + second)))
    for idx in itertools.product(range(n), repeat=p + q):
        total = Fraction(0)
        for first, second, sign in shuffles:
            total += sign * alpha.entries[tuple(idx[s] for s in first)] * beta.entries[tuple(idx[s] for s in second)]
        out[idx] = total
    return Tensor(0, p + q, out)


# -- Lie derivatives -------------------------------------------------------

_LIE_RANKS = {(1, 0), (0, 1), (0, 2), (1, 1), (1, 3)}


def lie_derivative(man: FrameManifold, X, T: Tensor) -> Tensor:
    """Lie derivative of ``T`` along the constant field ``X``.

    Component functions are constant, so only the bracket terms remain:
    ``(L_X T)(U..) = [X, T(U..)] - sum_s T(.., [X, U_s], ..)``.
    Supported ranks: (1,0), (0,1), (0,2), (1,1), (1,3).
    """
    if T.rank not in _LIE_RANKS:
        raise UnsupportedRankError(f"Lie derivative not supported for rank {T.rank}")
    if T.dim != man.dim:
        raise ShapeError("tensor dimension does not match the manifold")
    A = man.bracket_matrix(_vector(X, man.dim))
    t = T.entries
    out = zeros(t.shape)
    total = t.ndim
    for axis in range(total):
        if axis < T.contravariant:
            # [X, T(..)]: act with ad_X on the output slot
            moved = np.tensordot(A, t, axes=([1], [axis]))
        else:
            # -T(.., [X, U], ..): feed ad_X into the input slot
            moved = -np.tensordot(t, A, axes=([axis], [0]))
            moved = np.moveaxis(moved, -1, 0)
        out = out + np.moveaxis(moved, 0, axis)
    return Tensor(T.contravariant, T.covariant, out)


def metric_lie_derivative(man: FrameManifold, X, conn: ConnectionData | None = None) -> np.ndarray:
    """``(L_X g)(U, V) = g(nabla_U X, V) + g(U, nabla_V X)``."""
    conn = conn or connection(man)
    D = conn.derivative_matrix(_vector(X, man.dim))
    lowered = man.metric @ D  # lowered[v, u] = g(nabla_{e_u} X, e_v)
    return lowered.T + lowered


def lie_derivative_connection(man: FrameManifold, X, conn: ConnectionData | None = None) -> np.ndarray:
    """``(L_X nabla)(e_i, e_j) = [X, nabla_i e_j] - nabla_{[X, e_i]} e_j - nabla_i [X, e_j]``."""
    conn = conn or connection(man)
    A = man.bracket_matrix(_vector(X, man.dim))
    G = conn.gamma.entries
    return np.einsum("kl,lij->kij", A, G) - np.einsum("li,klj->kij", A, G) - np.einsum("kil,lj->kij", G, A)


def covariant_derivative_endomorphism(conn: ConnectionData, A: Tensor) -> np.ndarray:
    """``D[k, i, j]``: coefficient of ``e_k`` in ``(nabla_{e_i} A) e_j``."""
    if A.rank != (1, 1):
        raise UnsupportedRankError("covariant derivative implemented for (1,1) tensors only")
    G = conn.gamma.entries
    a = A.entries
    return np.einsum("kil,lj->kij", G, a) - np.einsum("kl,lij->kij", a, G)


def m_of(man: FrameManifold) -> int:
    """``m`` with ``dim = 2m + 1``."""
    return (man.dim - 1) // 2
