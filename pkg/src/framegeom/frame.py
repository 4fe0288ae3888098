"""Manifolds described by a global frame with constant brackets and metric."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .checks import Check, CheckList
from .errors import ShapeError
from .exact_algebra import (
    Tensor,
    canonical,
    format_rational,
    identity,
    inverse,
    is_positive_definite,
    is_symmetric,
    rational_array,
    zeros,
)


@dataclass(frozen=True, eq=False)
class FrameManifold:
    """A frame ``e_0 .. e_{n-1}`` with ``[e_i, e_j] = sum_k c[k, i, j] e_k``.

    Both the structure constants and the metric ``g[i, j] = g(e_i, e_j)``
    are constant.  Nothing beyond shapes is checked here; broken inputs can
    be built on purpose and caught later by :func:`validate_frame`.
    """

    name: str
    structure_constants: Tensor
    metric: np.ndarray
    frame_labels: tuple[str, ...]

    def __post_init__(self):
        c = self.structure_constants
        if c.rank != (1, 2):
            raise ShapeError(f"structure constants must be a (1,2) tensor, got {c.rank}")
        n = c.dim
        metric = rational_array(self.metric)
        if metric.shape != (n, n):
            raise ShapeError(f"metric must be {n}x{n}, got {metric.shape}")
        metric.flags.writeable = False
        object.__setattr__(self, "metric", metric)
        labels = tuple(self.frame_labels)
        if len(labels) != n:
            raise ShapeError(f"expected {n} frame labels, got {len(labels)}")
        object.__setattr__(self, "frame_labels", labels)

    @property
    def dim(self) -> int:
        return self.structure_constants.dim

    @property
    def c(self) -> np.ndarray:
        return self.structure_constants.entries

    @property
    def metric_inverse(self) -> np.ndarray:
        return inverse(self.metric)

    @classmethod
    def from_brackets(cls, name, dim, brackets, metric=None, frame_labels=None):
        """Build from ``{(i, j): coeffs}`` for ``i < j``; omitted pairs are zero."""
        c = zeros((dim, dim, dim))
        for (i, j), coeffs in brackets.items():
            coeffs = rational_array(coeffs, (dim,))
            c[:, i, j] = coeffs
            c[:, j, i] = -coeffs
        if metric is None:
            metric = identity(dim)
        if frame_labels is None:
            frame_labels = [f"e{i}" for i in range(dim)]
        return cls(name, Tensor(1, 2, c), metric, tuple(frame_labels))

    def inner(self, X, Y) -> Fraction:
        return np.asarray(X, dtype=object) @ self.metric @ np.asarray(Y, dtype=object)

    def lower(self, X) -> np.ndarray:
        """Covector ``g(X, .)``."""
        return self.metric @ np.asarray(X, dtype=object)

    def bracket_matrix(self, X) -> np.ndarray:
        """Matrix of ``ad_X``: column ``j`` holds ``[X, e_j]``."""
        X = _vector(X, self.dim)
        return np.einsum("kij,i->kj", self.c, X)


def _vector(X, dim) -> np.ndarray:
    X = rational_array(X)
    if X.shape != (dim,):
        raise ShapeError(f"vector of length {dim} expected, got shape {X.shape}")
    return X


def bracket(man: FrameManifold, X, Y) -> np.ndarray:
    """Lie bracket of two constant-coefficient fields."""
    X = _vector(X, man.dim)
    Y = _vector(Y, man.dim)
    return np.einsum("kij,i,j->k", man.c, X, Y)


def jacobiator(man: FrameManifold) -> np.ndarray:
    """``J[m, i, j, k]``: coefficient of ``e_m`` in the cyclic Jacobi sum."""
    c = man.c
    # [e_i, [e_j, e_k]] = c[l, j, k] c[m, i, l]
    term = np.einsum("ljk,mil->mijk", c, c)
    return term + term.transpose(0, 2, 3, 1) + term.transpose(0, 3, 1, 2)


def validate_frame(man: FrameManifold) -> CheckList:
    n = man.dim
    c = man.c
    checks = []

    bad = next(
        ((k, i, j) for k, i, j in itertools.product(range(n), repeat=3) if c[k, i, j] != -c[k, j, i]),
        None,
    )
    checks.append(
        Check("antisymmetry", bad is None, {} if bad is None else {"witness": {"k": bad[0], "i": bad[1], "j": bad[2]}})
    )

    J = jacobiator(man)
    bad = next(
        ((i, j, k, m) for i, j, k in itertools.combinations(range(n), 3) for m in range(n) if J[m, i, j, k] != 0),
        None,
    )
    detail = {}
    if bad is not None:
        i, j, k, m = bad
        detail = {"witness": {"i": i, "j": j, "k": k}, "value": canonical(J[:, i, j, k])}
    checks.append(Check("jacobi", bad is None, detail))

    symmetric = is_symmetric(man.metric)
    spd = symmetric and is_positive_definite(man.metric)
    checks.append(Check("metric_positive_definite", spd, {"symmetric": symmetric}))

    checks.append(Check("odd_dimension", n >= 3 and n % 2 == 1, {"dimension": n}))
    return CheckList(tuple(checks))


def change_frame(man: FrameManifold, P, name: str | None = None) -> FrameManifold:
    """Re-express the manifold in the frame ``e'_a = sum_b P[b, a] e_b``."""
    P = rational_array(P, (man.dim, man.dim))
    Pinv = inverse(P)
    # contract one index at a time; a single four-operand einsum is O(n^7)
    t = np.einsum("kij,ia->kaj", man.c, P)
    t = np.einsum("kaj,jb->kab", t, P)
    c_new = np.einsum("dk,kab->dab", Pinv, t)
    g_new = P.T @ man.metric @ P
    return FrameManifold(name or man.name, Tensor(1, 2, c_new), g_new, man.frame_labels)


def bracket_table(man: FrameManifold) -> list[dict]:
    """Nonzero brackets ``[e_i, e_j]`` for ``i < j`` in canonical form."""
    rows = []
    for i, j in itertools.combinations(range(man.dim), 2):
        coeffs = man.c[:, i, j]
        if any(x != 0 for x in coeffs):
            rows.append({"i": i, "j": j, "coeffs": [format_rational(x) for x in coeffs]})
    return rows
