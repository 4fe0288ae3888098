"""Exact rational scalars, dense frame tensors and linear solving.

Every number in the package is a :class:`fractions.Fraction`; nothing is
ever converted to floating point.  Arrays are numpy ``object`` arrays of
fractions, which keeps indexing and contraction convenient while the
arithmetic stays exact.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError, ValidationError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer literal into a fraction.

    Integers (but not floats) are also accepted so that hand-written JSON
    can use bare numbers.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value) -> str:
    """Canonical string form: ``"p"`` when the denominator is 1, else ``"p/q"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_array(values, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Convert nested sequences of numbers/strings into an object array of fractions."""
    arr = np.array(values, dtype=object)
    if shape is not None and arr.shape != shape:
        raise ShapeError(f"expected shape {shape}, got {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(arr.shape):
        out[idx] = parse_rational(arr[idx])
    return out


def zeros(shape) -> np.ndarray:
    if isinstance(shape, int):
        shape = (shape,)
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros((n, n))
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def basis_vector(n: int, i: int) -> np.ndarray:
    out = zeros(n)
    out[i] = Fraction(1)
    return out


def is_zero(arr) -> bool:
    return all(x == 0 for x in np.asarray(arr, dtype=object).flat)


def first_nonzero(arr):
    """Index of the first nonzero entry in C order, or ``None``."""
    arr = np.asarray(arr, dtype=object)
    for idx in np.ndindex(arr.shape):
        if arr[idx] != 0:
            return idx
    return None


def canonical(arr):
    """Nested lists of canonical rational strings (JSON friendly)."""
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return format_rational(arr[()])
    return [canonical(sub) for sub in arr]


@dataclass(frozen=True, eq=False)
class Tensor:
    """Dense tensor over frame indices.

    Index order is fixed: the ``contravariant`` slots come first, then the
    ``covariant`` slots.  A (1,1) tensor ``A`` therefore stores in
    ``A[i, j]`` the coefficient of ``e_i`` in ``A e_j``.
    """

    contravariant: int
    covariant: int
    entries: np.ndarray

    def __post_init__(self):
        arr = rational_array(self.entries)
        total = self.contravariant + self.covariant
        if arr.ndim != total:
            raise ShapeError(f"rank ({self.contravariant},{self.covariant}) needs {total} axes, got {arr.ndim}")
        if total and len(set(arr.shape)) != 1:
            raise ShapeError(f"all axes must have the frame dimension, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def zeros(cls, contravariant: int, covariant: int, dim: int) -> "Tensor":
        return cls(contravariant, covariant, zeros((dim,) * (contravariant + covariant)))

    @property
    def rank(self) -> tuple[int, int]:
        return (self.contravariant, self.covariant)

    @property
    def dim(self) -> int:
        return self.entries.shape[0] if self.entries.ndim else 0

    def __getitem__(self, idx):
        return self.entries[idx]

    def is_zero(self) -> bool:
        return is_zero(self.entries)

    def _check_compatible(self, other: "Tensor"):
        if self.rank != other.rank or self.entries.shape != other.entries.shape:
            raise ShapeError(f"tensor ranks/dims differ: {self.rank} vs {other.rank}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(self.contravariant, self.covariant, self.entries + other.entries)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        return Tensor(self.contravariant, self.covariant, self.entries - other.entries)

    def __neg__(self) -> "Tensor":
        return Tensor(self.contravariant, self.covariant, -self.entries)

    def scale(self, factor) -> "Tensor":
        return Tensor(self.contravariant, self.covariant, self.entries * Fraction(factor))

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.rank == other.rank and self.entries.shape == other.entries.shape and bool(
            np.all(self.entries == other.entries)
        )

    __hash__ = None

    def to_strings(self):
        return canonical(self.entries)


class SolutionKind(str, enum.Enum):
    UNIQUE = "unique"
    PARAMETRIC = "parametric"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of :func:`solve_linear`.

    For ``PARAMETRIC`` results ``particular`` has every free variable set
    to zero and ``null_space`` lists one basis vector per free variable in
    reduced-echelon order.  ``INCONSISTENT`` results carry neither.
    """

    kind: SolutionKind
    particular: tuple | None = None
    null_space: tuple = field(default_factory=tuple)

    @property
    def solvable(self) -> bool:
        return self.kind is not SolutionKind.INCONSISTENT


def _as_matrix(A) -> list[list[Fraction]]:
    rows = [list(r) for r in A]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("matrix rows have inconsistent lengths")
    return [[Fraction(x) for x in r] for r in rows]


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    m = _as_matrix(A)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def solve_linear(A, b) -> LinearSolution:
    """Solve ``A x = b`` exactly by Gauss-Jordan elimination."""
    rows = _as_matrix(A)
    rhs = [Fraction(x) for x in b]
    if len(rhs) != len(rows):
        raise ShapeError(f"right-hand side has length {len(rhs)}, matrix has {len(rows)} rows")
    n_cols = len(rows[0]) if rows else 0
    if n_cols == 0:
        if any(x != 0 for x in rhs):
            return LinearSolution(SolutionKind.INCONSISTENT)
        return LinearSolution(SolutionKind.UNIQUE, particular=())
    reduced, pivots = rref([r + [v] for r, v in zip(rows, rhs)])
    if n_cols in pivots:
        return LinearSolution(SolutionKind.INCONSISTENT)
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = reduced[r][n_cols]
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(tuple(v))
    kind = SolutionKind.PARAMETRIC if free else SolutionKind.UNIQUE
    return LinearSolution(kind, particular=tuple(x), null_space=tuple(basis))


def null_space(A) -> list[tuple]:
    """Basis of ``{x : A x = 0}``, deterministic reduced-echelon order."""
    rows = _as_matrix(A)
    return list(solve_linear(rows, [0] * len(rows)).null_space)


def residual(A, x, b) -> list[Fraction]:
    return [sum((Fraction(a) * xi for a, xi in zip(row, x)), Fraction(0)) - Fraction(bi) for row, bi in zip(A, b)]


def determinant(M) -> Fraction:
    m = _as_matrix(M)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ShapeError("determinant needs a square matrix")
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def inverse(M) -> np.ndarray:
    m = _as_matrix(M)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ShapeError("inverse needs a square matrix")
    aug = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValidationError("matrix is singular")
    return rational_array([r[n:] for r in reduced])


def is_symmetric(M) -> bool:
    arr = np.asarray(M, dtype=object)
    return arr.ndim == 2 and arr.shape[0] == arr.shape[1] and bool(np.all(arr == arr.T))


def leading_minors(M) -> list[Fraction]:
    arr = np.asarray(M, dtype=object)
    return [determinant(arr[:k, :k]) for k in range(1, arr.shape[0] + 1)]


def is_positive_definite(M) -> bool:
    """Sylvester's criterion evaluated exactly."""
    arr = np.asarray(M, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError("positive-definiteness needs a square matrix")
    if not is_symmetric(arr):
        raise ValidationError("matrix is not symmetric")
    return all(m > 0 for m in leading_minors(arr))


def solve_incrementally(rows: Iterable[tuple[Sequence, Fraction, object]], n_unknowns: int):
    """Feed equations one at a time, stopping at the first contradiction.

    ``rows`` yields ``(coefficients, rhs, tag)``.  Returns
    ``(solution, None)`` when the whole stream is consistent, or
    ``(None, tag)`` for the first equation that cannot be satisfied together
    with all earlier ones.  Only independent rows are retained, so the
    working system never exceeds ``n_unknowns + 1`` rows.
    """
    kept: list[list[Fraction]] = []
    for coeffs, rhs, tag in rows:
        candidate = kept + [[Fraction(c) for c in coeffs] + [Fraction(rhs)]]
        reduced, pivots = rref(candidate)
        if n_unknowns in pivots:
            return None, tag
        kept = [r for r in reduced if any(x != 0 for x in r)]
    if not kept:
        kept = [[Fraction(0)] * (n_unknowns + 1)]
    return solve_linear([r[:n_unknowns] for r in kept], [r[n_unknowns] for r in kept]), None
