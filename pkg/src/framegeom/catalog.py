"""Built-in example manifolds, all three-dimensional with an orthonormal frame."""

from __future__ import annotations

from .spec_io import build_from_document, dumps_document

_STANDARD_PHI = [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]]

BUILTINS = {
    "kenmotsu3": {
        "name": "kenmotsu3",
        "description": "non-Kenmotsu almost Kenmotsu structure with (k,mu) = (-2,-2)",
        "dimension": 3,
        "frame": ["xi", "e2", "e3"],
        "reeb_index": 0,
        "metric": "identity",
        "brackets": [
            {"i": 0, "j": 1, "coeffs": ["0", "-1", "-1"]},
            {"i": 0, "j": 2, "coeffs": ["0", "-1", "-1"]},
        ],
        "phi": _STANDARD_PHI,
    },
    "hyperbolic_kenmotsu3": {
        "name": "hyperbolic_kenmotsu3",
        "description": "Kenmotsu structure (h = 0) on hyperbolic space",
        "dimension": 3,
        "frame": ["xi", "e2", "e3"],
        "reeb_index": 0,
        "metric": "identity",
        "brackets": [
            {"i": 0, "j": 1, "coeffs": ["0", "-1", "0"]},
            {"i": 0, "j": 2, "coeffs": ["0", "0", "-1"]},
        ],
        "phi": _STANDARD_PHI,
    },
    "abelian_flat3": {
        "name": "abelian_flat3",
        "description": "flat frame with vanishing brackets",
        "dimension": 3,
        "frame": ["xi", "e2", "e3"],
        "reeb_index": 0,
        "metric": "identity",
        "brackets": [],
        "phi": _STANDARD_PHI,
    },
    "su2_round3": {
        "name": "su2_round3",
        "description": "su(2) frame with [e_i, e_{i+1}] = 2 e_{i+2} and bi-invariant metric",
        "dimension": 3,
        "frame": ["xi", "e2", "e3"],
        "reeb_index": 0,
        "metric": "identity",
        "brackets": [
            {"i": 0, "j": 1, "coeffs": ["0", "0", "2"]},
            {"i": 0, "j": 2, "coeffs": ["0", "-2", "0"]},
            {"i": 1, "j": 2, "coeffs": ["2", "0", "0"]},
        ],
        "phi": _STANDARD_PHI,
    },
}


def builtin_names() -> list[str]:
    return list(BUILTINS)


def emit_builtin_example(name: str) -> bytes:
    """Canonical document bytes for a built-in manifold."""
    if name not in BUILTINS:
        raise KeyError(name)
    return dumps_document(BUILTINS[name])


def load_builtin(name: str):
    if name not in BUILTINS:
        raise KeyError(name)
    return build_from_document(BUILTINS[name])
