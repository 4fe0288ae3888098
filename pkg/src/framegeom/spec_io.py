"""Reading and writing manifold description documents.

A document is one JSON object::

    {
      "name": "kenmotsu3",
      "dimension": 3,
      "frame": ["xi", "e2", "e3"],
      "reeb_index": 0,                     # optional, default 0
      "metric": "identity",                # optional, or a matrix of rationals
      "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "-1", "-1"]}, ...],
      "phi": [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]]
    }

``brackets`` lists ``[e_i, e_j]`` for ``i < j`` only; omitted pairs are
zero.  ``phi[r][c]`` is the coefficient of ``e_r`` in ``phi(e_c)``.  All
numbers are rational strings (``"p/q"`` or integers) so that nothing passes
through floating point.
"""

from __future__ import annotations

import json

import numpy as np

from .almost_contact import AlmostContactStructure
from .errors import ParseError, SchemaError, ValidationError
from .exact_algebra import format_rational, identity, parse_rational
from .frame import FrameManifold, bracket_table, validate_frame

_KNOWN_KEYS = {"name", "description", "dimension", "frame", "reeb_index", "metric", "brackets", "phi"}


def _rational(value, path):
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, str(exc)) from None


def _int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    return value


def _matrix(value, dim, path):
    if not isinstance(value, list) or len(value) != dim:
        raise SchemaError(path, f"expected a list of {dim} rows")
    rows = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != dim:
            raise SchemaError(f"{path}[{r}]", f"expected a row of {dim} entries")
        rows.append([_rational(x, f"{path}[{r}][{c}]") for c, x in enumerate(row)])
    return rows


def load_document(document) -> dict:
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not UTF-8: {exc}") from None
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise SchemaError("$", "document must be a JSON object")
    return data


def build_from_document(data: dict, validate: bool = True) -> tuple[FrameManifold, AlmostContactStructure]:
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise SchemaError(unknown[0], "unknown field")
    for key in ("name", "dimension", "frame", "brackets", "phi"):
        if key not in data:
            raise SchemaError(key, "missing required field")
    name = data["name"]
    if not isinstance(name, str):
        raise SchemaError("name", "expected a string")
    dim = _int(data["dimension"], "dimension")
    if dim < 1:
        raise SchemaError("dimension", "must be positive")

    frame = data["frame"]
    if not isinstance(frame, list) or len(frame) != dim or not all(isinstance(x, str) for x in frame):
        raise SchemaError("frame", f"expected a list of {dim} label strings")

    reeb = _int(data.get("reeb_index", 0), "reeb_index")
    if not 0 <= reeb < dim:
        raise SchemaError("reeb_index", f"must lie in [0, {dim})")

    metric = data.get("metric", "identity")
    if metric == "identity":
        metric = identity(dim)
    else:
        metric = _matrix(metric, dim, "metric")

    brackets_raw = data["brackets"]
    if not isinstance(brackets_raw, list):
        raise SchemaError("brackets", "expected a list")
    brackets = {}
    for n, entry in enumerate(brackets_raw):
        path = f"brackets[{n}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected an object with i, j, coeffs")
        for key in ("i", "j", "coeffs"):
            if key not in entry:
                raise SchemaError(f"{path}.{key}", "missing required field")
        extra = sorted(set(entry) - {"i", "j", "coeffs"})
        if extra:
            raise SchemaError(f"{path}.{extra[0]}", "unknown field")
        i = _int(entry["i"], f"{path}.i")
        j = _int(entry["j"], f"{path}.j")
        if not 0 <= i < j < dim:
            raise SchemaError(f"{path}", f"need 0 <= i < j < {dim}, got i={i}, j={j}")
        if (i, j) in brackets:
            raise SchemaError(f"{path}", f"duplicate bracket for ({i}, {j})")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != dim:
            raise SchemaError(f"{path}.coeffs", f"expected {dim} coefficients")
        brackets[(i, j)] = [_rational(x, f"{path}.coeffs[{c}]") for c, x in enumerate(coeffs)]

    phi = _matrix(data["phi"], dim, "phi")

    man = FrameManifold.from_brackets(name, dim, brackets, metric=metric, frame_labels=frame)
    if validate:
        report = validate_frame(man)
        if not report.passed:
            failed = ", ".join(c.name for c in report.failures())
            raise ValidationError(f"frame validation failed: {failed}", report)
    acs = AlmostContactStructure.build(man, phi, reeb)
    return man, acs


def parse_manifold_spec(document, validate: bool = True) -> tuple[FrameManifold, AlmostContactStructure]:
    """Parse and validate a document given as bytes or text."""
    return build_from_document(load_document(document), validate=validate)


def _matrix_strings(arr) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in arr]


def to_document(man: FrameManifold, acs: AlmostContactStructure, description: str | None = None) -> dict:
    doc = {"name": man.name}
    if description:
        doc["description"] = description
    doc["dimension"] = man.dim
    doc["frame"] = list(man.frame_labels)
    doc["reeb_index"] = acs.reeb_index
    doc["metric"] = "identity" if np.all(man.metric == identity(man.dim)) else _matrix_strings(man.metric)
    doc["brackets"] = bracket_table(man)
    doc["phi"] = _matrix_strings(acs.phi.entries)
    return doc


def dumps_document(doc: dict) -> bytes:
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
