import json

import pytest

from framegeom import parse_manifold_spec
from framegeom.catalog import BUILTINS, builtin_names, emit_builtin_example
from framegeom.errors import ParseError, SchemaError, ValidationError
from framegeom.exact_algebra import identity
from framegeom.spec_io import dumps_document, to_document


def doc(**overrides):
    base = json.loads(emit_builtin_example("kenmotsu3"))
    base.update(overrides)
    return json.dumps(base)


@pytest.mark.parametrize("name", list(BUILTINS))
def test_emit_parse_emit_round_trip(name):
    raw = emit_builtin_example(name)
    man, acs = parse_manifold_spec(raw)
    description = json.loads(raw).get("description")
    assert dumps_document(to_document(man, acs, description)) == raw


def test_emitted_bytes_are_canonical():
    raw = emit_builtin_example("kenmotsu3")
    assert raw.endswith(b"\n")
    assert raw.decode("utf-8").startswith('{\n  "name": "kenmotsu3"')


def test_builtin_names():
    assert builtin_names() == ["kenmotsu3", "hyperbolic_kenmotsu3", "abelian_flat3", "su2_round3"]
    with pytest.raises(KeyError):
        emit_builtin_example("nope")


def test_metric_defaults_to_identity():
    data = json.loads(doc())
    del data["metric"]
    man, _ = parse_manifold_spec(json.dumps(data))
    assert (man.metric == identity(3)).all()


def test_explicit_metric_matrix():
    man, _ = parse_manifold_spec(doc(metric=[["2", "0", "0"], ["0", "1", "0"], ["0", "0", "1/2"]]))
    assert man.metric[2, 2] * 2 == 1


def test_zero_denominator_reports_path():
    data = json.loads(doc())
    data["brackets"][0]["coeffs"][1] = "1/0"
    with pytest.raises(SchemaError) as info:
        parse_manifold_spec(json.dumps(data))
    assert info.value.path == "brackets[0].coeffs[1]"


@pytest.mark.parametrize(
    "mutate,path",
    [
        (lambda d: d.pop("phi"), "phi"),
        (lambda d: d.update(extra=1), "extra"),
        (lambda d: d.update(dimension="3"), "dimension"),
        (lambda d: d.update(reeb_index=5), "reeb_index"),
        (lambda d: d["brackets"].append({"i": 1, "j": 0, "coeffs": ["0", "0", "0"]}), "brackets[2]"),
        (lambda d: d["brackets"].append({"i": 0, "j": 1, "coeffs": ["0", "0", "0"]}), "brackets[2]"),
        (lambda d: d["brackets"][1].update(coeffs=["0"]), "brackets[1].coeffs"),
        (lambda d: d["phi"][2].pop(), "phi[2]"),
        (lambda d: d["phi"][0].__setitem__(0, 1.5), "phi[0][0]"),
        (lambda d: d.update(frame=["a", "b"]), "frame"),
    ],
)
def test_schema_errors_name_the_field(mutate, path):
    data = json.loads(doc())
    mutate(data)
    with pytest.raises(SchemaError) as info:
        parse_manifold_spec(json.dumps(data))
    assert info.value.path == path


def test_malformed_json_reports_position():
    with pytest.raises(ParseError, match="line 1, column"):
        parse_manifold_spec(b"{not json")


def test_non_object_document():
    with pytest.raises(SchemaError):
        parse_manifold_spec("[1, 2]")


def test_jacobi_violation_is_a_validation_error():
    data = json.loads(doc())
    data["brackets"] = [
        {"i": 0, "j": 1, "coeffs": ["0", "0", "1"]},
        {"i": 0, "j": 2, "coeffs": ["1", "0", "0"]},
        {"i": 1, "j": 2, "coeffs": ["0", "1", "0"]},
    ]
    with pytest.raises(ValidationError) as info:
        parse_manifold_spec(json.dumps(data))
    assert info.value.report["jacobi"].passed is False
    # validation can be skipped explicitly
    parse_manifold_spec(json.dumps(data), validate=False)
