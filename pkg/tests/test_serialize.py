import json
import math

import numpy as np
import pytest

from uncertainty_relations import (InstanceFileError, NotNormalizedError, NotOrthogonalError,
                                   Tolerances, bound_report, maximize_witness, named_instance,
                                   spin1_instance)
from uncertainty_relations.serialize import (SCAN_SCHEMA_VERSION, complex_to_pair,
                                             format_number, format_report_table,
                                             instance_to_dict, load_instance, load_json,
                                             pair_to_complex, parse_instance, parse_tolerances,
                                             report_from_dict, report_to_dict, scan_header,
                                             scan_row, search_result_to_dict)


def _spin1_dict(theta=0.0, witness=True):
    inst = spin1_instance(theta)
    return instance_to_dict(inst.a, inst.b, inst.state, inst.witness if witness else None)


def test_complex_pairs():
    assert complex_to_pair(1 - 2j) == [1.0, -2.0]
    assert complex_to_pair(3) == [3.0, 0.0]
    assert pair_to_complex([0.5, 1]) == 0.5 + 1j

    for bad in ([1.0], [1, 2, 3], "1+2j", [1, "x"], [True, 0], None, [math.nan, 0],
                [0, -math.inf]):
        with pytest.raises(InstanceFileError) as err:
            pair_to_complex(bad, "state[0]")
        assert err.value.field == "state[0]"
        assert str(err.value).startswith("state[0]: ")


def test_instance_file_error_str():
    assert str(InstanceFileError("oops")) == "oops"
    assert str(InstanceFileError("oops", field="A[1][0]")) == "A[1][0]: oops"
    assert str(InstanceFileError("oops", line=3)) == "line 3: oops"


def test_parse_instance():
    inst = spin1_instance(0.3)
    parsed = parse_instance(json.loads(json.dumps(_spin1_dict(0.3))))
    assert parsed.dimension == 3
    np.testing.assert_array_equal(parsed.state, inst.state)
    np.testing.assert_array_equal(parsed.a, inst.a)
    np.testing.assert_array_equal(parsed.b, inst.b)
    np.testing.assert_array_equal(parsed.witness, inst.witness)
    assert parsed.tolerances == Tolerances()

    parsed = parse_instance(_spin1_dict(witness=False))
    assert parsed.witness is None


def test_parse_instance_structure_errors():
    def error_field(data):
        with pytest.raises(InstanceFileError) as err:
            parse_instance(data)
        return err.value.field

    data = _spin1_dict()
    data["dimension"] = 1
    assert error_field(data) == "dimension"

    data = _spin1_dict()
    data["dimension"] = "3"
    assert error_field(data) == "dimension"

    data = _spin1_dict()
    del data["B"]
    assert error_field(data) == "B"

    data = _spin1_dict()
    data["dimension"] = 2
    assert error_field(data) == "state"

    data = _spin1_dict()
    data["A"][1] = data["A"][1][:2]
    assert error_field(data) == "A[1]"

    data = _spin1_dict()
    data["A"][1][0] = [0.5, 0.5]
    assert error_field(data) == "A"

    data = _spin1_dict()
    data["witness"] = [[0, 0], [1, 0]]
    assert error_field(data) == "witness"

    data = _spin1_dict()
    data["state"][0] = [math.nan, 0]
    assert error_field(data) == "state[0]"

    data = _spin1_dict()
    data["witness"][2] = [0, math.inf]
    assert error_field(data) == "witness[2]"

    data = _spin1_dict()
    data["B"][0][1] = [math.nan, math.nan]
    assert error_field(data) == "B[0][1]"


def test_parse_instance_constraint_errors():
    data = _spin1_dict()
    data["state"] = [[1, 0], [0, 0], [1, 0]]
    with pytest.raises(NotNormalizedError):
        parse_instance(data)

    data = _spin1_dict()
    data["witness"] = [[0, 0], [0, 0], [2, 0]]
    with pytest.raises(NotNormalizedError):
        parse_instance(data)

    data = _spin1_dict()
    s = 1 / math.sqrt(2)
    data["witness"] = [[s, 0], [s, 0], [0, 0]]
    with pytest.raises(NotOrthogonalError):
        parse_instance(data)


def test_parse_tolerances():
    data = _spin1_dict()
    assert parse_tolerances(data) == Tolerances()

    data["tolerances"] = {"orth": 1e-3, "gap": 0}
    tol = parse_tolerances(data)
    assert tol.orth == 1e-3
    assert tol.gap == 0.0
    assert tol.norm == 1e-9
    assert parse_instance(data).tolerances == tol

    data["witness"] = [[1e-4, 0], [math.sqrt(1 - 1e-8), 0], [0, 0]]
    assert parse_instance(data).witness is not None
    with pytest.raises(NotOrthogonalError):
        parse_instance(data, Tolerances())

    for bad in ({"bogus": 1.0}, {"orth": -1.0}, {"orth": "x"}, {"orth": math.nan}, [1e-3]):
        data["tolerances"] = bad
        with pytest.raises(InstanceFileError):
            parse_tolerances(data)


def test_load_json(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(_spin1_dict(0.1)), encoding="utf-8")
    instance = load_instance(str(path))
    np.testing.assert_array_equal(instance.state, spin1_instance(0.1).state)

    path.write_text('{\n  "dimension": 3,\n  "state": [\n}\n', encoding="utf-8")
    with pytest.raises(InstanceFileError) as err:
        load_json(str(path))
    assert err.value.line is not None

    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(InstanceFileError):
        load_json(str(path))

    with pytest.raises(InstanceFileError):
        load_json(str(tmp_path / "missing.json"))


def test_report_json(make_instance):
    a, b, psi, witness = make_instance(4, 1)
    for w in (witness, None):
        report = bound_report(a, b, psi, w)
        data = json.loads(json.dumps(report_to_dict(report)))
        assert report_from_dict(data) == report

    data = report_to_dict(bound_report(a, b, psi))
    assert data["witness"] is None
    assert set(data) == {"moments", "witness", "robertson", "schrodinger"}


def test_search_result_to_dict():
    a, b, psi, _ = named_instance("qubit-xy")
    result = maximize_witness(a, b, psi, "mp_rhs", restarts=1, iters=5, seed=4)
    report = bound_report(a, b, psi, result.witness)
    data = json.loads(json.dumps(search_result_to_dict(result, "mp_rhs", report)))
    assert data["objective_name"] == "mp_rhs"
    assert data["objective"] == result.objective
    assert data["seed"] == 4
    assert len(data["witness"]) == 2
    assert data["report"]["mp_plus"]["rhs"] == pytest.approx(result.objective)


def test_format_number():
    assert format_number(0.1) == "0.10000000000000001"
    assert float(format_number(math.pi)) == math.pi
    assert format_number(1.0) == "1"


def test_scan_row():
    assert SCAN_SCHEMA_VERSION == 1
    header = scan_header()
    assert len(header) == 29
    assert header[:5] == ["theta", "robertson_lhs", "robertson_rhs", "robertson_gap",
                          "robertson_trivial"]
    assert header[-1] == "mp_minus_trivial"

    inst = spin1_instance(math.pi / 3)
    report = bound_report(inst.a, inst.b, inst.state, inst.witness)
    row = scan_row(math.pi / 3, report)
    assert len(row) == len(header)
    values = dict(zip(header, row))
    assert float(values["theta"]) == math.pi / 3
    assert values["eq3_trivial"] == "1"
    assert values["eq4_trivial"] == "0"
    assert float(values["eq4_lhs"]) == report.eq4.lhs


def test_format_report_table():
    a, b, psi, witness = named_instance("qubit-xy")
    table = format_report_table(bound_report(a, b, psi, witness))
    lines = table.splitlines()
    assert lines[0] == "<A> = 0  <B> = 0"
    assert "deficit A = 0  deficit B = 0" in lines
    names = [line.split()[0] for line in lines[lines.index("") + 2:]]
    assert names == ["robertson", "schrodinger", "eq2", "eq3", "eq4", "mp_plus", "mp_minus"]

    table = format_report_table(bound_report(a, b, psi))
    assert "deficit" not in table
    assert "eq2" not in table
