"""Instance files, JSON reports, CSV scan rows and text tables.

Complex numbers are written as ``[re, im]`` pairs in JSON and as two
adjacent ``_re``/``_im`` columns in CSV.
"""

import json
from typing import Any, Dict, List, NamedTuple, Optional

import numpy as np

from .bounds import INEQUALITY_NAMES, BoundReport, InequalityResult, WitnessContext
from .exceptions import InstanceFileError, NotOrthogonalError
from .linalg import is_hermitian
from .moments import MomentSet
from .optimize import WitnessSearchResult
from .util import (DEFAULT_TOLERANCES, ComplexVector, HermitianMatrix, Tolerances,
                   _ensure_normalized, _frozen)

SCAN_SCHEMA_VERSION = 1
SCAN_COLUMNS = ("lhs", "rhs", "gap", "trivial")


class Instance(NamedTuple):
    """Parsed and validated instance file."""
    dimension: int
    state: ComplexVector
    a: HermitianMatrix
    b: HermitianMatrix
    witness: Optional[ComplexVector]
    tolerances: Tolerances


def complex_to_pair(value: complex) -> List[float]:
    value = complex(value)
    return [value.real, value.imag]


def pair_to_complex(value: Any, field: str = "value") -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)):
        raise InstanceFileError("expected a [re, im] pair of numbers", field=field)
    if not all(np.isfinite(value)):
        raise InstanceFileError("non-finite number", field=field)
    return complex(float(value[0]), float(value[1]))


def vector_to_list(vector: ComplexVector) -> List[List[float]]:
    return [complex_to_pair(x) for x in vector]


def matrix_to_list(matrix: HermitianMatrix) -> List[List[List[float]]]:
    return [vector_to_list(row) for row in matrix]


def _parse_vector(value: Any, dim: int, field: str) -> ComplexVector:
    if not isinstance(value, list):
        raise InstanceFileError("expected a list of [re, im] pairs", field=field)
    if len(value) != dim:
        raise InstanceFileError(f"expected {dim} entries, got {len(value)}", field=field)
    return _frozen(np.array([pair_to_complex(x, f"{field}[{i}]") for i, x in enumerate(value)],
                            dtype=np.complex128))


def _parse_matrix(value: Any, dim: int, field: str) -> HermitianMatrix:
    if not isinstance(value, list):
        raise InstanceFileError("expected a list of rows", field=field)
    if len(value) != dim:
        raise InstanceFileError(f"expected {dim} rows, got {len(value)}", field=field)
    rows = [_parse_vector(row, dim, f"{field}[{i}]") for i, row in enumerate(value)]
    return _frozen(np.array(rows))


def load_json(path: str) -> Dict[str, Any]:
    """Read a UTF-8 JSON instance file into a dictionary."""
    try:
        with open(path, encoding="utf-8") as json_f:
            data = json.load(json_f)
    except json.JSONDecodeError as err:
        raise InstanceFileError(err.msg, line=err.lineno) from err
    except OSError as err:
        raise InstanceFileError(f"cannot read {path}: {err.strerror}") from err
    if not isinstance(data, dict):
        raise InstanceFileError("top-level JSON value must be an object")
    return data


def parse_tolerances(data: Dict[str, Any],
                     base: Tolerances = DEFAULT_TOLERANCES) -> Tolerances:
    """Tolerance overrides from the optional ``tolerances`` object."""
    overrides = data.get("tolerances")
    if overrides is None:
        return base
    if not isinstance(overrides, dict):
        raise InstanceFileError("expected an object", field="tolerances")
    for key, value in overrides.items():
        if key not in Tolerances._fields:
            raise InstanceFileError("unknown tolerance", field=f"tolerances.{key}")
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not value >= 0:
            raise InstanceFileError("expected a non-negative number",
                                    field=f"tolerances.{key}")
    return base._replace(**{k: float(v) for k, v in overrides.items()})


def parse_instance(data: Dict[str, Any], tol: Optional[Tolerances] = None) -> Instance:
    """Validate an instance dictionary.

    :param data: decoded JSON object
    :param tol: tolerances to validate with; defaults to the file's own

    :raises InstanceFileError: malformed structure, inconsistent
                               dimensions or non-Hermitian observables
    :raises NotNormalizedError: state or witness is not a unit vector
    :raises NotOrthogonalError: witness is not orthogonal to the state
    """
    if tol is None:
        tol = parse_tolerances(data)
    dim = data.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 2:
        raise InstanceFileError("expected an integer >= 2", field="dimension")
    for key in ("state", "A", "B"):
        if key not in data:
            raise InstanceFileError("missing field", field=key)
    state = _parse_vector(data["state"], dim, "state")
    a = _parse_matrix(data["A"], dim, "A")
    b = _parse_matrix(data["B"], dim, "B")
    for name, matrix in (("A", a), ("B", b)):
        if not is_hermitian(matrix, tol.herm):
            raise InstanceFileError("matrix is not Hermitian", field=name)
    _ensure_normalized(state, tol.norm, "state")
    witness = None
    if data.get("witness") is not None:
        witness = _parse_vector(data["witness"], dim, "witness")
        _ensure_normalized(witness, tol.norm, "witness")
        overlap = abs(np.vdot(state, witness))
        if not overlap <= tol.orth:
            raise NotOrthogonalError(
                    f"witness is not orthogonal to state (|⟨ψ|ψ⊥⟩| = {overlap!r})")
    return Instance(dimension=dim, state=state, a=a, b=b, witness=witness, tolerances=tol)


def load_instance(path: str, tol: Optional[Tolerances] = None) -> Instance:
    return parse_instance(load_json(path), tol)


def instance_to_dict(a: HermitianMatrix, b: HermitianMatrix, state: ComplexVector,
                     witness: Optional[ComplexVector] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "dimension": int(len(state)),
        "state": vector_to_list(state),
        "A": matrix_to_list(a),
        "B": matrix_to_list(b),
    }
    if witness is not None:
        data["witness"] = vector_to_list(witness)
    return data


def _result_to_dict(result: InequalityResult) -> Dict[str, Any]:
    return {"lhs": result.lhs, "rhs": result.rhs, "gap": result.gap, "trivial": result.trivial}


def _result_from_dict(data: Dict[str, Any]) -> InequalityResult:
    return InequalityResult(lhs=float(data["lhs"]), rhs=float(data["rhs"]),
                            gap=float(data["gap"]), trivial=bool(data["trivial"]))


def report_to_dict(report: BoundReport) -> Dict[str, Any]:
    moments = report.moments
    data: Dict[str, Any] = {
        "moments": {
            "mean_a": moments.mean_a,
            "mean_b": moments.mean_b,
            "var_a": moments.var_a,
            "var_b": moments.var_b,
            "overlap": complex_to_pair(moments.overlap),
            "comm": complex_to_pair(moments.comm),
            "acov": moments.acov,
        },
        "witness": None,
    }
    if report.witness is not None:
        ctx = report.witness
        data["witness"] = {
            "overlap1": complex_to_pair(ctx.overlap1),
            "overlap2": complex_to_pair(ctx.overlap2),
            "cross": complex_to_pair(ctx.cross),
            "deficit_a": ctx.deficit_a,
            "deficit_b": ctx.deficit_b,
        }
    for name, result in report.results().items():
        data[name] = _result_to_dict(result)
    return data


def report_from_dict(data: Dict[str, Any]) -> BoundReport:
    m = data["moments"]
    moments = MomentSet(
            mean_a=float(m["mean_a"]),
            mean_b=float(m["mean_b"]),
            var_a=float(m["var_a"]),
            var_b=float(m["var_b"]),
            overlap=pair_to_complex(m["overlap"], "moments.overlap"),
            comm=pair_to_complex(m["comm"], "moments.comm"),
            acov=float(m["acov"]),
            )
    witness = None
    w = data.get("witness")
    if w is not None:
        witness = WitnessContext(
                overlap1=pair_to_complex(w["overlap1"], "witness.overlap1"),
                overlap2=pair_to_complex(w["overlap2"], "witness.overlap2"),
                cross=pair_to_complex(w["cross"], "witness.cross"),
                deficit_a=float(w["deficit_a"]),
                deficit_b=float(w["deficit_b"]),
                )
    results = {name: _result_from_dict(data[name])
               for name in INEQUALITY_NAMES if data.get(name) is not None}
    return BoundReport(moments=moments, witness=witness, **results)


def search_result_to_dict(result: WitnessSearchResult, objective: str,
                          report: BoundReport) -> Dict[str, Any]:
    return {
        "objective_name": objective,
        "objective": result.objective,
        "witness": vector_to_list(result.witness),
        "evaluations": result.evaluations,
        "seed": result.seed,
        "report": report_to_dict(report),
    }


def format_number(value: float) -> str:
    """Machine format: 17 significant digits, exact for doubles."""
    return f"{value:.17g}"


def scan_header() -> List[str]:
    header = ["theta"]
    for name in INEQUALITY_NAMES:
        header.extend(f"{name}_{column}" for column in SCAN_COLUMNS)
    return header


def scan_row(theta: float, report: BoundReport) -> List[str]:
    """One CSV row; every inequality must be present in `report`."""
    row = [format_number(theta)]
    for name in INEQUALITY_NAMES:
        result: InequalityResult = getattr(report, name)
        row.extend([format_number(result.lhs), format_number(result.rhs),
                    format_number(result.gap), "1" if result.trivial else "0"])
    return row


def _g6(value: float) -> str:
    return f"{value:.6g}"


def _c6(value: complex) -> str:
    return f"{value.real:.6g}{value.imag:+.6g}i"


def format_report_table(report: BoundReport) -> str:
    """Human-readable report, 6 significant digits."""
    m = report.moments
    lines = [
        f"<A> = {_g6(m.mean_a)}  <B> = {_g6(m.mean_b)}",
        f"dA^2 = {_g6(m.var_a)}  dB^2 = {_g6(m.var_b)}",
        f"<psi1|psi2> = {_c6(m.overlap)}  <[A,B]> = {_c6(m.comm)}  "
        f"<{{A,B}}>-2<A><B> = {_g6(m.acov)}",
    ]
    if report.witness is not None:
        w = report.witness
        lines.append(f"<w|psi1> = {_c6(w.overlap1)}  <w|psi2> = {_c6(w.overlap2)}  "
                     f"z = {_c6(w.cross)}")
        lines.append(f"deficit A = {_g6(w.deficit_a)}  deficit B = {_g6(w.deficit_b)}")
    lines.append("")
    lines.append(f"{'inequality':<12} {'lhs':>14} {'rhs':>14} {'gap':>14}  trivial")
    for name, result in report.results().items():
        lines.append(f"{name:<12} {_g6(result.lhs):>14} {_g6(result.rhs):>14} "
                     f"{_g6(result.gap):>14}  {'yes' if result.trivial else 'no'}")
    return "\n".join(lines)


__all__ = ["SCAN_SCHEMA_VERSION", "Instance", "complex_to_pair", "pair_to_complex",
           "vector_to_list", "matrix_to_list", "load_json", "parse_tolerances",
           "parse_instance", "load_instance", "instance_to_dict", "report_to_dict",
           "report_from_dict", "search_result_to_dict", "format_number", "scan_header",
           "scan_row", "format_report_table"]
