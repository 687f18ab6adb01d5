"""Generalized Heisenberg-Robertson-Schrödinger uncertainty relations."""

from .bounds import (BoundReport, InequalityResult, WitnessContext, bound_report,
                     deviation_witness, eq1_value, eq2_product, eq3_product, eq4_sum,
                     mp_sum_inequality, robertson, schrodinger, witness_context)
from .exceptions import (ConstraintError, DegenerateInconsistentError, DimensionMismatchError,
                         Error, InstanceFileError, NegativeDeficitError, NonFiniteError,
                         NonRealExpectationError, NotNormalizedError, NotOrthogonalError,
                         NullPhiVectorError, ZeroVarianceError, ZeroVectorError)
from .linalg import (complement_basis, derive_seeds, inner, is_hermitian, is_normalized, norm,
                     random_hermitian, random_unit_vector, random_witness)
from .moments import (MomentSet, anticommutator, commutator, deviation_vector, expectation,
                      moment_set, variance)
from .optimize import (QuadraticForm, WitnessSearchResult, maximize_witness, minimize_alpha,
                       minimize_alpha_beta, phi_vector, quadratic_form, saturating_witness)
from .scenarios import (Spin1Instance, named_instance, pauli_operators, spin1_instance,
                        spin1_operators, spin1_state)
from .util import DEFAULT_TOLERANCES, Tolerances

__all__ = [
        "Tolerances", "DEFAULT_TOLERANCES",
        "Error", "DimensionMismatchError", "NonFiniteError", "ZeroVectorError",
        "NonRealExpectationError",
        "ConstraintError", "NotNormalizedError", "NotOrthogonalError",
        "ZeroVarianceError", "NegativeDeficitError", "DegenerateInconsistentError",
        "NullPhiVectorError", "InstanceFileError",
        "inner", "norm", "is_normalized", "is_hermitian", "complement_basis", "derive_seeds",
        "random_unit_vector", "random_hermitian", "random_witness",
        "MomentSet", "expectation", "deviation_vector", "variance", "commutator",
        "anticommutator", "moment_set",
        "WitnessContext", "InequalityResult", "BoundReport", "witness_context",
        "deviation_witness", "eq1_value", "mp_sum_inequality", "eq2_product", "eq3_product",
        "eq4_sum", "robertson", "schrodinger", "bound_report",
        "QuadraticForm", "WitnessSearchResult", "quadratic_form", "minimize_alpha",
        "minimize_alpha_beta", "phi_vector", "saturating_witness", "maximize_witness",
        "Spin1Instance", "spin1_state", "spin1_operators", "pauli_operators", "spin1_instance",
        "named_instance",
        ]
