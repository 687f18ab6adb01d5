"""First and second moments of an observable pair on a pure state."""

from typing import NamedTuple, Tuple

import numpy as np
from numpy.typing import ArrayLike

from .exceptions import NonRealExpectationError
from .util import (DEFAULT_TOLERANCES, ComplexVector, HermitianMatrix, Tolerances,
                   _ensure_normalized, _ensure_same_dim, _ensure_square, _ensure_vector, _frozen)


class MomentSet(NamedTuple):
    """Scalar moments of an ``(A, B, ψ)`` triple.

    :ivar mean_a: ⟨A⟩
    :ivar mean_b: ⟨B⟩
    :ivar var_a: ΔA²
    :ivar var_b: ΔB²
    :ivar overlap: ⟨ψ1|ψ2⟩ with ψ1 = (A − ⟨A⟩)ψ, ψ2 = (B − ⟨B⟩)ψ
    :ivar comm: ⟨[A,B]⟩ = ⟨AB⟩ − ⟨BA⟩ (purely imaginary, not multiplied by i)
    :ivar acov: ⟨{A,B}⟩ − 2⟨A⟩⟨B⟩
    """
    mean_a: float
    mean_b: float
    var_a: float
    var_b: float
    overlap: complex
    comm: complex
    acov: float


def _prepare(observable: ArrayLike, psi: ArrayLike,
             tol: Tolerances) -> Tuple[HermitianMatrix, ComplexVector]:
    observable = _ensure_square(observable, "observable")
    psi = _ensure_vector(psi, "psi")
    _ensure_same_dim(observable, psi)
    _ensure_normalized(psi, tol.norm, "psi")
    return observable, psi


def _real_part(value: complex, tol: Tolerances, what: str) -> float:
    if abs(value.imag) > tol.imag * (1.0 + abs(value.real)):
        raise NonRealExpectationError(f"{what} has imaginary part {value.imag!r}")
    return float(value.real)


def _sandwich(psi: ComplexVector, matrix: np.ndarray) -> complex:
    return complex(np.vdot(psi, matrix @ psi))


def expectation(observable: ArrayLike, psi: ArrayLike,
                tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """⟨ψ|A|ψ⟩ for a unit state ψ.

    :raises NotNormalizedError: ψ is not a unit vector
    :raises NonRealExpectationError: the observable is not Hermitian
    """
    observable, psi = _prepare(observable, psi, tol)
    return _real_part(_sandwich(psi, observable), tol, "⟨ψ|A|ψ⟩")


def deviation_vector(observable: ArrayLike, psi: ArrayLike,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexVector:
    """(A − ⟨A⟩)ψ, orthogonal to ψ and usually not normalized."""
    observable, psi = _prepare(observable, psi, tol)
    mean = _real_part(_sandwich(psi, observable), tol, "⟨ψ|A|ψ⟩")
    return _frozen(observable @ psi - mean * psi)


def variance(observable: ArrayLike, psi: ArrayLike,
             tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """ΔA², computed as ‖(A − ⟨A⟩)ψ‖² so it is never negative."""
    return float(np.linalg.norm(deviation_vector(observable, psi, tol=tol)) ** 2)


def commutator(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    a = _ensure_square(a, "A")
    b = _ensure_square(b, "B")
    _ensure_same_dim(a, b)
    return _frozen(a @ b - b @ a)


def anticommutator(a: ArrayLike, b: ArrayLike) -> np.ndarray:
    a = _ensure_square(a, "A")
    b = _ensure_square(b, "B")
    _ensure_same_dim(a, b)
    return _frozen(a @ b + b @ a)


def deviation_vectors(a: ArrayLike, b: ArrayLike, psi: ArrayLike,
                      tol: Tolerances = DEFAULT_TOLERANCES
                      ) -> Tuple[ComplexVector, ComplexVector]:
    """Return ``(ψ1, ψ2)`` for the pair ``(A, B)``."""
    return deviation_vector(a, psi, tol=tol), deviation_vector(b, psi, tol=tol)


def moment_set(a: ArrayLike, b: ArrayLike, psi: ArrayLike,
               tol: Tolerances = DEFAULT_TOLERANCES) -> MomentSet:
    """Compute every moment used by the uncertainty relations.

    ⟨[A,B]⟩ and ⟨{A,B}⟩ are taken from the matrix products rather than
    from the overlap, so ``comm == overlap - conj(overlap)`` and
    ``acov == 2 Re(overlap)`` stay independent consistency checks.
    """
    a, psi = _prepare(a, psi, tol)
    b, _ = _prepare(b, psi, tol)
    mean_a = _real_part(_sandwich(psi, a), tol, "⟨A⟩")
    mean_b = _real_part(_sandwich(psi, b), tol, "⟨B⟩")
    psi1 = a @ psi - mean_a * psi
    psi2 = b @ psi - mean_b * psi
    ab = a @ b
    ba = b @ a
    comm = _sandwich(psi, ab - ba)
    anti = _real_part(_sandwich(psi, ab + ba), tol, "⟨{A,B}⟩")
    return MomentSet(
            mean_a=mean_a,
            mean_b=mean_b,
            var_a=float(np.vdot(psi1, psi1).real),
            var_b=float(np.vdot(psi2, psi2).real),
            overlap=complex(np.vdot(psi1, psi2)),
            comm=comm,
            acov=anti - 2.0 * mean_a * mean_b,
            )


__all__ = ["MomentSet", "expectation", "deviation_vector", "deviation_vectors", "variance",
           "commutator", "anticommutator", "moment_set"]
