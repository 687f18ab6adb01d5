from typing import NamedTuple, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import DimensionMismatchError, NonFiniteError, NotNormalizedError

ComplexVector = NDArray[np.complex128]
HermitianMatrix = NDArray[np.complex128]


class Tolerances(NamedTuple):
    """Numerical tolerances used across the package (immutable).

    :ivar herm: max entrywise :math:`|M - M^\\dagger|` for a Hermitian matrix
    :ivar orth: max :math:`|\\langle\\psi|\\psi_\\perp\\rangle|` for orthogonality
    :ivar norm: max :math:`|\\,\\|v\\| - 1|` for a unit vector
    :ivar imag: max relative imaginary part of an expectation value
    :ivar deficit: negative deficits above ``-deficit`` are clamped to zero
    :ivar gap: inequality gaps below ``-gap`` are violations
    :ivar trivial: both sides below this make an inequality trivial
    :ivar degenerate: quadratic coefficient treated as zero by the minimizers
    :ivar null: norm below which φ is considered the zero vector
    """
    herm: float = 1e-9
    orth: float = 1e-9
    norm: float = 1e-9
    imag: float = 1e-9
    deficit: float = 1e-9
    gap: float = 1e-8
    trivial: float = 1e-10
    degenerate: float = 1e-10
    null: float = 1e-12

    @classmethod
    def from_overrides(cls,
                       base: Optional['Tolerances'] = None,
                       tol: Optional[float] = None,
                       **granular: Optional[float]) -> 'Tolerances':
        """Apply command-line style overrides.

        `tol` sets `orth`, `norm` and `gap` jointly; any non-`None` granular
        value (e.g. ``orth=1e-6``) wins over it.
        """
        if base is None:
            base = cls()
        values = {}
        if tol is not None:
            values.update(orth=tol, norm=tol, gap=tol)
        for key, value in granular.items():
            if key not in cls._fields:
                raise TypeError(f"Unknown tolerance {key!r}")
            if value is not None:
                values[key] = value
        for key, value in values.items():
            if not value >= 0:
                raise ValueError(f"Tolerance {key!r} must be non-negative")
        return base._replace(**{k: float(v) for k, v in values.items()})


DEFAULT_TOLERANCES = Tolerances()


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def _ensure_vector(value: ArrayLike, name: str = "vector") -> ComplexVector:
    vector = np.array(value, dtype=np.complex128)
    if vector.ndim != 1:
        raise DimensionMismatchError(f"{name} must be one-dimensional, got shape {vector.shape}")
    if vector.shape[0] < 2:
        raise DimensionMismatchError(f"{name} must have dimension >= 2")
    if not np.all(np.isfinite(vector)):
        raise NonFiniteError(f"{name} has non-finite entries")
    return _frozen(vector)


def _ensure_square(value: ArrayLike, name: str = "matrix") -> HermitianMatrix:
    matrix = np.array(value, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {matrix.shape}")
    if matrix.shape[0] < 2:
        raise DimensionMismatchError(f"{name} must have dimension >= 2")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteError(f"{name} has non-finite entries")
    return _frozen(matrix)


def _ensure_same_dim(*arrays: np.ndarray):
    dims = {array.shape[0] for array in arrays}
    if len(dims) != 1:
        raise DimensionMismatchError(f"Dimensions differ: {sorted(dims)}")


def _ensure_normalized(vector: ComplexVector, tol: float, name: str = "state"):
    norm = float(np.linalg.norm(vector))
    if not abs(norm - 1.0) <= tol:
        raise NotNormalizedError(f"{name} is not normalized (norm = {norm!r})")


def _ensure_positive_int(value, minimum: int = 1, name: str = "value") -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ValueError(f"{name} must be an integer")
    value = int(value)
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}")
    return value


__all__ = ["ComplexVector", "HermitianMatrix", "Tolerances", "DEFAULT_TOLERANCES", "_frozen",
           "_ensure_vector", "_ensure_square", "_ensure_same_dim", "_ensure_normalized",
           "_ensure_positive_int"]
