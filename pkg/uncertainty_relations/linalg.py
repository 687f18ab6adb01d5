"""Small dense complex linear algebra: inner products, Hermiticity checks,
orthogonal complements and seeded random states and observables."""

from typing import List, Tuple

import numpy as np
from numpy.typing import ArrayLike

from .exceptions import DimensionMismatchError, ZeroVectorError
from .util import (DEFAULT_TOLERANCES, ComplexVector, HermitianMatrix, Tolerances,
                   _ensure_same_dim, _ensure_vector, _frozen)

RngSeed = int

_SEED_LIMIT = 2 ** 64


def _ensure_seed(seed: RngSeed) -> int:
    if isinstance(seed, bool) or int(seed) != seed:
        raise ValueError("seed must be an integer")
    seed = int(seed)
    if seed < 0 or seed >= _SEED_LIMIT:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return seed


def inner(u: ArrayLike, v: ArrayLike) -> complex:
    """Inner product ⟨u|v⟩, conjugate-linear in the first argument."""
    u = _ensure_vector(u, "u")
    v = _ensure_vector(v, "v")
    _ensure_same_dim(u, v)
    return complex(np.vdot(u, v))


def norm(v: ArrayLike) -> float:
    """Euclidean norm ‖v‖."""
    return float(np.linalg.norm(_ensure_vector(v)))


def is_normalized(v: ArrayLike, tol: float = DEFAULT_TOLERANCES.norm) -> bool:
    return abs(norm(v) - 1.0) <= tol


def is_hermitian(matrix: ArrayLike, tol: float = DEFAULT_TOLERANCES.herm) -> bool:
    """Check that max entrywise :math:`|M - M^\\dagger|` does not exceed `tol`.

    :param matrix: square matrix
    :param tol: absolute tolerance
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"Square matrix expected, got shape {matrix.shape}")
    return bool(np.max(np.abs(matrix - matrix.conj().T)) <= tol)


def _orthogonalize(vector: np.ndarray, basis: List[np.ndarray]) -> np.ndarray:
    # two passes: classical Gram-Schmidt loses orthogonality after one
    for _ in range(2):
        for e in basis:
            vector = vector - np.vdot(e, vector) * e
    return vector


def complement_basis(psi: ArrayLike,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> List[ComplexVector]:
    """Orthonormal basis of the orthogonal complement of `psi`.

    The state is completed to a full basis with the coordinate vectors
    (those where `psi` has the smallest weight first) and then dropped, so
    ``d - 1`` vectors are returned. Phases of the returned vectors are
    unspecified.

    :raises ZeroVectorError: `psi` has zero norm
    """
    psi = _ensure_vector(psi, "psi")
    length = np.linalg.norm(psi)
    if length <= tol.null:
        raise ZeroVectorError("Cannot complete a zero vector to a basis")
    dim = psi.shape[0]
    basis = [psi / length]
    order = np.argsort(np.abs(psi), kind="stable")
    result = []
    for k in order[:dim - 1]:
        candidate = np.zeros(dim, dtype=np.complex128)
        candidate[k] = 1.0
        candidate = _orthogonalize(candidate, basis)
        candidate = candidate / np.linalg.norm(candidate)
        basis.append(candidate)
        result.append(_frozen(candidate))
    return result


def derive_seeds(seed: RngSeed, index: int, count: int = 1) -> Tuple[RngSeed, ...]:
    """Derive `count` independent child seeds for trial or restart `index`.

    The result depends only on ``(seed, index)``, so work split over
    workers reproduces sequential execution exactly.
    """
    sequence = np.random.SeedSequence([_ensure_seed(seed), int(index)])
    return tuple(int(s) for s in sequence.generate_state(count, dtype=np.uint64))


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unit_vector(dim: int, seed: RngSeed) -> ComplexVector:
    """Haar-distributed unit vector in :math:`\\mathbb{C}^d`.

    Real and imaginary parts are ``2d`` independent standard normals, then
    the vector is normalized.
    """
    if dim < 2:
        raise DimensionMismatchError("dimension must be >= 2")
    rng = np.random.default_rng(_ensure_seed(seed))
    samples = rng.standard_normal(2 * dim)
    vector = samples[:dim] + 1j * samples[dim:]
    return _frozen(vector / np.linalg.norm(vector))


def random_hermitian(dim: int, seed: RngSeed) -> HermitianMatrix:
    """Random Hermitian matrix :math:`(G + G^\\dagger)/2`.

    `G` has independent standard complex normal entries (unit variance,
    split evenly between real and imaginary parts).
    """
    if dim < 2:
        raise DimensionMismatchError("dimension must be >= 2")
    rng = np.random.default_rng(_ensure_seed(seed))
    g = _complex_normal(rng, (dim, dim)) / np.sqrt(2.0)
    return _frozen((g + g.conj().T) / 2)


def random_witness(psi: ArrayLike, seed: RngSeed,
                   tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexVector:
    """Haar-random unit vector orthogonal to `psi`."""
    basis = complement_basis(psi, tol=tol)
    rng = np.random.default_rng(_ensure_seed(seed))
    coefficients = _complex_normal(rng, len(basis))
    coefficients /= np.linalg.norm(coefficients)
    return _frozen(coefficients @ np.array(basis))


__all__ = ["RngSeed", "inner", "norm", "is_normalized", "is_hermitian", "complement_basis",
           "derive_seeds", "random_unit_vector", "random_hermitian", "random_witness"]
