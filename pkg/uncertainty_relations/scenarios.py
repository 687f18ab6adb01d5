"""Standard operators and worked examples.

Spin-1 kets are ordered (|+⟩, |0⟩, |−⟩), i.e. m = (+1, 0, −1), with ħ = 1.
"""

import math
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .util import ComplexVector, HermitianMatrix, _frozen

INSTANCE_NAMES = ("spin1", "qubit-xy", "eigenstate")


class Spin1Instance(NamedTuple):
    """ψ = cos θ|+⟩ + sin θ|−⟩ with A = J_x, B = J_y and witness |0⟩.

    The choice of J_x and J_y as the observable pair is an inference: it
    makes the sum relation hold with equality (both sides 1) and both sides
    of the two-parameter product relation vanish for every θ.
    """
    theta: float
    state: ComplexVector
    a: HermitianMatrix
    b: HermitianMatrix
    witness: ComplexVector


class NamedInstance(NamedTuple):
    a: HermitianMatrix
    b: HermitianMatrix
    state: ComplexVector
    witness: Optional[ComplexVector]


def _jplus(j: float) -> np.ndarray:
    m = np.arange(j, -j - 1, -1)
    return np.diag(np.sqrt(j * (j + 1.0) - (m[1:] + 1.0) * m[1:]), 1).astype(np.complex128)


def spin1_operators() -> Tuple[HermitianMatrix, HermitianMatrix, HermitianMatrix]:
    """Return ``(J_x, J_y, J_z)`` for spin 1."""
    jp = _jplus(1.0)
    jm = jp.conj().T
    jx = 0.5 * (jp + jm)
    jy = -0.5j * (jp - jm)
    jz = np.diag([1.0, 0.0, -1.0]).astype(np.complex128)
    return _frozen(jx), _frozen(jy), _frozen(jz)


def pauli_operators() -> Tuple[HermitianMatrix, HermitianMatrix, HermitianMatrix]:
    """Return ``(σ_x, σ_y, σ_z)``."""
    sx = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    sy = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    sz = np.array([[1, 0], [0, -1]], dtype=np.complex128)
    return _frozen(sx), _frozen(sy), _frozen(sz)


def spin1_state(theta: float) -> ComplexVector:
    """cos θ|+⟩ + sin θ|−⟩"""
    return _frozen(np.array([math.cos(theta), 0.0, math.sin(theta)], dtype=np.complex128))


def spin1_witness() -> ComplexVector:
    """|0⟩, orthogonal to every :func:`spin1_state`."""
    return _frozen(np.array([0.0, 1.0, 0.0], dtype=np.complex128))


def spin1_instance(theta: float) -> Spin1Instance:
    jx, jy, _ = spin1_operators()
    return Spin1Instance(
            theta=float(theta),
            state=spin1_state(theta),
            a=jx,
            b=jy,
            witness=spin1_witness(),
            )


def _basis_state(dim: int, k: int) -> ComplexVector:
    state = np.zeros(dim, dtype=np.complex128)
    state[k] = 1.0
    return _frozen(state)


def named_instance(name: str, theta: float = 0.0) -> NamedInstance:
    """Named test cases.

    * ``spin1``: :func:`spin1_instance` at `theta`
    * ``qubit-xy``: σ_x, σ_y on |0⟩ with witness |1⟩ (saturates everything)
    * ``eigenstate``: σ_z, σ_x on |0⟩ with witness |1⟩ (ΔA = 0)
    """
    if name == "spin1":
        instance = spin1_instance(theta)
        return NamedInstance(instance.a, instance.b, instance.state, instance.witness)
    sx, sy, sz = pauli_operators()
    if name == "qubit-xy":
        return NamedInstance(sx, sy, _basis_state(2, 0), _basis_state(2, 1))
    if name == "eigenstate":
        return NamedInstance(sz, sx, _basis_state(2, 0), _basis_state(2, 1))
    raise ValueError(f"Unknown instance {name!r}, expected one of {', '.join(INSTANCE_NAMES)}")


__all__ = ["Spin1Instance", "NamedInstance", "INSTANCE_NAMES", "spin1_operators",
           "pauli_operators", "spin1_state", "spin1_witness", "spin1_instance", "named_instance"]
