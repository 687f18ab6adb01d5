"""Generalized uncertainty relations built on a witness state ψ⊥.

For φ = ψ1 + (β + iα)ψ2 the Schwarz inequality ‖φ‖² ≥ |⟨ψ⊥|φ⟩|² gives a
quadratic statement in (β, α). Minimizing it over α gives a product bound
generalizing Robertson's, minimizing over both parameters a bound
generalizing Schrödinger's, and the sum form follows by AM-GM. At α = ±1,
β = 0 the quadratic statement is the Maccone-Pati sum relation.

All complex brackets are stored unscaled: with D = ⟨ψ1|ψ2⟩ − z the term
``i α [D − conj(D)]`` is evaluated as ``-2 α Im(D)``.
"""

import logging
import math
from typing import Dict, List, NamedTuple, Optional

import numpy as np
from numpy.typing import ArrayLike

from .exceptions import NegativeDeficitError, NotOrthogonalError, ZeroVarianceError
from .moments import MomentSet, deviation_vectors, moment_set
from .util import (DEFAULT_TOLERANCES, ComplexVector, Tolerances, _ensure_normalized,
                   _ensure_same_dim, _ensure_vector, _frozen)

logger = logging.getLogger(__name__)

INEQUALITY_NAMES = ("robertson", "schrodinger", "eq2", "eq3", "eq4", "mp_plus", "mp_minus")


class WitnessContext(NamedTuple):
    """Witness-dependent terms of the generalized relations.

    :ivar overlap1: ⟨ψ⊥|ψ1⟩
    :ivar overlap2: ⟨ψ⊥|ψ2⟩
    :ivar cross: z = ⟨ψ⊥|ψ2⟩⟨ψ1|ψ⊥⟩
    :ivar deficit_a: ΔA² − |⟨ψ⊥|ψ1⟩|², clamped at 0
    :ivar deficit_b: ΔB² − |⟨ψ⊥|ψ2⟩|², clamped at 0
    """
    overlap1: complex
    overlap2: complex
    cross: complex
    deficit_a: float
    deficit_b: float


class InequalityResult(NamedTuple):
    """One evaluated inequality ``lhs >= rhs``."""
    lhs: float
    rhs: float
    gap: float
    trivial: bool

    def is_violated(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        return self.gap < -tol.gap


class BoundReport(NamedTuple):
    """Every implemented inequality evaluated on one instance.

    Witness-dependent entries are `None` when no witness was supplied.
    """
    moments: MomentSet
    witness: Optional[WitnessContext]
    robertson: InequalityResult
    schrodinger: InequalityResult
    eq2: Optional[InequalityResult] = None
    eq3: Optional[InequalityResult] = None
    eq4: Optional[InequalityResult] = None
    mp_plus: Optional[InequalityResult] = None
    mp_minus: Optional[InequalityResult] = None

    def results(self) -> Dict[str, InequalityResult]:
        """Present inequality results keyed by name, in canonical order."""
        return {name: getattr(self, name) for name in INEQUALITY_NAMES
                if getattr(self, name) is not None}

    def violations(self, tol: Tolerances = DEFAULT_TOLERANCES) -> List[str]:
        return [name for name, result in self.results().items() if result.is_violated(tol)]

    @property
    def worst_gap(self) -> float:
        return min(result.gap for result in self.results().values())


def _result(lhs: float, rhs: float, tol: Tolerances) -> InequalityResult:
    lhs = float(lhs)
    rhs = float(rhs)
    trivial = abs(lhs) <= tol.trivial and abs(rhs) <= tol.trivial
    return InequalityResult(lhs=lhs, rhs=rhs, gap=lhs - rhs, trivial=trivial)


def _deficit(value: float, what: str, tol: Tolerances) -> float:
    if value >= 0.0:
        return value
    if value < -tol.deficit:
        raise NegativeDeficitError(f"{what} deficit is negative: {value!r}")
    logger.debug("clamping %s deficit %r to 0", what, value)
    return 0.0


def _ensure_witness(psi: ComplexVector, witness: ArrayLike, tol: Tolerances) -> ComplexVector:
    witness = _ensure_vector(witness, "witness")
    _ensure_same_dim(psi, witness)
    _ensure_normalized(witness, tol.norm, "witness")
    overlap = abs(np.vdot(psi, witness))
    if not overlap <= tol.orth:
        raise NotOrthogonalError(f"witness is not orthogonal to psi (|⟨ψ|ψ⊥⟩| = {overlap!r})")
    return witness


def witness_context(a: ArrayLike, b: ArrayLike, psi: ArrayLike, witness: ArrayLike,
                    tol: Tolerances = DEFAULT_TOLERANCES) -> WitnessContext:
    """Evaluate the witness overlaps, cross term and deficits.

    :param a: observable A
    :param b: observable B
    :param psi: unit state
    :param witness: unit state orthogonal to `psi`

    :raises NotOrthogonalError: |⟨ψ|ψ⊥⟩| > `tol.orth`
    :raises NotNormalizedError: `psi` or `witness` is not a unit vector
    :raises NegativeDeficitError: a deficit is below ``-tol.deficit``
    """
    psi1, psi2 = deviation_vectors(a, b, psi, tol=tol)
    witness = _ensure_witness(_ensure_vector(psi), witness, tol)
    return _context(psi1, psi2, witness, tol)


def _context(psi1: ComplexVector, psi2: ComplexVector, witness: ComplexVector,
             tol: Tolerances) -> WitnessContext:
    overlap1 = complex(np.vdot(witness, psi1))
    overlap2 = complex(np.vdot(witness, psi2))
    var_a = float(np.vdot(psi1, psi1).real)
    var_b = float(np.vdot(psi2, psi2).real)
    return WitnessContext(
            overlap1=overlap1,
            overlap2=overlap2,
            cross=overlap2 * overlap1.conjugate(),
            deficit_a=_deficit(var_a - abs(overlap1) ** 2, "A", tol),
            deficit_b=_deficit(var_b - abs(overlap2) ** 2, "B", tol),
            )


def deviation_witness(a: ArrayLike, b: ArrayLike, psi: ArrayLike, which: str,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexVector:
    """The normalized deviation vector ψ1/ΔA (``which="A"``) or ψ2/ΔB (``"B"``).

    :raises ZeroVarianceError: `psi` is an eigenstate of the chosen observable
    """
    if which not in ("A", "B"):
        raise ValueError("which must be 'A' or 'B'")
    psi1, psi2 = deviation_vectors(a, b, psi, tol=tol)
    vector = psi1 if which == "A" else psi2
    length = float(np.linalg.norm(vector))
    if length <= tol.null:
        raise ZeroVarianceError(f"Δ{which} = 0: psi is an eigenstate of {which}")
    return _frozen(vector / length)


def _difference(ctx: WitnessContext, moments: MomentSet) -> complex:
    return moments.overlap - ctx.cross


def eq1_value(ctx: WitnessContext, moments: MomentSet, alpha: float,
              beta: float = 0.0) -> float:
    """Left-hand side of the Schwarz-derived quadratic statement.

    ``deficit_a + (α² + β²)·deficit_b + 2β·Re(D) − 2α·Im(D)`` with
    D = ⟨ψ1|ψ2⟩ − z. It is non-negative for every real α, β; with β = 0 it
    is the one-parameter form.
    """
    difference = _difference(ctx, moments)
    return (ctx.deficit_a
            + (alpha * alpha + beta * beta) * ctx.deficit_b
            + 2.0 * beta * difference.real
            - 2.0 * alpha * difference.imag)


def mp_sum_inequality(ctx: WitnessContext, moments: MomentSet, sign: int,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """Maccone-Pati sum relation: the quadratic statement at α = ±1, β = 0.

    ``ΔA² + ΔB² >= |⟨ψ⊥|ψ1⟩|² + |⟨ψ⊥|ψ2⟩|² + 2·sign·Im(D)``
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    difference = _difference(ctx, moments)
    lhs = moments.var_a + moments.var_b
    rhs = abs(ctx.overlap1) ** 2 + abs(ctx.overlap2) ** 2 + 2.0 * sign * difference.imag
    return _result(lhs, rhs, tol)


def _commutator_term(ctx: WitnessContext, moments: MomentSet) -> float:
    # |⟨[A,B]⟩ − (z − z̄)|²
    return abs(moments.comm - (ctx.cross - ctx.cross.conjugate())) ** 2


def _covariance_term(ctx: WitnessContext, moments: MomentSet) -> float:
    # |⟨{A,B}⟩ − 2⟨A⟩⟨B⟩ − (z + z̄)|²
    return abs(moments.acov - 2.0 * ctx.cross.real) ** 2


def eq2_product(ctx: WitnessContext, moments: MomentSet,
                tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """Generalized Robertson relation (quadratic statement minimized over α)."""
    lhs = ctx.deficit_a * ctx.deficit_b
    rhs = 0.25 * _commutator_term(ctx, moments)
    return _result(lhs, rhs, tol)


def eq3_product(ctx: WitnessContext, moments: MomentSet,
                tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """Generalized Robertson-Schrödinger relation (minimized over β and α)."""
    lhs = ctx.deficit_a * ctx.deficit_b
    rhs = 0.25 * _commutator_term(ctx, moments) + 0.25 * _covariance_term(ctx, moments)
    return _result(lhs, rhs, tol)


def eq4_sum(ctx: WitnessContext, moments: MomentSet,
            tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """Sum form of the generalized Robertson-Schrödinger relation."""
    lhs = moments.var_a + moments.var_b
    rhs = (abs(ctx.overlap1) ** 2 + abs(ctx.overlap2) ** 2
           + math.sqrt(_commutator_term(ctx, moments) + _covariance_term(ctx, moments)))
    return _result(lhs, rhs, tol)


def robertson(moments: MomentSet, tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """ΔA²ΔB² >= ¼|⟨[A,B]⟩|²"""
    return _result(moments.var_a * moments.var_b, 0.25 * abs(moments.comm) ** 2, tol)


def schrodinger(moments: MomentSet, tol: Tolerances = DEFAULT_TOLERANCES) -> InequalityResult:
    """ΔA²ΔB² >= ¼|⟨[A,B]⟩|² + ¼|⟨{A,B}⟩ − 2⟨A⟩⟨B⟩|²"""
    rhs = 0.25 * abs(moments.comm) ** 2 + 0.25 * moments.acov ** 2
    return _result(moments.var_a * moments.var_b, rhs, tol)


def bound_report(a: ArrayLike, b: ArrayLike, psi: ArrayLike,
                 witness: Optional[ArrayLike] = None,
                 tol: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Evaluate every inequality for ``(A, B, ψ)`` and an optional witness.

    Without a witness only the Robertson and Schrödinger relations are
    evaluated.
    """
    moments = moment_set(a, b, psi, tol=tol)
    report = BoundReport(
            moments=moments,
            witness=None,
            robertson=robertson(moments, tol=tol),
            schrodinger=schrodinger(moments, tol=tol),
            )
    if witness is None:
        return report
    ctx = witness_context(a, b, psi, witness, tol=tol)
    return report._replace(
            witness=ctx,
            eq2=eq2_product(ctx, moments, tol=tol),
            eq3=eq3_product(ctx, moments, tol=tol),
            eq4=eq4_sum(ctx, moments, tol=tol),
            mp_plus=mp_sum_inequality(ctx, moments, +1, tol=tol),
            mp_minus=mp_sum_inequality(ctx, moments, -1, tol=tol),
            )


__all__ = ["INEQUALITY_NAMES", "WitnessContext", "InequalityResult",
           "BoundReport", "witness_context", "deviation_witness", "eq1_value",
           "mp_sum_inequality", "eq2_product", "eq3_product", "eq4_sum", "robertson",
           "schrodinger", "bound_report"]
