"""Minimization over the free parameters of φ = ψ1 + (β + iα)ψ2 and
witness-state construction and search."""

import logging
import math
from typing import Callable, Dict, NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from .bounds import WitnessContext, _context, eq3_product, eq4_sum, mp_sum_inequality
from .exceptions import DegenerateInconsistentError, NullPhiVectorError
from .linalg import RngSeed, _ensure_seed, complement_basis, derive_seeds
from .moments import MomentSet, deviation_vectors, moment_set
from .util import DEFAULT_TOLERANCES, ComplexVector, Tolerances, _ensure_positive_int, _frozen

logger = logging.getLogger(__name__)

# smallest coordinate step of the witness search
MIN_STEP = 1e-10
INITIAL_STEP = 0.5


class QuadraticForm(NamedTuple):
    """f(β, α) = a + (β² + α²)·b + β·s + α·c

    :ivar a: constant term (deficit of A)
    :ivar b: quadratic coefficient (deficit of B)
    :ivar c: α-linear coefficient, −2·Im(⟨ψ1|ψ2⟩ − z)
    :ivar s: β-linear coefficient, 2·Re(⟨ψ1|ψ2⟩ − z)
    """
    a: float
    b: float
    c: float
    s: float

    def evaluate(self, beta, alpha):
        """Value at (β, α); works element-wise on numpy arrays."""
        return self.a + (beta * beta + alpha * alpha) * self.b + beta * self.s + alpha * self.c


class AlphaMinimum(NamedTuple):
    alpha: float
    value: float


class AlphaBetaMinimum(NamedTuple):
    beta: float
    alpha: float
    value: float


class WitnessSearchResult(NamedTuple):
    """Best witness found by :func:`maximize_witness`.

    :ivar witness: unit vector orthogonal to ψ
    :ivar objective: objective value at `witness`
    :ivar evaluations: number of objective evaluations over all restarts
    :ivar seed: seed the search was started with
    """
    witness: ComplexVector
    objective: float
    evaluations: int
    seed: RngSeed


def quadratic_form(ctx: WitnessContext, moments: MomentSet) -> QuadraticForm:
    """Coefficients of ‖φ‖² − |⟨ψ⊥|φ⟩|² as a function of (β, α)."""
    difference = moments.overlap - ctx.cross
    return QuadraticForm(
            a=ctx.deficit_a,
            b=ctx.deficit_b,
            c=-2.0 * difference.imag,
            s=2.0 * difference.real,
            )


def _check_degenerate(q: QuadraticForm, linear: float, tol: Tolerances):
    # a·b >= linear²/4 holds for every admissible b <= tol.degenerate
    limit = tol.degenerate + 2.0 * math.sqrt(max(q.a, 0.0) * tol.degenerate)
    if abs(linear) > limit:
        raise DegenerateInconsistentError(
                f"quadratic coefficient {q.b!r} vanishes but linear term is {linear!r}")
    logger.debug("degenerate quadratic form %r, minimum at the origin", q)


def minimize_alpha(q: QuadraticForm, tol: Tolerances = DEFAULT_TOLERANCES) -> AlphaMinimum:
    """Minimize f(0, α) in closed form.

    Non-negativity of the minimum, ``a·b >= c²/4``, is the generalized
    Robertson relation.

    :raises DegenerateInconsistentError: `b` vanishes but `c` does not
    """
    if q.b > tol.degenerate:
        alpha = -q.c / (2.0 * q.b)
        return AlphaMinimum(alpha=alpha, value=q.a - q.c * q.c / (4.0 * q.b))
    _check_degenerate(q, q.c, tol)
    return AlphaMinimum(alpha=0.0, value=q.a)


def minimize_alpha_beta(q: QuadraticForm,
                        tol: Tolerances = DEFAULT_TOLERANCES) -> AlphaBetaMinimum:
    """Minimize f(β, α) in closed form.

    Non-negativity of the minimum, ``a·b >= (s² + c²)/4``, is the
    generalized Robertson-Schrödinger relation.

    :raises DegenerateInconsistentError: `b` vanishes but `s` or `c` does not
    """
    if q.b > tol.degenerate:
        return AlphaBetaMinimum(
                beta=-q.s / (2.0 * q.b),
                alpha=-q.c / (2.0 * q.b),
                value=q.a - (q.s * q.s + q.c * q.c) / (4.0 * q.b),
                )
    _check_degenerate(q, math.hypot(q.s, q.c), tol)
    return AlphaBetaMinimum(beta=0.0, alpha=0.0, value=q.a)


def phi_vector(a: ArrayLike, b: ArrayLike, psi: ArrayLike, beta: float, alpha: float,
               tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexVector:
    """φ = ψ1 + (β + iα)ψ2; always orthogonal to ψ."""
    psi1, psi2 = deviation_vectors(a, b, psi, tol=tol)
    return _frozen(psi1 + complex(beta, alpha) * psi2)


def saturating_witness(a: ArrayLike, b: ArrayLike, psi: ArrayLike, beta: float, alpha: float,
                       tol: Tolerances = DEFAULT_TOLERANCES) -> ComplexVector:
    """Witness φ/‖φ‖ turning the Schwarz step into an equality at (β, α).

    :raises NullPhiVectorError: ‖φ‖ <= `tol.null`
    """
    phi = phi_vector(a, b, psi, beta, alpha, tol=tol)
    length = float(np.linalg.norm(phi))
    if length <= tol.null:
        raise NullPhiVectorError(f"φ vanishes at beta={beta!r}, alpha={alpha!r}")
    return _frozen(phi / length)


Objective = Callable[[WitnessContext, MomentSet, Tolerances], float]

OBJECTIVES: Dict[str, Objective] = {
    "eq4_rhs": lambda ctx, m, tol: eq4_sum(ctx, m, tol=tol).rhs,
    "eq3_rhs": lambda ctx, m, tol: eq3_product(ctx, m, tol=tol).rhs,
    "mp_rhs": lambda ctx, m, tol: mp_sum_inequality(ctx, m, +1, tol=tol).rhs,
    "mp_plus_rhs": lambda ctx, m, tol: mp_sum_inequality(ctx, m, +1, tol=tol).rhs,
    "mp_minus_rhs": lambda ctx, m, tol: mp_sum_inequality(ctx, m, -1, tol=tol).rhs,
}


class _WitnessProblem:
    """Objective over real coordinates of a unit vector in the complement of ψ."""

    def __init__(self, a, b, psi, objective: Objective, tol: Tolerances):
        self.moments = moment_set(a, b, psi, tol=tol)
        self.psi1, self.psi2 = deviation_vectors(a, b, psi, tol=tol)
        self.basis = np.array(complement_basis(psi, tol=tol))
        self.size = self.basis.shape[0]
        self.objective = objective
        self.tol = tol
        self.evaluations = 0

    def witness(self, x: np.ndarray) -> ComplexVector:
        coefficients = x[:self.size] + 1j * x[self.size:]
        return coefficients @ self.basis

    def __call__(self, x: np.ndarray) -> float:
        self.evaluations += 1
        ctx = _context(self.psi1, self.psi2, self.witness(x), self.tol)
        return float(self.objective(ctx, self.moments, self.tol))


def _refine(problem: _WitnessProblem, x: np.ndarray, iters: int):
    """Coordinate-wise perturbation with step halving, accept-if-better."""
    value = problem(x)
    step = INITIAL_STEP
    for _ in range(iters):
        improved = False
        for j in range(x.shape[0]):
            for delta in (step, -step):
                trial = x.copy()
                trial[j] += delta
                trial /= np.linalg.norm(trial)
                trial_value = problem(trial)
                if trial_value > value:
                    x, value = trial, trial_value
                    improved = True
                    break
        if not improved:
            step /= 2.0
            if step < MIN_STEP:
                break
    return x, value


def maximize_witness(a: ArrayLike, b: ArrayLike, psi: ArrayLike, objective: str,
                     restarts: int = 8, iters: int = 200, seed: RngSeed = 0,
                     tol: Tolerances = DEFAULT_TOLERANCES) -> WitnessSearchResult:
    """Search the witness maximizing one of the witness-dependent bounds.

    Each restart draws a random unit coefficient vector over
    :func:`complement_basis` with its own seed derived from
    ``(seed, restart)`` and refines it locally; the best restart wins (the
    earliest one on ties), so results do not depend on execution order.

    :param objective: one of :data:`OBJECTIVES`
    :param restarts: number of random starting points
    :param iters: maximum refinement sweeps per restart
    :param seed: master seed
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"Unknown objective {objective!r}, expected one of "
                         f"{', '.join(sorted(OBJECTIVES))}")
    restarts = _ensure_positive_int(restarts, 1, "restarts")
    iters = _ensure_positive_int(iters, 0, "iters")
    seed = _ensure_seed(seed)
    problem = _WitnessProblem(a, b, psi, OBJECTIVES[objective], tol)
    best_x = None
    best_value = -math.inf
    for restart in range(restarts):
        (child,) = derive_seeds(seed, restart)
        rng = np.random.default_rng(child)
        start = rng.standard_normal(2 * problem.size)
        start /= np.linalg.norm(start)
        x, value = _refine(problem, start, iters)
        logger.debug("restart %d: %s = %r", restart, objective, value)
        if value > best_value:
            best_x, best_value = x, value
    return WitnessSearchResult(
            witness=_frozen(problem.witness(best_x)),
            objective=best_value,
            evaluations=problem.evaluations,
            seed=seed,
            )


__all__ = ["QuadraticForm", "AlphaMinimum", "AlphaBetaMinimum", "WitnessSearchResult",
           "OBJECTIVES", "quadratic_form", "minimize_alpha", "minimize_alpha_beta",
           "phi_vector", "saturating_witness", "maximize_witness"]
