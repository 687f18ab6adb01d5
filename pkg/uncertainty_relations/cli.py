"""Command-line interface.

Exit codes: 0 success, 1 verification violation, 2 input error,
3 constraint violation (state or witness not normalized, not orthogonal…).
"""

import argparse
import contextlib
import csv
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, TextIO, Tuple

import numpy as np

from .bounds import bound_report, deviation_witness, eq1_value
from .exceptions import ConstraintError, Error, InstanceFileError
from .linalg import derive_seeds, random_hermitian, random_unit_vector, random_witness
from .optimize import OBJECTIVES, maximize_witness
from .scenarios import INSTANCE_NAMES, named_instance, spin1_instance
from .serialize import (SCAN_SCHEMA_VERSION, format_number, format_report_table,
                        instance_to_dict, load_json, parse_instance, parse_tolerances,
                        report_to_dict, scan_header, scan_row, search_result_to_dict)
from .util import DEFAULT_TOLERANCES, Tolerances, _ensure_positive_int

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_CONSTRAINT = 3

LOG_LEVEL_ENV = "UNCERTAINTY_RELATIONS_LOG_LEVEL"

ALPHA_RANGE = (-10.0, 10.0)

# relative tolerance of the MomentSet identity checks
IDENTITY_RTOL = 1e-9


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as out_f:
            yield out_f
        logger.info("wrote %s", path)


def _tolerances(args: argparse.Namespace, base: Tolerances = DEFAULT_TOLERANCES) -> Tolerances:
    return Tolerances.from_overrides(base, tol=args.tol, orth=args.tol_orth, norm=args.tol_norm,
                                     gap=args.tol_gap, herm=args.tol_herm)


def _load(args: argparse.Namespace):
    data = load_json(args.input)
    tol = _tolerances(args, parse_tolerances(data))
    return parse_instance(data, tol)


def cmd_report(args: argparse.Namespace) -> int:
    instance = _load(args)
    tol = instance.tolerances
    if args.witness == "file":
        witness = instance.witness
    elif args.witness == "none":
        witness = None
    else:
        which = "A" if args.witness == "deviation-a" else "B"
        witness = deviation_witness(instance.a, instance.b, instance.state, which, tol=tol)
    report = bound_report(instance.a, instance.b, instance.state, witness, tol=tol)
    with _output(args.output) as out:
        if args.json:
            json.dump(report_to_dict(report), out, indent=2)
            out.write("\n")
        else:
            out.write(format_report_table(report) + "\n")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    if not (math.isfinite(args.theta_min) and math.isfinite(args.theta_max)
            and args.theta_min < args.theta_max):
        raise ValueError("--theta-min must be finite and below --theta-max")
    tol = _tolerances(args)
    thetas = np.linspace(args.theta_min, args.theta_max, args.steps)
    logger.info("scanning %s family over %d points", args.family, args.steps)
    with _output(args.output) as out:
        out.write(f"# schema={SCAN_SCHEMA_VERSION}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(scan_header())
        for theta in thetas:
            instance = spin1_instance(float(theta))
            report = bound_report(instance.a, instance.b, instance.state, instance.witness,
                                  tol=tol)
            writer.writerow(scan_row(float(theta), report))
    return EXIT_OK


class TrialOutcome(NamedTuple):
    trial: int
    seeds: Tuple[int, ...]
    worst_gap: float
    violations: Tuple[str, ...]


class VerifySummary(NamedTuple):
    trials: int
    violating_trials: int
    worst_gap: float
    worst_trial: int
    failures: Tuple[TrialOutcome, ...]


def _close(x: complex, y: complex) -> bool:
    return abs(x - y) <= IDENTITY_RTOL * (1.0 + max(abs(x), abs(y)))


def _moment_identities(moments) -> List[str]:
    failed = []
    if moments.var_a < 0 or moments.var_b < 0:
        failed.append("negative variance")
    if abs(moments.comm.real) > IDENTITY_RTOL * (1.0 + abs(moments.comm)):
        failed.append("commutator not imaginary")
    if not _close(moments.comm, moments.overlap - moments.overlap.conjugate()):
        failed.append("comm != overlap - conj(overlap)")
    if not _close(moments.acov, 2.0 * moments.overlap.real):
        failed.append("acov != overlap + conj(overlap)")
    if not _close(abs(moments.overlap) ** 2,
                  0.25 * abs(moments.comm) ** 2 + 0.25 * moments.acov ** 2):
        failed.append("|overlap|^2 != |comm|^2/4 + |acov|^2/4")
    return failed


def trial_instance(dim: int, seeds: Sequence[int]):
    """Random ``(A, B, ψ, ψ⊥)`` for one verification trial."""
    seed_a, seed_b, seed_psi, seed_witness = seeds[:4]
    psi = random_unit_vector(dim, seed_psi)
    return (random_hermitian(dim, seed_a), random_hermitian(dim, seed_b), psi,
            random_witness(psi, seed_witness))


def run_trial(dim: int, seed: int, trial: int, alphas_per_trial: int,
              tol: Tolerances = DEFAULT_TOLERANCES) -> TrialOutcome:
    """Check every inequality and moment identity on one random instance."""
    seeds = derive_seeds(seed, trial, 5)
    a, b, psi, witness = trial_instance(dim, seeds)
    report = bound_report(a, b, psi, witness, tol=tol)
    ctx = report.witness
    alphas = np.random.default_rng(seeds[4]).uniform(*ALPHA_RANGE, alphas_per_trial)
    eq1_values = [eq1_value(ctx, report.moments, float(alpha)) for alpha in alphas]
    violations = [f"{name} gap" for name in report.violations(tol)]
    violations.extend(f"eq1 at alpha={format_number(float(alpha))}"
                      for alpha, value in zip(alphas, eq1_values) if value < -tol.gap)
    violations.extend(_moment_identities(report.moments))
    worst = min([report.worst_gap] + eq1_values)
    return TrialOutcome(trial=trial, seeds=seeds, worst_gap=worst, violations=tuple(violations))


def _run_trial_args(args: Tuple[int, int, int, int, Tolerances]) -> TrialOutcome:
    return run_trial(*args)


def run_verification(dim: int, trials: int, seed: int, alphas_per_trial: int = 16,
                     tol: Tolerances = DEFAULT_TOLERANCES, jobs: int = 1) -> VerifySummary:
    """Randomized campaign; identical results for any number of `jobs`."""
    dim = _ensure_positive_int(dim, 2, "dim")
    trials = _ensure_positive_int(trials, 1, "trials")
    alphas_per_trial = _ensure_positive_int(alphas_per_trial, 0, "alphas-per-trial")
    jobs = _ensure_positive_int(jobs, 1, "jobs")
    work = [(dim, seed, trial, alphas_per_trial, tol) for trial in range(trials)]
    if jobs == 1:
        outcomes = [_run_trial_args(item) for item in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_run_trial_args, work,
                                         chunksize=max(1, trials // (4 * jobs))))
    worst = min(outcomes, key=lambda outcome: outcome.worst_gap)
    failures = tuple(outcome for outcome in outcomes if outcome.violations)
    return VerifySummary(trials=trials, violating_trials=len(failures),
                         worst_gap=worst.worst_gap, worst_trial=worst.trial, failures=failures)


def cmd_verify(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    logger.info("verifying %d trials at dimension %d", args.trials, args.dim)
    summary = run_verification(args.dim, args.trials, args.seed, args.alphas_per_trial,
                               tol=tol, jobs=args.jobs)
    out = sys.stdout
    out.write(f"dimension: {args.dim}\n")
    out.write(f"trials: {summary.trials}\n")
    out.write(f"alphas per trial: {args.alphas_per_trial}\n")
    out.write(f"violations: {summary.violating_trials}\n")
    out.write(f"worst gap: {format_number(summary.worst_gap)} (trial {summary.worst_trial})\n")
    if not summary.failures:
        return EXIT_OK
    for failure in summary.failures:
        logger.warning("trial %d violates: %s", failure.trial, ", ".join(failure.violations))
        a, b, psi, witness = trial_instance(args.dim, failure.seeds)
        dump: Dict[str, Any] = {
            "trial": failure.trial,
            "seed": args.seed,
            "derived_seeds": list(failure.seeds),
            "violations": list(failure.violations),
            "instance": instance_to_dict(a, b, psi, witness),
        }
        out.write(json.dumps(dump) + "\n")
    return EXIT_VIOLATION


def cmd_optimize(args: argparse.Namespace) -> int:
    instance = _load(args)
    if instance.witness is not None:
        logger.warning("ignoring the witness given in %s", args.input)
    tol = instance.tolerances
    result = maximize_witness(instance.a, instance.b, instance.state, args.objective,
                              restarts=args.restarts, iters=args.iters, seed=args.seed, tol=tol)
    report = bound_report(instance.a, instance.b, instance.state, result.witness, tol=tol)
    with _output(args.output) as out:
        json.dump(search_result_to_dict(result, args.objective, report), out, indent=2)
        out.write("\n")
    return EXIT_OK


def cmd_instance(args: argparse.Namespace) -> int:
    instance = named_instance(args.family, args.theta)
    witness = None if args.no_witness else instance.witness
    with _output(args.output) as out:
        json.dump(instance_to_dict(instance.a, instance.b, instance.state, witness), out,
                  indent=2)
        out.write("\n")
    return EXIT_OK


def _add_tolerance_args(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("tolerances")
    group.add_argument("--tol", type=float, default=None,
                       help="set the orthogonality, normalization and gap tolerances jointly")
    group.add_argument("--tol-orth", type=float, default=None)
    group.add_argument("--tol-norm", type=float, default=None)
    group.add_argument("--tol-gap", type=float, default=None)
    group.add_argument("--tol-herm", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
            prog="uncertainty-relations",
            description="Evaluate, verify and optimize generalized uncertainty relations.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    report = sub.add_parser("report", help="evaluate every inequality for an instance file")
    report.add_argument("input", help="instance file (JSON)")
    fmt = report.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="machine-readable output")
    fmt.add_argument("--table", action="store_true", help="human-readable output (default)")
    report.add_argument("--witness", choices=("file", "deviation-a", "deviation-b", "none"),
                        default="file",
                        help="witness to use: the file's, ψ1/ΔA, ψ2/ΔB or none")
    report.add_argument("--output", "-o", default=None)
    _add_tolerance_args(report)
    report.set_defaults(func=cmd_report)

    scan = sub.add_parser("scan", help="θ-scan of a worked example family (CSV)")
    scan.add_argument("--family", choices=("spin1",), default="spin1")
    scan.add_argument("--theta-min", type=float, default=0.0)
    scan.add_argument("--theta-max", type=float, default=math.pi)
    scan.add_argument("--steps", type=int, default=181)
    scan.add_argument("--output", "-o", default=None)
    _add_tolerance_args(scan)
    scan.set_defaults(func=cmd_scan)

    verify = sub.add_parser("verify", help="randomized verification campaign")
    verify.add_argument("--dim", type=int, default=3)
    verify.add_argument("--trials", type=int, default=1000)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--alphas-per-trial", type=int, default=16)
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_tolerance_args(verify)
    verify.set_defaults(func=cmd_verify)

    optimize = sub.add_parser("optimize", help="search the witness maximizing a bound")
    optimize.add_argument("--input", required=True, help="instance file (JSON)")
    optimize.add_argument("--objective", choices=sorted(OBJECTIVES), default="eq4_rhs")
    optimize.add_argument("--restarts", type=int, default=8)
    optimize.add_argument("--iters", type=int, default=200)
    optimize.add_argument("--seed", type=int, default=0)
    optimize.add_argument("--output", "-o", default=None)
    _add_tolerance_args(optimize)
    optimize.set_defaults(func=cmd_optimize)

    instance = sub.add_parser("instance", help="write an instance file for a named example")
    instance.add_argument("--family", choices=INSTANCE_NAMES, default="spin1")
    instance.add_argument("--theta", type=float, default=0.0)
    instance.add_argument("--no-witness", action="store_true")
    instance.add_argument("--output", "-o", default=None)
    instance.set_defaults(func=cmd_instance)
    return parser


def _log_level(args: argparse.Namespace) -> int:
    if args.quiet:
        return logging.ERROR
    if args.verbose >= 2:
        return logging.DEBUG
    if args.verbose == 1:
        return logging.INFO
    return getattr(logging, os.environ.get(LOG_LEVEL_ENV, "WARNING").upper(), logging.WARNING)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=_log_level(args), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InstanceFileError as err:
        logger.error("invalid instance file: %s", err)
        return EXIT_INPUT_ERROR
    except ConstraintError as err:
        logger.error("constraint violated: %s", err)
        return EXIT_CONSTRAINT
    except (Error, ValueError) as err:
        logger.error("%s", err)
        return EXIT_INPUT_ERROR
    except OSError as err:
        logger.error("I/O error: %s", err)
        return EXIT_INPUT_ERROR


__all__ = ["EXIT_OK", "EXIT_VIOLATION", "EXIT_INPUT_ERROR", "EXIT_CONSTRAINT", "TrialOutcome",
           "VerifySummary", "trial_instance", "run_trial", "run_verification", "build_parser",
           "main", "cmd_report", "cmd_scan", "cmd_verify", "cmd_optimize", "cmd_instance"]
