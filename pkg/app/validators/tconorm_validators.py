"""Sampled verification of the t-conorm axioms."""
import logging
from typing import Callable, Union

import numpy as np

from app.core.tolerances import ASSOCIATIVITY_ATOL, AXIOM_ATOL
from app.models.tconorm import TConorm
from app.schemas.report import AxiomCheck, AxiomReport

logger = logging.getLogger(__name__)

Rule = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _check(axiom: str, violations: np.ndarray, atol: float, witnesses: dict[str, np.ndarray]) -> AxiomCheck:
    worst = int(np.argmax(violations))
    worst_violation = float(violations[worst])
    passed = worst_violation <= atol
    witness = {} if passed else {name: float(values[worst]) for name, values in witnesses.items()}
    if not passed:
        logger.warning("t-conorm axiom %s violated by %g at %s", axiom, worst_violation, witness)
    return AxiomCheck(
        axiom=axiom,
        passed=passed,
        samples_tested=int(violations.size),
        worst_violation=worst_violation,
        witness=witness,
    )


def verify_tconorm_axioms(conorm: Union[TConorm, Rule], sample_count: int, seed: int) -> AxiomReport:
    """Commutativity, associativity, identity and monotonicity on sampled triples.

    `conorm` may also be a bare vectorised rule, which lets callers check
    candidates that are not t-conorms at all.
    """
    if sample_count < 1:
        raise ValueError(f"sample_count must be positive, got {sample_count}")
    if isinstance(conorm, TConorm):
        rule, subject = conorm.rule, f"tconorm:{conorm.kind.value}"
    else:
        rule, subject = conorm, f"tconorm:{getattr(conorm, '__name__', 'custom')}"

    rng = np.random.default_rng(seed)
    a, b, c, d, e = rng.random((5, sample_count))
    # a handful of exact boundary operands
    k = min(3, sample_count)
    a[:k] = (0.0, 1.0, 0.5)[:k]

    rab, rba = rule(a, b), rule(b, a)
    commutativity = np.abs(rab - rba)

    associativity = np.abs(rule(rule(a, b), c) - rule(a, rule(b, c)))

    identity = np.abs(rule(a, np.zeros_like(a)) - a)

    # (a, b) <= (a ∨ d, b ∨ e) componentwise
    upper_a, upper_b = np.maximum(a, d), np.maximum(b, e)
    monotonicity = np.maximum(0.0, rab - rule(upper_a, upper_b))

    checks = [
        _check("commutativity", commutativity, 0.0, {"a": a, "b": b}),
        _check("associativity", associativity, ASSOCIATIVITY_ATOL, {"a": a, "b": b, "c": c}),
        _check("identity", identity, 0.0, {"a": a}),
        _check("monotonicity", monotonicity, AXIOM_ATOL, {"a": a, "b": b, "c": upper_a, "d": upper_b}),
    ]
    report = AxiomReport(subject=subject, sample_count=sample_count, seed=seed, checks=checks)
    logger.info("%s: %d samples, passed=%s", subject, sample_count, report.passed)
    return report
