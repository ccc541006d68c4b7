"""Scalarized Newton iteration with trace capture and diagnostics.

The solver drives x_{k+1} = x_k - F'(x_k)/F''(x_k) on the scalarized
objective F of a fuzzy-valued function, terminating on a small step, a
vanishing second derivative, an exhausted iteration budget, or non-finite
values.  Every outcome is a status on the result, never an exception, and
the full iteration trace is always returned.

No damping or line search is applied; divergence and cycling surface as
the max-iter status.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError, InsufficientDataError, NumericError
from .fuzzy_core import FuzzyNumber
from .level_calculus import (
    ComparabilityReport,
    FuzzyFunction,
    NonDominanceVerdict,
    ScalarizationConfig,
    comparability_check,
    eval_fuzzy,
    non_dominance_check,
    scalarize,
    scalarize_d1,
    scalarize_d2,
)

__all__ = [
    "NewtonConfig",
    "IterationRecord",
    "SolveResult",
    "OrderEstimate",
    "VerificationReport",
    "solve",
    "estimate_convergence_order",
    "check_point",
    "verify_solution",
    "STATUS_CONVERGED",
    "STATUS_D2_NEAR_ZERO",
    "STATUS_MAX_ITER",
    "STATUS_NON_FINITE",
]

STATUS_CONVERGED = "converged"
STATUS_D2_NEAR_ZERO = "second-derivative-near-zero"
STATUS_MAX_ITER = "max-iter-exceeded"
STATUS_NON_FINITE = "non-finite"


@dataclass(frozen=True)
class NewtonConfig:
    """Iteration settings: start point, step tolerance, guards."""

    x0: float
    eps: float = 1e-5
    max_iter: int = 100
    d2_floor: float = 1e-12
    scal: ScalarizationConfig = ScalarizationConfig()

    def __post_init__(self):
        if not math.isfinite(self.x0):
            raise ValueError("x0 must be finite")
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if not self.d2_floor > 0:
            raise ValueError("d2_floor must be positive")


@dataclass(frozen=True)
class IterationRecord:
    """One Newton step: the iterate, derivatives, step, and fuzzy value."""

    k: int
    x_k: float
    F: float
    dF: float
    d2F: float
    step: float
    fuzzy_value: FuzzyNumber


@dataclass(frozen=True)
class SolveResult:
    status: str
    xstar: float
    trace: tuple[IterationRecord, ...]
    stationarity_kind: str

    @property
    def iterations(self) -> int:
        return len(self.trace)

    def iterates(self) -> list[float]:
        """The visited points x_0, x_1, ..., ending with xstar."""
        return [r.x_k for r in self.trace] + [self.xstar]


def _stationarity_kind(f, xstar, cfg) -> str:
    try:
        d2 = scalarize_d2(f, xstar, cfg.scal)
    except Exception:
        return "inconclusive"
    if not math.isfinite(d2) or abs(d2) < cfg.d2_floor:
        return "inconclusive"
    return "local-min" if d2 > 0 else "local-max"


def solve(f: FuzzyFunction, cfg: NewtonConfig) -> SolveResult:
    """Run the Newton iteration on the scalarization of f.

    Terminates with status converged when |x_{k+1} - x_k| < eps,
    second-derivative-near-zero when |F''| falls under d2_floor,
    max-iter-exceeded when the budget runs out, and non-finite when any
    evaluation stops being a number.  xstar is the last finite iterate.
    """
    if not f.contains(cfg.x0):
        raise DomainError(f"x0={cfg.x0} outside the function domain")
    xk = float(cfg.x0)
    trace: list[IterationRecord] = []
    status = STATUS_MAX_ITER
    xstar = xk
    for k in range(cfg.max_iter):
        try:
            fval = scalarize(f, xk, cfg.scal)
            d1 = scalarize_d1(f, xk, cfg.scal)
            d2 = scalarize_d2(f, xk, cfg.scal)
        except NumericError:
            status = STATUS_NON_FINITE
            xstar = xk
            break
        if not all(math.isfinite(v) for v in (fval, d1, d2)):
            status = STATUS_NON_FINITE
            xstar = xk
            break
        fuzzy_value = eval_fuzzy(f, xk, cfg.scal.alpha_points)
        if abs(d2) < cfg.d2_floor:
            trace.append(
                IterationRecord(k, xk, fval, d1, d2, math.nan, fuzzy_value)
            )
            status = STATUS_D2_NEAR_ZERO
            xstar = xk
            break
        step = -d1 / d2
        trace.append(IterationRecord(k, xk, fval, d1, d2, step, fuzzy_value))
        x_next = xk + step
        if not math.isfinite(x_next):
            status = STATUS_NON_FINITE
            xstar = xk
            break
        if not f.contains(x_next):
            raise DomainError(
                f"iterate left the domain at step {k}: x={x_next}"
            )
        xk = x_next
        xstar = xk
        if abs(step) < cfg.eps:
            status = STATUS_CONVERGED
            break
    return SolveResult(
        status=status,
        xstar=xstar,
        trace=tuple(trace),
        stationarity_kind=_stationarity_kind(f, xstar, cfg),
    )


@dataclass(frozen=True)
class OrderEstimate:
    """Fitted empirical convergence order and asymptotic constant."""

    order: float
    constant: float
    pairs_used: int


def estimate_convergence_order(
    trace, xstar: float, tail_pairs: int = 4
) -> OrderEstimate:
    """Least-squares fit of log e_{k+1} against log e_k on the trace tail.

    Errors e_k = |x_k - xstar| are taken from the trace records; zero
    errors and exact repeats are dropped.  The fit uses the last
    ``tail_pairs`` consecutive pairs (the asymptotic regime); fewer than
    four usable iterates raise InsufficientDataError.
    """
    errors: list[float] = []
    for rec in trace:
        e = abs(rec.x_k - xstar)
        if e > 0.0 and (not errors or e != errors[-1]):
            errors.append(e)
    if len(errors) < 4:
        raise InsufficientDataError(
            f"need at least 4 iterates with distinct positive errors, "
            f"got {len(errors)}"
        )
    logs = np.log(errors)
    xs, ys = logs[:-1], logs[1:]
    n = min(tail_pairs, xs.size)
    xs, ys = xs[-n:], ys[-n:]
    slope, intercept = np.polyfit(xs, ys, 1)
    return OrderEstimate(
        order=float(slope), constant=float(np.exp(intercept)), pairs_used=n
    )


@dataclass(frozen=True)
class VerificationReport:
    """Post-hoc checks at a converged iterate."""

    xstar: float
    d1: float
    d2: float
    stat_tol: float
    stationary: bool
    level_d1_max: float
    non_dominance: NonDominanceVerdict
    comp_plus: ComparabilityReport
    comp_minus: ComparabilityReport

    @property
    def ok(self) -> bool:
        return self.stationary and not self.non_dominance.dominated

    def lines(self) -> list[str]:
        return [
            f"|F'(xstar)| = {abs(self.d1):.6g} "
            f"({'<' if self.stationary else '>='} tol {self.stat_tol:.6g})",
            f"F''(xstar) = {self.d2:.6g}",
            f"max level derivative magnitude = {self.level_d1_max:.6g}",
            f"non-dominance: {self.non_dominance.describe()}",
            f"comparability (+): {self.comp_plus.describe()}",
            f"comparability (-): {self.comp_minus.describe()}",
        ]


def _level_d1_max(f: FuzzyFunction, x: float, cfg: ScalarizationConfig) -> float:
    from .fuzzy_core import uniform_alphas

    alphas = uniform_alphas(cfg.alpha_points)
    h = cfg.fd_step * max(1.0, abs(x))
    if f.contains(x - h) and f.contains(x + h):
        pts = (x - h, x + h)
        denom = 2.0 * h
    elif f.contains(x + h):
        pts = (x, x + h)
        denom = h
    else:
        pts = (x - h, x)
        denom = h
    dlo = (
        np.asarray(f.level_lo(pts[1], alphas), float)
        - np.asarray(f.level_lo(pts[0], alphas), float)
    ) / denom
    dhi = (
        np.asarray(f.level_hi(pts[1], alphas), float)
        - np.asarray(f.level_hi(pts[0], alphas), float)
    ) / denom
    return float(max(np.max(np.abs(dlo)), np.max(np.abs(dhi))))


def check_point(
    f: FuzzyFunction,
    x: float,
    cfg: NewtonConfig,
    nbhd: float = 0.01,
    samples: int = 25,
    stat_tol: Optional[float] = None,
) -> VerificationReport:
    """Stationarity, level-derivative, non-dominance, and comparability
    checks at an arbitrary point.

    The default stationarity tolerance is 10 * eps * max(1, |F''(x)|).
    """
    d1 = scalarize_d1(f, x, cfg.scal)
    d2 = scalarize_d2(f, x, cfg.scal)
    if stat_tol is None:
        stat_tol = 10.0 * cfg.eps * max(1.0, abs(d2))
    m = cfg.scal.alpha_points
    return VerificationReport(
        xstar=x,
        d1=d1,
        d2=d2,
        stat_tol=stat_tol,
        stationary=abs(d1) < stat_tol,
        level_d1_max=_level_d1_max(f, x, cfg.scal),
        non_dominance=non_dominance_check(f, x, nbhd, samples, m),
        comp_plus=comparability_check(f, x, +1.0, nbhd, samples, m),
        comp_minus=comparability_check(f, x, -1.0, nbhd, samples, m),
    )


def verify_solution(
    f: FuzzyFunction,
    result: SolveResult,
    cfg: NewtonConfig,
    nbhd: float = 0.01,
    samples: int = 25,
    stat_tol: Optional[float] = None,
) -> VerificationReport:
    """Post-hoc verification at a converged iterate (see check_point)."""
    if result.status != STATUS_CONVERGED:
        raise ValueError(
            f"verification requires a converged result, got status "
            f"{result.status!r}"
        )
    return check_point(f, result.xstar, cfg, nbhd, samples, stat_tol)
