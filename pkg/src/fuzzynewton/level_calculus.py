"""Fuzzy-valued functions of one real variable and their scalarization.

A FuzzyFunction exposes a fuzzy-valued map through its level functions
lo(x, alpha) and hi(x, alpha).  The scalarization

    F(x) = integral over [0, 1] of (lo(x, a) + hi(x, a)) da

is computed by fixed-grid quadrature (trapezoid or Simpson), and its first
and second derivatives come either from user-supplied analytic level
derivatives (integrated with the same rule) or from central finite
differences applied to F itself.

Level callables must accept numpy arrays for the alpha argument and
broadcast; accepting array x as well is optional but enables the fast
vectorized paths.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, InvalidLevelError, MalformedFunctionError, NumericError
from .fuzzy_core import FuzzyNumber, comparable, lt, uniform_alphas

__all__ = [
    "FuzzyFunction",
    "ScalarizationConfig",
    "ComparabilityReport",
    "NonDominanceVerdict",
    "OneSidedStencilWarning",
    "crisp_lift",
    "negate",
    "eval_fuzzy",
    "scalarize",
    "scalarize_many",
    "scalarize_d1",
    "scalarize_d2",
    "comparability_check",
    "non_dominance_check",
]

LevelMap = Callable[[float, np.ndarray], np.ndarray]


class OneSidedStencilWarning(UserWarning):
    """A finite-difference stencil was shrunk to one-sided form at a
    domain boundary; the derivative estimate is first-order accurate."""


@dataclass(frozen=True, eq=False)
class FuzzyFunction:
    """A fuzzy-valued function given by its alpha-level endpoint maps.

    ``level_lo`` and ``level_hi`` evaluate the lower and upper level
    endpoints at (x, alpha).  Analytic level derivatives in x of orders
    1 and 2 are optional; when absent, scalarized derivatives fall back
    to finite differences.  ``domain`` is a closed real interval,
    possibly unbounded.
    """

    level_lo: LevelMap
    level_hi: LevelMap
    d1_lo: Optional[LevelMap] = None
    d1_hi: Optional[LevelMap] = None
    d2_lo: Optional[LevelMap] = None
    d2_hi: Optional[LevelMap] = None
    domain: tuple[float, float] = (-math.inf, math.inf)
    name: str = ""

    @property
    def has_analytic_d1(self) -> bool:
        return self.d1_lo is not None and self.d1_hi is not None

    @property
    def has_analytic_d2(self) -> bool:
        return self.d2_lo is not None and self.d2_hi is not None

    def contains(self, x: float) -> bool:
        return self.domain[0] <= x <= self.domain[1]


@dataclass(frozen=True)
class ScalarizationConfig:
    """Quadrature and finite-difference settings for the scalarization."""

    alpha_points: int = 101
    quadrature: str = "simpson"
    fd_step: float = 1e-5

    def __post_init__(self):
        if self.quadrature not in ("trapezoid", "simpson"):
            raise ValueError(
                f"quadrature must be 'trapezoid' or 'simpson', got "
                f"{self.quadrature!r}"
            )
        if self.alpha_points < 3:
            raise ValueError("alpha_points must be at least 3")
        if self.quadrature == "simpson" and self.alpha_points % 2 == 0:
            raise ValueError("simpson quadrature needs an odd alpha_points")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be positive")


def _quad_weights(cfg: ScalarizationConfig) -> tuple[np.ndarray, np.ndarray]:
    n = cfg.alpha_points
    alphas = uniform_alphas(n)
    h = 1.0 / (n - 1)
    if cfg.quadrature == "trapezoid":
        w = np.full(n, h)
        w[0] = w[-1] = h / 2.0
    else:
        w = np.ones(n)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w *= h / 3.0
    return alphas, w


def crisp_lift(
    g: Callable,
    d1: Optional[Callable] = None,
    d2: Optional[Callable] = None,
    domain: tuple[float, float] = (-math.inf, math.inf),
    name: str = "",
) -> FuzzyFunction:
    """Embed a real function as a fuzzy one with degenerate levels lo = hi.

    Level maps ignore alpha apart from broadcasting against it.
    """

    def lev(x, a):
        return np.asarray(g(x)) + 0.0 * np.asarray(a)

    dmap1 = None
    if d1 is not None:
        def dmap1(x, a):
            return np.asarray(d1(x)) + 0.0 * np.asarray(a)

    dmap2 = None
    if d2 is not None:
        def dmap2(x, a):
            return np.asarray(d2(x)) + 0.0 * np.asarray(a)

    return FuzzyFunction(
        level_lo=lev,
        level_hi=lev,
        d1_lo=dmap1,
        d1_hi=dmap1,
        d2_lo=dmap2,
        d2_hi=dmap2,
        domain=domain,
        name=name,
    )


def negate(f: FuzzyFunction) -> FuzzyFunction:
    """Pointwise fuzzy negation: levels swap roles and change sign."""

    def flip(m):
        if m is None:
            return None
        return lambda x, a: -np.asarray(m(x, a))

    return FuzzyFunction(
        level_lo=flip(f.level_hi),
        level_hi=flip(f.level_lo),
        d1_lo=flip(f.d1_hi),
        d1_hi=flip(f.d1_lo),
        d2_lo=flip(f.d2_hi),
        d2_hi=flip(f.d2_lo),
        domain=f.domain,
        name=f"-({f.name})" if f.name else "",
    )


def _require_in_domain(f: FuzzyFunction, x: float) -> None:
    if not f.contains(x):
        raise DomainError(
            f"x={x} outside the function domain [{f.domain[0]}, {f.domain[1]}]"
        )


def _levels_at(f: FuzzyFunction, x: float, alphas: np.ndarray):
    lo = np.broadcast_to(np.asarray(f.level_lo(x, alphas), float), alphas.shape)
    hi = np.broadcast_to(np.asarray(f.level_hi(x, alphas), float), alphas.shape)
    return lo, hi


def eval_fuzzy(f: FuzzyFunction, x: float, m: int = 101) -> FuzzyNumber:
    """The fuzzy value of f at x sampled on the uniform m-point grid.

    Raises MalformedFunctionError when the level maps violate the
    fuzzy-number invariants at some (x, alpha).
    """
    _require_in_domain(f, x)
    alphas = uniform_alphas(m)
    lo, hi = _levels_at(f, x, alphas)
    try:
        return FuzzyNumber(alphas, lo, hi)
    except InvalidLevelError as err:
        raise MalformedFunctionError(
            f"levels of {f.name or 'fuzzy function'} are invalid at "
            f"x={x:.9g}: {err}",
            x=x,
            alpha=err.alpha,
        ) from err


def scalarize(f: FuzzyFunction, x: float, cfg: ScalarizationConfig) -> float:
    """Quadrature approximation of the level-sum integral at one point."""
    _require_in_domain(f, x)
    alphas, w = _quad_weights(cfg)
    lo, hi = _levels_at(f, x, alphas)
    total = lo + hi
    if not np.all(np.isfinite(total)):
        raise NumericError(f"non-finite level values at x={x}")
    return float(w @ total)


def scalarize_many(f: FuzzyFunction, xs, cfg: ScalarizationConfig) -> np.ndarray:
    """Vectorized scalarization over an array of x values.

    Uses a single broadcast evaluation when the level maps accept array
    x, otherwise falls back to a per-point loop.
    """
    xs = np.atleast_1d(np.asarray(xs, float))
    alphas, w = _quad_weights(cfg)
    shape = (xs.size, alphas.size)
    try:
        lo = np.broadcast_to(
            np.asarray(f.level_lo(xs[:, None], alphas[None, :]), float), shape
        )
        hi = np.broadcast_to(
            np.asarray(f.level_hi(xs[:, None], alphas[None, :]), float), shape
        )
    except Exception:
        return np.array([scalarize(f, float(x), cfg) for x in xs])
    return (lo + hi) @ w


def _fd_points(f: FuzzyFunction, x: float, h: float):
    """Stencil abscissae (x-h, x, x+h), shrunk one-sided at a boundary."""
    left_ok = f.contains(x - h)
    right_ok = f.contains(x + h)
    if left_ok and right_ok:
        return x - h, x, x + h, False
    if right_ok:
        warnings.warn(
            "stencil shrunk to one-sided (right) at the domain boundary",
            OneSidedStencilWarning,
            stacklevel=3,
        )
        return x, x + h, x + 2.0 * h, True
    if left_ok:
        warnings.warn(
            "stencil shrunk to one-sided (left) at the domain boundary",
            OneSidedStencilWarning,
            stacklevel=3,
        )
        return x - 2.0 * h, x - h, x, True
    raise DomainError(
        f"domain too narrow for a finite-difference stencil around x={x}"
    )


def _integrate_levels(maps, x, cfg) -> float:
    alphas, w = _quad_weights(cfg)
    lo_map, hi_map = maps
    lo = np.broadcast_to(np.asarray(lo_map(x, alphas), float), alphas.shape)
    hi = np.broadcast_to(np.asarray(hi_map(x, alphas), float), alphas.shape)
    total = lo + hi
    if not np.all(np.isfinite(total)):
        raise NumericError(f"non-finite level derivative at x={x}")
    return float(w @ total)


def scalarize_d1(f: FuzzyFunction, x: float, cfg: ScalarizationConfig) -> float:
    """First derivative of the scalarized F at x.

    Integrates analytic level derivatives when available, otherwise a
    central difference of F with step fd_step * max(1, |x|).
    """
    _require_in_domain(f, x)
    if f.has_analytic_d1:
        return _integrate_levels((f.d1_lo, f.d1_hi), x, cfg)
    h = cfg.fd_step * max(1.0, abs(x))
    a, b, c = _fd_points(f, x, h)[:3]
    if a == x:  # one-sided right
        return (scalarize(f, b, cfg) - scalarize(f, a, cfg)) / h
    if c == x:  # one-sided left
        return (scalarize(f, c, cfg) - scalarize(f, b, cfg)) / h
    return (scalarize(f, c, cfg) - scalarize(f, a, cfg)) / (2.0 * h)


def scalarize_d2(f: FuzzyFunction, x: float, cfg: ScalarizationConfig) -> float:
    """Second derivative of the scalarized F at x (analytic or FD)."""
    _require_in_domain(f, x)
    if f.has_analytic_d2:
        return _integrate_levels((f.d2_lo, f.d2_hi), x, cfg)
    h = cfg.fd_step * max(1.0, abs(x))
    a, b, c = _fd_points(f, x, h)[:3]
    fa = scalarize(f, a, cfg)
    fb = scalarize(f, b, cfg)
    fc = scalarize(f, c, cfg)
    return (fa - 2.0 * fb + fc) / (h * h)


@dataclass(frozen=True)
class ComparabilityReport:
    """Outcome of sampling comparability along one direction."""

    ok: bool
    direction: float
    delta: float
    samples: int
    witness: Optional[float] = None

    def describe(self) -> str:
        if self.ok:
            return (
                f"comparable along d={self.direction:+g} for {self.samples} "
                f"samples in (0, {self.delta:g})"
            )
        return (
            f"incomparable at lambda={self.witness:.9g} along "
            f"d={self.direction:+g}"
        )


def comparability_check(
    f: FuzzyFunction,
    x0: float,
    d: float,
    delta: float,
    samples: int,
    m: int = 101,
) -> ComparabilityReport:
    """Sample lambda in (0, delta) and test whether f(x0 + lambda d) and
    f(x0) are comparable at every sampled lambda.

    Returns the first violating lambda as a witness on failure.  Sampled
    points falling outside the domain are skipped.
    """
    _require_in_domain(f, x0)
    base = eval_fuzzy(f, x0, m)
    lams = np.linspace(0.0, delta, samples + 2)[1:-1]
    used = 0
    for lam in lams:
        xt = x0 + lam * d
        if not f.contains(xt):
            continue
        used += 1
        if not comparable(eval_fuzzy(f, xt, m), base):
            return ComparabilityReport(
                ok=False, direction=d, delta=delta, samples=used,
                witness=float(lam),
            )
    return ComparabilityReport(ok=True, direction=d, delta=delta, samples=used)


@dataclass(frozen=True)
class NonDominanceVerdict:
    """Outcome of a sampled search for dominating neighbors."""

    dominated: bool
    samples: int
    dominator: Optional[float] = None

    def describe(self) -> str:
        if self.dominated:
            return f"dominated-by {self.dominator:.9g}"
        return f"no-dominator-found ({self.samples} samples)"


def non_dominance_check(
    f: FuzzyFunction,
    xstar: float,
    eps_nbhd: float,
    samples: int,
    m: int = 101,
) -> NonDominanceVerdict:
    """Search [xstar - eps, xstar + eps] for a point whose fuzzy value is
    strictly below f(xstar) in the fuzzy-max order.

    A sampling check, not a proof; the verdict records how many points
    were examined.
    """
    _require_in_domain(f, xstar)
    base = eval_fuzzy(f, xstar, m)
    grid = np.linspace(xstar - eps_nbhd, xstar + eps_nbhd, samples)
    # Rounding can land a sample a few ulps off xstar; such a point is
    # xstar for all practical purposes, not evidence of dominance.
    coincident = 1e-12 * max(1.0, abs(xstar), eps_nbhd)
    used = 0
    for x1 in grid:
        if abs(x1 - xstar) <= coincident or not f.contains(x1):
            continue
        used += 1
        if lt(eval_fuzzy(f, float(x1), m), base):
            return NonDominanceVerdict(
                dominated=True, samples=used, dominator=float(x1)
            )
    return NonDominanceVerdict(dominated=False, samples=used)
