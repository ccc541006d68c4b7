"""Fuzzy numbers as alpha-level intervals on a uniform grid.

A fuzzy number is represented by its alpha-cuts sampled on a uniform grid
0 = alpha_1 < ... < alpha_M = 1.  Every operation works endpoint-wise on
the sampled intervals: addition and scalar multiplication follow the
standard extension-principle rules, multiplication and division take the
min/max over the four endpoint products, and the square is the dependent
image of t -> t**2 so that levels straddling zero stay valid.

The module also provides the fuzzy-max partial order, the sup-of-level
distances metric, and the Hukuhara difference (which may fail to exist;
nonexistence is reported as a value, not an exception).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    GridMismatchError,
    InvalidLevelError,
    SingularLevelError,
)

__all__ = [
    "Interval",
    "TriangularFuzzy",
    "FuzzyNumber",
    "HukuharaNonexistence",
    "uniform_alphas",
    "alpha_cut",
    "discretize",
    "crisp",
    "add",
    "scalar_mul",
    "mul",
    "div",
    "square",
    "reciprocal",
    "leq",
    "lt",
    "comparable",
    "distance",
    "hukuhara_diff",
    "levels_equal",
    "fuzzy_to_record",
    "fuzzy_from_record",
    "triangular_to_record",
    "triangular_from_record",
]

# Absolute slack used when validating level ordering and nestedness; scaled
# by the magnitude of the data so exact constructions never trip it while
# floating-point dust from long arithmetic chains is tolerated.
EQUALITY_TOL = 1e-12


@dataclass(frozen=True)
class Interval:
    """A closed real interval [lo, hi], one alpha-level of a fuzzy number."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidLevelError("interval endpoints must be finite")
        if self.lo > self.hi:
            raise InvalidLevelError(
                f"interval lower end {self.lo} exceeds upper end {self.hi}"
            )

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


@dataclass(frozen=True)
class TriangularFuzzy:
    """Triangular fuzzy number (left, peak, right) with exact alpha-cuts."""

    left: float
    peak: float
    right: float

    def __post_init__(self):
        if not (self.left <= self.peak <= self.right):
            raise InvalidLevelError(
                f"triangular shape requires left <= peak <= right, got "
                f"({self.left}, {self.peak}, {self.right})"
            )


def alpha_cut(t: TriangularFuzzy, alpha: float) -> Interval:
    """Exact alpha-cut [(1-a)*left + a*peak, (1-a)*right + a*peak].

    Raises DomainError if alpha lies outside [0, 1].
    """
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return Interval(
        (1.0 - alpha) * t.left + alpha * t.peak,
        (1.0 - alpha) * t.right + alpha * t.peak,
    )


def uniform_alphas(m: int) -> np.ndarray:
    """The uniform membership grid 0 = a_1 < ... < a_m = 1."""
    if m < 2:
        raise InvalidLevelError(f"grid needs at least 2 levels, got {m}")
    return np.linspace(0.0, 1.0, m)


class FuzzyNumber:
    """A fuzzy number sampled on a uniform alpha-grid.

    Holds three parallel immutable arrays: ``alphas`` (the grid),
    ``lo`` (lower level endpoints, nondecreasing in alpha) and ``hi``
    (upper endpoints, nonincreasing in alpha).  Construction validates
    per-level ordering, nestedness, and grid uniformity.
    """

    __slots__ = ("alphas", "lo", "hi")

    def __init__(self, alphas, lo, hi):
        # Copy so freezing the arrays never flips flags on caller data.
        alphas = np.array(alphas, dtype=float, copy=True)
        lo = np.array(lo, dtype=float, copy=True)
        hi = np.array(hi, dtype=float, copy=True)
        _validate_grid(alphas)
        if lo.shape != alphas.shape or hi.shape != alphas.shape:
            raise InvalidLevelError(
                "alphas, lo, hi must be one-dimensional and equally long"
            )
        _validate_levels(alphas, lo, hi)
        for arr in (alphas, lo, hi):
            arr.flags.writeable = False
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("FuzzyNumber is immutable")

    @property
    def m(self) -> int:
        """Number of grid levels."""
        return self.alphas.size

    def support(self) -> Interval:
        """The 0-level interval."""
        return Interval(float(self.lo[0]), float(self.hi[0]))

    def core(self) -> Interval:
        """The 1-level interval."""
        return Interval(float(self.lo[-1]), float(self.hi[-1]))

    def __repr__(self):
        s, c = self.support(), self.core()
        return (
            f"FuzzyNumber(m={self.m}, support=[{s.lo:.6g}, {s.hi:.6g}], "
            f"core=[{c.lo:.6g}, {c.hi:.6g}])"
        )

    def __eq__(self, other):
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        if self.m != other.m or not np.array_equal(self.alphas, other.alphas):
            return False
        return levels_equal(self, other)

    def __hash__(self):
        return hash((self.m, float(self.lo[0]), float(self.hi[0])))


def _validate_grid(alphas: np.ndarray) -> None:
    if alphas.ndim != 1 or alphas.size < 2:
        raise InvalidLevelError("alpha grid must be 1-d with at least 2 points")
    if alphas[0] != 0.0 or alphas[-1] != 1.0:
        raise InvalidLevelError("alpha grid must start at 0 and end at 1")
    step = 1.0 / (alphas.size - 1)
    if not np.allclose(np.diff(alphas), step, rtol=0.0, atol=1e-12):
        raise InvalidLevelError("alpha grid must be uniform")


def _slack(*arrays: np.ndarray) -> float:
    scale = max(1.0, *(float(np.max(np.abs(a))) for a in arrays))
    return EQUALITY_TOL * scale


def _validate_levels(alphas, lo, hi) -> None:
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise InvalidLevelError("level endpoints must be finite")
    tol = _slack(lo, hi)
    bad = lo > hi + tol
    if np.any(bad):
        i = int(np.argmax(bad))
        raise InvalidLevelError(
            f"level ordering lo <= hi fails at alpha={alphas[i]:.6g} "
            f"({lo[i]} > {hi[i]})",
            alpha=float(alphas[i]),
        )
    bad = np.diff(lo) < -tol
    if np.any(bad):
        i = int(np.argmax(bad)) + 1
        raise InvalidLevelError(
            f"nestedness fails: lower endpoints decrease at alpha="
            f"{alphas[i]:.6g}",
            alpha=float(alphas[i]),
        )
    bad = np.diff(hi) > tol
    if np.any(bad):
        i = int(np.argmax(bad)) + 1
        raise InvalidLevelError(
            f"nestedness fails: upper endpoints increase at alpha="
            f"{alphas[i]:.6g}",
            alpha=float(alphas[i]),
        )


def _require_same_grid(a: FuzzyNumber, b: FuzzyNumber) -> None:
    if a.m != b.m or not np.array_equal(a.alphas, b.alphas):
        raise GridMismatchError(
            f"operands use different alpha grids ({a.m} vs {b.m} levels)"
        )


def discretize(t: TriangularFuzzy, m: int = 101) -> FuzzyNumber:
    """Sample a triangular fuzzy number onto the uniform m-point grid."""
    alphas = uniform_alphas(m)
    lo = (1.0 - alphas) * t.left + alphas * t.peak
    hi = (1.0 - alphas) * t.right + alphas * t.peak
    return FuzzyNumber(alphas, lo, hi)


def crisp(value: float, m: int = 101) -> FuzzyNumber:
    """A real number embedded as a fuzzy number (all levels degenerate)."""
    alphas = uniform_alphas(m)
    v = np.full(m, float(value))
    return FuzzyNumber(alphas, v, v.copy())


def add(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Level-wise sum [aL + bL, aU + bU]."""
    _require_same_grid(a, b)
    return FuzzyNumber(a.alphas, a.lo + b.lo, a.hi + b.hi)


def scalar_mul(lam: float, a: FuzzyNumber) -> FuzzyNumber:
    """Scale by a real; negative scalars swap the level endpoints."""
    if lam >= 0.0:
        return FuzzyNumber(a.alphas, lam * a.lo, lam * a.hi)
    return FuzzyNumber(a.alphas, lam * a.hi, lam * a.lo)


def mul(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Level-wise interval product: min/max over the four endpoint products."""
    _require_same_grid(a, b)
    prods = np.stack([a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi])
    return FuzzyNumber(a.alphas, prods.min(axis=0), prods.max(axis=0))


def div(a: FuzzyNumber, b: FuzzyNumber) -> FuzzyNumber:
    """Level-wise interval quotient; every level of b must exclude 0."""
    _require_same_grid(a, b)
    contains_zero = (b.lo <= 0.0) & (b.hi >= 0.0)
    if np.any(contains_zero):
        i = int(np.argmax(contains_zero))
        raise SingularLevelError(
            f"divisor level contains 0 at alpha={b.alphas[i]:.6g}",
            alpha=float(b.alphas[i]),
        )
    quots = np.stack([a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi])
    return FuzzyNumber(a.alphas, quots.min(axis=0), quots.max(axis=0))


def square(a: FuzzyNumber) -> FuzzyNumber:
    """Dependent square: the image of each level through t -> t**2.

    Levels entirely nonnegative map to [L^2, U^2]; entirely nonpositive
    to [U^2, L^2]; levels straddling zero to [0, max(L^2, U^2)].
    """
    lo2, hi2 = a.lo * a.lo, a.hi * a.hi
    lo = np.where(a.lo >= 0.0, lo2, np.where(a.hi <= 0.0, hi2, 0.0))
    hi = np.maximum(lo2, hi2)
    return FuzzyNumber(a.alphas, lo, hi)


def reciprocal(a: FuzzyNumber) -> FuzzyNumber:
    """Level-wise reciprocal [1/U, 1/L]; every level must exclude 0."""
    contains_zero = (a.lo <= 0.0) & (a.hi >= 0.0)
    if np.any(contains_zero):
        i = int(np.argmax(contains_zero))
        raise SingularLevelError(
            f"level contains 0 at alpha={a.alphas[i]:.6g}",
            alpha=float(a.alphas[i]),
        )
    return FuzzyNumber(a.alphas, 1.0 / a.hi, 1.0 / a.lo)


def leq(a: FuzzyNumber, b: FuzzyNumber) -> bool:
    """Fuzzy-max order: both endpoints ordered at every grid alpha."""
    _require_same_grid(a, b)
    return bool(np.all(a.lo <= b.lo) and np.all(a.hi <= b.hi))


def lt(a: FuzzyNumber, b: FuzzyNumber) -> bool:
    """Strict fuzzy-max order: leq plus strictness at some grid alpha."""
    if not leq(a, b):
        return False
    return bool(np.any(a.lo < b.lo) or np.any(a.hi < b.hi))


def comparable(a: FuzzyNumber, b: FuzzyNumber) -> bool:
    """Related in at least one direction of the fuzzy-max order."""
    return leq(a, b) or leq(b, a)


def distance(a: FuzzyNumber, b: FuzzyNumber) -> float:
    """Sup over the grid of the larger endpoint deviation per level."""
    _require_same_grid(a, b)
    return float(
        np.max(np.maximum(np.abs(a.lo - b.lo), np.abs(a.hi - b.hi)))
    )


@dataclass(frozen=True)
class HukuharaNonexistence:
    """Verdict returned when the Hukuhara difference does not exist.

    Cites the first grid alpha at which the candidate levels violate
    the fuzzy-number invariants.
    """

    alpha: float
    reason: str

    def __bool__(self):
        return False


def hukuhara_diff(
    a: FuzzyNumber, b: FuzzyNumber
) -> FuzzyNumber | HukuharaNonexistence:
    """The fuzzy number c with c + b = a, when it exists.

    The candidate has levels [aL - bL, aU - bU]; it is returned only if
    those levels form a valid fuzzy number, otherwise a
    HukuharaNonexistence verdict cites the first violated alpha.
    """
    _require_same_grid(a, b)
    lo = a.lo - b.lo
    hi = a.hi - b.hi
    tol = _slack(lo, hi)
    for i in range(a.m):
        alpha = float(a.alphas[i])
        if lo[i] > hi[i] + tol:
            return HukuharaNonexistence(alpha, "level ordering lo <= hi fails")
        if i > 0 and lo[i] < lo[i - 1] - tol:
            return HukuharaNonexistence(alpha, "lower endpoints decrease")
        if i > 0 and hi[i] > hi[i - 1] + tol:
            return HukuharaNonexistence(alpha, "upper endpoints increase")
    return FuzzyNumber(a.alphas, lo, hi)


def levels_equal(a: FuzzyNumber, b: FuzzyNumber, tol: float = EQUALITY_TOL) -> bool:
    """Level-wise equality within absolute tolerance on a shared grid."""
    _require_same_grid(a, b)
    return bool(
        np.allclose(a.lo, b.lo, rtol=0.0, atol=tol)
        and np.allclose(a.hi, b.hi, rtol=0.0, atol=tol)
    )


def fuzzy_to_record(a: FuzzyNumber) -> dict:
    """Plain-data form {alphas, lo, hi} used by config files and reports."""
    return {
        "alphas": a.alphas.tolist(),
        "lo": a.lo.tolist(),
        "hi": a.hi.tolist(),
    }


def fuzzy_from_record(rec: dict) -> FuzzyNumber:
    return FuzzyNumber(rec["alphas"], rec["lo"], rec["hi"])


def triangular_to_record(t: TriangularFuzzy) -> list:
    """[left, peak, right] list form."""
    return [t.left, t.peak, t.right]


def triangular_from_record(rec) -> TriangularFuzzy:
    left, peak, right = (float(v) for v in rec)
    return TriangularFuzzy(left, peak, right)
