"""Long-run regime classification by income multiple and growth rate.

The sign pattern of the two closed-form exponents splits the n axis at
boundary_g = a*lam/b (where G's exponent vanishes) and boundary_g_star
= b_star/(a_star*lam) (where G*'s does). Which boundary comes first is
decided by the growth case: lam**2 below or above b*b_star/(a*a_star).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import ScenarioParams, ratio_analysis
from .errors import DomainError

DEFAULT_EPSILON = 1e-9


class GrowthCase(str, Enum):
    LOW = "LowGrowth"      # lam**2 < b*b_star/(a*a_star)
    HIGH = "HighGrowth"    # lam**2 > b*b_star/(a*a_star)
    CRITICAL = "Critical"  # equal within tolerance


class Band(str, Enum):
    LOW = "Low"            # n below both boundaries
    MEDIUM = "Medium"      # n strictly between the boundaries
    HIGH = "High"          # n above both boundaries
    BOUNDARY = "Boundary"  # n within tolerance of a boundary


class Behavior(str, Enum):
    DIVERGES = "DivergesToInfinity"
    CONSTANT = "ConstantPositive"
    DECAYS = "DecaysToZero"


class Dominance(str, Enum):
    G = "G"
    G_STAR = "G_star"
    EQUAL = "Equal"


@dataclass(frozen=True)
class RegimeReport:
    """Full classification of one scenario.

    interval_j is the open interval where both exponents are positive;
    it exists exactly in the HighGrowth case. dominance assumes equal
    initial well-being; when B0 != B0_star, crossover_time holds the
    elapsed time after t0 at which B and B* meet (negative if the
    crossing lies in the past), or None when the ratio is constant.
    roles_reversed flags n < 1, where the nominally favored group
    actually earns less.
    """

    growth_case: GrowthCase
    boundary_g: float
    boundary_g_star: float
    band: Band
    behavior_g: Behavior
    behavior_g_star: Behavior
    n_hat: float
    interval_j: tuple[float, float] | None
    dominance: Dominance
    roles_reversed: bool
    crossover_time: float | None


@dataclass(frozen=True)
class FeasibilityRecord:
    """Whether any admissible n >= 1 falls in the Low band.

    The Low band is ]0, low_band_upper[ with low_band_upper the smaller
    of the two boundaries, so feasibility is equivalent to
    favored_margin = a_star*lam/b_star < 1 < a*lam/b = own_margin.
    """

    growth_case: GrowthCase
    low_band_upper: float
    feasible: bool
    own_margin: float
    favored_margin: float


@dataclass(frozen=True)
class BracketCheck:
    """Placement of n_hat relative to the middle band of its case."""

    growth_case: GrowthCase
    lower: float
    n_hat: float
    upper: float
    passed: bool


def _check_epsilon(epsilon: float) -> float:
    try:
        epsilon = float(epsilon)
    except (TypeError, ValueError):
        raise DomainError(f"epsilon must be a real number, got {epsilon!r}") from None
    if not (math.isfinite(epsilon) and 0.0 < epsilon < 1.0):
        raise DomainError(f"epsilon must be in (0, 1), got {epsilon!r}")
    return epsilon


def growth_case(params: ScenarioParams, epsilon: float = DEFAULT_EPSILON) -> GrowthCase:
    """Compare lam**2 against b*b_star/(a*a_star) with relative tolerance."""
    epsilon = _check_epsilon(epsilon)
    lhs = params.lam**2
    rhs = (params.b * params.b_star) / (params.a * params.a_star)
    if math.isclose(lhs, rhs, rel_tol=epsilon):
        return GrowthCase.CRITICAL
    return GrowthCase.LOW if lhs < rhs else GrowthCase.HIGH


def _behavior(growth_term: float, loss_term: float, epsilon: float) -> Behavior:
    # Both terms are positive; the exponent is their difference.
    if math.isclose(growth_term, loss_term, rel_tol=epsilon):
        return Behavior.CONSTANT
    return Behavior.DIVERGES if growth_term > loss_term else Behavior.DECAYS


def _band(n: float, boundary_g: float, boundary_g_star: float, epsilon: float) -> Band:
    if math.isclose(n, boundary_g, rel_tol=epsilon) or math.isclose(
        n, boundary_g_star, rel_tol=epsilon
    ):
        return Band.BOUNDARY
    lo = min(boundary_g, boundary_g_star)
    hi = max(boundary_g, boundary_g_star)
    if n < lo:
        return Band.LOW
    if n > hi:
        return Band.HIGH
    return Band.MEDIUM


def classify(params: ScenarioParams, epsilon: float = DEFAULT_EPSILON) -> RegimeReport:
    """Classify a scenario's long-run behavior.

    Behaviors come from the exponent signs alone; the band places n
    among the ordered boundaries, with exact hits (within epsilon)
    reported as Boundary. Dominance compares n against n_hat under the
    equal-start convention.
    """
    epsilon = _check_epsilon(epsilon)
    case = growth_case(params, epsilon)
    boundary_g = params.a * params.lam / params.b
    boundary_g_star = params.b_star / (params.a_star * params.lam)
    analysis = ratio_analysis(params)

    behavior_g = _behavior(params.a * params.lam, params.b * params.n, epsilon)
    behavior_g_star = _behavior(
        params.a_star * params.lam, params.b_star / params.n, epsilon
    )
    band = _band(params.n, boundary_g, boundary_g_star, epsilon)
    interval_j = (boundary_g_star, boundary_g) if case is GrowthCase.HIGH else None

    if math.isclose(params.n, analysis.n_hat, rel_tol=epsilon):
        dominance = Dominance.EQUAL
    elif params.n < analysis.n_hat:
        dominance = Dominance.G
    else:
        dominance = Dominance.G_STAR

    crossover_time = None
    if params.B0 != params.B0_star and analysis.g_rate != 0.0:
        crossover_time = math.log(params.B0 / params.B0_star) / (-analysis.g_rate)

    return RegimeReport(
        growth_case=case,
        boundary_g=boundary_g,
        boundary_g_star=boundary_g_star,
        band=band,
        behavior_g=behavior_g,
        behavior_g_star=behavior_g_star,
        n_hat=analysis.n_hat,
        interval_j=interval_j,
        dominance=dominance,
        roles_reversed=params.n < 1.0,
        crossover_time=crossover_time,
    )


def double_positive_interval(
    params: ScenarioParams, epsilon: float = DEFAULT_EPSILON
) -> tuple[float, float] | None:
    """Open interval of n where both groups' well-being grows.

    Present exactly when the growth case is HighGrowth, i.e. when
    b_star/(a_star*lam) < a*lam/b strictly; the Critical case has a
    degenerate (empty) interval and returns None.
    """
    if growth_case(params, epsilon) is not GrowthCase.HIGH:
        return None
    return (
        params.b_star / (params.a_star * params.lam),
        params.a * params.lam / params.b,
    )


def low_band_feasibility(
    params: ScenarioParams, epsilon: float = DEFAULT_EPSILON
) -> FeasibilityRecord:
    """Report whether {n : 1 <= n < Low band's upper edge} is nonempty."""
    case = growth_case(params, epsilon)
    own_margin = params.a * params.lam / params.b
    favored_margin = params.a_star * params.lam / params.b_star
    low_band_upper = min(own_margin, params.b_star / (params.a_star * params.lam))
    return FeasibilityRecord(
        growth_case=case,
        low_band_upper=low_band_upper,
        feasible=low_band_upper > 1.0,
        own_margin=own_margin,
        favored_margin=favored_margin,
    )


def verify_nhat_bracketing(
    params: ScenarioParams, epsilon: float = DEFAULT_EPSILON
) -> BracketCheck:
    """Check that n_hat falls strictly inside its case's middle band.

    LowGrowth expects a*lam/b < n_hat < b_star/(a_star*lam); HighGrowth
    expects the reversed ordering. Endpoint comparisons allow a relative
    slack of epsilon.

    Raises:
        DomainError: for the Critical case, where the middle band
            collapses and the check does not apply.
    """
    epsilon = _check_epsilon(epsilon)
    case = growth_case(params, epsilon)
    if case is GrowthCase.CRITICAL:
        raise DomainError("bracketing check does not apply to the Critical growth case")
    boundary_g = params.a * params.lam / params.b
    boundary_g_star = params.b_star / (params.a_star * params.lam)
    if case is GrowthCase.LOW:
        lower, upper = boundary_g, boundary_g_star
    else:
        lower, upper = boundary_g_star, boundary_g
    n_hat = ratio_analysis(params).n_hat
    passed = lower * (1.0 - epsilon) < n_hat < upper * (1.0 + epsilon)
    return BracketCheck(
        growth_case=case, lower=lower, n_hat=n_hat, upper=upper, passed=passed
    )
