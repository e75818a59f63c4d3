"""Closed-form layer of the two-group well-being model.

Two groups share an economy: G earns income p(t), the favored group G*
earns q(t) = n * p(t). Well-being of each group grows with its own
income growth and decays with the income gap against the other group.
This module holds the parameter container, the exponential-income
closed forms, the general-income solution driven by quadrature, and the
ratio analysis that locates the critical inequality n_hat separating
which group eventually dominates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DomainError
from .numerics import adaptive_simpson

if TYPE_CHECKING:  # pragma: no cover
    from .dynamics import IncomeModel

_SCENARIO_FIELDS = ("a", "a_star", "b", "b_star", "lam", "n", "B0", "B0_star", "p0", "t0")


@dataclass(frozen=True)
class ScenarioParams:
    """Parameters of one two-group scenario.

    Attributes:
        a: sensitivity of group G's well-being to own income growth, > 0.
        a_star: the same sensitivity for the favored group G*, > 0.
        b: comparison-loss rate of G, scaled by q/p, per unit time, > 0.
        b_star: comparison-loss rate of G*, scaled by p/q, per unit time, > 0.
        lam: exponential income growth rate per unit time, > 0.
        n: income multiple of the favored group (q = n * p), > 0.
        B0: initial well-being of G at t0, > 0.
        B0_star: initial well-being of G* at t0, > 0.
        p0: income of G at t0, > 0.
        t0: reference time (any finite value).
    """

    a: float
    a_star: float
    b: float
    b_star: float
    lam: float
    n: float
    B0: float
    B0_star: float
    p0: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        for name in _SCENARIO_FIELDS:
            raw = getattr(self, name)
            try:
                value = float(raw)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {raw!r}") from None
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {raw!r}")
            if name != "t0" and value <= 0.0:
                raise DomainError(f"{name} must be > 0, got {raw!r}")
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class RatioAnalysis:
    """Exact log-ratio rate and the sign quadratic of B/B*.

    Attributes:
        g_rate: exact rate (a - a_star)*lam - (b*n - b_star/n) of ln(B/B*).
        f_value: quadratic b*n**2 - (a - a_star)*lam*n - b_star at the
            scenario's n; carries the opposite sign of g_rate (g = -f/n).
        discriminant: (a - a_star)**2 * lam**2 + 4*b*b_star, always > 0.
        n_hat: unique positive root of the quadratic, the critical
            inequality separating eventual dominance.
    """

    g_rate: float
    f_value: float
    discriminant: float
    n_hat: float


def _as_float(value, name: str) -> float:
    try:
        out = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(out):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return out


def _finite_positive(value, name: str) -> float:
    out = _as_float(value, name)
    if out <= 0.0:
        raise DomainError(f"{name} must be > 0, got {value!r}")
    return out


def _finite_nonnegative(value, name: str) -> float:
    out = _as_float(value, name)
    if out < 0.0:
        raise DomainError(f"{name} must be >= 0, got {value!r}")
    return out


def _elapsed(params: ScenarioParams, t) -> float:
    t = _as_float(t, "t")
    if t < params.t0:
        raise DomainError(f"t must be >= t0 = {params.t0}, got {t}")
    return t - params.t0


def relative_value(x) -> float:
    """Fold a positive ratio onto [1, inf): x when x >= 1, else 1/x."""
    x = _finite_positive(x, "x")
    return x if x >= 1.0 else 1.0 / x


def exponent_g(params: ScenarioParams) -> float:
    """Net exponential rate a*lam - b*n of group G under exponential income."""
    return params.a * params.lam - params.b * params.n


def exponent_g_star(params: ScenarioParams) -> float:
    """Net exponential rate a_star*lam - b_star/n of the favored group."""
    return params.a_star * params.lam - params.b_star / params.n


def closed_form_B(params: ScenarioParams, t) -> float:
    """Well-being of G at time t >= t0 under the exponential income pair."""
    return params.B0 * math.exp(exponent_g(params) * _elapsed(params, t))


def closed_form_B_star(params: ScenarioParams, t) -> float:
    """Well-being of G* at time t >= t0 under the exponential income pair."""
    return params.B0_star * math.exp(exponent_g_star(params) * _elapsed(params, t))


def general_wellbeing(
    p: "IncomeModel",
    q: "IncomeModel",
    a,
    b,
    B0,
    t0,
    t,
    quad_tol: float = 1e-10,
) -> float:
    """Well-being at time t for arbitrary positive income paths.

    Evaluates B0 * (p(t)/p(t0))**a * exp(-b * I), where I is the
    integral of q(s)/p(s) over [t0, t] computed by adaptive quadrature.
    Swapping the roles (p and q exchanged, starred sensitivities)
    yields the favored group's value.

    Args:
        p: own-group income model.
        q: comparison-group income model.
        a: sensitivity to own income growth, >= 0.
        b: sensitivity to the income gap, >= 0.
        B0: well-being at t0, > 0.
        t0: start of the evaluation window.
        t: evaluation time, >= t0.
        quad_tol: absolute tolerance for the quadrature, > 0.

    Raises:
        DomainError: t < t0, negative sensitivities, non-positive B0, or
            a non-positive income wherever the integrand is evaluated.
    """
    a = _finite_nonnegative(a, "a")
    b = _finite_nonnegative(b, "b")
    B0 = _finite_positive(B0, "B0")
    t0 = _as_float(t0, "t0")
    t = _as_float(t, "t")
    if t < t0:
        raise DomainError(f"t must be >= t0 = {t0}, got {t}")

    def gap_ratio(s: float) -> float:
        ps = p.value(s)
        qs = q.value(s)
        if ps <= 0.0 or qs <= 0.0:
            raise DomainError(f"non-positive income at t = {s}")
        return qs / ps

    p_start = p.value(t0)
    p_end = p.value(t)
    if p_start <= 0.0 or p_end <= 0.0:
        raise DomainError("income p must be positive at the window endpoints")
    integral, _ = adaptive_simpson(gap_ratio, t0, t, tol=quad_tol)
    return B0 * (p_end / p_start) ** a * math.exp(-b * integral)


def ratio_analysis(params: ScenarioParams) -> RatioAnalysis:
    """Exact ratio rate, sign quadratic, discriminant, and root n_hat.

    g(n) = (a - a_star)*lam - (b*n - b_star/n) is the exact growth rate
    of ln(B/B*). The quadratic f(n) = b*n**2 - (a - a_star)*lam*n - b_star
    satisfies g = -f/n for n > 0, so its sign is the opposite of g's.
    Its discriminant is strictly positive, so the unique positive root
    n_hat = ((a - a_star)*lam + sqrt(discriminant)) / (2*b) always exists.
    """
    gap_term = (params.a - params.a_star) * params.lam
    g_rate = gap_term - (params.b * params.n - params.b_star / params.n)
    f_value = params.b * params.n**2 - gap_term * params.n - params.b_star
    discriminant = gap_term**2 + 4.0 * params.b * params.b_star
    n_hat = (gap_term + math.sqrt(discriminant)) / (2.0 * params.b)
    return RatioAnalysis(
        g_rate=g_rate, f_value=f_value, discriminant=discriminant, n_hat=n_hat
    )


def wellbeing_ratio(params: ScenarioParams, t) -> float:
    """Ratio B(t)/B*(t) from the exact rate, without forming B and B*."""
    dt = _elapsed(params, t)
    return math.exp(ratio_analysis(params).g_rate * dt) * params.B0 / params.B0_star
