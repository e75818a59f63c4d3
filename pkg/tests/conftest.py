"""Shared helpers: deterministic random parameter draws."""

from __future__ import annotations

import math
import random
from dataclasses import replace

from wellbeing_dynamics import ScenarioParams


def uniform(rng: random.Random, lo: float, hi: float) -> float:
    return lo + (hi - lo) * rng.random()


def draw_params(
    rng: random.Random,
    *,
    a=(0.5, 2.0),
    a_star=(0.5, 2.0),
    b=(0.02, 0.3),
    b_star=(0.02, 0.3),
    lam=(0.02, 0.25),
    n=(0.25, 4.0),
    B0=(0.5, 2.0),
    B0_star=(0.5, 2.0),
    p0=(0.5, 10.0),
    t0=0.0,
) -> ScenarioParams:
    """One random scenario with every parameter in the given range.

    The default ranges keep both exponents within about [-1.4, 0.6], so
    well-being stays far from overflow over a horizon of 50 and the
    fixed-step truncation error stays well below 1e-6.
    """
    return ScenarioParams(
        a=uniform(rng, *a),
        a_star=uniform(rng, *a_star),
        b=uniform(rng, *b),
        b_star=uniform(rng, *b_star),
        lam=uniform(rng, *lam),
        n=uniform(rng, *n),
        B0=uniform(rng, *B0),
        B0_star=uniform(rng, *B0_star),
        p0=uniform(rng, *p0),
        t0=t0,
    )


def draw_case_params(rng: random.Random, case: str, **kwargs) -> ScenarioParams:
    """Random params forced into a growth case by rescaling lam.

    case "low" places lam strictly below the critical rate
    sqrt(b*b_star/(a*a_star)), "high" strictly above, with at least a 5%
    margin so tolerance-based classification cannot flip the case.
    """
    base = draw_params(rng, **kwargs)
    critical = math.sqrt(base.b * base.b_star / (base.a * base.a_star))
    if case == "low":
        factor = uniform(rng, 0.05, 0.95)
    elif case == "high":
        factor = uniform(rng, 1.05, 8.0)
    else:
        raise ValueError(f"case must be 'low' or 'high', got {case!r}")
    return replace(base, lam=critical * factor)
