"""Independent numerical path: income models, ODE integration, quadrature.

The coupled system

    dB/dt  = (a * p'(t)/p(t) - b * q(t)/p(t)) * B
    dB*/dt = (a_star * q'(t)/q(t) - b_star * p(t)/q(t)) * B*

is integrated for arbitrary positive income paths, providing a route to
the solution that shares no code with the closed forms in `core` and is
used to cross-validate them.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Union

from .core import ScenarioParams, closed_form_B, closed_form_B_star
from .errors import DomainError, IntegrationError
from .numerics import adaptive_simpson

DEFAULT_STEP = 0.01
DEFAULT_ADAPTIVE_TOL = 1e-8


@dataclass(frozen=True)
class ExponentialIncome:
    """Income path p(t) = p0 * exp(rate * (t - t0))."""

    p0: float
    rate: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        _validate_income_fields(self, rate_name="rate")

    def value(self, t: float) -> float:
        return self.p0 * math.exp(self.rate * (t - self.t0))

    def derivative(self, t: float) -> float:
        return self.rate * self.value(t)


@dataclass(frozen=True)
class LinearIncome:
    """Income path p(t) = p0 + slope * (t - t0).

    The value turns non-positive at t0 + p0/|slope| for negative slopes;
    consumers check positivity wherever they evaluate.
    """

    p0: float
    slope: float
    t0: float = 0.0

    def __post_init__(self) -> None:
        _validate_income_fields(self, rate_name="slope")

    def value(self, t: float) -> float:
        return self.p0 + self.slope * (t - self.t0)

    def derivative(self, t: float) -> float:
        return self.slope


@dataclass(frozen=True)
class TabulatedIncome:
    """Income path given by samples, log-linear between the nodes.

    points must have strictly increasing times and positive values.
    Node derivatives are centered finite differences (one-sided at the
    ends), interpolated linearly between nodes. Queries outside the
    sampled range are refused rather than extrapolated.
    """

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        try:
            pts = tuple((float(t), float(v)) for t, v in self.points)
        except (TypeError, ValueError):
            raise DomainError("tabulated income points must be (time, value) pairs") from None
        if len(pts) < 2:
            raise DomainError("tabulated income needs at least 2 points")
        for t, v in pts:
            if not (math.isfinite(t) and math.isfinite(v)):
                raise DomainError(f"tabulated income point ({t!r}, {v!r}) is not finite")
            if v <= 0.0:
                raise DomainError(f"tabulated income must be positive, got {v} at t = {t}")
        times = [t for t, _ in pts]
        if any(t1 >= t2 for t1, t2 in zip(times, times[1:])):
            raise DomainError("tabulated income times must be strictly increasing")
        object.__setattr__(self, "points", pts)
        values = [v for _, v in pts]
        slopes = [(values[1] - values[0]) / (times[1] - times[0])]
        for i in range(1, len(pts) - 1):
            slopes.append((values[i + 1] - values[i - 1]) / (times[i + 1] - times[i - 1]))
        slopes.append((values[-1] - values[-2]) / (times[-1] - times[-2]))
        object.__setattr__(self, "_times", times)
        object.__setattr__(self, "_values", values)
        object.__setattr__(self, "_slopes", slopes)

    def _segment(self, t: float) -> int:
        times = self._times
        if t < times[0] or t > times[-1]:
            raise DomainError(
                f"t = {t} outside the tabulated range [{times[0]}, {times[-1]}]"
            )
        return min(bisect_right(times, t) - 1, len(times) - 2)

    def value(self, t: float) -> float:
        times, values = self._times, self._values
        i = bisect_left(times, t)
        if i < len(times) and times[i] == t:
            return values[i]
        i = self._segment(t)
        w = (t - times[i]) / (times[i + 1] - times[i])
        return values[i] * (values[i + 1] / values[i]) ** w

    def derivative(self, t: float) -> float:
        times, slopes = self._times, self._slopes
        i = bisect_left(times, t)
        if i < len(times) and times[i] == t:
            return slopes[i]
        i = self._segment(t)
        w = (t - times[i]) / (times[i + 1] - times[i])
        return slopes[i] + (slopes[i + 1] - slopes[i]) * w


IncomeModel = Union[ExponentialIncome, LinearIncome, TabulatedIncome]


def _validate_income_fields(model, *, rate_name: str) -> None:
    for name in ("p0", rate_name, "t0"):
        raw = getattr(model, name)
        try:
            value = float(raw)
        except (TypeError, ValueError):
            raise DomainError(f"{name} must be a real number, got {raw!r}") from None
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {raw!r}")
        object.__setattr__(model, name, value)
    if model.p0 <= 0.0:
        raise DomainError(f"p0 must be > 0, got {model.p0}")


@dataclass(frozen=True)
class Trajectory:
    """Time-sampled solution (t, B, B_star, p, q) with step metadata.

    method is "rk4" or "rkf45"; step holds the fixed step size and
    tolerance the adaptive error target, whichever applies.
    """

    times: tuple[float, ...]
    B: tuple[float, ...]
    B_star: tuple[float, ...]
    p: tuple[float, ...]
    q: tuple[float, ...]
    method: str
    step: float | None = None
    tolerance: float | None = None

    def __post_init__(self) -> None:
        lengths = {len(self.times), len(self.B), len(self.B_star), len(self.p), len(self.q)}
        if lengths != {len(self.times)} or not self.times:
            raise DomainError("trajectory columns must be nonempty and equally long")


def time_grid(t0: float, t_end: float, step: float) -> list[float]:
    """Uniform sample times from t0 to t_end inclusive.

    The final point is exactly t_end; when the span is not an integer
    multiple of step, the last interval is shorter.
    """
    if not (math.isfinite(t0) and math.isfinite(t_end)):
        raise DomainError(f"time window must be finite, got [{t0!r}, {t_end!r}]")
    if not (math.isfinite(step) and step > 0.0):
        raise DomainError(f"step must be > 0, got {step!r}")
    if t_end < t0:
        raise DomainError(f"t_end must be >= t0, got t_end = {t_end} < t0 = {t0}")
    if t_end == t0:
        return [t0]
    span = t_end - t0
    count = int(math.floor(span / step * (1.0 + 1e-12) + 1e-9))
    times = [t0 + k * step for k in range(count + 1)]
    if times[-1] >= t_end or (t_end - times[-1]) <= 1e-9 * step:
        times[-1] = t_end
    else:
        times.append(t_end)
    return times


def _income_sample(p: IncomeModel, q: IncomeModel, t: float) -> tuple[float, float]:
    pv = p.value(t)
    qv = q.value(t)
    if pv <= 0.0 or qv <= 0.0:
        raise _NonPositiveIncome(t)
    return pv, qv


class _NonPositiveIncome(Exception):
    def __init__(self, t: float):
        super().__init__(t)
        self.t = t


def integrate(
    p: IncomeModel,
    q: IncomeModel,
    params: ScenarioParams,
    t_end: float,
    *,
    method: str = "rk4",
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_ADAPTIVE_TOL,
) -> Trajectory:
    """Integrate the coupled well-being system from params.t0 to t_end.

    Initial conditions (B0, B0_star) and the four sensitivities come
    from params; p and q supply the income paths. t_end == t0 yields a
    single-sample trajectory.

    Args:
        p: income model of group G.
        q: income model of the favored group.
        params: scenario parameters.
        t_end: final time, >= params.t0.
        method: "rk4" (fixed step) or "rkf45" (embedded adaptive pair).
        step: step size for "rk4" and initial step for "rkf45", > 0.
        tol: per-step relative error target for "rkf45", > 0.

    Raises:
        DomainError: invalid arguments, or income models that cannot be
            evaluated on the window (e.g. tabulated range too short).
        IntegrationError: a non-positive income sample mid-run, or step
            underflow in adaptive mode; carries the last good state.
    """
    if method not in ("rk4", "rkf45"):
        raise DomainError(f"method must be 'rk4' or 'rkf45', got {method!r}")
    if not (math.isfinite(t_end) and t_end >= params.t0):
        raise DomainError(f"t_end must be finite and >= t0 = {params.t0}, got {t_end!r}")

    a, b = params.a, params.b
    a_s, b_s = params.a_star, params.b_star

    def rhs(t: float, B: float, S: float) -> tuple[float, float]:
        pv, qv = _income_sample(p, q, t)
        dB = (a * p.derivative(t) / pv - b * qv / pv) * B
        dS = (a_s * q.derivative(t) / qv - b_s * pv / qv) * S
        return dB, dS

    times = [params.t0]
    pv0, qv0 = _income_sample_checked(p, q, params.t0)
    cols_B, cols_S = [params.B0], [params.B0_star]
    cols_p, cols_q = [pv0], [qv0]

    def record(t: float, B: float, S: float) -> None:
        if B <= 0.0 or S <= 0.0 or not (math.isfinite(B) and math.isfinite(S)):
            raise IntegrationError(
                f"state left the positive domain at t = {t}",
                last_time=times[-1],
                last_state=(cols_B[-1], cols_S[-1]),
            )
        pv, qv = _income_sample_checked(p, q, t, times[-1], (cols_B[-1], cols_S[-1]))
        times.append(t)
        cols_B.append(B)
        cols_S.append(S)
        cols_p.append(pv)
        cols_q.append(qv)

    try:
        if method == "rk4":
            _run_rk4(rhs, params, t_end, step, record)
        else:
            _run_rkf45(rhs, params, t_end, step, tol, record)
    except _NonPositiveIncome as exc:
        raise IntegrationError(
            f"non-positive income sample at t = {exc.t}",
            last_time=times[-1],
            last_state=(cols_B[-1], cols_S[-1]),
        ) from None

    return Trajectory(
        times=tuple(times),
        B=tuple(cols_B),
        B_star=tuple(cols_S),
        p=tuple(cols_p),
        q=tuple(cols_q),
        method=method,
        step=step if method == "rk4" else None,
        tolerance=tol if method == "rkf45" else None,
    )


def _income_sample_checked(p, q, t, last_time=None, last_state=None):
    try:
        return _income_sample(p, q, t)
    except _NonPositiveIncome as exc:
        raise IntegrationError(
            f"non-positive income sample at t = {exc.t}",
            last_time=last_time,
            last_state=last_state,
        ) from None


def _run_rk4(rhs, params: ScenarioParams, t_end, step, record) -> None:
    if not (math.isfinite(step) and step > 0.0):
        raise DomainError(f"step must be > 0, got {step!r}")
    grid = time_grid(params.t0, t_end, step)
    t = grid[0]
    B, S = params.B0, params.B0_star
    for t_next in grid[1:]:
        h = t_next - t
        k1B, k1S = rhs(t, B, S)
        k2B, k2S = rhs(t + 0.5 * h, B + 0.5 * h * k1B, S + 0.5 * h * k1S)
        k3B, k3S = rhs(t + 0.5 * h, B + 0.5 * h * k2B, S + 0.5 * h * k2S)
        k4B, k4S = rhs(t + h, B + h * k3B, S + h * k3S)
        B += h / 6.0 * (k1B + 2.0 * k2B + 2.0 * k3B + k4B)
        S += h / 6.0 * (k1S + 2.0 * k2S + 2.0 * k3S + k4S)
        t = t_next
        record(t, B, S)


# Fehlberg 4(5) tableau: nodes, stage weights, and the paired solution
# weights. The fifth-order combination is propagated.
_RKF_C = (0.0, 0.25, 0.375, 12.0 / 13.0, 1.0, 0.5)
_RKF_A = (
    (),
    (0.25,),
    (3.0 / 32.0, 9.0 / 32.0),
    (1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0),
    (439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0),
    (-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0),
)
_RKF_B5 = (16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0, -9.0 / 50.0, 2.0 / 55.0)
_RKF_B4 = (25.0 / 216.0, 0.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -1.0 / 5.0, 0.0)


def _run_rkf45(rhs, params: ScenarioParams, t_end, step, tol, record) -> None:
    if not (math.isfinite(step) and step > 0.0):
        raise DomainError(f"step must be > 0, got {step!r}")
    if not (math.isfinite(tol) and tol > 0.0):
        raise DomainError(f"tol must be > 0, got {tol!r}")
    span = t_end - params.t0
    if span == 0.0:
        return
    t = params.t0
    B, S = params.B0, params.B0_star
    h = min(step, span)
    h_min = 1e-14 * max(1.0, abs(params.t0), abs(t_end))
    tiny = 1e-12 * max(1.0, span)
    while t < t_end - tiny:
        h = min(h, t_end - t)
        if h < h_min:
            raise IntegrationError(
                f"adaptive step underflow at t = {t} (h = {h})",
                last_time=t,
                last_state=(B, S),
            )
        ks: list[tuple[float, float]] = []
        for i in range(6):
            Bi = B + h * sum(aij * ks[j][0] for j, aij in enumerate(_RKF_A[i]))
            Si = S + h * sum(aij * ks[j][1] for j, aij in enumerate(_RKF_A[i]))
            ks.append(rhs(t + _RKF_C[i] * h, Bi, Si))
        B5 = B + h * sum(w * k[0] for w, k in zip(_RKF_B5, ks))
        S5 = S + h * sum(w * k[1] for w, k in zip(_RKF_B5, ks))
        B4 = B + h * sum(w * k[0] for w, k in zip(_RKF_B4, ks))
        S4 = S + h * sum(w * k[1] for w, k in zip(_RKF_B4, ks))
        scale_B = tol * max(abs(B), abs(B5), 1e-300)
        scale_S = tol * max(abs(S), abs(S5), 1e-300)
        err = max(abs(B5 - B4) / scale_B, abs(S5 - S4) / scale_S)
        if err <= 1.0:
            t = t + h
            B, S = B5, S5
            record(t, B, S)
        factor = 5.0 if err == 0.0 else 0.9 * err**-0.2
        h *= min(5.0, max(0.2, factor))


def quadrature(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 50,
) -> tuple[float, float]:
    """Adaptive Simpson integral of f over [a, b]; see numerics module.

    Returns (value, error_estimate). Exact for polynomials up to
    degree 3 on a single panel, so constant and linear integrands come
    back without subdivision.
    """
    return adaptive_simpson(f, a, b, tol=tol, max_depth=max_depth)


def cross_validate(
    params: ScenarioParams,
    horizon: float,
    *,
    method: str = "rk4",
    step: float = DEFAULT_STEP,
    tol: float = DEFAULT_ADAPTIVE_TOL,
) -> float:
    """Worst relative deviation of the integrator from the closed forms.

    Builds the exponential income pair implied by params, integrates to
    t0 + horizon, and compares both components at every sample time.
    horizon 0 compares initial conditions only and returns 0.
    """
    horizon = float(horizon)
    if not (math.isfinite(horizon) and horizon >= 0.0):
        raise DomainError(f"horizon must be >= 0, got {horizon!r}")
    p = ExponentialIncome(params.p0, params.lam, params.t0)
    q = ExponentialIncome(params.n * params.p0, params.lam, params.t0)
    trajectory = integrate(
        p, q, params, params.t0 + horizon, method=method, step=step, tol=tol
    )
    worst = 0.0
    for t, B_num, S_num in zip(trajectory.times, trajectory.B, trajectory.B_star):
        B_ref = closed_form_B(params, t)
        S_ref = closed_form_B_star(params, t)
        worst = max(
            worst, abs(B_num - B_ref) / B_ref, abs(S_num - S_ref) / S_ref
        )
    return worst
