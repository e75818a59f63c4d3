"""Scenario and sweep file handling for the command-line tools.

Scenario files are JSON objects with the ten parameter keys, an
optional income_model override, and an optional numerics block. The
schema is strict: unknown keys anywhere are rejected with a diagnostic
naming the key, so a typo in a parameter name can never pass silently.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

from .core import ScenarioParams
from .dynamics import ExponentialIncome, IncomeModel, LinearIncome, TabulatedIncome
from .errors import DomainError

#: file key -> ScenarioParams field
PARAM_KEYS = {
    "a": "a",
    "a_star": "a_star",
    "b": "b",
    "b_star": "b_star",
    "lambda": "lam",
    "n": "n",
    "B0": "B0",
    "B0_star": "B0_star",
    "p0": "p0",
    "t0": "t0",
}

_TOP_LEVEL_KEYS = set(PARAM_KEYS) | {"income_model", "numerics"}
_INCOME_KEYS = {
    "exponential": {"type", "rate"},
    "linear": {"type", "slope"},
    "tabulated": {"type", "points"},
}
_NUMERICS_KEYS = {"step", "epsilon", "quad_tol"}

SWEEPABLE = ("a", "a_star", "b", "b_star", "lambda", "n")


@dataclass(frozen=True)
class NumericsOptions:
    """Numerical knobs a scenario file may override."""

    step: float = 0.01
    epsilon: float = 1e-9
    quad_tol: float = 1e-10

    def __post_init__(self) -> None:
        for name in ("step", "epsilon", "quad_tol"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise DomainError(f"numerics key '{name}' must be a positive number")
        if self.epsilon >= 1.0:
            raise DomainError("numerics key 'epsilon' must be < 1")


@dataclass(frozen=True)
class Scenario:
    """A parsed scenario file: parameters, income override, numerics."""

    params: ScenarioParams
    income: IncomeModel | None
    numerics: NumericsOptions

    def income_pair(self) -> tuple[IncomeModel, IncomeModel]:
        """Build the (p, q) pair with q = n * p pointwise."""
        n = self.params.n
        p = self.income
        if p is None:
            p = ExponentialIncome(self.params.p0, self.params.lam, self.params.t0)
        if isinstance(p, ExponentialIncome):
            q = ExponentialIncome(n * p.p0, p.rate, p.t0)
        elif isinstance(p, LinearIncome):
            q = LinearIncome(n * p.p0, n * p.slope, p.t0)
        else:
            q = TabulatedIncome(tuple((t, n * v) for t, v in p.points))
        return p, q

    def exponential_rate(self) -> float | None:
        """Growth rate when the effective income is exponential, else None."""
        if self.income is None:
            return self.params.lam
        if isinstance(self.income, ExponentialIncome):
            return self.income.rate
        return None

    def closed_form_params(self) -> ScenarioParams:
        """Parameters with lam set to the effective exponential rate.

        Raises:
            DomainError: when the income path is not exponential, so no
                closed form applies.
        """
        rate = self.exponential_rate()
        if rate is None:
            raise DomainError("closed-form evaluation requires an exponential income path")
        if rate <= 0.0:
            raise DomainError(f"closed-form evaluation requires a positive rate, got {rate}")
        if rate == self.params.lam:
            return self.params
        return replace(self.params, lam=rate)


def _require_number(value, key: str, origin: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{origin}: key '{key}' must be a number, got {value!r}")
    return float(value)


def parse_scenario(doc, origin: str = "scenario") -> Scenario:
    """Validate a decoded scenario document and build a Scenario."""
    if not isinstance(doc, dict):
        raise DomainError(f"{origin}: top level must be an object")
    unknown = sorted(set(doc) - _TOP_LEVEL_KEYS)
    if unknown:
        raise DomainError(f"{origin}: unknown key '{unknown[0]}'")
    missing = sorted(set(PARAM_KEYS) - set(doc))
    if missing:
        raise DomainError(f"{origin}: missing key '{missing[0]}'")
    fields = {
        field: _require_number(doc[key], key, origin) for key, field in PARAM_KEYS.items()
    }
    params = ScenarioParams(**fields)
    income = _parse_income(doc.get("income_model"), params, origin)
    numerics = _parse_numerics(doc.get("numerics"), origin)
    return Scenario(params=params, income=income, numerics=numerics)


def _parse_income(block, params: ScenarioParams, origin: str) -> IncomeModel | None:
    if block is None:
        return None
    if not isinstance(block, dict):
        raise DomainError(f"{origin}: 'income_model' must be an object")
    kind = block.get("type")
    if kind not in _INCOME_KEYS:
        raise DomainError(
            f"{origin}: income_model type must be one of "
            f"{sorted(_INCOME_KEYS)}, got {kind!r}"
        )
    unknown = sorted(set(block) - _INCOME_KEYS[kind])
    if unknown:
        raise DomainError(f"{origin}: unknown key '{unknown[0]}' in income_model")
    if kind == "exponential":
        rate = params.lam
        if "rate" in block:
            rate = _require_number(block["rate"], "rate", origin)
        return ExponentialIncome(params.p0, rate, params.t0)
    if kind == "linear":
        if "slope" not in block:
            raise DomainError(f"{origin}: linear income_model requires key 'slope'")
        slope = _require_number(block["slope"], "slope", origin)
        return LinearIncome(params.p0, slope, params.t0)
    points = block.get("points")
    if not isinstance(points, list) or not all(
        isinstance(pt, list) and len(pt) == 2 for pt in points
    ):
        raise DomainError(
            f"{origin}: tabulated income_model requires 'points' as a list of [t, value] pairs"
        )
    pairs = tuple(
        (_require_number(pt[0], "points", origin), _require_number(pt[1], "points", origin))
        for pt in points
    )
    return TabulatedIncome(pairs)


def _parse_numerics(block, origin: str) -> NumericsOptions:
    if block is None:
        return NumericsOptions()
    if not isinstance(block, dict):
        raise DomainError(f"{origin}: 'numerics' must be an object")
    unknown = sorted(set(block) - _NUMERICS_KEYS)
    if unknown:
        raise DomainError(f"{origin}: unknown key '{unknown[0]}' in numerics")
    values = {key: _require_number(block[key], key, origin) for key in block}
    return NumericsOptions(**values)


def load_scenario(path) -> Scenario:
    """Read and validate a scenario file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read scenario file {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON: {exc}") from None
    return parse_scenario(doc, origin=str(path))


def with_param(params: ScenarioParams, name: str, value: float) -> ScenarioParams:
    """Copy params with one file-keyed parameter replaced."""
    if name not in PARAM_KEYS:
        raise DomainError(f"unknown parameter name {name!r}")
    return replace(params, **{PARAM_KEYS[name]: value})


@dataclass(frozen=True)
class SweepSpec:
    """A one-parameter grid: name and start/stop/step with start < stop."""

    name: str
    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.name not in SWEEPABLE:
            raise DomainError(
                f"sweep parameter must be one of {', '.join(SWEEPABLE)}; got {self.name!r}"
            )
        for field in ("start", "stop", "step"):
            value = getattr(self, field)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise DomainError(f"sweep {field} must be a finite number, got {value!r}")
            object.__setattr__(self, field, float(value))
        if not self.start < self.stop:
            raise DomainError(
                f"sweep start must be < stop, got {self.start} >= {self.stop}"
            )
        if self.step <= 0.0:
            raise DomainError(f"sweep step must be > 0, got {self.step}")

    def grid(self) -> list[float]:
        """Grid values start, start+step, ... up to stop inclusive."""
        count = int(math.floor((self.stop - self.start) / self.step * (1.0 + 1e-12) + 1e-9))
        return [self.start + k * self.step for k in range(count + 1)]


def parse_sweep(text: str) -> SweepSpec:
    """Parse a NAME=START:STOP:STEP sweep argument."""
    name, sep, rest = text.partition("=")
    if not sep:
        raise DomainError(f"sweep must look like NAME=START:STOP:STEP, got {text!r}")
    parts = rest.split(":")
    if len(parts) != 3:
        raise DomainError(f"sweep grid must be START:STOP:STEP, got {rest!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise DomainError(f"sweep grid values must be numbers, got {rest!r}") from None
    return SweepSpec(name=name.strip(), start=start, stop=stop, step=step)
