"""Two-group well-being dynamics under income inequality.

Closed-form solutions, long-run regime classification, an independent
ODE/quadrature path for validation, growth-rate calibration from income
series, and a deterministic command-line interface.
"""

from .calibration import (
    CHILE_DECADE_MEAN_GROWTH,
    CHILE_GDP_PROJECTION_2019,
    CHILE_INEQUALITY_RECORDS,
    CHILE_PUBLISHED_SUMMARIES,
    GrowthFit,
    IncomeSeries,
    Indicator,
    InequalityRecord,
    InequalitySummary,
    PublishedSummary,
    chile_gdp_series,
    fit_growth_rate,
    read_income_series,
    scenario_from_data,
    summarize_inequality,
)
from .core import (
    RatioAnalysis,
    ScenarioParams,
    closed_form_B,
    closed_form_B_star,
    exponent_g,
    exponent_g_star,
    general_wellbeing,
    ratio_analysis,
    relative_value,
    wellbeing_ratio,
)
from .dynamics import (
    ExponentialIncome,
    IncomeModel,
    LinearIncome,
    TabulatedIncome,
    Trajectory,
    cross_validate,
    integrate,
    quadrature,
    time_grid,
)
from .errors import DomainError, IntegrationError, QuadratureError, WellbeingError
from .regime import (
    Band,
    Behavior,
    BracketCheck,
    Dominance,
    FeasibilityRecord,
    GrowthCase,
    RegimeReport,
    classify,
    double_positive_interval,
    growth_case,
    low_band_feasibility,
    verify_nhat_bracketing,
)
from .scenario import (
    NumericsOptions,
    Scenario,
    SweepSpec,
    load_scenario,
    parse_scenario,
    parse_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Band",
    "Behavior",
    "BracketCheck",
    "CHILE_DECADE_MEAN_GROWTH",
    "CHILE_GDP_PROJECTION_2019",
    "CHILE_INEQUALITY_RECORDS",
    "CHILE_PUBLISHED_SUMMARIES",
    "Dominance",
    "DomainError",
    "ExponentialIncome",
    "FeasibilityRecord",
    "GrowthCase",
    "GrowthFit",
    "IncomeModel",
    "IncomeSeries",
    "Indicator",
    "InequalityRecord",
    "InequalitySummary",
    "IntegrationError",
    "LinearIncome",
    "NumericsOptions",
    "PublishedSummary",
    "QuadratureError",
    "RatioAnalysis",
    "RegimeReport",
    "Scenario",
    "ScenarioParams",
    "SweepSpec",
    "TabulatedIncome",
    "Trajectory",
    "WellbeingError",
    "chile_gdp_series",
    "classify",
    "closed_form_B",
    "closed_form_B_star",
    "cross_validate",
    "double_positive_interval",
    "exponent_g",
    "exponent_g_star",
    "fit_growth_rate",
    "general_wellbeing",
    "growth_case",
    "integrate",
    "load_scenario",
    "low_band_feasibility",
    "parse_scenario",
    "parse_sweep",
    "quadrature",
    "ratio_analysis",
    "read_income_series",
    "relative_value",
    "scenario_from_data",
    "summarize_inequality",
    "time_grid",
    "verify_nhat_bracketing",
    "wellbeing_ratio",
]
