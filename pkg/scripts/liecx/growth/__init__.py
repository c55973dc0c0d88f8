from liecx.growth.growth_estimator import GammaEstimate, gamma_estimate, shift_series
from liecx.growth.lower_bound_family import (
    FamilySpec,
    composition_count,
    family_common_total,
    family_measured_formula,
    family_report,
    family_stated_formula,
    lower_bound_family,
)

__all__ = [
    "FamilySpec",
    "GammaEstimate",
    "composition_count",
    "family_common_total",
    "family_measured_formula",
    "family_report",
    "family_stated_formula",
    "gamma_estimate",
    "lower_bound_family",
    "shift_series",
]
