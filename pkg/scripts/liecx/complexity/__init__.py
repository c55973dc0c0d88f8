from liecx.complexity.complexity_report import (
    ComplexityReport,
    branching_gamma,
    complexity_lie,
    iter_compositions,
    j_of_composition,
    max_branching_gamma,
    p_valuation,
)

__all__ = [
    "ComplexityReport",
    "branching_gamma",
    "complexity_lie",
    "iter_compositions",
    "j_of_composition",
    "max_branching_gamma",
    "p_valuation",
]
