"""Growth series, normal forms and growth rates of Dyer groups."""
from .analysis import Family, check_monotonicity, continuity_experiment, growth_rate
from .errors import BudgetExceeded, DyerError, InconsistencyError, InvalidGraphError
from .model import (
    DyerGraph,
    DyerMatrix,
    classify_dyer,
    coxeter_graph,
    graph_to_matrix,
    induced_coxeter_graph,
    matrix_to_graph,
    partition_generators,
    validate_graph,
)
from .series import cyclic_growth, growth_series, series_coefficients
from .words import ball, marking_agreement_radius, normal_form, word_length

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DyerError",
    "DyerGraph",
    "DyerMatrix",
    "Family",
    "InconsistencyError",
    "InvalidGraphError",
    "ball",
    "check_monotonicity",
    "classify_dyer",
    "continuity_experiment",
    "coxeter_graph",
    "cyclic_growth",
    "graph_to_matrix",
    "growth_rate",
    "growth_series",
    "induced_coxeter_graph",
    "marking_agreement_radius",
    "matrix_to_graph",
    "normal_form",
    "partition_generators",
    "series_coefficients",
    "validate_graph",
    "word_length",
]
