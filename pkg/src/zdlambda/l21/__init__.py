"""L(2,1)-labellings, the exact solver, bounds and hole analysis."""

from .bounds import BoundLedger, classical_bounds, lambda_via_path_cover, pinned_by_ledger
from .labelling import (
    HoleReport,
    Labelling,
    LabellingError,
    Violation,
    analyze,
    first_fit,
    is_valid,
    validate,
)
from .solver import SOLVER_CAP, LambdaReport, Method, feasible, lambda_exact, lower_bound
