"""deltaroots: exact delta-vector polynomials and their root analysis."""

__version__ = "0.1.0"

from .analysis import (
    BoundCheck,
    QuarticAnalysis,
    admissible_b_interval,
    norm_check,
    norm_disk_radius,
    quartic_analysis,
    resolve_strip,
    strip_check,
)
from .catalog import (
    CatalogEntry,
    closed_form_roots_dim2,
    closed_form_roots_dim3,
    counterexample_deltas,
    export_catalog,
    gorenstein_deltas,
)
from .errors import DeltaRootsError
from .polynomial import (
    DeltaVector,
    RationalPolynomial,
    check_functional_equation,
    delta_from_polynomial,
    from_delta,
    half_shift,
    parity_reduce,
    reflect,
    symmetric_basis,
    validate_delta,
)
from .radicals import QuadraticRoots, Radical
from .realize import (
    BoundaryRealization,
    RealizationPlan,
    construct,
    realized_roots_exact,
    solve_parameter,
)
from .roots import (
    ComplexRoot,
    RootSet,
    SolverConfig,
    classify_roots,
    find_roots,
    quadratic_roots_exact,
    residual,
)
from .sturm import (
    SturmChain,
    cauchy_bound,
    certify_real_strip,
    count_real_roots,
    sturm_sequence,
)

__all__ = [
    "__version__",
    "BoundCheck",
    "BoundaryRealization",
    "CatalogEntry",
    "ComplexRoot",
    "DeltaRootsError",
    "DeltaVector",
    "QuadraticRoots",
    "QuarticAnalysis",
    "Radical",
    "RationalPolynomial",
    "RealizationPlan",
    "RootSet",
    "SolverConfig",
    "SturmChain",
    "admissible_b_interval",
    "cauchy_bound",
    "certify_real_strip",
    "check_functional_equation",
    "classify_roots",
    "closed_form_roots_dim2",
    "closed_form_roots_dim3",
    "construct",
    "count_real_roots",
    "counterexample_deltas",
    "delta_from_polynomial",
    "export_catalog",
    "find_roots",
    "from_delta",
    "gorenstein_deltas",
    "half_shift",
    "norm_check",
    "norm_disk_radius",
    "parity_reduce",
    "quadratic_roots_exact",
    "quartic_analysis",
    "realized_roots_exact",
    "reflect",
    "residual",
    "resolve_strip",
    "solve_parameter",
    "strip_check",
    "sturm_sequence",
    "symmetric_basis",
    "validate_delta",
]
