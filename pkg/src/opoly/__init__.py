"""Monic orthogonal polynomials for classical measures under Christoffel and Uvarov perturbations."""
from .core import (
    ClassicalFamily,
    KernelAccumulator,
    PolyEvaluator,
    RecurrenceCoeffs,
    classical_recurrence,
    eval_with_derivative,
    gauss_rule,
    kernel_value,
    lanczos_recurrence,
    ratios,
)
from .electrostatics import (
    ElectroSystem,
    EquilibriumReport,
    OdeCoefficients,
    QPolynomial,
    StructureRelation,
    equilibrium_residual,
    hermite_rate_trend,
    laguerre_coeff_trends,
    ode_coefficients,
    q_polynomial,
    q_zero_trend,
    structure_relation,
)
from .errors import (
    BracketFailureError,
    DomainError,
    InvalidMeasureError,
    LengthError,
    NumericalBreakdownError,
    OpolyError,
    PoleError,
    RatioBreakdownError,
    SingularConfigurationError,
    StructureRelationError,
)
from .transforms import (
    MeasureSpec,
    UvarovSystem,
    christoffel_eval,
    christoffel_step,
    iterated_coeffs,
    representation_crosscheck,
    starred_recurrence,
    uvarov_connection,
    uvarov_eval,
)
from .zeros import (
    MassScanResult,
    ZeroSet,
    christoffel_zeros,
    closed_form_rate,
    convergence_rate,
    hermite_chain_report,
    hermite_type_zeros,
    interlacing_report,
    limit_points,
    local_offsets,
    mass_scan,
    min_mass,
    min_mass_by_bisection,
    straddle,
    tridiag_zeros,
    uvarov_sign_check,
    uvarov_zeros,
)

__version__ = "0.1.0"
