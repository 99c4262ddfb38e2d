"""Exact fixed-point arithmetic for the integer maps z -> z**d + c over Z/pZ:
orbit tracing, literal counts versus closed-form rules, density series, and
height-ordered family censuses, with a deterministic sweep CLI."""

from .arith import (
    Factorization,
    PrimeModulus,
    big_omega,
    divisors,
    factorize,
    integer_nth_root,
    is_prime,
    mod_pow,
    omega,
    omega_odd,
    prime_count_odd,
    primes_in,
    tau,
)
from .counting import (
    ComparisonRecord,
    Family,
    PredictionRecord,
    Verdict,
    count_degree_p,
    count_degree_pm1,
    count_fixed_points,
    predict,
    predict_degree_p,
    predict_degree_pm1,
    verify_prediction,
)
from .dynamics import (
    FixedPointReport,
    MapSpec,
    OrbitRecord,
    OrbitStatus,
    eval_mod,
    fixed_points_mod,
    integer_fixed_points,
    orbit_mod,
    orbit_rational,
)
from .stats import (
    AverageReport,
    CoeffFilter,
    CountMode,
    DensityKind,
    DensityRow,
    DensitySeries,
    FamilyCountReport,
    average_fixed_count,
    density_bound_check,
    density_fixed_count,
    density_omega_series,
    family_count,
    height,
)

__version__ = "0.1.0"

__all__ = [
    "AverageReport",
    "CoeffFilter",
    "ComparisonRecord",
    "CountMode",
    "DensityKind",
    "DensityRow",
    "DensitySeries",
    "Factorization",
    "Family",
    "FamilyCountReport",
    "FixedPointReport",
    "MapSpec",
    "OrbitRecord",
    "OrbitStatus",
    "PredictionRecord",
    "PrimeModulus",
    "Verdict",
    "average_fixed_count",
    "big_omega",
    "count_degree_p",
    "count_degree_pm1",
    "count_fixed_points",
    "density_bound_check",
    "density_fixed_count",
    "density_omega_series",
    "divisors",
    "eval_mod",
    "factorize",
    "family_count",
    "fixed_points_mod",
    "height",
    "integer_fixed_points",
    "integer_nth_root",
    "is_prime",
    "mod_pow",
    "omega",
    "omega_odd",
    "orbit_mod",
    "orbit_rational",
    "predict",
    "predict_degree_p",
    "predict_degree_pm1",
    "prime_count_odd",
    "primes_in",
    "tau",
    "verify_prediction",
]
