"""Desk-scale experiments with character sums over smooth numbers."""

from .charsums import (
    SumProfile,
    char_sum,
    char_sum_profile,
    frak_s,
    large_sieve_ratio,
    large_sieve_terms,
    t_sum,
    t_sums_batch,
)
from .dirichlet import (
    Character,
    CharacterGroup,
    build_group,
    conductor,
    enumerate_characters,
    primitive_characters,
)
from .errors import ParameterError, RangeError
from .exceptional import (
    DyadicDiagnostics,
    ExceptionalReport,
    PairRecord,
    count_exceptional,
    dgs_exceptional_count,
    dyadic_diagnostics,
    theoretical_bound,
)
from .kernel import (
    SmoothingKernel,
    build_kernel,
    coefficient_bound,
    default_truncation,
    eval_exact,
    eval_truncated,
    f_indicator,
)
from .smoothsieve import SmoothSet, psi, psi_local_ratio, sieve_smooth
from .weights import WeightSequence, from_file, moebius, ones, random_unit

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CharacterGroup",
    "DyadicDiagnostics",
    "ExceptionalReport",
    "PairRecord",
    "ParameterError",
    "RangeError",
    "SmoothSet",
    "SmoothingKernel",
    "SumProfile",
    "WeightSequence",
    "build_group",
    "build_kernel",
    "char_sum",
    "char_sum_profile",
    "coefficient_bound",
    "conductor",
    "count_exceptional",
    "default_truncation",
    "dgs_exceptional_count",
    "dyadic_diagnostics",
    "enumerate_characters",
    "eval_exact",
    "eval_truncated",
    "f_indicator",
    "frak_s",
    "from_file",
    "large_sieve_ratio",
    "large_sieve_terms",
    "moebius",
    "ones",
    "primitive_characters",
    "psi",
    "psi_local_ratio",
    "random_unit",
    "sieve_smooth",
    "t_sum",
    "t_sums_batch",
    "theoretical_bound",
]
