"""Two points of a modular hyperbola in a small box, and the quadratic-character tools around it."""

from .charsum import (
    CharSumTable,
    MomentReport,
    SpacedFamily,
    build_table,
    char_sum,
    inverse_family,
    max_partial,
    min_circular_gap,
    shao_statistic,
    weil_moment,
)
from .hyperbola import (
    BoxSpec,
    HyperbolaInstance,
    MinBoxResult,
    OffsetWitness,
    Point,
    box_count,
    circ_dist,
    criterion_decide,
    criterion_even,
    enumerate_points,
    max_min_box,
    min_box_fast,
    min_box_oracle,
)
from .modarith import Modulus, Residue, inv_mod, is_prime, legendre, mul_mod, pow_mod
from .nqr import DichotomyRecord, NqrResult, SmoothCount, dichotomy_check, least_nonresidue, smooth_count, vinogradov_lower_bound
from .sweep import FitResult, SweepConfig, emit, fit_exponent, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CharSumTable",
    "MomentReport",
    "SpacedFamily",
    "build_table",
    "char_sum",
    "inverse_family",
    "max_partial",
    "min_circular_gap",
    "shao_statistic",
    "weil_moment",
    "BoxSpec",
    "HyperbolaInstance",
    "MinBoxResult",
    "OffsetWitness",
    "Point",
    "box_count",
    "circ_dist",
    "criterion_decide",
    "criterion_even",
    "enumerate_points",
    "max_min_box",
    "min_box_fast",
    "min_box_oracle",
    "Modulus",
    "Residue",
    "inv_mod",
    "is_prime",
    "legendre",
    "mul_mod",
    "pow_mod",
    "DichotomyRecord",
    "NqrResult",
    "SmoothCount",
    "dichotomy_check",
    "least_nonresidue",
    "smooth_count",
    "vinogradov_lower_bound",
    "FitResult",
    "SweepConfig",
    "emit",
    "fit_exponent",
    "run_sweep",
]
