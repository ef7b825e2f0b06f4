"""Exact Taylor shifts of non-decreasing polynomials and their modes."""

__version__ = "0.1.0"

from unimodshift.sequence_core import (  # noqa: E402
    CoeffSeq,
    DomainError,
    ModeAnalysis,
    analyze,
    is_nondecreasing,
    multiply_by_linear,
)
from unimodshift.shift_engine import (  # noqa: E402
    binomial,
    difference_identity,
    horner_shift,
    q_coeffs,
    q_difference,
    shift,
)
from unimodshift.mode_theory import (  # noqa: E402
    Prediction,
    check_basic_inequality,
    m_bar,
    m_under,
    modes_of_power,
    predict_general,
    predict_q_modes,
)

__all__ = [
    "CoeffSeq",
    "DomainError",
    "ModeAnalysis",
    "Prediction",
    "analyze",
    "binomial",
    "check_basic_inequality",
    "difference_identity",
    "horner_shift",
    "is_nondecreasing",
    "m_bar",
    "m_under",
    "modes_of_power",
    "multiply_by_linear",
    "predict_general",
    "predict_q_modes",
    "q_coeffs",
    "q_difference",
    "shift",
]
