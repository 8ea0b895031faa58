"""Exact scalar towers: QQ, rational functions, dual numbers, truncated series."""

from ncyb.ring.dual import DualNum, dual_classical_part, dual_h_coefficient, q_dual
from ncyb.ring.series import TruncSeries, li2, q_exp_series, series_substitute_scaled
from ncyb.ring.tower import (
    embed,
    eval_q,
    get_field,
    normalize,
    q_power,
    qfield,
    scalar_arith,
    scalar_invert,
    spectral_field,
    substitute,
    to_dual,
)

__all__ = [
    "DualNum",
    "TruncSeries",
    "dual_classical_part",
    "dual_h_coefficient",
    "embed",
    "eval_q",
    "get_field",
    "li2",
    "normalize",
    "q_dual",
    "q_exp_series",
    "q_power",
    "qfield",
    "scalar_arith",
    "scalar_invert",
    "series_substitute_scaled",
    "spectral_field",
    "substitute",
    "to_dual",
]
