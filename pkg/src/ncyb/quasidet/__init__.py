"""Quasi-determinant calculus over arbitrary entry rings."""

from ncyb.quasidet.core import (
    QuasiDetSession,
    inverse_via_quasidet,
    left_qplucker,
    quasi_det,
    right_qplucker,
)
from ncyb.quasidet.gauss import (
    GaussFactors,
    gauss_decompose,
    gauss_inverse_factors,
    inverse_factor_entry,
)
from ncyb.quasidet.identities import verify_qd_identities

__all__ = [
    "GaussFactors",
    "QuasiDetSession",
    "gauss_decompose",
    "gauss_inverse_factors",
    "inverse_factor_entry",
    "inverse_via_quasidet",
    "left_qplucker",
    "quasi_det",
    "right_qplucker",
    "verify_qd_identities",
]
