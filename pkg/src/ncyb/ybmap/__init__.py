"""The quantum Yang-Baxter map on value tables of L-operators."""

from ncyb.ybmap.blocks import Bar, BlockM, block_M, block_M_star, block_M_tilde
from ncyb.ybmap.maps import (
    gauss_intermediates,
    qd_forward_map,
    qd_inverse_map,
    qplucker_maps,
    star_map,
    star_map_inverse,
)
from ncyb.ybmap.state import (
    Component,
    YBState,
    adjoint_map,
    delta,
    state_from_rep,
    swap,
    triple_state,
)
from ncyb.ybmap.verify import (
    demo_quantum_map,
    gauge_obstruction_check,
    gauss_dictionary_checks,
    verify_hopf_properties,
    verify_set_ybe,
    verify_yb_map,
    verify_zero_curvature,
    ybmap_tasks,
)

__all__ = [
    "Bar",
    "BlockM",
    "Component",
    "YBState",
    "adjoint_map",
    "block_M",
    "block_M_star",
    "block_M_tilde",
    "delta",
    "demo_quantum_map",
    "gauge_obstruction_check",
    "gauss_dictionary_checks",
    "gauss_intermediates",
    "qd_forward_map",
    "qd_inverse_map",
    "qplucker_maps",
    "star_map",
    "star_map_inverse",
    "state_from_rep",
    "swap",
    "triple_state",
    "verify_hopf_properties",
    "verify_set_ybe",
    "verify_yb_map",
    "verify_zero_curvature",
    "ybmap_tasks",
]
