"""The classical Yang-Baxter map, r-matrices and the quasi-classical Poisson structures."""

from ncyb.classical.asymptotics import log_qexp, qexp_series_checks
from ncyb.classical.brackets import (
    CoordinateBracket,
    LeibnizBracket,
    SklyaninBracket,
    dual_poisson_bracket,
    matrix_bracket,
)
from ncyb.classical.coords import KECoordinates, PoissonTable, classical_L, ke_coordinates
from ncyb.classical.hopf import classical_antipode, classical_coproduct, classical_counit
from ncyb.classical.maps import (
    classical_forward_map,
    classical_inverse_map,
    junior_gauss,
    product_formula,
    senior_gauss,
)
from ncyb.classical.poisson import poisson_tasks, verify_poisson_structures
from ncyb.classical.rmatrix import ClassicalR, classical_r_matrices, r_pair, verify_r_matrices
from ncyb.classical.state import ClassicalState, numeric_state, symbolic_state
from ncyb.classical.verify import (
    check_classical_limit_consistency,
    classical_tasks,
    demo_map,
    verify_classical_relations,
)

__all__ = [
    "ClassicalR",
    "ClassicalState",
    "CoordinateBracket",
    "KECoordinates",
    "LeibnizBracket",
    "PoissonTable",
    "SklyaninBracket",
    "check_classical_limit_consistency",
    "classical_L",
    "classical_antipode",
    "classical_coproduct",
    "classical_counit",
    "classical_forward_map",
    "classical_inverse_map",
    "classical_r_matrices",
    "classical_tasks",
    "demo_map",
    "dual_poisson_bracket",
    "junior_gauss",
    "ke_coordinates",
    "log_qexp",
    "matrix_bracket",
    "numeric_state",
    "poisson_tasks",
    "product_formula",
    "qexp_series_checks",
    "r_pair",
    "senior_gauss",
    "symbolic_state",
    "verify_classical_relations",
    "verify_poisson_structures",
    "verify_r_matrices",
]
