"""U_q(gl(n)) in finite-dimensional representations"""

from ncyb.uqrep.hopf import antipode_images, counit_images, hopf_maps
from ncyb.uqrep.loperators import LPair, L_from_universal, build_L_operators
from ncyb.uqrep.rep import (
    GenId,
    Rep,
    ScalarTower,
    counit_rep,
    coproduct_rep,
    dual_rep,
    dual_tower,
    fundamental_rep,
    q_tower,
    spectral_tower,
)
from ncyb.uqrep.rmatrix import (
    NumericR,
    numeric_R,
    ordered_pairs,
    q_exponential,
    twist_image,
    twisted_from_plain,
    universal_R_image,
)
from ncyb.uqrep.roots import root_vector_images
from ncyb.uqrep.verify import verify_algebra_relations

__all__ = [
    "GenId",
    "LPair",
    "L_from_universal",
    "NumericR",
    "Rep",
    "ScalarTower",
    "antipode_images",
    "build_L_operators",
    "counit_images",
    "counit_rep",
    "coproduct_rep",
    "dual_rep",
    "dual_tower",
    "fundamental_rep",
    "hopf_maps",
    "numeric_R",
    "ordered_pairs",
    "q_exponential",
    "q_tower",
    "root_vector_images",
    "spectral_tower",
    "twist_image",
    "twisted_from_plain",
    "universal_R_image",
    "verify_algebra_relations",
]
