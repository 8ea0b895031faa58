"""Composite root vectors E_ij, |i - j| >= 2"""

from typing import Dict, Mapping, Optional

from ncyb.matrix.labeled import LabeledMat, mat_mul
from ncyb.utils.exceptions import NotInvertible, WeightError
from ncyb.utils.logging import setup_logger

logger = setup_logger(__name__)


def _split_point(i: int, j: int, split: str) -> int:
    lo, hi = min(i, j), max(i, j)
    if split == "first":
        return lo + 1
    if split == "last":
        return hi - 1
    raise ValueError(f"unknown split {split!r}")


def root_vector(rep, images: Mapping, i: int, j: int, k: int) -> LabeledMat:
    """One composite through an intermediate index k strictly between i and j.

    Upper (i < j):  E_ij = (q - q^-1)^-1 (E_ik E_kj - q E_kj E_ik)
    Lower (i > j):  E_ij = (q - q^-1)^-1 (E_ik E_kj - q^-1 E_kj E_ik)
    """
    from ncyb.uqrep.rep import GenId

    if not min(i, j) < k < max(i, j):
        raise WeightError(f"k={k} does not lie strictly between {i} and {j}")
    tower = rep.tower
    ops = rep.ops
    inv = ops.try_invert(tower.q_pow(1) - tower.q_pow(-1))
    a, b = images[GenId.E(i, k)], images[GenId.E(k, j)]
    qq = tower.q_pow(1 if i < j else -1)
    return (mat_mul(a, b) - mat_mul(b, a).scale(qq)).scale(inv)


def root_vector_images(rep, split: str = "first", k_choice: Optional[Dict] = None) -> Dict:
    """Images of every E_ij with |i - j| >= 2, built outward from the simple ones.

    `k_choice` maps (i, j) to an explicit intermediate index and overrides `split`.
    A tower where q - q^-1 is not invertible (dual numbers) yields no composites.
    """
    from ncyb.uqrep.rep import GenId

    n = rep.n
    images = dict(rep.images)
    out: Dict = {}
    try:
        for span in range(2, n):
            for lo in range(1, n - span + 1):
                hi = lo + span
                for i, j in ((lo, hi), (hi, lo)):
                    k = (k_choice or {}).get((i, j), _split_point(i, j, split))
                    out[GenId.E(i, j)] = images[GenId.E(i, j)] = root_vector(rep, images, i, j, k)
    except NotInvertible:
        logger.debug("root vectors unavailable", tower=rep.tower.name, n=n)
        return {}
    return out
