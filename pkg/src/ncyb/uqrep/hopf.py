"""Counit and antipode on generator images"""

from typing import Dict

from ncyb.matrix.labeled import LabeledMat, mat_mul
from ncyb.uqrep.rep import GenId, Rep


def counit_images(r: Rep) -> Dict[GenId, object]:
    """epsilon(E_ij) = 0, epsilon(q^{+-E_kk}) = 1."""
    ops = r.ops
    return {g: ops.zero() if g.kind == "E" else ops.one() for g in r.images}


def antipode_images(r: Rep, split: str = "first") -> Dict[GenId, LabeledMat]:
    """S on generators, extended to composite root vectors as an anti-homomorphism.

    S(q^{E_kk}) = q^{-E_kk}
    S(E_{i,i+1}) = -E_{i,i+1} H_i^-1
    S(E_{i+1,i}) = -H_i E_{i+1,i}
    """
    from ncyb.uqrep.roots import _split_point

    out: Dict[GenId, LabeledMat] = {}
    n = r.n
    for k in range(1, n + 1):
        out[GenId.Kplus(k)] = r.K(k, -1)
        out[GenId.Kminus(k)] = r.K(k, 1)
    for i in range(1, n):
        out[GenId.E(i, i + 1)] = -mat_mul(r.E(i, i + 1), r.H(i, -1))
        out[GenId.E(i + 1, i)] = -mat_mul(r.H(i), r.E(i + 1, i))
    tower = r.tower
    composites = [g for g in r.images if g.kind == "E" and not g.is_simple]
    if not composites:
        return out
    inv = r.ops.try_invert(tower.q_pow(1) - tower.q_pow(-1))
    for span in range(2, n):
        for lo in range(1, n - span + 1):
            hi = lo + span
            for i, j in ((lo, hi), (hi, lo)):
                k = _split_point(i, j, split)
                qq = tower.q_pow(1 if i < j else -1)
                sa, sb = out[GenId.E(i, k)], out[GenId.E(k, j)]
                # S(ab - q ba) = S(b)S(a) - q S(a)S(b)
                out[GenId.E(i, j)] = (mat_mul(sb, sa) - mat_mul(sa, sb).scale(qq)).scale(inv)
    return out


def hopf_maps(r: Rep, which: str = "antipode") -> Dict[GenId, object]:
    if which == "antipode":
        return antipode_images(r)
    if which == "counit":
        return counit_images(r)
    raise ValueError(f"unknown Hopf map {which!r}")
