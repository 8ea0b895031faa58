"""
Classical Hopf data of P(gl(n)) on generators

    D(k) = k (x) k
    D(e_{i,i+1}) = e (x) k_i k_{i+1}^-1 + 1 (x) e
    D(e_{i+1,i}) = e (x) 1 + k_i^-1 k_{i+1} (x) e
    D^F(e_{i,i+1}) = e (x) k_i + k_i^-1 (x) e
    D^F(e_{i+1,i}) = e (x) k_{i+1}^-1 + k_{i+1} (x) e
    S(k) = k^-1,  S(e_{i,i+1}) = -e k_i^-1 k_{i+1},  S(e_{i+1,i}) = -k_i k_{i+1}^-1 e
    eps(k) = 1,  eps(e) = 0

Images are elements of a coordinate field: one copy for S and eps, two for D.
"""

from typing import Dict

from sympy.polys.fields import FracElement

from ncyb.classical.coords import Gen, KECoordinates, e_gen, k_gen

COPRODUCTS = ("delta", "delta_F")


def simple_generators(n: int):
    ks = [k_gen(l) for l in range(1, n + 1)]
    es = [g for i in range(1, n) for g in (e_gen(i, i + 1), e_gen(i + 1, i))]
    return ks + es


def classical_coproduct(
    first: KECoordinates, second: KECoordinates, variant: str = "delta"
) -> Dict[Gen, FracElement]:
    if variant not in COPRODUCTS:
        raise ValueError(f"unknown coproduct {variant!r}")
    n = first.n
    out: Dict[Gen, FracElement] = {}
    for l in range(1, n + 1):
        out[k_gen(l)] = first.k(l) * second.k(l)
    for i in range(1, n):
        up, down = (i, i + 1), (i + 1, i)
        if variant == "delta":
            out[e_gen(*up)] = first.e(*up) * second.k(i) / second.k(i + 1) + second.e(*up)
            out[e_gen(*down)] = first.e(*down) + first.k(i + 1) / first.k(i) * second.e(*down)
        else:
            out[e_gen(*up)] = first.e(*up) * second.k(i) + second.e(*up) / first.k(i)
            out[e_gen(*down)] = first.e(*down) / second.k(i + 1) + first.k(i + 1) * second.e(*down)
    return out


def classical_antipode(coords: KECoordinates) -> Dict[Gen, FracElement]:
    out: Dict[Gen, FracElement] = {}
    for l in range(1, coords.n + 1):
        out[k_gen(l)] = 1 / coords.k(l)
    for i in range(1, coords.n):
        ratio = coords.k(i) / coords.k(i + 1)
        out[e_gen(i, i + 1)] = -coords.e(i, i + 1) / ratio
        out[e_gen(i + 1, i)] = -ratio * coords.e(i + 1, i)
    return out


def classical_counit(n: int) -> Dict[Gen, int]:
    return {g: (1 if g[0] == "k" else 0) for g in simple_generators(n)}
