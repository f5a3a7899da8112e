"""Sign and Bessel functions, scalar root finding and random numbers."""
import math

from jnt.special.bessel import BesselFunction, BesselKind, bessel, i0, i1, j0, j1, k0, k1, y0, y1
from jnt.special.rng import RngState, rng_fill_uniform, rng_next_gaussian, rng_next_uniform, rng_seed
from jnt.special.roots import RootResult, UnivariateFunction, find_root


def sign(x: float) -> float:
    """Three-valued sign: -1, 0 or +1 (both zeros give 0); NaN passes through."""
    if math.isnan(x):
        return math.nan
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


__all__ = [
    "BesselFunction",
    "BesselKind",
    "RngState",
    "RootResult",
    "UnivariateFunction",
    "bessel",
    "find_root",
    "i0",
    "i1",
    "j0",
    "j1",
    "k0",
    "k1",
    "rng_fill_uniform",
    "rng_next_gaussian",
    "rng_next_uniform",
    "rng_seed",
    "sign",
    "y0",
    "y1",
]
