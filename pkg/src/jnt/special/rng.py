"""Seedable 48-bit linear congruential generator.

state <- (25214903917 * state + 11) mod 2**48, seeded as (seed XOR 25214903917)
mod 2**48 (the java.util.Random convention).  Each uniform is the full new
state divided by 2**48, so it is an exact binary64 value in [0, 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

MULTIPLIER = 0x5DEECE66D
INCREMENT = 0xB
MODULUS = 1 << 48
MASK = MODULUS - 1


@dataclass
class RngState:
    """Generator state; owned by the caller, one state per thread of use."""

    seed: int
    state: int
    spare_gaussian: Optional[float] = None

    def copy(self) -> "RngState":
        return RngState(self.seed, self.state, self.spare_gaussian)


def rng_seed(seed: int) -> RngState:
    return RngState(seed, (seed ^ MULTIPLIER) & MASK)


def rng_next_uniform(st: RngState) -> float:
    st.state = (MULTIPLIER * st.state + INCREMENT) & MASK
    return st.state / MODULUS


def rng_next_gaussian(st: RngState) -> float:
    """Standard normal deviate by the polar rejection method.

    Deviates come in pairs; the second is kept in the state for the next call.
    """
    if st.spare_gaussian is not None:
        z, st.spare_gaussian = st.spare_gaussian, None
        return z
    while True:
        v1 = 2.0 * rng_next_uniform(st) - 1.0
        v2 = 2.0 * rng_next_uniform(st) - 1.0
        s = v1 * v1 + v2 * v2
        if 0.0 < s < 1.0:
            break
    mult = math.sqrt(-2.0 * math.log(s) / s)
    st.spare_gaussian = v2 * mult
    return v1 * mult


@njit(cache=True)
def _fill_uniform(state, out, lo, hi):
    a = np.uint64(MULTIPLIER)
    c = np.uint64(INCREMENT)
    mask = np.uint64(MASK)
    s = np.uint64(state)
    width = hi - lo
    for i in range(out.size):
        s = (a * s + c) & mask
        out[i] = lo + width * (float(s) / 281474976710656.0)
    return s


def rng_fill_uniform(st: RngState, n: int, lo: float = 0.0, hi: float = 1.0) -> np.ndarray:
    """``n`` draws scaled to [lo, hi), advancing ``st`` exactly as n scalar calls would."""
    out = np.empty(n)
    st.state = int(_fill_uniform(st.state, out, float(lo), float(hi)))
    return out
