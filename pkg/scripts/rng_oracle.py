"""Independent evaluation of the 48-bit LCG with exact rational arithmetic.

Prints the first few uniforms for a seed so they can be frozen into tests:

    python scripts/rng_oracle.py 1 3
"""
import sys
from fractions import Fraction

A = 25214903917
C = 11
M = 2 ** 48


def uniforms(seed, count):
    state = (seed ^ A) % M
    for _ in range(count):
        state = (A * state + C) % M
        yield state, Fraction(state, M)


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    for state, u in uniforms(seed, count):
        print(state, repr(float(u)), u == Fraction(float(u)))
