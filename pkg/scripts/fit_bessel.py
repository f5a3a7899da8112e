"""Fit the Chebyshev expansions used by ``jnt.special.bessel``.

Every expansion approximates a smooth auxiliary function g(u) on u in [-1, 1].
The runtime code maps x to u and reassembles the Bessel value from g and the
elementary factors (log, exp, sqrt, sin, cos) listed in ``REGIONS``.

Run from the repository root to regenerate the table module::

    python scripts/fit_bessel.py > src/jnt/special/_bessel_tables.py
"""
import sys

import mpmath as mp

mp.mp.dps = 50

NODES = 90
CUTOFF = mp.mpf("1e-19")

TWO_OVER_PI = 2 / mp.pi


def _small_t(xmax):
    # u in [-1, 1] -> x with t = (x / xmax)**2 = (u + 1) / 2
    return lambda u: xmax * mp.sqrt((u + 1) / 2)


def _linear(xmax):
    # x = xmax * (u + 1) / 2
    return lambda u: xmax * (u + 1) / 2


def _large_w(xmin):
    # w = (xmin / x)**2 = (u + 1) / 2
    return lambda u: xmin / mp.sqrt((u + 1) / 2)


def _large_v(xmin):
    # v = xmin / x = (u + 1) / 2
    return lambda u: xmin / ((u + 1) / 2)


def _p0(x):
    c, s = mp.cos(x - mp.pi / 4), mp.sin(x - mp.pi / 4)
    j, y = mp.besselj(0, x), mp.bessely(0, x)
    return mp.sqrt(mp.pi * x / 2) * (j * c + y * s)


def _q0(x):
    c, s = mp.cos(x - mp.pi / 4), mp.sin(x - mp.pi / 4)
    j, y = mp.besselj(0, x), mp.bessely(0, x)
    return mp.sqrt(mp.pi * x / 2) * (y * c - j * s) * (x / 8)


def _p1(x):
    c, s = mp.cos(x - 3 * mp.pi / 4), mp.sin(x - 3 * mp.pi / 4)
    j, y = mp.besselj(1, x), mp.bessely(1, x)
    return mp.sqrt(mp.pi * x / 2) * (j * c + y * s)


def _q1(x):
    c, s = mp.cos(x - 3 * mp.pi / 4), mp.sin(x - 3 * mp.pi / 4)
    j, y = mp.besselj(1, x), mp.bessely(1, x)
    return mp.sqrt(mp.pi * x / 2) * (y * c - j * s) * (x / 8)


# name -> (x of u, auxiliary function of x)
REGIONS = {
    "J0_SMALL": (_small_t(8), lambda x: mp.besselj(0, x)),
    "J1_SMALL": (_small_t(8), lambda x: mp.besselj(1, x) / x),
    "Y0_SMALL": (_small_t(8), lambda x: mp.bessely(0, x) - TWO_OVER_PI * mp.log(x) * mp.besselj(0, x)),
    "Y1_SMALL": (
        _small_t(8),
        lambda x: (mp.bessely(1, x) - TWO_OVER_PI * (mp.log(x) * mp.besselj(1, x) - 1 / x)) / x,
    ),
    "P0_LARGE": (_large_w(8), _p0),
    "Q0_LARGE": (_large_w(8), _q0),
    "P1_LARGE": (_large_w(8), _p1),
    "Q1_LARGE": (_large_w(8), _q1),
    "I0_SMALL": (_linear(8), lambda x: mp.exp(-x) * mp.besseli(0, x)),
    "I1_SMALL": (_linear(8), lambda x: mp.exp(-x) * mp.besseli(1, x) / x),
    "I0_LARGE": (_large_v(8), lambda x: mp.sqrt(x) * mp.exp(-x) * mp.besseli(0, x)),
    "I1_LARGE": (_large_v(8), lambda x: mp.sqrt(x) * mp.exp(-x) * mp.besseli(1, x)),
    "K0_SMALL": (_small_t(2), lambda x: mp.besselk(0, x) + mp.log(x) * mp.besseli(0, x)),
    "K1_SMALL": (
        _small_t(2),
        lambda x: (mp.besselk(1, x) - 1 / x - mp.log(x) * mp.besseli(1, x)) / x,
    ),
    "K0_LARGE": (_large_v(2), lambda x: mp.sqrt(x) * mp.exp(x) * mp.besselk(0, x)),
    "K1_LARGE": (_large_v(2), lambda x: mp.sqrt(x) * mp.exp(x) * mp.besselk(1, x)),
}


def chebyshev_coefficients(g, n=NODES):
    """Interpolate g at the n Chebyshev points of the first kind."""
    nodes = [mp.cos(mp.pi * (k + mp.mpf(1) / 2) / n) for k in range(n)]
    values = [g(u) for u in nodes]
    coeffs = []
    for j in range(n):
        s = mp.fsum(values[k] * mp.cos(mp.pi * j * (k + mp.mpf(1) / 2) / n) for k in range(n))
        coeffs.append(2 * s / n)
    coeffs[0] /= 2
    return coeffs


def truncate(coeffs):
    scale = max(abs(c) for c in coeffs)
    last = max(i for i, c in enumerate(coeffs) if abs(c) > CUTOFF * scale)
    return coeffs[: last + 1]


def main(out=sys.stdout):
    out.write('"""Chebyshev coefficients for the Bessel auxiliary functions.\n\n')
    out.write("Generated by scripts/fit_bessel.py; do not edit by hand.\n")
    out.write('"""\n')
    for name, (x_of_u, aux) in REGIONS.items():
        coeffs = truncate(chebyshev_coefficients(lambda u: aux(x_of_u(u))))
        print(f"{name}: {len(coeffs)} terms", file=sys.stderr)
        out.write(f"\n{name} = (\n")
        for c in coeffs:
            out.write(f"    {mp.nstr(c, 22)},\n")
        out.write(")\n")


if __name__ == "__main__":
    main()
