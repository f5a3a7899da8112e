"""Locale-independent parsing of real-number tokens such as ``2.13e+6``."""
from jnt.errors import ParseError

_DIGITS = frozenset("0123456789")


def parse_float(token: str) -> float:
    """Parse one real-number token, rounding to nearest binary64.

    Grammar: ``[+-] digits [. digits] [(e|E) [+-] digits]`` where the mantissa
    needs at least one digit on either side of the point.  Anything else,
    including surrounding whitespace, ``inf`` and ``nan``, is a
    :class:`ParseError` that reports the offending position.
    """
    n = len(token)
    if n == 0:
        raise ParseError(token, 0, "empty token")
    i = 0
    if token[i] in "+-":
        i += 1
    start = i
    while i < n and token[i] in _DIGITS:
        i += 1
    mantissa_digits = i - start
    if i < n and token[i] == ".":
        i += 1
        frac = i
        while i < n and token[i] in _DIGITS:
            i += 1
        mantissa_digits += i - frac
    if mantissa_digits == 0:
        raise ParseError(token, i, "expected a digit")
    if i < n and token[i] in "eE":
        i += 1
        if i < n and token[i] in "+-":
            i += 1
        exp_start = i
        while i < n and token[i] in _DIGITS:
            i += 1
        if i == exp_start:
            raise ParseError(token, i, "exponent has no digits")
    if i != n:
        raise ParseError(token, i, f"unexpected character {token[i]!r}")
    # the grammar above is a subset of what float() accepts, and float() rounds correctly
    return float(token)
