"""Complex gamma function (Lanczos, g=7, nine coefficients)."""

from __future__ import annotations

import cmath
import math

_G = 7.0
_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _is_pole(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def loggamma(s) -> complex:
    """A logarithm of Gamma(s); the real part is ``log|Gamma(s)|``.

    The imaginary part is not normalised to the principal branch.
    """
    s = complex(s)
    if _is_pole(s):
        raise ValueError(f"gamma has a pole at s = {s.real:g}")
    if s.real < 0.5:
        return _LOG_PI - cmath.log(cmath.sin(math.pi * s)) - loggamma(1.0 - s)
    z = s - 1.0
    x = _COEF[0]
    for i, c in enumerate(_COEF[1:], start=1):
        x += c / (z + i)
    t = z + _G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma(s) -> complex:
    """Gamma function at complex ``s``.

    Lanczos approximation for ``Re(s) >= 0.5``, reflection formula below.
    Raises ``ValueError`` at the poles ``0, -1, -2, ...``.
    """
    s = complex(s)
    if _is_pole(s):
        raise ValueError(f"gamma has a pole at s = {s.real:g}")
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma(1.0 - s))
    z = s - 1.0
    x = _COEF[0]
    for i, c in enumerate(_COEF[1:], start=1):
        x += c / (z + i)
    t = z + _G + 0.5
    return cmath.exp(_LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t) * x
