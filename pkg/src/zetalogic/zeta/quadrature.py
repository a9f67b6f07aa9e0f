"""Adaptive Gauss-Kronrod quadrature and the Bose-integral identity check.

For ``s > 1``::

    integral_0^inf x**(s-1) / (e**x - 1) dx  ==  Gamma(s) * zeta(s)
"""

from __future__ import annotations

import heapq
import math
from typing import Callable, NamedTuple

from .bernoulli import bernoulli_table
from .gamma import gamma
from .series import EMParams, Status, em_zeta

# 7-point Gauss / 15-point Kronrod nodes on [-1, 1] (nonnegative half)
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the nodes _XK[1], _XK[3], _XK[5], _XK[7]
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    kron = _WK[7] * fc
    gauss = _WG[3] * fc
    for i in range(7):
        dx = h * _XK[i]
        pair = f(c - dx) + f(c + dx)
        kron += _WK[i] * pair
        if i % 2 == 1:
            gauss += _WG[i // 2] * pair
    return kron * h, abs((kron - gauss) * h)


class QuadResult(NamedTuple):
    value: float
    error: float
    intervals: int


def adaptive_gk(f: Callable[[float], float], a: float, b: float, tol: float, max_intervals: int = 2000) -> QuadResult:
    """Globally adaptive G7-K15: bisect the worst interval until the summed
    error estimate is below ``tol`` (absolute)."""
    if not b > a:
        raise ValueError("need b > a")
    value, err = _gk15(f, a, b)
    heap = [(-err, a, b, value)]
    total_err = err
    while total_err > tol and len(heap) < max_intervals:
        neg_err, lo, hi, v = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        v1, e1 = _gk15(f, lo, mid)
        v2, e2 = _gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total_err += e1 + e2 + neg_err
    values = sorted((item[1], item[3]) for item in heap)
    return QuadResult(math.fsum(v for _, v in values), total_err, len(heap))


class BoseCheck(NamedTuple):
    integral: float
    gamma_times_zeta: float
    difference: float


def _head_integral(s: float) -> tuple[float, float]:
    """``int_0^1 x**(s-1)/(e**x-1) dx`` termwise from ``x/(e**x-1) = sum B_k x**k / k!``.

    Each term integrates to ``B_k / (k! (s-1+k))``; the series converges
    geometrically (ratio about ``1/(2 pi)``) on ``[0, 1]``.
    """
    b = bernoulli_table(60)
    terms = [float(b[k] / math.factorial(k)) / (s - 1.0 + k) for k in range(61) if b[k] != 0]
    # next nonzero coefficient |B_62/62!| < 2.1 (2 pi)^-62
    tail = 2.1 * (2.0 * math.pi) ** -62
    return math.fsum(terms), tail


def _tail_cutoff(s: float, tol: float) -> tuple[float, float]:
    """Cutoff ``T`` with ``int_T^inf x**(s-1)/(e**x-1) dx`` below ``tol``; returns (T, bound)."""
    T = max(2.0, 2.0 * (s - 1.0) + 1.0)
    while True:
        # x^(s-1)/(e^x-1) <= x^(s-1) e^-x / (1-e^-T);  incomplete gamma bound for T > s-1
        bound = T ** (s - 1.0) * math.exp(-T) / ((1.0 - (s - 1.0) / T) * -math.expm1(-T))
        if bound < tol:
            return T, bound
        T += 1.0


def bose_integral_check(s: float, quad_tol: float = 1e-11) -> BoseCheck:
    """Compare ``int_0^inf x**(s-1)/(e**x-1) dx`` with ``Gamma(s) * zeta(s)``.

    The integral is split at ``x = 1``: the head is integrated termwise from
    the Bernoulli expansion (no 0/0 evaluation at the origin), the middle
    ``[1, T]`` by adaptive Gauss-Kronrod, and ``T`` is chosen so the
    exponential tail is below ``quad_tol / 10``.
    """
    s = float(s)
    if not s > 1.0:
        raise ValueError(f"OutOfDomain: the integral identity needs real s > 1, got {s!r}")
    if not quad_tol > 0:
        raise ValueError("quad_tol must be positive")
    head, _ = _head_integral(s)
    T, _ = _tail_cutoff(s, quad_tol / 10.0)
    body = adaptive_gk(lambda x: x ** (s - 1.0) / math.expm1(x), 1.0, T, quad_tol / 2.0)
    integral = head + body.value
    z = em_zeta(s, EMParams(m=10, n=20))
    assert z.status is Status.CONVERGED
    gz = gamma(s).real * z.value.real
    return BoseCheck(integral, gz, abs(integral - gz))
