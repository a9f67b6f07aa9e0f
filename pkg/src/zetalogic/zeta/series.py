"""Zeta evaluation by four routes, each returning a value with an error bound.

Every partial sum runs in ascending index order and is accumulated with
``math.fsum`` on the real and imaginary parts, so results are reproducible
to the bit.  Reported ``error_bound`` values are absolute and cover both
truncation and a floating-point rounding allowance.
"""

from __future__ import annotations

import cmath
import enum
import json
import math
from dataclasses import dataclass
from math import factorial

import numpy as np

from .bernoulli import bernoulli
from .gamma import gamma, loggamma

__all__ = [
    "Status",
    "SeriesResult",
    "EMParams",
    "classify_pseries",
    "classify_line",
    "dirichlet_partial",
    "dirichlet_envelope",
    "trig_components",
    "euler_product_partial",
    "primes_upto",
    "eta_partial",
    "eta_zeta",
    "em_zeta",
    "functional_eq_zeta",
]

EPS = np.finfo(float).eps
_CHUNK = 1 << 20
_ETA_MIN_TOL = 1e-14
# |1 - 2^(1-s)| below this (away from s = 1) counts as a factor zero
ETA_FACTOR_GUARD = 1e-9


class Status(str, enum.Enum):
    CONVERGED = "Converged"
    DIVERGED = "Diverged"
    OSCILLATING = "Oscillating"
    POLE = "Pole"
    OUT_OF_DOMAIN = "OutOfDomain"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SeriesResult:
    s: complex
    method: str
    value: complex
    error_bound: float
    terms_used: int
    status: Status
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "value", complex(self.value))
        object.__setattr__(self, "error_bound", float(self.error_bound))
        object.__setattr__(self, "terms_used", int(self.terms_used))

    @property
    def ok(self) -> bool:
        return self.status is Status.CONVERGED

    def to_dict(self) -> dict:
        def num(x):
            return x if math.isfinite(x) else None

        return {
            "s": [self.s.real, self.s.imag],
            "method": self.method,
            "value": [num(self.value.real), num(self.value.imag)],
            "error_bound": num(self.error_bound),
            "terms": self.terms_used,
            "status": self.status.value,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        v = self.value
        lines = [
            f"s           = {self.s.real!r} {'+' if self.s.imag >= 0 else '-'} {abs(self.s.imag)!r}i",
            f"method      = {self.method}",
            f"status      = {self.status.value}",
            f"value       = {v.real!r} {'+' if v.imag >= 0 else '-'} {abs(v.imag)!r}i",
            f"error_bound = {self.error_bound!r}",
            f"terms       = {self.terms_used}",
        ]
        if self.note:
            lines.append(f"note        = {self.note}")
        return "\n".join(lines)


def _undefined(s: complex, method: str, status: Status, note: str, value=complex("nan+nanj")) -> SeriesResult:
    return SeriesResult(s, method, value, math.inf, 0, status, note)


def _fsum_complex(z: np.ndarray) -> tuple[complex, float]:
    """Correctly rounded sum of real and imaginary parts, plus sum of |z|."""
    return complex(math.fsum(z.real), math.fsum(z.imag)), math.fsum(np.abs(z))


def _powers(s: complex, start: int, stop: int) -> np.ndarray:
    """``n**(-s)`` for ``start <= n < stop``, as modulus times phase."""
    return _powers_at(s, np.arange(start, stop, dtype=float))


def _powers_at(s: complex, n: np.ndarray) -> np.ndarray:
    mag = np.power(n, -s.real)
    if s.imag == 0.0:
        return mag.astype(complex)
    phase = -s.imag * np.log(n)
    return mag * np.cos(phase) + 1j * (mag * np.sin(phase))


def _cpow(n: float, z: complex) -> complex:
    """``n**z`` for real ``n > 0``."""
    mag = math.pow(n, z.real)
    if z.imag == 0.0:
        return complex(mag)
    phase = z.imag * math.log(n)
    return complex(mag * math.cos(phase), mag * math.sin(phase))


def _power_sum(s: complex, stop: int) -> tuple[complex, float]:
    """``sum_{n=1}^{stop-1} n**(-s)`` and ``sum |n**(-s)|``, chunked."""
    parts, mags = [], []
    for lo in range(1, stop, _CHUNK):
        chunk = _powers(s, lo, min(stop, lo + _CHUNK))
        v, m = _fsum_complex(chunk)
        parts.append(v)
        mags.append(m)
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts)), math.fsum(mags)


def _term_rel_err(s: complex, n: int) -> float:
    # pow is good to a few ulps; the phase t*log(n) carries an absolute error ~ eps*|t|*log(n)
    return EPS * (4.0 + 2.0 * abs(s.imag) * math.log(max(n, 2)))


# ---------------------------------------------------------------------------
# Classification


def classify_pseries(p: float) -> Status:
    """Convergence of ``sum n**(-p)`` for real ``p``: converges iff ``p > 1``."""
    return Status.CONVERGED if p > 1 else Status.DIVERGED


def classify_line(s) -> Status:
    """Behaviour of the Dirichlet series on the line ``Re(s) = 1``."""
    s = complex(s)
    if s.real != 1.0:
        raise ValueError(f"classify_line needs Re(s) = 1, got {s.real!r}")
    return Status.POLE if s.imag == 0.0 else Status.OSCILLATING


def dirichlet_status(s: complex) -> Status:
    if s.real > 1:
        return Status.CONVERGED
    if s.real == 1:
        return classify_line(s)
    return Status.DIVERGED


def euler_product_status(s: complex) -> Status:
    return Status.CONVERGED if s.real > 1 else Status.OUT_OF_DOMAIN


def eta_factor(s: complex) -> complex:
    return 1.0 - _cpow(2.0, 1.0 - s)


def eta_status(s: complex) -> Status:
    if s == 1:
        return Status.POLE
    if s.real <= 0:
        return Status.OUT_OF_DOMAIN
    if abs(eta_factor(s)) < ETA_FACTOR_GUARD:
        return Status.OUT_OF_DOMAIN
    return Status.CONVERGED


def em_status(s: complex, m: int) -> Status:
    if s == 1:
        return Status.POLE
    if s.real <= -(2 * m + 1):
        return Status.OUT_OF_DOMAIN
    return Status.CONVERGED


# ---------------------------------------------------------------------------
# Dirichlet series


def dirichlet_partial(s, N: int) -> SeriesResult:
    """``sum_{n=1}^{N} n**(-s)``.

    The literal partial sum is always returned.  For ``Re(s) > 1`` the bound
    adds the integral tail estimate ``N**(1-sigma)/(sigma-1)``; elsewhere the
    series does not converge and the bound is infinite.
    """
    s = complex(s)
    if N < 1:
        raise ValueError("N must be >= 1")
    value, mag = _power_sum(s, N + 1)
    status = dirichlet_status(s)
    if status is Status.CONVERGED:
        sigma = s.real
        tail = math.pow(N, 1.0 - sigma) / (sigma - 1.0)
        bound = tail + mag * _term_rel_err(s, N)
        note = ""
    else:
        bound = math.inf
        note = {
            Status.POLE: "harmonic series diverges to +infinity at s = 1",
            Status.OSCILLATING: "partial sums oscillate finitely on Re(s) = 1, s != 1",
            Status.DIVERGED: "Dirichlet series diverges for Re(s) < 1",
        }[status]
    return SeriesResult(s, "dirichlet", value, bound, N, status, note)


def dirichlet_envelope(s, N: int) -> tuple[float, float]:
    """Smallest and largest ``|S_k|`` over the partial sums ``S_1..S_N``.

    A bounded envelope for growing ``N`` is the numerical face of finite
    oscillation on ``Re(s) = 1``.
    """
    s = complex(s)
    if N < 1:
        raise ValueError("N must be >= 1")
    partial = np.cumsum(_powers(s, 1, N + 1))
    mags = np.abs(partial)
    return float(mags.min()), float(mags.max())


def trig_components(s, N: int) -> tuple[float, float]:
    """Real and imaginary partial sums written with cosines and sines.

    ``n**(-s) = n**(-sigma) * (cos(-t ln n) + i sin(-t ln n))``.
    """
    s = complex(s)
    if N < 1:
        raise ValueError("N must be >= 1")
    re_parts, im_parts = [], []
    for lo in range(1, N + 1, _CHUNK):
        n = np.arange(lo, min(N + 1, lo + _CHUNK), dtype=float)
        logn = np.log(n)
        mag = np.exp(-s.real * logn)
        phase = -s.imag * logn
        re_parts.append(math.fsum(mag * np.cos(phase)))
        im_parts.append(math.fsum(mag * np.sin(phase)))
    return math.fsum(re_parts), math.fsum(im_parts)


# ---------------------------------------------------------------------------
# Euler product


def primes_upto(bound: int) -> np.ndarray:
    """Primes ``<= bound`` in ascending order (sieve of Eratosthenes)."""
    if bound < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(bound + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def euler_product_partial(s, prime_bound: int) -> SeriesResult:
    """``prod_{p <= prime_bound} (1 - p**(-s))**(-1)``, for ``Re(s) > 1`` only.

    With ``B = prime_bound`` the omitted factors change ``log zeta`` by at
    most ``delta = B**(1-sigma) / ((sigma-1)(1 - B**(-sigma)))``, so the
    bound is ``|P| (exp(delta) - 1)``.
    """
    s = complex(s)
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    if euler_product_status(s) is not Status.CONVERGED:
        return _undefined(
            s, "euler_product", Status.OUT_OF_DOMAIN,
            "Euler product converges only for Re(s) > 1",
        )
    primes = primes_upto(prime_bound)
    factors = 1.0 / (1.0 - _powers_at(s, primes.astype(float)))
    value = complex(1.0)
    for f in factors:
        value *= f
    sigma = s.real
    delta = math.pow(prime_bound, 1.0 - sigma) / (
        (sigma - 1.0) * (1.0 - prime_bound ** (-sigma))
    )
    rounding = abs(value) * len(primes) * _term_rel_err(s, prime_bound) * 2.0
    bound = abs(value) * math.expm1(delta) + rounding
    return SeriesResult(s, "euler_product", value, bound, len(primes), Status.CONVERGED)


# ---------------------------------------------------------------------------
# Alternating (eta) construction


def eta_partial(s, N: int) -> tuple[complex, float]:
    """``sum_{n=1}^{N} (-1)**(n+1) n**(-s)`` and the first omitted term's modulus.

    For real ``s > 0`` the terms decrease in modulus and alternate in sign,
    so the remainder is bounded by the first omitted term.
    """
    s = complex(s)
    if N < 1:
        raise ValueError("N must be >= 1")
    parts = []
    for lo in range(1, N + 1, _CHUNK):
        hi = min(N + 1, lo + _CHUNK)
        terms = _powers(s, lo, hi)
        sign = np.where(np.arange(lo, hi) % 2 == 1, 1.0, -1.0)
        parts.append(_fsum_complex(terms * sign)[0])
    value = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    next_term = math.pow(N + 1, -s.real)
    return value, next_term


def _cvz_weights(n: int) -> np.ndarray:
    """Weights ``w_k = c_k / d_n`` of the Chebyshev acceleration of ``sum (-1)^k a_k``.

    ``d_n = T_n(3)``; every ``|w_k| <= 1``.
    """
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    w = np.empty(n)
    for k in range(n):
        c = b - c
        w[k] = c
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return w / d


def _cvz_error(s: complex, n: int) -> float:
    # |err| <= Gamma(sigma) eta(sigma) / (|Gamma(s)| T_n(3)), eta(sigma) <= 1
    log_tn = n * math.log(3.0 + math.sqrt(8.0)) - math.log(2.0)
    return math.exp(math.lgamma(s.real) - loggamma(s).real - log_tn)


def eta_zeta(s, tol: float = 1e-12) -> SeriesResult:
    """Zeta through the alternating series divided by ``1 - 2**(1-s)``, for ``Re(s) > 0``.

    The alternating series is summed with Chebyshev-weighted partial sums
    (Cohen, Rodriguez Villegas and Zagier).  Writing the terms as moments of
    ``(-ln x)**(s-1) / Gamma(s)`` on ``[0, 1]`` gives the remainder bound
    ``Gamma(sigma) / (|Gamma(s)| T_n(3))``; the number of terms is the
    smallest one meeting ``tol`` after division by ``|1 - 2**(1-s)|``.
    """
    s = complex(s)
    if not tol >= _ETA_MIN_TOL:
        raise ValueError(f"tol must be >= {_ETA_MIN_TOL}")
    status = eta_status(s)
    if status is Status.POLE:
        return _undefined(s, "eta", status, "pole at s = 1")
    if status is Status.OUT_OF_DOMAIN:
        if s.real <= 0:
            note = "alternating series converges only for Re(s) > 0"
        else:
            note = "1 - 2^(1-s) vanishes here (s = 1 + 2 pi i k / ln 2); the quotient is undefined"
        return _undefined(s, "eta", status, note)

    factor = eta_factor(s)
    target = tol * abs(factor) / 2.0
    n = 1
    while _cvz_error(s, n) > target:
        n += 1
        if n > 2000:
            raise ValueError(f"tolerance {tol} not reachable at s = {s}")
    w = _cvz_weights(n)
    terms = w * _powers(s, 1, n + 1)
    eta, mag = _fsum_complex(terms)
    value = eta / factor
    rounding = (mag * (_term_rel_err(s, n) + 4.0 * n * EPS)) / abs(factor) + 4.0 * EPS * abs(value)
    bound = _cvz_error(s, n) / abs(factor) + rounding
    return SeriesResult(s, "eta", value, bound, n, Status.CONVERGED)


# ---------------------------------------------------------------------------
# Euler-Maclaurin


@dataclass(frozen=True)
class EMParams:
    """``m`` Bernoulli correction terms after a direct sum of ``n - 1`` terms."""

    m: int = 10
    n: int = 20

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive integers")
        if self.m > 59:
            raise ValueError("m must be <= 59 (Bernoulli table holds B_0..B_120)")

    @classmethod
    def for_point(cls, s, m: int = 10) -> "EMParams":
        """Default cutoff: ``n`` grows with ``|Im s|`` so the corrections shrink.

        ``n`` stays small otherwise: for ``Re(s) < 0`` the head sum grows like
        ``n**(1-sigma)`` and cancels, costing accuracy in double precision.
        """
        s = complex(s)
        return cls(m=m, n=12 + int(math.ceil(abs(s.imag))))


def _em_terms(s: complex, m: int, n: int) -> list[complex]:
    """``T_{k,n}(s)`` for ``k = 1 .. m+1``."""
    out = []
    prod = s  # prod_{j=0}^{2k-2} (s + j) for k = 1
    for k in range(1, m + 2):
        coef = float(bernoulli(2 * k) / factorial(2 * k))
        out.append(coef * _cpow(n, 1.0 - s - 2 * k) * prod)
        prod *= (s + 2 * k - 1) * (s + 2 * k)
    return out


def em_zeta(s, params: EMParams | None = None) -> SeriesResult:
    """Zeta by Euler-Maclaurin summation, valid for ``Re(s) > -(2m+1)``, ``s != 1``.

    ``error_bound`` is ``|(s+2m+1)/(sigma+2m+1)| |T_{m+1,n}(s)|`` plus the
    rounding allowance.
    """
    s = complex(s)
    if params is None:
        params = EMParams.for_point(s)
    m, n = params.m, params.n
    status = em_status(s, m)
    if status is Status.POLE:
        return _undefined(s, "euler_maclaurin", status, "pole at s = 1")
    if status is Status.OUT_OF_DOMAIN:
        return _undefined(
            s, "euler_maclaurin", status,
            f"Euler-Maclaurin needs Re(s) > -(2m+1) = {-(2 * m + 1)} for m = {m}; got Re(s) = {s.real!r}",
        )
    head, head_mag = _power_sum(s, n)
    n_pow = _cpow(n, -s)
    half = 0.5 * n_pow
    integral = n_pow * n / (s - 1.0)
    T = _em_terms(s, m, n)
    corrections = T[:m]
    parts = [head, half, integral, *corrections]
    value = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    sigma = s.real
    remainder = abs((s + 2 * m + 1) / (sigma + 2 * m + 1)) * abs(T[m])
    rel = _term_rel_err(s, n)
    rounding = (
        head_mag * rel
        + (abs(half) + abs(integral)) * (rel + 4 * EPS)
        + sum(abs(t) * (rel + (4 * k + 8) * EPS) for k, t in enumerate(corrections, start=1))
    )
    return SeriesResult(s, "euler_maclaurin", value, remainder + rounding, n - 1 + m, Status.CONVERGED)


# ---------------------------------------------------------------------------
# Reflection


def _is_trivial_zero(s: complex) -> bool:
    if abs(s.imag) > 1e-12 or s.real > -1:
        return False
    k = round(s.real / 2.0)
    return abs(s.real - 2.0 * k) <= 1e-12


def functional_eq_zeta(s, params: EMParams | None = None) -> SeriesResult:
    """Zeta for ``Re(s) < 0`` via ``2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)``.

    ``zeta(1-s)`` comes from :func:`em_zeta`.  At ``s = -2, -4, ...`` the sine
    factor vanishes and the result is exactly zero.
    """
    s = complex(s)
    if s.real >= 0:
        return _undefined(
            s, "functional_equation", Status.OUT_OF_DOMAIN,
            "reflection is used only for Re(s) < 0; call em_zeta directly",
        )
    if _is_trivial_zero(s):
        return SeriesResult(s, "functional_equation", 0j, 0.0, 0, Status.CONVERGED, "TrivialZero")
    w = 1.0 - s
    inner = em_zeta(w, params)
    factor = (
        cmath.exp(s * math.log(2.0) + (s - 1.0) * math.log(math.pi))
        * cmath.sin(math.pi * s / 2.0)
        * gamma(w)
    )
    value = factor * inner.value
    # gamma carries up to ~1e-13 relative error over moderate |t|
    rounding = abs(value) * (1e-13 + EPS * (8.0 + 4.0 * abs(s) * math.log(2.0 * math.pi)))
    bound = abs(factor) * inner.error_bound + rounding
    return SeriesResult(s, "functional_equation", value, bound, inner.terms_used, Status.CONVERGED)
