"""Exact Bernoulli numbers over the rationals."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

MAX_INDEX = 120


# grown on demand; sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1, B_0 = 1 (B_1 = -1/2)
_B: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_LOCK = threading.Lock()


def _upto(k: int) -> list[Fraction]:
    if k < len(_B):
        return _B
    with _LOCK:
        _grow(k)
    return _B


def _grow(k: int) -> None:
    for n in range(len(_B), k + 1):
        if n % 2:
            _B.append(Fraction(0))
            continue
        # odd entries beyond B_1 vanish
        acc = Fraction(1) - Fraction(n + 1, 2)
        acc += sum((comb(n + 1, j) * _B[j] for j in range(2, n, 2)), Fraction(0))
        _B.append(-acc / (n + 1))


def bernoulli(k: int) -> Fraction:
    """Exact ``B_k`` for ``0 <= k <= 120``; odd ``k > 1`` is rejected (the value is 0).

    >>> bernoulli(2), bernoulli(4)
    (Fraction(1, 6), Fraction(-1, 30))
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("k must be an int")
    if k < 0 or k > MAX_INDEX:
        raise ValueError(f"bernoulli index must lie in [0, {MAX_INDEX}], got {k}")
    if k > 1 and k % 2:
        raise ValueError(f"B_{k} is zero for odd k > 1; request an even index")
    return _upto(k)[k]


def bernoulli_table(kmax: int = MAX_INDEX) -> tuple[Fraction, ...]:
    """``B_0 .. B_kmax`` including the zero odd entries."""
    if kmax < 0 or kmax > MAX_INDEX:
        raise ValueError(f"kmax must lie in [0, {MAX_INDEX}]")
    return tuple(_upto(kmax)[: kmax + 1])
