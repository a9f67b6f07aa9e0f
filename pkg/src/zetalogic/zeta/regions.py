"""Convergence-region maps over a rectangle of the complex plane."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .series import Status, dirichlet_status, em_status, eta_status, euler_product_status

METHODS = ("dirichlet", "euler_product", "eta", "euler_maclaurin")
MAX_POINTS = 10**6


def domain_status(s: complex, method: str, m: int = 3) -> Status:
    """Status of ``method`` at ``s`` from its domain rule alone (no evaluation)."""
    if method == "dirichlet":
        return dirichlet_status(s)
    if method == "euler_product":
        return euler_product_status(s)
    if method == "eta":
        return eta_status(s)
    if method == "euler_maclaurin":
        return em_status(s, m)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def _axis(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0:
        raise ValueError("grid step must be positive")
    if hi < lo:
        raise ValueError("range must satisfy lo <= hi")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(count)]


@dataclass(frozen=True)
class RegionMap:
    method: str
    re_values: tuple
    im_values: tuple
    statuses: tuple  # statuses[i][j] at re_values[j] + i * im_values[i]

    def points(self):
        """Row-major iteration: imaginary part outer, real part inner."""
        for i, t in enumerate(self.im_values):
            for j, sigma in enumerate(self.re_values):
                yield sigma, t, self.statuses[i][j]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "status"])
        for sigma, t, st in self.points():
            w.writerow([repr(sigma), repr(t), st.value])
        return buf.getvalue()

    def counts(self) -> dict:
        out: dict[str, int] = {}
        for _, _, st in self.points():
            out[st.value] = out.get(st.value, 0) + 1
        return out


def region_map(re_range, im_range, grid_step, method: str, m: int = 3) -> RegionMap:
    """Tag every grid point with ``method``'s status.

    ``grid_step`` is one step for both axes or a ``(re_step, im_step)`` pair.
    Points are independent, so any partitioning of the work gives the same map.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if isinstance(grid_step, (tuple, list)):
        re_step, im_step = grid_step
    else:
        re_step = im_step = grid_step
    res = _axis(*re_range, re_step)
    ims = _axis(*im_range, im_step)
    if len(res) * len(ims) > MAX_POINTS:
        raise ValueError(f"grid of {len(res) * len(ims)} points exceeds {MAX_POINTS}")
    rows = tuple(tuple(domain_status(complex(x, y), method, m) for x in res) for y in ims)
    return RegionMap(method, tuple(res), tuple(ims), rows)
