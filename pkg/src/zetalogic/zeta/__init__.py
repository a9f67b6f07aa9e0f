"""Numerical evaluation of the Riemann zeta function."""

from .bernoulli import bernoulli, bernoulli_table
from .gamma import gamma, loggamma
from .quadrature import BoseCheck, adaptive_gk, bose_integral_check
from .regions import METHODS, RegionMap, domain_status, region_map
from .series import (
    EMParams,
    SeriesResult,
    Status,
    classify_line,
    classify_pseries,
    dirichlet_envelope,
    dirichlet_partial,
    em_zeta,
    eta_partial,
    eta_zeta,
    euler_product_partial,
    functional_eq_zeta,
    primes_upto,
    trig_components,
)

__all__ = [
    "bernoulli",
    "bernoulli_table",
    "gamma",
    "loggamma",
    "BoseCheck",
    "adaptive_gk",
    "bose_integral_check",
    "METHODS",
    "RegionMap",
    "domain_status",
    "region_map",
    "EMParams",
    "SeriesResult",
    "Status",
    "classify_line",
    "classify_pseries",
    "dirichlet_envelope",
    "dirichlet_partial",
    "em_zeta",
    "eta_partial",
    "eta_zeta",
    "euler_product_partial",
    "functional_eq_zeta",
    "primes_upto",
    "trig_components",
]
