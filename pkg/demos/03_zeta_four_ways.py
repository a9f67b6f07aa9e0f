"""
Four roads to zeta(s)
=====================

Each evaluator returns a value, an absolute error bound and a status, and
refuses (rather than guesses) outside its region of validity.
"""

import math

from zetalogic.zeta import (
    EMParams,
    dirichlet_partial,
    em_zeta,
    eta_zeta,
    euler_product_partial,
    functional_eq_zeta,
)

exact = math.pi**2 / 6
for r in (
    dirichlet_partial(2, 10**6),
    euler_product_partial(2, 10**5),
    eta_zeta(2),
    em_zeta(2, EMParams(m=5, n=20)),
):
    print(f"{r.method:<16} {r.value.real:.15f}  bound {r.error_bound:.1e}  "
          f"actual {abs(r.value - exact):.1e}  {r.status}")

# left of Re(s) = 1 the plain series only grows
for N in (10, 1000, 100000):
    r = dirichlet_partial(0.5, N)
    print(f"N={N:<7} partial sum {r.value.real:10.3f}  {r.status}")

# the alternating series reaches into the critical strip
r = eta_zeta(0.5)
print("eta route at s=1/2:", r.value.real, "+/-", r.error_bound)
print("Euler product at s=1/2:", euler_product_partial(0.5, 100).status)

# Euler-Maclaurin goes further left, as far as Re(s) > -(2m+1)
r = em_zeta(-1, EMParams(m=5, n=20))
print("zeta(-1) =", r.value.real, "vs -1/12 =", -1 / 12, "bound", r.error_bound)
print(em_zeta(-8, EMParams(m=3, n=10)).note)

# near the first nontrivial zero
s = complex(0.5, 14.134725141734693)
print("|zeta(1/2 + 14.1347i)| =", abs(em_zeta(s).value))

# reflection for Re(s) < 0; trivial zeros come out exactly zero
print(functional_eq_zeta(-2).to_text())
print(functional_eq_zeta(complex(-3.5, 2)).to_text())
