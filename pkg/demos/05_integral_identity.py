"""
The Bose integral and Gamma(s) zeta(s)
======================================

For real s > 1 the integral of x^(s-1)/(e^x - 1) over (0, inf) equals
Gamma(s) zeta(s).  Both sides are computed independently here.
"""

from zetalogic.zeta import bose_integral_check, gamma

for s in (1.5, 2.0, 3.0, 4.0, 6.5):
    c = bose_integral_check(s)
    print(f"s={s:<4} integral={c.integral:.15f}  Gamma*zeta={c.gamma_times_zeta:.15f}  diff={c.difference:.1e}")

print("Gamma(1/2)^2 =", (gamma(0.5) ** 2).real)

try:
    bose_integral_check(1.0)
except ValueError as exc:
    print(exc)
