"""
Where each method converges
===========================

Tags a grid of the complex plane with each method's status and writes the
grids as CSV for plotting elsewhere.
"""

import sys
from pathlib import Path

from zetalogic.zeta import region_map

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
re_range, im_range = (-8.0, 3.0), (-10.0, 10.0)

for method in ("dirichlet", "eta", "euler_maclaurin"):
    grid = region_map(re_range, im_range, (0.05, 0.5), method, m=3)
    path = out_dir / f"region_{method}.csv"
    path.write_text(grid.to_csv())
    print(f"{method:<16} {grid.counts()}  -> {path}")

# a coarse picture in the terminal: one row per imaginary part
symbols = {"Converged": "#", "Diverged": ".", "OutOfDomain": " ", "Pole": "P", "Oscillating": "~"}
for method in ("dirichlet", "eta", "euler_maclaurin"):
    grid = region_map((-8.0, 3.0), (-1.0, 1.0), (0.25, 1.0), method, m=3)
    print(f"\n{method}  (sigma from -8 to 3)")
    for t, row in zip(grid.im_values, grid.statuses):
        print(f"t={t:+.0f} |" + "".join(symbols[s.value] for s in row) + "|")
