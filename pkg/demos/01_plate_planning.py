"""Choosing trial dimensions for plates and field strips.

The check proportion of an augmented row-column design is locked to k/v
(each of the k checks occupies one plot per column), so planning starts from
the number of checks and the proportion you can afford, and the column count
follows from how many test lines you need to place.
"""

from arcdesign import plan, plan_fixed_grid
from arcdesign.errors import InfeasibleParametersError

# A breeder wants 4 checks, about 20% of plots devoted to them, and room for
# 173 test lines.  20 rows give exactly 4/20 = 20%, and 11 columns provide
# 176 slots, so three spare slots remain for extra entries.
p = plan(4, 0.20, 173)
print("four checks, 20% target, 173 lines:")
print(f"  v={p.v} rows x s={p.s} columns, capacity {p.test_line_capacity},"
      f" surplus {p.surplus}\n")

# A 96-well plate is fixed at 8x12.  With 3 checks, orienting the long side
# as rows gives a 25% check proportion and 72 test-line wells.
p96 = plan_fixed_grid(8, 12, 3)
print("96-well plate, 3 checks:")
print(f"  v={p96.v}, s={p96.s}, proportion {p96.check_proportion:.2%},"
      f" capacity {p96.test_line_capacity}\n")

# A 384-well plate (24x16) with 4 checks: 4/24 = 16.7% of wells go to checks
# and 320 test lines fit.
p384 = plan_fixed_grid(24, 16, 4)
print("384-well plate, 4 checks, portrait:")
print(f"  v={p384.v}, s={p384.s}, proportion {p384.check_proportion:.2%},"
      f" capacity {p384.test_line_capacity}\n")

# Willing to spend a few more wells on checks?  Treat the short side as rows
# instead: 3/16 = 18.75% and 312 test lines.  Note this forces v < s, which
# the generator itself will not accept; the plan is for capacity comparison.
p384b = plan_fixed_grid(16, 24, 3, orientation="rows")
print("384-well plate, 3 checks, landscape override:")
print(f"  v={p384b.v}, s={p384b.s}, proportion {p384b.check_proportion:.2%},"
      f" capacity {p384b.test_line_capacity}\n")

# Infeasible requests fail with a concrete suggestion rather than a bare no.
try:
    plan(2, 0.5, 4)
except InfeasibleParametersError as exc:
    print(f"2 checks at 50% for 4 lines -> {exc}")
