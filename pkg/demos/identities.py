"""Series identities: the cyclic quiver C_2, the A^_3 form, and NCDT.

Run: python3 demos/identities.py
"""

from __future__ import annotations

from dihedraldt.dtengine import a3_special_series, a_series_closed, c2_series, ncdt_series
from dihedraldt.rootsystem import build

lhs, rhs = c2_series(6)
print("C_2 double sum == Exp side to degree 6:", lhs == rhs)

print("A^_3 closed expression == general formula at l = 1:",
      a3_special_series(6) == a_series_closed(build(3), 6))

exp_side, product = ncdt_series(8)
print("NCDT Exp side == MacMahon product to degree 8:", exp_side == product)
for d in [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1), (2, 2, 2, 2)]:
    print(f"  coefficient of t^{d}: {exp_side[d]}")
