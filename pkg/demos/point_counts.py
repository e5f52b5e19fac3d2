"""Compare the closed formula against brute-force counts over finite fields.

The coefficient c_d of the generating series, multiplied by |GL_d| and a
power of -q^(1/2), must be the number of F_p-points of R(J_I, d).

Run: python3 demos/point_counts.py
"""

from __future__ import annotations

from dihedraldt.dtengine import a_series_closed
from dihedraldt.fqoracle import coefficient_check
from dihedraldt.powerseries import degree_simplex
from dihedraldt.rootsystem import build

rs = build(3)
series = a_series_closed(rs, 3)
print(f"{'d':14s} {'P(q)':24s} p=2      p=3")
for d in degree_simplex(rs.n, 3, start=1):
    reps = [coefficient_check(rs, d, p, series=series) for p in (2, 3)]
    poly = " + ".join(f"{c}q^{k}" for k, c in reps[0].P)
    marks = "  ".join(f"{r.count:4d} {'ok' if r.passed else 'XX'}" for r in reps)
    print(f"{str(d):14s} {poly:24s} {marks}")

# the smallest case with a negative coefficient: two lines crossing in a point
rs4 = build(4)
rep = coefficient_check(rs4, (1, 0, 1, 0, 0), 5, series=a_series_closed(rs4, 2))
print("\nD^_4, d = e_0 + e_2:", rep.P, "count over F_5 =", rep.count)
