"""Coxeter transformation, roots, and tubes of the affine D_r quiver.

Run: python3 demos/root_system_tour.py [r]
"""

from __future__ import annotations

import sys

import numpy as np

from dihedraldt.rootsystem import RealRoot, build, exceptional_orbits, positive_roots, tube_quasisimples

r = int(sys.argv[1]) if len(sys.argv) > 1 else 5
rs = build(r)
print(f"D^_{r}: arrows {list(rs.quiver.arrows)}")
print("delta =", rs.delta.tolist())
print("Coxeter matrix T (tau on K-theory):")
print(rs.coxeter)

print("\ntau on the basis vectors:")
for k in range(rs.n):
    e = np.zeros(rs.n, dtype=np.int64)
    e[k] = 1
    print(f"  e_{k} -> {rs.tau(e).tolist()}")

N = int(rs.delta.sum())
print(f"\npositive roots and Sigma-pair sums of degree <= {N}:")
for d, cls in positive_roots(rs, N):
    print(f"  {d}  {cls}")

print("\nparity-one real roots are exactly the tau-orbits of P_i, I_i for i in {0,1,r-1,r}:",
      exceptional_orbits(rs, 12) == {d for d, c in positive_roots(rs, 12)
                                     if isinstance(c, RealRoot) and c.p == 1})

R1, R2, R3 = tube_quasisimples(rs)
print("tubes:", R1, R2, R3, sep="\n  ")
