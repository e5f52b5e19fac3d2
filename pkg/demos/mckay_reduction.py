"""Build the McKay quiver of D_2l and reduce it to the affine D quiver.

Run: python3 demos/mckay_reduction.py [l]
"""

from __future__ import annotations

import sys

from dihedraldt.mckay import extract_reduction, irreps, mckay_quiver, tensor_with_V

ell = int(sys.argv[1]) if len(sys.argv) > 1 else 3

print(f"irreducibles of D_2l for l = {ell}:", ", ".join(f"{L}({L.dim})" for L in irreps(ell)))
for L in irreps(ell):
    parts = " + ".join(f"{m}*{K}" if m > 1 else str(K) for K, m in sorted(tensor_with_V(L, ell).items()))
    print(f"  {L} (x) V = {parts}")

M = mckay_quiver(ell)
print(f"\nMcKay quiver: {sum(a.multiplicity for a in M.arrows)} arrows")
for a in M.arrows:
    print(f"  {a.source} -> {a.target}  [{a.color}]")

red = extract_reduction(M)
print(f"\nremoving I (black, right to left) and I' (blue) leaves D^_{red.quiver.r}:")
print("  arrows", list(red.quiver.arrows))
print("  Sigma ", red.sigma)
print(f"  {red.triangles} potential triangles, each cut exactly once by I and by I'")
