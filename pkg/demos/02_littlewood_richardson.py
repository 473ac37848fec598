"""Littlewood-Richardson coefficients, Pieri products and Cauchy terms.

Run with: python demos/02_littlewood_richardson.py
"""

from quotcoh import (
    cauchy_wedge,
    double_bundle_expand,
    lr_coefficient,
    lr_expand_tensor,
    pieri_sym,
    pieri_wedge,
    weyl_dim,
)
from quotcoh.partitions import pad

print("A single coefficient, counted by lattice-word skew tableaux:")
print("  c^(3,2,1)_{(2,1),(2,1)} =", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))

print("\nThe full tensor square of S_(2,1):")
expansion = lr_expand_tensor((2, 1), (2, 1))
for gamma, c in expansion.items():
    print(f"  {gamma}: {c}")
d = 5
total = sum(c * weyl_dim(pad(g, d), d) for g, c in expansion.items())
print(f"  dimension check at d={d}: {total} = {weyl_dim(pad((2, 1), d), d)}^2")

print("\nS_lam of a doubled rank-n bundle collects pieces with <= n rows:")
for lam, n in (((2,), 2), ((1, 1), 1), ((2, 1), 2)):
    print(f"  lam={lam}, n={n}: {double_bundle_expand(lam, n)}")

print("\nCauchy pairs indexing an exterior power of a tensor product:")
for ell in range(4):
    print(f"  ell={ell}: {cauchy_wedge(ell, 3, 2)}")

print("\nPieri rules on weights, including negative entries:")
print("  S_(1,0) . wedge^1:      ", pieri_wedge((1, 0), 1))
print("  S_(1,0) . wedge^1 dual: ", pieri_wedge((1, 0), 1, dualized=True))
print("  S_(1,0) . Sym^2:        ", pieri_sym((1, 0), 2))
print("  S_(0,0) . Sym^1 dual:   ", pieri_sym((0, 0), 1, dualized=True))
