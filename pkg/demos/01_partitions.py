"""Partitions, dominant weights and dimension counts.

Run with: python demos/01_partitions.py
"""

from quotcoh import (
    dominates,
    enumerate_in_box,
    transpose,
    union,
    weyl_dim,
)
from quotcoh.partitions import pad, size

print("A partition and its transpose (rows become columns):")
lam = (8, 7, 4, 3, 3, 1)
print(f"  {lam}  ->  {transpose(lam)}")

print("\nDominance order compares prefix sums of equal-size partitions:")
for a, b in (((2,), (1, 1)), ((3, 2, 1), (2, 2, 2)), ((2, 2, 2), (3, 2, 1))):
    print(f"  {a} dominates {b}?  {dominates(a, b)}")

print("\nThe union interleaves rows and transposes to an entrywise sum:")
a, b = (3, 1), (2, 2)
print(f"  {a} union {b} = {union(a, b)}")
print(f"  transpose check: {transpose(union(a, b))} vs "
      f"{tuple(x + y for x, y in zip(pad(transpose(a), 3), pad(transpose(b), 3)))}")

print("\nPartitions of size 4 inside a 3 x 3 box, largest first:")
for lam in enumerate_in_box(3, 3, 4):
    print(f"  {lam}")

print("\nWeyl dimension formula for GL(d) highest weights:")
for w, d in (((2, 1, 0), 3), ((1, 1), 2), ((3, 0, 0, 0), 4), ((1, 0, -1), 3)):
    print(f"  dim S_{w} (d={d}) = {weyl_dim(w, d)}")

print("\nExterior powers have binomial dimensions:")
d = 5
for k in range(d + 1):
    w = (1,) * k + (0,) * (d - k)
    print(f"  wedge^{k} C^{d}: {weyl_dim(w, d)}")

print("\nBox enumeration counts lattice paths: total over all sizes in a "
      "4 x 3 box =",
      sum(len(enumerate_in_box(4, 3, s)) for s in range(13)))
