"""Generating-series identities for the Euler characteristics, genus zero.

Run with: python demos/06_generating_series.py   (takes about a minute)
"""

from quotcoh.series import BivariateSeries, closed_form, compare

print("Exact truncated series arithmetic:")
one_minus_q = BivariateSeries(4, 2, {(0, 0): 1, (1, 0): -1})
print("  (1-q)^-1 table:", one_minus_q.inverse().to_table())
print("  round trip:", (one_minus_q * one_minus_q.inverse()).to_table())

print("\nClosed forms, N = 2 and chi(L) = 3:")
for kind in ("wedge", "sym", "dual"):
    print(f"  {kind}: {closed_form(kind, 2, 3, 3, 3).to_table()}")

print("\nComparison with the resolution tables (N=2, deg L = 4, n <= 3):")
for kind in ("wedge", "sym", "dual"):
    comparison = compare(kind, 2, 4, 3)
    print(f"  {kind}: equal on the window = {comparison.equal}")
    for n, row in enumerate(comparison.resolution.to_table()):
        print(f"    q^{n}: {row[:n + 1]}")
