"""Column indices of partitions and the vanishing certificates they drive.

Run with: python demos/04_partition_indices.py
"""

from quotcoh import double_bundle_expand, kn_index, n_index
from quotcoh.indices import (
    indexed_partitions,
    lemma_triples,
    verify_dual_vanishing,
    verify_sym_vanishing,
    verify_wedge_vanishing,
)
from quotcoh.partitions import part, size, transpose, enumerate_in_box

print("The index: long columns clear the threshold, short ones stay below.")
for lam, n in (((8, 7, 4, 3, 3, 1), 2), ((1, 1, 1), 2), ((1,), 2)):
    rep = n_index(lam, n)
    print(f"  lam={lam}, n={n}: defined={rep.defined}"
          + (f", index={rep.index}" if rep.defined else ""))

print("\nThe wedge-tolerant variant admits two shapes:")
for lam in ((6, 2, 2, 2, 2, 1), (7, 6, 3, 2, 2)):
    rep = kn_index(lam, 1, 3)
    print(f"  lam={lam}: index={rep.index}, shape={rep.shape}")

print("\nCertificates on G(6, 2): every summand lands in the dead window "
      "and vanishes.")
lam = (1, 1, 1)
for k in (0, 1, 2):
    rec = verify_wedge_vanishing(6, 2, lam, k)
    print(f"  wedge k={k}: {len(rec.summands)} summands, ok={rec.ok}")
rec = verify_sym_vanishing(6, 2, (2, 2, 2, 2), 2)
print(f"  sym k=2 on (2,2,2,2): {len(rec.summands)} summands, ok={rec.ok}")
rec = verify_dual_vanishing(7, 2, 1, lam, (1,))
print(f"  dual chain k=(1,) on G(7,2): {len(rec.summands)} summands, "
      f"ok={rec.ok}")

print("\nSupporting inequalities on every contributing triple, (d,n)=(6,2):")
count = 0
for lam, rep in indexed_partitions(6, 2, max_size=10):
    checks = lemma_triples(6, 2, lam)
    count += len(checks)
    assert all(t.ok for t in checks)
print(f"  {count} triples checked, all inequalities hold")

print("\nOptional probe: the upper window bound under the relaxed row-sum")
print("hypothesis alone (wider than the rectangle; recorded, not asserted).")
d, n = 6, 2
holds = fails = 0
for total in range(1, 13):
    for lam in enumerate_in_box(2 * n, d - n + 1, total):
        rep = n_index(lam, n)
        if not rep.defined or lam[0] <= d - n - 1:
            continue
        i = rep.index
        if sum(lam[:i]) > i * (d - n - 1) + i - 1:
            continue
        for gamma in double_bundle_expand(lam, n):
            if part(gamma, i) <= d - n + i - 1:
                holds += 1
            else:
                fails += 1
print(f"  window upper bound: holds for {holds} summands, fails for {fails}")
