"""
Fuzzing the registry
====================

Every catalog entry is a chain e_0 <= e_1 <= ... of real expressions. The
fuzzer draws admissible random inputs (orthogonality, unit norms,
parameter regions) and checks every link. The excess column is how far
the worst link overshoots the tolerance (negative means it never did);
tightness is the largest ratio lo/hi that was seen.
"""

import time

from ipx.catalog import feasible_dims, fuzz, list_entries

n = 2000
dims = range(1, 9)

print(f"{'entry':<20} {'samples':>8} {'max_excess':>12} {'tightness':>10}  ok")
t0 = time.perf_counter()
for e in list_entries():
    s = fuzz(e.id, n, feasible_dims(e.id, dims), seed=1)
    print(f"{e.id:<20} {s.samples:>8} {s.max_excess:>12.2e} {s.max_tightness:>10.6f}  {s.passed}")
print(f"done in {time.perf_counter() - t0:.1f}s")

# a deliberately false chain, to see what a failure looks like
s = fuzz("DEBUG_FALSE", 100, [3], seed=1)
print("\nDEBUG_FALSE:", s)
