"""
Hunting for equality cases
==========================

tightness_search maximises lo/hi for one link of a chain. A best value
near 1 means the bound is attained (or approached); a value well below 1
suggests slack, or a harder landscape. A value above 1 would be a
counterexample.
"""

from ipx.catalog import evaluate, get_entry
from ipx.search import tightness_search

for eid in ("CS", "BUZANO", "RICHARD", "SELBERG", "FUJII_KUBO", "PROP_25", "TH_22", "LUPU_REFINEMENT"):
    e = get_entry(eid)
    for link in range(len(e.links)):
        r = tightness_search(eid, link, dim=2, budget=100, seed=42)
        print(f"{eid:<16} link {link}: best {r.best_tightness:.6f} after {r.iterations} steps")

# the argmax is an ordinary case dict, so it can be checked on its own
r = tightness_search("RICHARD", 0, dim=3, budget=200, seed=42)
again = evaluate("RICHARD", r.argmax)
print("\nRICHARD argmax:", {k: v.round(4) for k, v in r.argmax.items()})
print("re-evaluated tightness:", again.tightness)
