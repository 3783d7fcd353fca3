"""
Watching a reducer merge
========================

With the default parameters the degree gate 6 n^(1/(k+4)) is far above what
small graphs reach, so merges never fire.  A custom configuration with a
tiny gate makes them visible.
"""

from collections import Counter

from girthcolor import LayerConfig, gen_random_bipartite, layered_colorer
from girthcolor.verify import verify_audit

s = gen_random_bipartite(200, 0.05, seed=1)
cfg = LayerConfig.custom_params(200, 2, c=2, delta=1)
r = layered_colorer(s, 2, cfg)
print(r.colors_used, "colors; palette", cfg.palette_size)

# every decision is in the trace
print(Counter(e["event"] for e in r.audit))

# a merge records the H+ balls around the overloaded group and the inner
# bases it created (X and Y unions for radius 0, 1, 2)
for e in r.audit:
    if e["event"] == "merge":
        print(e["layer"], "z =", e["z"], "D1 =", e["D1"], "D2 =", e["D2"], "->", e["bases"])

# the full audit re-derives H+ from the trace and checks every base's
# even-diameter against its layer cap
print(verify_audit(s, r.audit, cfg, "full", coloring=r.assignment).summary())
