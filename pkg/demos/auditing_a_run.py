"""
Auditing a run and catching a bad trace
=======================================

"""

from girthcolor import gen_odd_cycle, layered_colorer, LayerConfig
from girthcolor.verify import verify_audit, verify_bounds, verify_proper

s = gen_odd_cycle(31)                     # odd girth 31 >= 29, valid for k = 1
r = layered_colorer(s, 1)
cfg = LayerConfig.default(31, 1)
print(verify_proper(s, r.assignment).summary())
print(verify_bounds(s, r).summary())
print(verify_audit(s, r.audit, cfg, "full").summary())

# slip a base whose members are far apart (even-distance 16) into the trace
bad = list(r.audit) + [{"event": "base-added", "layer": 0, "index": 99, "members": [0, 15]}]
report = verify_audit(s, bad, cfg, "full")
print(report["even-diameter"].detail, report["even-diameter"].witness)

# a triangle is far below the k = 1 promise; with a one-color front end the
# colorer reports it instead of emitting a bad color
tri = gen_odd_cycle(3)
r = layered_colorer(tri, 1, LayerConfig.custom_params(3, 1, c=1, delta=6))
print(r.assignment, r.promise_violation)
