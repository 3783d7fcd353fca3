"""
First-Fit against its worst bipartite input
===========================================

"""

# a_i sees every earlier b_j and b_i every earlier a_j, so First-Fit has to
# open a new color for each pair even though two colors would do
import math

from girthcolor import first_fit, kierstead, gen_ff_adversary
from girthcolor.verify import brute_chromatic

s = gen_ff_adversary(3)
print(first_fit(s).assignment)            # [1, 1, 2, 2, 3, 3]
print(brute_chromatic(s))                 # 2

# the gap grows linearly: m colors for 2m vertices
for m in (10, 50, 200):
    s = gen_ff_adversary(m)
    print(f"m={m:>3}  n={s.n:>3}  first-fit={first_fit(s).colors_used:>3}  "
          f"kierstead={kierstead(s).colors_used:>3}  2*ceil(sqrt n)={2 * math.isqrt(s.n - 1) + 2}")

# Kierstead's front end runs First-Fit on ceil(sqrt n) colors only; a vertex
# that finds them all taken opens a base (its neighborhood) and is colored by
# base index instead
r = kierstead(gen_ff_adversary(200))
bases = [e for e in r.audit if e["event"] == "base-added"]
print(len(bases), "bases, sizes", sorted({len(e["members"]) for e in bases}))
