"""
Odd-girth thresholds and color budgets
======================================

"""

import math

from girthcolor import LayerConfig, color_budget, g_req
from girthcolor.params import even_diameter_cap

# each reducer layer multiplies the even-diameter cap by 5 and adds 14, and the
# odd girth needed by k layers is the last cap plus 5
for k in range(5):
    print(k, even_diameter_cap(k), g_req(k))

# the budget is 2c + k(36c + 2) with c = ceil(n^(2/(k+4))).  The constants are
# large: k = 1 is still behind k = 0 at n = 10^12
for n in (10**2, 10**4, 10**6, 10**9, 10**12):
    print(f"n=10^{round(math.log10(n)):<2}", [color_budget(k, n) for k in range(4)])

# ceilings are exact; 400^(1/2) is 20, not 21
print(LayerConfig.default(400, 0).c, LayerConfig.default(401, 0).c)

# the palette the colorer actually lays out never exceeds the budget
cfg = LayerConfig.default(1000, 2)
print(cfg.c, cfg.group_block, cfg.terminal_block, cfg.palette_size, cfg.budget)
