"""
Coloring without knowing n
==========================

"""

from girthcolor import gen_ff_adversary, kierstead, run
from girthcolor.colorers import wrapper_budget

# the wrapper guesses n0, 2 n0, 4 n0, ...; each guess gets a fresh colorer on
# its own palette block, so earlier colors never clash with later ones
s = gen_ff_adversary(100)
r = run(s, "kierstead", unknown_n=True, n0=4)
print(r.params["guesses"])
print(r.colors_used, "colors with n hidden,", kierstead(s).colors_used, "with n known")
print("budget for the executed guesses:", wrapper_budget(0, r.params["guesses"]))

for e in r.audit:
    if e["event"] == "restart":
        print(e)
