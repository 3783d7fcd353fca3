"""Online coloring of graphs with large odd girth.

First-Fit, Kierstead's algorithm and the k-layer colorer, plus instance
generators, parity-BFS metrics with brute-force oracles, and offline audits
of colorings and algorithm traces.
"""

from .colorers import (RunResult, first_fit, kierstead, layered_colorer, run,
                       unknown_n_wrapper)
from .errors import BudgetViolation, InstanceFormatError, PromiseViolation
from .generators import (SplitMix64, gen_ff_adversary, gen_odd_cycle, gen_random_bipartite,
                         gen_subdivided_clique, reorder)
from .graph import ArrivalEvent, InstanceStream, OnlineGraph, load_instance, save_instance
from .groupcolor import GroupColoring
from .params import LayerConfig, Power, color_budget, even_diameter_cap, g_req
from .parity import (even_diameter, even_distance, girth, is_bipartite, odd_girth,
                     oracle_even_distance, oracle_odd_girth)
from .subroutine import ReducerSubroutine, TerminalSubroutine
from .verify import (AuditReport, brute_chromatic, verify_audit, verify_bounds,
                     verify_proper)

__version__ = "0.1.0"
