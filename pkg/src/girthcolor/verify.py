"""Offline checks for colorings, color budgets and audit traces.

The audit checks rebuild everything they need (bases, Y' sets, the final H+
graph, merge balls) from the trace events and the instance itself, never
from colorer internals.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field

from .graph import InstanceStream, OnlineGraph
from .params import LayerConfig, ceil_pow, color_budget
from .parity import _adj, even_diameter_witness

FULL_AUDIT_MAX_N = 300
CHROMATIC_MAX_N = 20
ASSIGN_EVENTS = ("ff-assign", "gc-assign", "terminal-assign")


@dataclass
class Check:
    name: str
    passed: bool | None  # None: skipped
    detail: str = ""
    witness: object = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "witness": self.witness}


@dataclass
class AuditReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, detail="", witness=None) -> Check:
        check = Check(name, passed, detail, witness)
        self.checks.append(check)
        return check

    def extend(self, other: "AuditReport") -> "AuditReport":
        self.checks.extend(other.checks)
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> str:
        return json.dumps({"ok": self.ok, "checks": [c.to_dict() for c in self.checks]},
                          separators=(",", ":")) + "\n"

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            tag = {True: "PASS", False: "FAIL", None: "SKIP"}[c.passed]
            line = f"[{tag}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            if c.passed is False and c.witness is not None:
                line += f" (witness {json.dumps(c.witness)})"
            lines.append(line)
        return "\n".join(lines)


def verify_proper(stream: InstanceStream, coloring) -> AuditReport:
    coloring = list(coloring)
    if len(coloring) != stream.n or any(c is None for c in coloring):
        raise ValueError(f"coloring covers {len(coloring)} of {stream.n} vertices")
    report = AuditReport()
    for u, v in stream.edges():
        if coloring[u] == coloring[v]:
            report.add("proper", False, f"edge {u}-{v} has both ends colored {coloring[u]}",
                       witness=[u, v])
            return report
    bad = [v for v, c in enumerate(coloring) if not (isinstance(c, int) and c >= 1)]
    if bad:
        report.add("proper", False, f"vertex {bad[0]} has invalid color {coloring[bad[0]]!r}",
                   witness=[bad[0]])
        return report
    report.add("proper", True, f"{stream.m} edges, {len(set(coloring))} colors")
    return report


def first_fit_girth_bound(n: int, girth) -> int | None:
    """``k * ceil(n ** (1/k))`` for the largest ``k`` with ``girth >= 2k + 1``.

    An acyclic graph qualifies for every ``k``, so the smallest bound wins.
    """
    if girth is None or n < 1:
        return None
    if girth == math.inf:
        kmax = max(1, n.bit_length())
        return min(k * ceil_pow(n, 1, k) for k in range(1, kmax + 1))
    k = (int(girth) - 1) // 2
    if k < 1:
        return None
    return k * ceil_pow(n, 1, k)


def run_budget(run, config: LayerConfig | None = None) -> int | None:
    """Color budget that applies to ``run`` (None when there is none)."""
    params = run.params or {}
    if run.algorithm == "first-fit":
        return None
    if params.get("unknown_n"):
        return sum(color_budget(run.k, g) for g in params["guesses"])
    if run.n == 0:
        return 0
    if run.algorithm == "kierstead":
        return 2 * ceil_pow(run.n, 1, 2)
    if config is None:
        config = config_for(run)
    return config.budget


def verify_bounds(stream: InstanceStream, run, config: LayerConfig | None = None,
                  girth=None) -> AuditReport:
    """Compare the colors a run used with its provable budget.

    ``girth`` is the girth promise for First-Fit runs; without one the
    First-Fit check is skipped and only the count is reported.
    """
    if run.promise_violation is not None:
        raise ValueError("run ended in a promise violation; there is no bound to check")
    report = AuditReport()
    used = run.colors_used
    if run.algorithm == "first-fit":
        bound = first_fit_girth_bound(stream.n, girth)
        if bound is None:
            report.add("bound", None, f"first-fit used {used} colors; no girth promise")
        else:
            report.add("bound", used <= bound, f"first-fit used {used} <= {bound}"
                       if used <= bound else f"first-fit used {used} > {bound}",
                       witness=None if used <= bound else [used, bound])
        return report
    budget = run_budget(run, config)
    ok = used <= budget
    report.add("bound", ok, f"{run.algorithm} used {used} colors, budget {budget}",
               witness=None if ok else [used, budget])
    if run.algorithm in ("kierstead", "layered") and not (run.params or {}).get("unknown_n") \
            and run.n > 0:
        cfg = config or config_for(run)
        ok = run.max_color <= cfg.palette_size
        report.add("palette", ok, f"max color {run.max_color}, palette {cfg.palette_size}",
                   witness=None if ok else [run.max_color, cfg.palette_size])
    return report


def config_for(run) -> LayerConfig | dict[int, LayerConfig] | None:
    """The layer configuration a run used; a dict by epoch for unknown-n runs."""
    params = run.params or {}
    if run.algorithm == "first-fit":
        return None
    k = run.k or 0
    if params.get("unknown_n"):
        return {e: LayerConfig.default(g, k) for e, g in enumerate(params["guesses"])}
    if "c" in params:
        return LayerConfig.from_dict(params)
    return LayerConfig.default(run.n, k)


def _check_trace_vertices(stream, trace):
    for e in trace:
        for key in ("vertex", "witness", "first_vertex"):
            v = e.get(key)
            if v is not None and not 0 <= v < stream.n:
                raise ValueError(f"trace mentions vertex {v}, instance has {stream.n}")
        for u in e.get("members", ()):
            if not 0 <= u < stream.n:
                raise ValueError(f"trace base mentions vertex {u}, instance has {stream.n}")


def verify_audit(stream: InstanceStream, trace: list[dict], config=None, level: str = "basic",
                 coloring=None, full_max_n: int = FULL_AUDIT_MAX_N) -> AuditReport:
    """Check the structural invariants recorded in ``trace``.

    ``config`` is a :class:`LayerConfig`, a ``{epoch: LayerConfig}`` dict for
    unknown-n runs, or ``None`` for First-Fit traces.  ``level="full"`` adds
    the even-diameter check of every base (only when ``n <= full_max_n``).
    """
    if level not in ("basic", "full"):
        raise ValueError("level must be 'basic' or 'full'")
    _check_trace_vertices(stream, trace)
    report = AuditReport()
    _check_assignments(stream, trace, coloring, report)
    if config is None:
        return report
    configs = config if isinstance(config, dict) else {0: config}
    epochs = defaultdict(list)
    for e in trace:
        epochs[e.get("epoch", 0)].append(e)
    graph = OnlineGraph.from_stream(stream)
    do_full = level == "full" and stream.n <= full_max_n
    sub = defaultdict(list)
    for epoch, events in sorted(epochs.items()):
        if epoch not in configs:
            raise ValueError(f"trace has epoch {epoch} but no config for it")
        cfg = configs[epoch]
        layered = _LayerReplay(events, cfg, graph)
        for name, result in layered.checks(do_full):
            sub[name].append((epoch, result))
    for name in ("base-budget", "merge-size", "z-spacing", "merge-balls", "frozen-groups",
                 "kierstead-bases", "even-diameter"):
        results = sub.get(name, [])
        if name == "even-diameter" and not do_full:
            why = "level basic" if level == "basic" else f"n = {stream.n} > {full_max_n}"
            report.add(name, None, f"skipped ({why})")
            continue
        failures = [(ep, r) for ep, r in results if not r[0]]
        if failures:
            ep, (_, detail, witness) = failures[0]
            if len(configs) > 1:
                detail = f"epoch {ep}: {detail}"
            report.add(name, False, detail, witness)
        else:
            details = "; ".join(r[1] for _, r in results if r[1])
            report.add(name, True, details)
    return report


def _check_assignments(stream, trace, coloring, report):
    seen = {}
    for e in trace:
        if e["event"] in ASSIGN_EVENTS:
            v = e["vertex"]
            if v in seen:
                report.add("assign-coverage", False, f"vertex {v} assigned twice", witness=[v])
                return
            seen[v] = e["color"]
    expected = len(coloring) if coloring is not None else stream.n
    missing = [v for v in range(expected) if v not in seen]
    if missing:
        report.add("assign-coverage", False, f"vertex {missing[0]} never assigned",
                   witness=[missing[0]])
        return
    order = [e["vertex"] for e in trace if e["event"] in ASSIGN_EVENTS]
    late = next((b for a, b in zip(order, order[1:]) if b < a), None)
    if late is not None:
        report.add("assign-coverage", False, f"vertex {late} assigned out of arrival order",
                   witness=[late])
        return
    if coloring is not None:
        for v, c in enumerate(coloring):
            if seen[v] != c:
                report.add("assign-coverage", False,
                           f"vertex {v}: trace says {seen[v]}, coloring says {c}", witness=[v])
                return
    report.add("assign-coverage", True, f"{len(seen)} vertices assigned once each")


class _LayerReplay:
    """Per-layer view of one engine's trace."""

    def __init__(self, events, cfg: LayerConfig, graph: OnlineGraph):
        self.cfg = cfg
        self.graph = graph
        self.events = events
        self.bases = defaultdict(dict)        # layer -> index -> (members, event)
        self.merges = defaultdict(list)       # layer -> merge events in order
        self.y_prime = defaultdict(dict)      # layer -> vertex -> group
        for e in events:
            kind, layer = e["event"], e.get("layer")
            if kind == "base-added":
                self.bases[layer][e["index"]] = (frozenset(e["members"]), e)
            elif kind == "merge":
                self.merges[layer].append(e)
            elif kind == "group-query" and e["step"] in ("group-coloring", "merge"):
                self.y_prime[layer][e["vertex"]] = e["group"]

    def checks(self, full: bool):
        yield "base-budget", self._base_budget()
        yield "merge-size", self._merge_size()
        hplus = {layer: self._final_hplus(layer) for layer in range(self.cfg.k)}
        yield "z-spacing", self._z_spacing(hplus)
        yield "merge-balls", self._merge_balls(hplus)
        yield "frozen-groups", self._frozen()
        yield "kierstead-bases", self._kierstead_bases()
        if full:
            yield "even-diameter", self._even_diameter()

    def _base_budget(self):
        counts = []
        for layer in range(self.cfg.k + 1):
            count = len(self.bases[layer])
            limit = self.cfg.base_budget(layer)
            if count > limit:
                return False, f"layer {layer}: {count} bases > {limit}", [layer, count, limit]
            counts.append(f"{count}/{limit}")
        stray = sorted(set(self.bases) - set(range(self.cfg.k + 1)))
        if stray:
            return False, f"bases at unknown layer {stray[0]}", [stray[0]]
        return True, "layer bases " + " ".join(counts), None

    def _merge_size(self):
        for layer in range(1, self.cfg.k + 1):
            made = set()
            for m in self.merges[layer - 1]:
                if len(m["bases"]) > 6:
                    return False, f"layer {layer - 1} merge at z={m['z']} made " \
                                  f"{len(m['bases'])} bases", [layer - 1, m["z"]]
                made.update(m["bases"])
            orphans = sorted(set(self.bases[layer]) - made)
            if orphans:
                return False, f"layer {layer} base {orphans[0]} not produced by a merge", \
                    [layer, orphans[0]]
            if len(self.bases[layer]) > 6 * len(self.merges[layer - 1]):
                return False, f"layer {layer}: more than 6 bases per merge", [layer]
        total = sum(len(self.merges[layer]) for layer in range(self.cfg.k))
        return True, f"{total} merges", None

    def _final_hplus(self, layer):
        group_of = self.y_prime[layer]
        adj = defaultdict(set)
        for v, i in group_of.items():
            for u in self.graph.adj[v]:
                j = group_of.get(u)
                if j is not None and j != i:
                    adj[i].add(j)
                    adj[j].add(i)
        return adj

    @staticmethod
    def _bfs(adj, src, limit):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if dist[x] == limit:
                continue
            for y in adj.get(x, ()):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def _z_spacing(self, hplus):
        for layer in range(self.cfg.k):
            zs = [m["z"] for m in self.merges[layer]]
            if len(set(zs)) != len(zs):
                return False, f"layer {layer}: repeated Z entry", [layer]
            for a_idx, a in enumerate(zs):
                near = self._bfs(hplus[layer], a, 2)
                for b in zs[a_idx + 1:]:
                    if b in near:
                        return False, f"layer {layer}: Z entries {a} and {b} at H+ distance " \
                                      f"{near[b]}", [layer, a, b, near[b]]
        return True, "", None

    def _merge_balls(self, hplus):
        for layer in range(self.cfg.k):
            for m in self.merges[layer]:
                dist = self._bfs(hplus[layer], m["z"], 2)
                balls = [sorted(x for x, d in dist.items() if d == r) for r in range(3)]
                if balls != [m["D0"], m["D1"], m["D2"]]:
                    return False, f"layer {layer}: ball around z={m['z']} changed after merge", \
                        [layer, m["z"]]
                if not len(m["D1"]) > self.cfg.delta:
                    return False, f"layer {layer}: merge at z={m['z']} with degree " \
                                  f"{len(m['D1'])} <= delta", [layer, m["z"]]
        return True, "", None

    def _frozen(self):
        frozen = defaultdict(set)
        for e in self.events:
            layer = e.get("layer")
            if e["event"] == "merge":
                frozen[layer].update(e["D0"], e["D1"], e["D2"])
            elif e["event"] == "group-query" and e["step"] in ("group-coloring", "merge"):
                if e["group"] in frozen[layer]:
                    return False, f"layer {layer}: vertex {e['vertex']} joined frozen Y'_" \
                                  f"{e['group']}", [layer, e["vertex"], e["group"]]
        return True, "", None

    def _kierstead_bases(self):
        c = self.cfg.c
        owner = {}
        for idx, (members, _) in sorted(self.bases[0].items()):
            if len(members) < c:
                return False, f"layer-0 base {idx} has {len(members)} < c = {c} members", \
                    [idx, len(members)]
            for u in members:
                if u in owner:
                    return False, f"layer-0 bases {owner[u]} and {idx} share vertex {u}", \
                        [owner[u], idx, u]
                owner[u] = idx
        count = len(self.bases[0])
        if count * c > self.cfg.n:
            return False, f"{count} layer-0 bases exceed n / c = {self.cfg.n}/{c}", [count]
        return True, f"{len(self.bases[0])} disjoint bases of size >= {c}", None

    def _even_diameter(self):
        caps = self.cfg.d_stars
        worst = []
        for layer in range(self.cfg.k + 1):
            top = 0
            for idx, (members, _) in sorted(self.bases[layer].items()):
                diam, pair = even_diameter_witness(self.graph, members)
                if diam > caps[layer]:
                    return False, f"layer {layer} base {idx}: even-diameter {diam} > " \
                                  f"{caps[layer]}", [layer, idx, list(pair),
                                                     None if diam == math.inf else diam]
                top = max(top, diam)
            worst.append(f"{top}<={caps[layer]}")
        return True, "max per layer " + " ".join(worst), None


def brute_chromatic(g, max_n: int = CHROMATIC_MAX_N) -> int:
    """Exact chromatic number by backtracking (small graphs only)."""
    adj = _adj(g)
    n = len(adj)
    if n > max_n:
        raise ValueError(f"brute_chromatic limited to n <= {max_n}, got {n}")
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    for k in range(1, n + 1):
        if _colorable(adj, order, k):
            return k
    return n


def _colorable(adj, order, k) -> bool:
    color = {}

    def place(i, used):
        if i == len(order):
            return True
        v = order[i]
        taken = {color[u] for u in adj[v] if u in color}
        # A fresh color is interchangeable with any other unused one.
        for c in range(min(used + 1, k)):
            if c not in taken:
                color[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                del color[v]
        return False

    return place(0, 0)
