"""Top-level online colorers.

All colorers read an :class:`~girthcolor.graph.InstanceStream` one arrival
at a time and return a :class:`RunResult`.  The layered colorer is a
First-Fit front end with ``c`` colors feeding a chain of ``k`` reducers and
one terminal subroutine; ``k = 0`` is Kierstead's algorithm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import PromiseViolation
from .graph import ArrivalEvent, InstanceStream
from .params import LayerConfig, color_budget, g_req  # noqa: F401  (re-exported)
from .subroutine import ReducerSubroutine, TerminalSubroutine

ALGORITHMS = ("first-fit", "kierstead", "layered")


@dataclass
class RunResult:
    algorithm: str
    k: int | None
    n: int
    assignment: list[int]
    audit: list[dict] = field(default_factory=list)
    promise_violation: dict | None = None
    params: dict | None = None

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))

    @property
    def max_color(self) -> int:
        return max(self.assignment, default=0)

    @property
    def complete(self) -> bool:
        return self.promise_violation is None and len(self.assignment) == self.n

    def to_dict(self) -> dict:
        d = {
            "algorithm": self.algorithm,
            "k": self.k,
            "n": self.n,
            "colors_used": self.colors_used,
            "max_color": self.max_color,
            "assignment": list(self.assignment),
            "promise_violation": self.promise_violation,
        }
        if self.params is not None:
            d["params"] = self.params
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    def audit_jsonl(self) -> str:
        return "".join(json.dumps(e, separators=(",", ":")) + "\n" for e in self.audit)

    @classmethod
    def from_dict(cls, d: dict, audit: list[dict] | None = None) -> "RunResult":
        return cls(d["algorithm"], d.get("k"), d["n"], list(d["assignment"]),
                   audit or [], d.get("promise_violation"), d.get("params"))


def read_audit_jsonl(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def first_fit(stream: InstanceStream) -> RunResult:
    colors: list[int] = []
    audit = []
    for ev in stream.events:
        used = {colors[u] for u in ev.neighbors}
        color = 1
        while color in used:
            color += 1
        colors.append(color)
        audit.append({"event": "ff-assign", "layer": None, "vertex": ev.vertex, "color": color})
    return RunResult("first-fit", None, stream.n, colors, audit)


class LayeredEngine:
    """One instance of the layered colorer over its own palette block.

    Callers feed arrivals through :meth:`arrive`, passing only back-edges to
    vertices this engine colored itself.
    """

    def __init__(self, config: LayerConfig, offset: int = 0, trace: list | None = None):
        self.config = config
        self.offset = offset
        self.trace = [] if trace is None else trace
        self.colors: dict[int, int] = {}
        cfg = config
        inner = TerminalSubroutine(cfg.r_stars[cfg.k], cfg.d_stars[cfg.k],
                                   palette_offset=offset + cfg.terminal_offset,
                                   layer=cfg.k, trace=self.trace)
        self.layers = [inner]
        for level in reversed(range(cfg.k)):
            inner = ReducerSubroutine(cfg.r_stars[level], cfg.d_stars[level], cfg.delta, inner,
                                      palette_offset=offset + cfg.group_offset(level),
                                      palette_size=cfg.group_block, layer=level,
                                      trace=self.trace)
            self.layers.insert(0, inner)
        self.root = inner

    def arrive(self, v: int, nbrs: Iterable[int]) -> int:
        nbrs = sorted(nbrs)
        used = {self.colors[u] for u in nbrs}
        lo = self.offset
        for color in range(lo + 1, lo + self.config.c + 1):
            if color not in used:
                self.colors[v] = color
                self.trace.append({"event": "ff-assign", "layer": None, "vertex": v,
                                   "color": color})
                return color
        base = self.root.adjacent_base(nbrs)
        if base is None:
            base = self.root.add_base(nbrs, source="neighborhood", witness=v)
        color = self.root.color_query(v, nbrs, base)
        for u in nbrs:
            if self.colors[u] == color:
                raise PromiseViolation(f"color {color} already used by a neighbor",
                                       vertex=v, neighbor=u)
        self.colors[v] = color
        return color


def _violation(exc: PromiseViolation, vertex: int) -> dict:
    d = exc.to_dict()
    if d["vertex"] is None:
        d["vertex"] = vertex
    return d


def layered_colorer(stream: InstanceStream, k: int, config: LayerConfig | None = None,
                    algorithm: str = "layered") -> RunResult:
    if stream.n == 0:
        return RunResult(algorithm, k, 0, [], [])
    if config is None:
        config = LayerConfig.default(stream.n, k)
    elif config.k != k or config.n != stream.n:
        raise ValueError("config does not match stream size or k")
    engine = LayeredEngine(config)
    colors: list[int] = []
    violation = None
    for ev in stream.events:
        try:
            colors.append(engine.arrive(ev.vertex, ev.neighbors))
        except PromiseViolation as exc:
            violation = _violation(exc, ev.vertex)
            break
    params = config.to_dict() if config.custom else None
    return RunResult(algorithm, k, stream.n, colors, engine.trace, violation, params)


def kierstead(stream: InstanceStream) -> RunResult:
    """Kierstead's algorithm: First-Fit on ``ceil(sqrt(n))`` colors plus one color per base."""
    return layered_colorer(stream, 0, algorithm="kierstead")


def unknown_n_wrapper(events: Iterable[ArrivalEvent] | InstanceStream, algorithm: str = "layered",
                      k: int = 0, n0: int = 4) -> RunResult:
    """Run ``algorithm`` without knowing ``n`` by doubling a guess.

    Epoch ``j`` runs a fresh engine configured for ``n0 * 2**j`` vertices on
    its own palette block and sees only the vertices that arrived during the
    epoch; earlier vertices are colored from other blocks, so they never
    conflict.  An epoch ends once it has colored as many vertices as its
    guess.  Colors used never exceed the sum of the per-epoch budgets.
    """
    if algorithm == "kierstead":
        k = 0
    elif algorithm != "layered":
        raise ValueError(f"unknown-n wrapper supports kierstead and layered, not {algorithm!r}")
    if n0 < 1:
        raise ValueError("n0 must be >= 1")
    if isinstance(events, InstanceStream):
        events = events.events

    trace: list[dict] = []
    colors: list[int] = []
    guesses: list[int] = []
    engine = None
    offset = 0
    count = 0
    violation = None
    for ev in events:
        if ev.vertex != len(colors):
            raise ValueError(f"out-of-order vertex {ev.vertex}")
        if engine is None or count == guesses[-1]:
            if engine is not None:
                offset += engine.config.palette_size
            guess = n0 * 2 ** len(guesses)
            guesses.append(guess)
            engine = LayeredEngine(LayerConfig.default(guess, k), offset, trace=[])
            count = 0
            trace.append({"event": "restart", "layer": None, "epoch": len(guesses) - 1,
                          "guess": guess, "offset": offset, "first_vertex": ev.vertex})
        mark = len(engine.trace)
        try:
            color = engine.arrive(ev.vertex, [u for u in ev.neighbors if u in engine.colors])
            for u in ev.neighbors:
                if colors[u] == color:
                    raise PromiseViolation(f"color {color} already used by a neighbor",
                                           vertex=ev.vertex, neighbor=u)
        except PromiseViolation as exc:
            violation = _violation(exc, ev.vertex)
            break
        finally:
            for e in engine.trace[mark:]:
                trace.append({**e, "epoch": len(guesses) - 1})
        colors.append(color)
        count += 1
    params = {"unknown_n": True, "n0": n0, "guesses": guesses}
    n = len(colors) + (violation is not None)
    return RunResult(algorithm, k, n, colors, trace, violation, params)


def wrapper_budget(k: int, guesses: Iterable[int]) -> int:
    return sum(color_budget(k, g) for g in guesses)


def run(stream: InstanceStream, algorithm: str, k: int = 0, config: LayerConfig | None = None,
        unknown_n: bool = False, n0: int = 4) -> RunResult:
    """Dispatch by algorithm name."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if algorithm == "first-fit":
        return first_fit(stream)
    if unknown_n:
        result = unknown_n_wrapper(stream.events, algorithm, k, n0)
        result.n = stream.n
        return result
    if algorithm == "kierstead":
        return kierstead(stream)
    return layered_colorer(stream, k, config)
