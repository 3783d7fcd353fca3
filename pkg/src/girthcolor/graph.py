"""Online graphs, arrival streams and the plain-text instance format.

Vertices are identified by their arrival position, so vertex ``i`` is the
``i``-th vertex revealed and every edge listed with it points back to an
earlier vertex.  The instance format is::

    # comment lines start with '#'
    n 3
    0 0
    1 1 0
    2 2 0 1

Each body line is ``<id> <deg> <neighbor_1> ... <neighbor_deg>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InstanceFormatError


@dataclass(frozen=True)
class ArrivalEvent:
    vertex: int
    neighbors: tuple[int, ...]

    def __post_init__(self):
        nbrs = tuple(sorted(self.neighbors))
        object.__setattr__(self, "neighbors", nbrs)
        if self.vertex < 0:
            raise InstanceFormatError(f"negative vertex id {self.vertex}")
        for a, b in zip(nbrs, nbrs[1:]):
            if a == b:
                raise InstanceFormatError(f"vertex {self.vertex}: duplicate neighbor {a}")
        for u in nbrs:
            if u == self.vertex:
                raise InstanceFormatError(f"vertex {self.vertex}: self-loop")
            if u < 0 or u > self.vertex:
                raise InstanceFormatError(
                    f"vertex {self.vertex}: forward or dangling neighbor {u}"
                )


@dataclass(frozen=True)
class InstanceStream:
    """The online input: ``n`` arrival events in order."""

    n: int
    events: tuple[ArrivalEvent, ...]

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if self.n != len(self.events):
            raise InstanceFormatError(f"header says n={self.n} but {len(self.events)} events given")
        for i, ev in enumerate(self.events):
            if ev.vertex != i:
                raise InstanceFormatError(f"event {i} carries vertex id {ev.vertex}")

    @classmethod
    def from_back_edges(cls, back_edges: Sequence[Iterable[int]]) -> "InstanceStream":
        events = [ArrivalEvent(i, tuple(nbrs)) for i, nbrs in enumerate(back_edges)]
        return cls(len(events), tuple(events))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "InstanceStream":
        """Build a stream from an undirected edge list, arrival order ``0..n-1``."""
        back = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InstanceFormatError(f"self-loop at {u}")
            lo, hi = min(u, v), max(u, v)
            if lo < 0 or hi >= n:
                raise InstanceFormatError(f"edge ({u}, {v}) out of range")
            back[hi].add(lo)
        return cls.from_back_edges(back)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, ev.vertex) for ev in self.events for u in ev.neighbors]

    @property
    def m(self) -> int:
        return sum(len(ev.neighbors) for ev in self.events)


class OnlineGraph:
    """Graph revealed one vertex at a time.

    ``adj[v]`` is the live neighbor set of ``v`` among revealed vertices;
    :meth:`neighbors` hands out that same set, so copy it if you need a
    frozen view.
    """

    def __init__(self):
        self.adj: list[set[int]] = []

    @property
    def revealed(self) -> int:
        return len(self.adj)

    def __len__(self):
        return len(self.adj)

    def reveal(self, event: ArrivalEvent) -> None:
        if event.vertex != self.revealed:
            raise InstanceFormatError(
                f"out-of-order vertex {event.vertex}, expected {self.revealed}"
            )
        for u in event.neighbors:
            if u >= self.revealed:
                raise InstanceFormatError(f"vertex {event.vertex}: neighbor {u} not revealed")
        self.adj.append(set(event.neighbors))
        for u in event.neighbors:
            self.adj[u].add(event.vertex)

    def neighbors(self, v: int) -> set[int]:
        if not 0 <= v < self.revealed:
            raise KeyError(f"unknown vertex {v}")
        return self.adj[v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.revealed and v in self.adj[u]

    @classmethod
    def from_stream(cls, stream: InstanceStream, upto: int | None = None) -> "OnlineGraph":
        g = cls()
        for ev in stream.events[:upto]:
            g.reveal(ev)
        return g


def load_instance(text: str) -> InstanceStream:
    n = None
    events = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise InstanceFormatError("expected header 'n <N>'", lineno)
            n = _nonneg_int(fields[1], lineno)
            continue
        nums = [_nonneg_int(f, lineno) for f in fields]
        if len(nums) < 2:
            raise InstanceFormatError("expected '<id> <deg> <neighbors...>'", lineno)
        vid, deg, nbrs = nums[0], nums[1], nums[2:]
        if vid != len(events):
            raise InstanceFormatError(f"vertex id {vid} out of order, expected {len(events)}", lineno)
        if deg != len(nbrs):
            raise InstanceFormatError(f"degree {deg} but {len(nbrs)} neighbors listed", lineno)
        if len(events) == n:
            raise InstanceFormatError(f"more than n={n} vertex lines", lineno)
        try:
            events.append(ArrivalEvent(vid, tuple(nbrs)))
        except InstanceFormatError as exc:
            raise InstanceFormatError(str(exc), lineno) from None
    if n is None:
        raise InstanceFormatError("missing header 'n <N>'")
    if len(events) != n:
        raise InstanceFormatError(f"header says n={n} but {len(events)} vertex lines found")
    return InstanceStream(n, tuple(events))


def save_instance(stream: InstanceStream, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {stream.n}")
    for ev in stream.events:
        lines.append(" ".join(map(str, (ev.vertex, len(ev.neighbors), *ev.neighbors))))
    return "\n".join(lines) + "\n"


def _nonneg_int(tok, lineno):
    try:
        value = int(tok)
    except ValueError:
        raise InstanceFormatError(f"not an integer: {tok!r}", lineno) from None
    if value < 0:
        raise InstanceFormatError(f"negative value {value}", lineno)
    return value
