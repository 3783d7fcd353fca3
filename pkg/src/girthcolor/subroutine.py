"""The (r*, d*)-subroutine and its two solvers.

A subroutine receives two kinds of events: *base additions* (a vertex set of
even-diameter at most ``d_star``; at most ``r_star`` of them) and *coloring
queries* (a vertex ``v`` joins group ``i``, promised adjacent to base
``X_i``).  Bases are frozen snapshots taken when they are added.

:class:`TerminalSubroutine` colors every member of group ``i`` with color
``i``.  :class:`ReducerSubroutine` forwards what it can to an inner
subroutine, runs group coloring on the rest, and when one group meets too
many others it merges the radius-0/1/2 neighborhood into new inner bases.

Both append plain ``dict`` events to a shared ``trace`` list; see
``verify.py`` for the checks that read them back.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from .errors import BudgetViolation, PromiseViolation
from .groupcolor import GroupColoring


class _Bases:
    """Frozen bases plus a vertex -> base indices lookup."""

    def __init__(self, r_star, d_star, layer, trace):
        if d_star < 2 or d_star % 2:
            raise ValueError(f"d_star must be an even integer >= 2, got {d_star}")
        self.r_star = r_star
        self.d_star = d_star
        self.layer = layer
        self.trace = [] if trace is None else trace
        self.bases: list[frozenset[int]] = []
        self.bases_of: dict[int, list[int]] = {}
        self.groups: list[set[int]] = []

    @property
    def base_limit(self) -> int:
        return math.ceil(self.r_star)

    def __len__(self):
        return len(self.bases)

    def base(self, index: int) -> frozenset[int]:
        return self.bases[index - 1]

    def add_base(self, members: Iterable[int], **info) -> int:
        members = frozenset(members)
        if not members:
            raise ValueError("a base must be non-empty")
        if len(self.bases) + 1 > self.base_limit:
            raise BudgetViolation(
                f"layer {self.layer}: base {len(self.bases) + 1} exceeds budget "
                f"ceil(r*) = {self.base_limit}"
            )
        self.bases.append(members)
        self.groups.append(set())
        index = len(self.bases)
        for u in members:
            self.bases_of.setdefault(u, []).append(index)
        self.trace.append({"event": "base-added", "layer": self.layer, "index": index,
                           "members": sorted(members), **info})
        return index

    def adjacent_base(self, nbrs: Iterable[int]) -> int | None:
        """Lowest index of a base containing one of ``nbrs``."""
        best = None
        for u in nbrs:
            idx = self.bases_of.get(u)
            if idx and (best is None or idx[0] < best):
                best = idx[0]
        return best

    def _check_query(self, v, nbrs, index):
        if not 1 <= index <= len(self.bases):
            raise ValueError(f"layer {self.layer}: no base {index}")
        base = self.bases[index - 1]
        if not any(u in base for u in nbrs):
            raise ValueError(f"layer {self.layer}: vertex {v} is not adjacent to base {index}")

    def audit_events(self) -> list[dict]:
        """Events this instance emitted, in order."""
        return [e for e in self.trace if e.get("layer") == self.layer]


class TerminalSubroutine(_Bases):
    """Color group ``i`` with local color ``i``; sound when odd girth >= d_star + 5."""

    def __init__(self, r_star, d_star, palette_offset=0, layer=0, trace=None):
        super().__init__(r_star, d_star, layer, trace)
        self.palette_offset = palette_offset
        self.group_of: dict[int, int] = {}

    @property
    def palette_size(self) -> int:
        return self.base_limit

    def color_query(self, v: int, nbrs: Sequence[int], index: int) -> int:
        self._check_query(v, nbrs, index)
        for u in nbrs:
            if self.group_of.get(u) == index:
                raise PromiseViolation(
                    f"layer {self.layer}: edge inside group {index} (odd girth below "
                    f"{self.d_star + 5})", vertex=v, neighbor=u)
        self.group_of[v] = index
        self.groups[index - 1].add(v)
        color = self.palette_offset + index
        self.trace.append({"event": "terminal-assign", "layer": self.layer, "vertex": v,
                           "base": index, "color": color})
        return color


class ReducerSubroutine(_Bases):
    """Reduce the (r*, d*)-subroutine to the (6 r*/delta, 5 d* + 14)-subroutine ``inner``.

    ``palette_offset``/``palette_size`` bound the block used by the group
    coloring; ``inner`` owns a disjoint block.
    """

    def __init__(self, r_star, d_star, delta, inner, palette_offset=0, palette_size=None,
                 layer=0, trace=None):
        super().__init__(r_star, d_star, layer, trace)
        self.delta = delta
        self.inner = inner
        self.palette_offset = palette_offset
        if palette_size is None:
            sq = delta.squared() if hasattr(delta, "squared") else delta * delta
            palette_size = math.floor(sq) + 2
        self.palette_size = palette_size
        self.gc = GroupColoring(delta)
        self.y_prime: list[set[int]] = []
        self.y_prime_group: dict[int, int] = {}
        self.gc_group: dict[int, int] = {}
        self.hplus: list[set[int]] = []
        self.z: list[int] = []

    def add_base(self, members: Iterable[int], **info) -> int:
        index = super().add_base(members, **info)
        self.y_prime.append(set())
        self.hplus.append(set())
        return index

    def hplus_neighbors(self, group: int) -> set[int]:
        return self.hplus[group - 1]

    def color_query(self, v: int, nbrs: Sequence[int], index: int) -> int:
        self._check_query(v, nbrs, index)
        self.groups[index - 1].add(v)

        # Step 1: anything touching an inner base is the inner subroutine's job.
        b = self.inner.adjacent_base(nbrs)
        if b is not None:
            self.trace.append({"event": "group-query", "layer": self.layer, "vertex": v,
                               "group": index, "step": "inner"})
            return self.inner.color_query(v, nbrs, b)

        # Step 2: join Y'_index and update H+ before looking at the degree.
        yp = self.y_prime[index - 1]
        for u in nbrs:
            if u in yp:
                raise PromiseViolation(
                    f"layer {self.layer}: edge inside group {index} (odd girth below "
                    f"{self.d_star + 5})", vertex=v, neighbor=u)
        yp.add(v)
        self.y_prime_group[v] = index
        mine = self.hplus[index - 1]
        for u in nbrs:
            j = self.y_prime_group.get(u)
            if j is not None and j != index:
                mine.add(j)
                self.hplus[j - 1].add(index)

        if len(mine) <= self.delta:
            self.trace.append({"event": "group-query", "layer": self.layer, "vertex": v,
                               "group": index, "step": "group-coloring"})
            adjacent = {self.gc_group[u] for u in nbrs if u in self.gc_group}
            local = self.gc.color_vertex(index, adjacent)
            if local > self.palette_size:
                raise BudgetViolation(
                    f"layer {self.layer}: group color {local} outside block of "
                    f"{self.palette_size}", vertex=v)
            self.gc_group[v] = index
            color = self.palette_offset + local
            self.trace.append({"event": "gc-assign", "layer": self.layer, "vertex": v,
                               "group": index, "local": local, "color": color})
            return color

        self.trace.append({"event": "group-query", "layer": self.layer, "vertex": v,
                           "group": index, "step": "merge"})
        balls = self._balls(index)
        self.z.append(index)
        created = []
        for radius, ball in enumerate(balls):
            xs = set().union(*(self.bases[j - 1] for j in ball))
            ys = set().union(*(self.y_prime[j - 1] for j in ball))
            for kind, members in (("X", xs), ("Y", ys)):
                if members:
                    created.append(self.inner.add_base(
                        members, source="merge", origin_layer=self.layer, z=index,
                        radius=radius, kind=kind))
        self.trace.append({"event": "merge", "layer": self.layer, "vertex": v, "z": index,
                           "D0": sorted(balls[0]), "D1": sorted(balls[1]),
                           "D2": sorted(balls[2]), "bases": created})
        b = self.inner.adjacent_base(nbrs)
        assert b == created[0], "merged X-base must be the first inner base v touches"
        return self.inner.color_query(v, nbrs, b)

    def _balls(self, center: int) -> tuple[set[int], set[int], set[int]]:
        d0 = {center}
        d1 = set(self.hplus[center - 1])
        d2 = set()
        for j in d1:
            d2 |= self.hplus[j - 1]
        d2 -= d0 | d1
        return d0, d1, d2
