"""Online group coloring with at most ``Delta**2 + 2`` colors.

Every group keeps a current color and the set of colors it has ever used.
An arriving vertex takes its group's current color unless some neighboring
group has used that color before, in which case the group moves to the
smallest color unused by all of its neighbors.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable

from .errors import PromiseViolation


class GroupColoring:
    """State of the group coloring solver.

    ``delta`` is the degree promise (a real number, or ``None`` to skip the
    check).  Groups are created the first time they are mentioned, with
    current color 1 and used set ``{1}``.  The neighbor graph ``H`` is built
    from the ``adjacent_groups`` the caller supplies on each arrival.
    """

    def __init__(self, delta=None):
        self.delta = delta
        self.current: dict[Hashable, int] = {}
        self.used: dict[Hashable, set[int]] = {}
        self.adj: dict[Hashable, set[Hashable]] = {}
        self.max_color = 0

    def _touch(self, group):
        if group not in self.current:
            self.current[group] = 1
            self.used[group] = {1}
            self.adj[group] = set()

    def color_vertex(self, group, adjacent_groups: Iterable[Hashable] = ()) -> int:
        adjacent_groups = set(adjacent_groups)
        if group in adjacent_groups:
            raise PromiseViolation(f"group {group!r} listed as adjacent to itself")
        self._touch(group)
        for j in adjacent_groups:
            self._touch(j)
            self.adj[group].add(j)
            self.adj[j].add(group)
        nbrs = self.adj[group]
        if self.delta is not None and not len(nbrs) <= self.delta:
            raise PromiseViolation(
                f"group {group!r} has {len(nbrs)} neighboring groups, above delta={self.delta}"
            )
        blocked = set().union(*(self.used[j] for j in nbrs))
        if self.current[group] in blocked:
            color = 1
            while color in blocked:
                color += 1
            self.current[group] = color
            self.used[group].add(color)
        color = self.current[group]
        self.max_color = max(self.max_color, color)
        return color

    def max_color_used(self) -> int:
        return self.max_color

    def neighbors(self, group) -> set:
        return self.adj.get(group, set())
