"""Odd girth and even-distance via BFS on the bipartite double cover.

A walk of length L from s ends at t with parity L mod 2, so running BFS over
states ``(vertex, parity)`` gives shortest even and odd walk lengths at once.
Shortest odd closed walks are odd cycles, so the odd girth is
``min_v dist((v, 0), (v, 1))``.

The ``oracle_*`` functions answer the same questions by brute force (boolean
matrix powers, one walk length at a time) and exist only to cross-check the
fast paths on small graphs.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

import numpy as np

INF = math.inf

ORACLE_MAX_N = 64


def _adj(g):
    """Adjacency sets from an OnlineGraph, an InstanceStream or a plain list."""
    if hasattr(g, "adj"):
        return g.adj
    if hasattr(g, "events"):
        adj = [set() for _ in range(g.n)]
        for ev in g.events:
            for u in ev.neighbors:
                adj[u].add(ev.vertex)
                adj[ev.vertex].add(u)
        return adj
    return g


def _check_vertex(adj, v):
    if not 0 <= v < len(adj):
        raise KeyError(f"unknown vertex {v}")


def parity_distances(g, source: int) -> tuple[list[float], list[float]]:
    """Shortest even and odd walk lengths from ``source`` to every vertex."""
    adj = _adj(g)
    _check_vertex(adj, source)
    dist = [[INF] * len(adj), [INF] * len(adj)]
    dist[0][source] = 0
    queue = deque([(source, 0)])
    while queue:
        v, p = queue.popleft()
        d = dist[p][v] + 1
        q = 1 - p
        row = dist[q]
        for u in adj[v]:
            if row[u] == INF:
                row[u] = d
                queue.append((u, q))
    return dist[0], dist[1]


def even_distance(g, s: int, t: int) -> float:
    adj = _adj(g)
    _check_vertex(adj, t)
    even, _ = parity_distances(adj, s)
    return even[t]


def even_diameter(g, vertices: Iterable[int]) -> float:
    """Max even-distance over pairs of ``vertices``; walks may leave the set."""
    return even_diameter_witness(g, vertices)[0]


def even_diameter_witness(g, vertices: Iterable[int]) -> tuple[float, tuple[int, int]]:
    """Like :func:`even_diameter` but also returns a pair attaining the maximum."""
    adj = _adj(g)
    members = sorted(set(vertices))
    if not members:
        raise ValueError("even-diameter of an empty set")
    best, pair = 0, (members[0], members[0])
    for i, s in enumerate(members):
        even, _ = parity_distances(adj, s)
        for t in members[i + 1:]:
            if even[t] > best:
                best, pair = even[t], (s, t)
        if best == INF:
            break
    return best, pair


def odd_girth(g) -> float:
    adj = _adj(g)
    if is_bipartite(adj):
        return INF
    n = len(adj)
    best = INF
    for v in range(n):
        # Parity BFS from (v, 0).  An edge x-u with both (x, p) and (u, p)
        # reached closes an odd walk of length dist + dist + 1 through v.  A
        # shortest odd cycle of length L is found this way from each of its
        # vertices before depth (L - 1) / 2, so deeper layers can be skipped.
        dist = ([-1] * n, [-1] * n)
        dist[0][v] = 0
        queue = deque([(v, 0)])
        while queue:
            x, p = queue.popleft()
            d = dist[p][x]
            if 2 * d + 1 >= best:
                break
            same, other = dist[p], dist[1 - p]
            for u in adj[x]:
                if same[u] >= 0 and same[u] + d + 1 < best:
                    best = same[u] + d + 1
                if other[u] < 0:
                    other[u] = d + 1
                    queue.append((u, 1 - p))
        if best == 3:
            break
    return best


def girth(g) -> float:
    """Length of the shortest cycle of any parity."""
    adj = _adj(g)
    # cycles in a bipartite graph are even, which tightens the cut-off
    step = 2 if is_bipartite(adj) else 1
    floor = 2 + step
    best = INF
    for root in range(len(adj)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + step >= best:
                break
            for u in adj[x]:
                if u not in dist:
                    dist[u] = dist[x] + 1
                    parent[u] = x
                    queue.append(u)
                elif parent[x] != u:
                    best = min(best, dist[x] + dist[u] + 1)
        if best == floor:
            break
    return best


def is_bipartite(g) -> bool:
    adj = _adj(g)
    side = [-1] * len(adj)
    for root in range(len(adj)):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for u in adj[x]:
                if side[u] == -1:
                    side[u] = 1 - side[x]
                    queue.append(u)
                elif side[u] == side[x]:
                    return False
    return True


def _adjacency_matrix(adj) -> np.ndarray:
    n = len(adj)
    if n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    a = np.zeros((n, n), dtype=bool)
    for v, nbrs in enumerate(adj):
        for u in nbrs:
            a[v, u] = True
    return a


def _walk_reach(adj):
    """Yield (length, R) where R[s, t] says a walk of exactly that length joins s and t."""
    a = _adjacency_matrix(adj).astype(np.int64)
    n = len(adj)
    reach = np.eye(n, dtype=np.int64)
    for length in range(2 * n + 1):
        yield length, reach > 0
        reach = np.minimum(reach @ a, 1)


def oracle_even_distance(g, s: int, t: int) -> float:
    adj = _adj(g)
    _check_vertex(adj, s)
    _check_vertex(adj, t)
    for length, reach in _walk_reach(adj):
        if length % 2 == 0 and reach[s, t]:
            return length
    return INF


def oracle_odd_girth(g) -> float:
    adj = _adj(g)
    for length, reach in _walk_reach(adj):
        if length % 2 == 1 and reach.diagonal().any():
            return length
    return INF
