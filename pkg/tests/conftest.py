import itertools

import pytest

from girthcolor.generators import SplitMix64
from girthcolor.graph import InstanceStream, OnlineGraph

ACCEPTANCE_LINES = []


def petersen_stream():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return InstanceStream.from_edges(10, outer + spokes + inner)


def cycle_stream(n):
    return InstanceStream.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def random_stream(n, p, seed):
    rng = SplitMix64(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.uniform() < p]
    return InstanceStream.from_edges(n, edges)


def graph_of(stream):
    return OnlineGraph.from_stream(stream)


@pytest.fixture
def petersen():
    return graph_of(petersen_stream())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def group_stream(delta, seed, groups=12, length=60):
    """A random group-coloring call sequence whose final H has max degree <= delta.

    Each call names a group and some of its H-neighbors that already hold
    vertices, which is what an embedding caller can observe.
    """
    rng = SplitMix64(seed)
    nbrs = {g: set() for g in range(1, groups + 1)}
    pairs = [(a, b) for a in range(1, groups + 1) for b in range(a + 1, groups + 1)]
    rng.shuffle(pairs)
    for a, b in pairs:
        if len(nbrs[a]) < delta and len(nbrs[b]) < delta and rng.uniform() < 0.5:
            nbrs[a].add(b)
            nbrs[b].add(a)
    seen = set()
    calls = []
    for _ in range(length):
        g = 1 + rng.below(groups)
        adj = {j for j in sorted(nbrs[g]) if j in seen and rng.uniform() < 0.7}
        calls.append((g, adj))
        seen.add(g)
    return calls
