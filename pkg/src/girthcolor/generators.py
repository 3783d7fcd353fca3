"""Deterministic instance generators.

Randomness comes from :class:`SplitMix64` so that a (generator, seed) pair
names the same file on every platform:

* ``next_u64``: ``state += 0x9E3779B97F4A7C15``, then the usual
  xor-shift-multiply finalizer (shifts 30, 27, 31; multipliers
  ``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB``), all mod 2**64.
* ``uniform``: top 53 bits of ``next_u64`` divided by 2**53.
* ``below(m)``: rejection sampling on ``next_u64`` against the largest
  multiple of ``m`` below 2**64, then ``x % m``.
* ``shuffle``: Fisher-Yates from the last index down, swapping ``i`` with
  ``below(i + 1)``.
"""

from __future__ import annotations

from .graph import InstanceStream

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, m: int) -> int:
        if m < 1:
            raise ValueError("below() needs m >= 1")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def gen_ff_adversary(m: int) -> InstanceStream:
    """Bipartite worst case for First-Fit: ``a_1, b_1, ..., a_m, b_m``.

    ``a_i`` sees ``b_j`` and ``b_i`` sees ``a_j`` for every ``j < i``, so
    First-Fit gives both ``a_i`` and ``b_i`` color ``i``.  Vertex ``a_i`` is
    id ``2(i-1)`` and ``b_i`` is id ``2(i-1)+1``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    back = []
    for i in range(m):
        back.append([2 * j + 1 for j in range(i)])
        back.append([2 * j for j in range(i)])
    return InstanceStream.from_back_edges(back)


def gen_odd_cycle(g: int) -> InstanceStream:
    if g < 3 or g % 2 == 0:
        raise ValueError(f"odd cycle length must be odd and >= 3, got {g}")
    back = [[]] + [[i - 1] for i in range(1, g)]
    back[-1] = [0, g - 2]
    return InstanceStream.from_back_edges(back)


def gen_subdivided_clique(m: int, t: int) -> InstanceStream:
    """``K_m`` with each edge replaced by a path of ``t`` edges (``t`` odd).

    Every cycle runs through at least three branch vertices, so girth and odd
    girth are both ``3t``.  Branch vertices ``0..m-1`` arrive first, then the
    interior of each path ``a -> b`` (pairs in lexicographic order), walking
    from ``a`` towards ``b``.
    """
    if m < 3:
        raise ValueError("m must be >= 3")
    if t < 1 or t % 2 == 0:
        raise ValueError("t must be odd and >= 1")
    back: list[list[int]] = [[] for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            if t == 1:
                back[b].append(a)
                continue
            prev = a
            for step in range(t - 1):
                v = len(back)
                nbrs = [prev]
                if step == t - 2:
                    nbrs.append(b)
                back.append(nbrs)
                prev = v
    return InstanceStream.from_back_edges(back)


def gen_random_bipartite(n: int, p: float, seed: int) -> InstanceStream:
    """Even ids on one side, odd ids on the other; each cross pair with probability ``p``.

    Pairs are drawn for ``v = 0..n-1`` and then ``u = 0..v-1`` of the other
    parity, one ``uniform()`` draw per pair.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be in [0, 1]")
    rng = SplitMix64(seed)
    back = []
    for v in range(n):
        back.append([u for u in range(v) if (u - v) % 2 and rng.uniform() < p])
    return InstanceStream.from_back_edges(back)


def reorder(stream: InstanceStream, seed: int | None) -> InstanceStream:
    """Replay ``stream`` in a seeded random arrival order; ``seed=None`` keeps it."""
    if seed is None:
        return stream
    order = SplitMix64(seed).shuffle(list(range(stream.n)))
    new_id = {old: new for new, old in enumerate(order)}
    adj: list[set[int]] = [set() for _ in range(stream.n)]
    for u, v in stream.edges():
        adj[u].add(v)
        adj[v].add(u)
    back = [[new_id[u] for u in adj[old] if new_id[u] < new] for new, old in enumerate(order)]
    return InstanceStream.from_back_edges(back)


KINDS = ("ff-adversary", "odd-cycle", "subdivided-clique", "random-bipartite")


def generate(kind: str, *, m: int | None = None, g: int | None = None, t: int | None = None,
             n: int | None = None, p: float | None = None, seed: int = 0,
             order: str = "given") -> InstanceStream:
    """Build an instance from a generator spec (the CLI's ``gen`` options)."""
    def need(name, value):
        if value is None:
            raise ValueError(f"--kind {kind} needs --{name}")
        return value

    if kind == "ff-adversary":
        stream = gen_ff_adversary(need("m", m))
    elif kind == "odd-cycle":
        stream = gen_odd_cycle(need("g", g))
    elif kind == "subdivided-clique":
        stream = gen_subdivided_clique(need("m", m), need("t", t))
    elif kind == "random-bipartite":
        stream = gen_random_bipartite(need("n", n), need("p", p), seed)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    if order == "random":
        stream = reorder(stream, seed)
    elif order != "given":
        raise ValueError(f"order must be 'given' or 'random', not {order!r}")
    return stream


def guarantees(kind: str, *, m=None, g=None, t=None, **_) -> dict:
    """Structural facts the generator promises, for reporting."""
    if kind == "ff-adversary":
        return {"bipartite": True, "odd_girth": "inf", "first_fit_colors_given_order": m}
    if kind == "odd-cycle":
        return {"odd_girth": g}
    if kind == "subdivided-clique":
        return {"girth": 3 * t, "odd_girth": 3 * t}
    if kind == "random-bipartite":
        return {"bipartite": True, "odd_girth": "inf"}
    return {}
