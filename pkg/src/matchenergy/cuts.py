"""Edge cuts and edge connectivity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, _bits

ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class CutWitness:
    """The edge cut [S, V - S] of a graph of order ``n``."""

    n: int
    side: frozenset[int]
    size: int

    @property
    def trivial(self) -> bool:
        return min(len(self.side), self.n - len(self.side)) == 1

    @classmethod
    def of(cls, g: Graph, side) -> CutWitness:
        side = frozenset(side)
        if not side or len(side) >= g.n or not all(0 <= v < g.n for v in side):
            raise ValueError("cut side must be a nonempty proper vertex subset")
        return cls(g.n, side, cut_size(g, sum(1 << v for v in side)))


def cut_size(g: Graph, mask: int) -> int:
    """Number of edges with exactly one endpoint in ``mask``."""
    return sum((g.adj[v] & ~mask).bit_count() for v in _bits(mask))


def _max_flow(g: Graph, s: int, t: int, limit: int) -> tuple[int, int]:
    """Unit-capacity s-t max flow, stopping once ``limit`` is reached.

    Returns the flow value and the mask of vertices reachable from ``s`` in
    the final residual graph (the source side of a minimum cut when the
    flow stopped below ``limit``).
    """
    n = g.n
    flow = [[0] * n for _ in range(n)]
    value = 0
    while True:
        parent = {s: s}
        seen = 1 << s
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            fx = flow[x]
            for y in _bits(g.adj[x] & ~seen):
                if fx[y] < 1:
                    parent[y] = x
                    seen |= 1 << y
                    queue.append(y)
        if t not in parent:
            return value, seen
        y = t
        while y != s:
            x = parent[y]
            flow[x][y] += 1
            flow[y][x] -= 1
            y = x
        value += 1
        if value >= limit:
            return value, 0


def _small_side(n: int, mask: int) -> int:
    full = (1 << n) - 1
    size = mask.bit_count()
    if size > n - size or (2 * size == n and not mask & 1):
        return full & ~mask
    return mask


def edge_connectivity(g: Graph) -> tuple[int, CutWitness]:
    """kappa'(G) with a minimum cut whose side has at most n // 2 vertices.

    Runs n-1 unit-capacity flows from vertex 0, seeded with the trivial cut of
    a minimum-degree vertex.  A disconnected graph gets kappa' = 0 and the
    smallest component as its (empty) cut side.
    """
    if g.n < 2:
        raise ValueError("edge connectivity needs n >= 2")
    comps = g.components()
    if len(comps) > 1:
        side = min(comps, key=lambda c: (c.bit_count(), c & -c))
        side = _small_side(g.n, side)
        return 0, CutWitness(g.n, frozenset(_bits(side)), 0)

    degs = g.degrees()
    best = min(degs)
    best_side = 1 << degs.index(best)
    for t in range(1, g.n):
        value, reach = _max_flow(g, 0, t, best)
        if value < best:
            best, best_side = value, reach
    side = _small_side(g.n, best_side)
    return best, CutWitness(g.n, frozenset(_bits(side)), best)


def all_min_cut_sides(g: Graph, bound: int = ENUMERATION_BOUND) -> list[CutWitness]:
    """Every minimum edge cut, found by enumerating vertex subsets.

    Each cut is reported once through its side with at most n // 2 vertices
    (containing vertex 0 when both sides have n / 2).  Sorted by side size,
    then lexicographically.
    """
    if g.n > bound:
        raise ValueError(f"subset enumeration limited to n <= {bound}, got {g.n}")
    if g.n < 2:
        raise ValueError("cuts need n >= 2")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    found: list[tuple[int, tuple[int, ...]]] = []
    best = None
    for r in range(1, g.n // 2 + 1):
        for side in combinations(range(g.n), r):
            if 2 * r == g.n and side[0] != 0:
                continue
            size = cut_size(g, sum(1 << v for v in side))
            if best is None or size < best:
                best, found = size, []
            if size == best:
                found.append((r, side))
    return [CutWitness(g.n, frozenset(side), best) for _, side in found]


def has_trivial_min_cut(g: Graph) -> bool:
    """True iff some vertex's incident edges form a minimum cut."""
    return g.min_degree == edge_connectivity(g)[0]
