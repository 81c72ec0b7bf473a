"""Immutable simple graphs stored as per-vertex adjacency bitsets.

Vertex ``v`` of a graph ``g`` has neighbourhood ``g.adj[v]``, an ``int`` whose
bit ``u`` is set iff ``uv`` is an edge.  Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @property
    def size(self) -> int:
        """Number of edges, e(G)."""
        return sum(nb.bit_count() for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.adj[v] & ((1 << v) - 1))]

    def components(self) -> list[int]:
        """Vertex masks of the connected components, ordered by lowest vertex."""
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            seen = frontier = remaining & -remaining
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~seen
                seen |= frontier
            comps.append(seen)
            remaining &= ~seen
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and self.size == self.n - 1

    def induced(self, mask: int) -> Graph:
        """Subgraph induced by the vertices in ``mask``, reindexed in order."""
        keep = list(_bits(mask))
        return Graph(len(keep), induced_adj(self.adj, keep))

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def induced_adj(adj: tuple[int, ...], keep: list[int]) -> tuple[int, ...]:
    """Adjacency of the subgraph induced by ``keep`` (sorted), reindexed densely."""
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        nb = 0
        for u in _bits(adj[v]):
            i = pos.get(u)
            if i is not None:
                nb |= 1 << i
        out.append(nb)
    return tuple(out)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise ValueError("order must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of the two extremal families.

    ``m == 1`` names the apex family K^k_{n-1,1}; otherwise the split family
    K^k_{n-m,m} with ``k <= m <= n // 2``.
    """

    n: int
    k: int
    m: int = 1

    def validate(self) -> None:
        n, k, m = self.n, self.k, self.m
        if m == 1:
            if n < 2 or not 1 <= k <= n - 1:
                raise ValueError(f"apex family needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
            return
        if n < 4 or not 2 <= m <= n // 2:
            raise ValueError(f"split family needs 2 <= m <= n//2, got n={n}, m={m}")
        if not 1 <= k <= m:
            raise ValueError(f"split family needs 1 <= k <= m, got k={k}, m={m}")

    def build(self) -> Graph:
        self.validate()
        if self.m == 1:
            return apex_family(self.n, self.k)
        return split_family(self.n, self.k, self.m)


def apex_family(n: int, k: int) -> Graph:
    """K^k_{n-1,1}: vertex 0 joined to vertices 1..k of a clique on 1..n-1."""
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"apex family needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, j) for j in range(2, n) for i in range(1, j)]
    return build_graph(n, edges)


def split_family(n: int, k: int, m: int) -> Graph:
    """K^k_{n-m,m}: cliques on 0..n-m-1 and n-m..n-1 joined by k disjoint edges.

    The cross edges are (i, n-m+i) for i < k.  With ``m == 1`` (hence k == 1)
    the result coincides with the apex family.
    """
    if not 1 <= m <= n // 2:
        raise ValueError(f"split family needs 1 <= m <= n//2, got n={n}, m={m}")
    if not 1 <= k <= m:
        raise ValueError(f"split family needs 1 <= k <= m, got k={k}, m={m}")
    big = n - m
    edges = [(i, j) for j in range(big) for i in range(j)]
    edges += [(i, j) for j in range(big, n) for i in range(big, j)]
    edges += [(i, big + i) for i in range(k)]
    return build_graph(n, edges)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError(f"loop edge ({u}, {v})")
    if g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is already an edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def delete_vertex(g: Graph, u: int) -> Graph:
    _check_vertex(g, u)
    return g.induced(((1 << g.n) - 1) & ~(1 << u))


def delete_vertex_pair(g: Graph, u: int, v: int) -> Graph:
    """G - u - v, survivors reindexed in their original order."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("vertex pair must be two distinct vertices")
    return g.induced(((1 << g.n) - 1) & ~(1 << u) & ~(1 << v))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """G on 0..g.n-1 followed by H shifted up by g.n."""
    return Graph(g.n + h.n, g.adj + tuple(nb << g.n for nb in h.adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    adj = [0] * g.n
    for v, nb in enumerate(g.adj):
        new = 0
        for u in _bits(nb):
            new |= 1 << perm[u]
        adj[perm[v]] = new
    return Graph(g.n, tuple(adj))


def operation_I(g: Graph, v2: int, u1: int, u2: int) -> Graph:
    """Move the cross edge u1v2 to u2v2.

    Only the local conditions are checked: u1v2 is an edge, u1 keeps another
    neighbour, and u2 is a distinct vertex not adjacent to v2.  Whether the
    surrounding two-clique layout is valid is the caller's business.
    """
    for v in (v2, u1, u2):
        _check_vertex(g, v)
    if len({v2, u1, u2}) != 3:
        raise ValueError("v2, u1, u2 must be distinct")
    if not g.has_edge(u1, v2):
        raise ValueError(f"u1v2 = ({u1}, {v2}) is not an edge")
    if g.degree(u1) < 2:
        raise ValueError(f"u1 = {u1} has no edge besides u1v2")
    if g.has_edge(u2, v2):
        raise ValueError(f"u2v2 = ({u2}, {v2}) is already an edge")
    return add_edge(delete_edge(g, u1, v2), u2, v2)
