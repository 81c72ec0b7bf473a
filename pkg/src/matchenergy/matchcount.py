"""Exact matching counts m(G, t), the quasi-order on them, and Hosoya index."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .canon import canonical_order
from .graph import Graph, _bits, induced_adj

MATCH_BOUND = 24
BRUTEFORCE_BOUND = 12


@dataclass(frozen=True)
class MatchVector:
    """m(G, 0..n//2) for a graph of order ``order``."""

    order: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.order // 2 + 1:
            raise ValueError(f"expected {self.order // 2 + 1} counts for order {self.order}")
        if self.counts[0] != 1:
            raise ValueError("m(G, 0) must be 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("matching counts are nonnegative")

    @classmethod
    def from_poly(cls, order: int, poly: list[int]) -> MatchVector:
        width = order // 2 + 1
        if any(poly[width:]):
            raise ValueError("polynomial has matchings larger than n // 2")
        return cls(order, tuple(poly[:width]) + (0,) * (width - len(poly)))

    def __getitem__(self, t: int) -> int:
        return self.counts[t] if 0 <= t < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def matching_number(self) -> int:
        """Largest t with m(G, t) > 0."""
        return max(t for t, c in enumerate(self.counts) if c)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.counts])

    @classmethod
    def from_json(cls, text: str, order: int) -> MatchVector:
        return cls(order, tuple(int(s) for s in json.loads(text)))


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _components(adj: tuple[int, ...]) -> list[list[int]]:
    remaining = (1 << len(adj)) - 1
    comps = []
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= adj[v]
            frontier = reach & ~seen
            seen |= frontier
        comps.append(list(_bits(seen)))
        remaining &= ~seen
    return comps


class MatchCounter:
    """Memoized matching generating polynomials, sum_t m(G, t) x^t.

    Connected components are solved separately and multiplied.  A component is
    expanded with m(G) = m(G - uv) + x m(G - u - v) on the edges uv at a
    maximum-degree pivot u, one edge after another until u is isolated, so
    every subproblem is an induced subgraph.  Results are cached under the
    labelled adjacency and under the canonical form; the cache only grows and
    identical keys always map to identical values, so one instance may be
    shared across calls.
    """

    def __init__(self) -> None:
        self._labelled: dict[tuple[int, ...], list[int]] = {}
        self._canonical: dict[tuple[int, ...], list[int]] = {}

    def __len__(self) -> int:
        return len(self._canonical)

    def poly(self, adj: tuple[int, ...]) -> list[int]:
        out = [1]
        for comp in _components(adj):
            if len(comp) == 1:
                continue
            sub = adj if len(comp) == len(adj) else induced_adj(adj, comp)
            out = _mul(out, self._connected(sub))
        return out

    def _connected(self, adj: tuple[int, ...]) -> list[int]:
        n = len(adj)
        if n == 2:
            return [1, 1]
        hit = self._labelled.get(adj)
        if hit is not None:
            return hit
        order = canonical_order(n, adj)
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        canon = tuple(sum(1 << pos[u] for u in _bits(adj[v])) for v in order)
        hit = self._canonical.get(canon)
        if hit is None:
            hit = self._expand(canon)
            self._canonical[canon] = hit
        self._labelled[adj] = hit
        return hit

    def _expand(self, adj: tuple[int, ...]) -> list[int]:
        n = len(adj)
        degs = [nb.bit_count() for nb in adj]
        u = degs.index(max(degs))
        full = (1 << n) - 1
        total = self.poly(induced_adj(adj, list(_bits(full & ~(1 << u)))))
        for v in _bits(adj[u]):
            rest = self.poly(induced_adj(adj, list(_bits(full & ~(1 << u) & ~(1 << v)))))
            if len(rest) + 1 > len(total):
                total += [0] * (len(rest) + 1 - len(total))
            for t, c in enumerate(rest):
                total[t + 1] += c
        return total


def match_vector(g: Graph, cache: MatchCounter | None = None, bound: int = MATCH_BOUND) -> MatchVector:
    if g.n > bound:
        raise ValueError(f"match_vector limited to n <= {bound}, got {g.n}")
    counter = cache if cache is not None else MatchCounter()
    return MatchVector.from_poly(g.n, counter.poly(g.adj))


def match_vector_bruteforce(g: Graph, bound: int = BRUTEFORCE_BOUND) -> MatchVector:
    """Count matchings by listing every matching edge set explicitly."""
    if g.n > bound:
        raise ValueError(f"brute-force oracle limited to n <= {bound}, got {g.n}")
    edges = g.edges()
    counts = [0] * (g.n // 2 + 1)

    def extend(start: int, used: int, size: int) -> None:
        counts[size] += 1
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not used >> u & 1 and not used >> v & 1:
                extend(i + 1, used | 1 << u | 1 << v, size + 1)

    extend(0, 0, 0)
    return MatchVector(g.n, tuple(counts))


def edge_recurrence_check(g: Graph, u: int, v: int, cache: MatchCounter | None = None) -> bool:
    """m(G,t) = m(G-uv,t) + m(G-u-v,t-1) for every t."""
    from .graph import delete_edge, delete_vertex_pair

    cache = cache if cache is not None else MatchCounter()
    whole = match_vector(g, cache)
    minus_edge = match_vector(delete_edge(g, u, v), cache)
    minus_pair = match_vector(delete_vertex_pair(g, u, v), cache)
    return all(whole[t] == minus_edge[t] + minus_pair[t - 1] * (t > 0) for t in range(len(whole)))


def vertex_recurrence_check(g: Graph, u: int, cache: MatchCounter | None = None) -> bool:
    """m(G,t) = m(G-u,t) + sum over neighbours v of m(G-u-v,t-1) for every t."""
    from .graph import delete_vertex, delete_vertex_pair

    cache = cache if cache is not None else MatchCounter()
    whole = match_vector(g, cache)
    minus_u = match_vector(delete_vertex(g, u), cache)
    pairs = [match_vector(delete_vertex_pair(g, u, v), cache) for v in g.neighbors(u)]
    for t in range(len(whole)):
        rhs = minus_u[t] + (sum(p[t - 1] for p in pairs) if t > 0 else 0)
        if whole[t] != rhs:
            return False
    return True


def hosoya_index(mv: MatchVector) -> int:
    return sum(mv.counts)


class QuasiOrder(enum.Enum):
    EQUAL = "equal"
    STRICTLY_BELOW = "strictly_below"
    STRICTLY_ABOVE = "strictly_above"
    INCOMPARABLE = "incomparable"


def quasi_compare(a: MatchVector, b: MatchVector) -> QuasiOrder:
    """Relation of ``a`` to ``b`` under componentwise domination of counts."""
    if a.order != b.order:
        raise ValueError(f"cannot compare graphs of orders {a.order} and {b.order}")
    below = any(x < y for x, y in zip(a.counts, b.counts))
    above = any(x > y for x, y in zip(a.counts, b.counts))
    if below and above:
        return QuasiOrder.INCOMPARABLE
    if below:
        return QuasiOrder.STRICTLY_BELOW
    if above:
        return QuasiOrder.STRICTLY_ABOVE
    return QuasiOrder.EQUAL


@dataclass(frozen=True)
class PolyCoeffs:
    """Matching polynomial coefficients, highest degree (``order``) first."""

    order: int
    coeffs: tuple[int, ...]

    def even_part(self) -> list[int]:
        """Coefficients in y = lambda^2, highest first, with the lambda^(n mod 2) factor removed."""
        return list(self.coeffs[::2])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            deg = self.order - i
            mono = "" if deg == 0 else ("λ" if deg == 1 else f"λ^{deg}")
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append(body if not terms and sign == "+" else f"{sign} {body}" if terms else f"-{body}")
        return " ".join(terms) or "0"


def poly_coeffs(mv: MatchVector) -> PolyCoeffs:
    """sum_t (-1)^t m(G,t) lambda^(n-2t) as a dense coefficient list."""
    coeffs = [0] * (mv.order + 1)
    for t, c in enumerate(mv.counts):
        coeffs[2 * t] = (-1) ** t * c
    return PolyCoeffs(mv.order, tuple(coeffs))
