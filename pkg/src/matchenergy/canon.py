"""Canonical certificates for isomorphism rejection and memo keys.

The search individualizes vertices of the first non-singleton cell of an
equitable ordered partition, refines, and keeps the leaf whose relabelled
adjacency code is lexicographically smallest.  Leaves with equal codes yield
automorphisms, which prune sibling subtrees in the same orbit and let the
search jump back to the level where the two leaf paths diverged.
"""

from __future__ import annotations

from .graph import Graph, _bits
from .graph6 import encode

CERTIFICATE_BOUND = 16


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            split = True
            for key in keys:
                out.append(tuple(v for v in cell if sig[v] == key))
        cells = out
        if not split:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    # Bit order matches graph6: columns j = 1..n-1, rows i < j.
    code = 0
    for j in range(1, len(order)):
        nb = adj[order[j]]
        for i in range(j):
            code = code << 1 | (nb >> order[i] & 1)
    return code


def _orbit_roots(cell: tuple[int, ...], gens: list[list[int]]) -> dict[int, int]:
    parent = {v: v for v in cell}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gamma in gens:
        for v in cell:
            w = gamma[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def canonical_order(n: int, adj: tuple[int, ...]) -> list[int]:
    """Vertex order whose relabelled graph is the canonical form.

    ``order[i]`` is the original vertex placed at canonical position ``i``.
    No size bound; callers needing one enforce it.
    """
    if n <= 1:
        return list(range(n))
    best_code = None
    best_order: list[int] = []
    best_path: list[int] = []
    gens: list[list[int]] = []
    path: list[int] = []

    def search(cells: list[tuple[int, ...]], depth: int):
        nonlocal best_code, best_order, best_path
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best_code is None or code < best_code:
                best_code, best_order, best_path = code, order, list(path)
                return None
            if code > best_code:
                return None
            gamma = [0] * n
            for a, b in zip(best_order, order):
                gamma[a] = b
            gens.append(gamma)
            if len(best_path) == len(path) and all(gamma[a] == b for a, b in zip(best_path, path)):
                return next(i for i, (a, b) in enumerate(zip(best_path, path)) if a != b)
            return None

        cell = cells[target]
        fixed = path[:depth]
        explored_roots: set[int] = set()
        for v in cell:
            stab = [g for g in gens if all(g[x] == x for x in fixed)]
            roots = _orbit_roots(cell, stab)
            if roots[v] in explored_roots:
                continue
            explored_roots.add(roots[v])
            child = cells[:target] + [(v,), tuple(x for x in cell if x != v)] + cells[target + 1:]
            path.append(v)
            jump = search(_refine(adj, child), depth + 1)
            path.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    search(_refine(adj, [tuple(range(n))]), 0)
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g.n, g.adj)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for v in range(g.n):
        adj[pos[v]] = sum(1 << pos[u] for u in _bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def certificate_unbounded(g: Graph) -> bytes:
    return encode(canonical_form(g)).encode("ascii")


def canonical_certificate(g: Graph, bound: int = CERTIFICATE_BOUND) -> bytes:
    """graph6 bytes of the canonical form; equal iff the graphs are isomorphic."""
    if g.n > bound:
        raise ValueError(f"certificates limited to n <= {bound}, got {g.n}")
    return certificate_unbounded(g)
