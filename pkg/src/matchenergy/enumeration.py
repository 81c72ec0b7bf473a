"""Isomorph-free generation of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_certificate
from .graph import Graph
from .graph6 import decode

ENUMERATION_MAX = 8
BRUTEFORCE_MAX = 6


@lru_cache(maxsize=None)
def _connected_certs(n: int) -> tuple[bytes, ...]:
    """Certificates of connected graphs on n vertices, in generation order.

    Every connected graph has a non-cut vertex, so each class on n vertices is
    a connected class on n - 1 vertices plus one vertex joined to a nonempty
    subset.  Parents are visited in certificate order and a child is kept only
    when its certificate is reached for the first time.
    """
    if n == 1:
        return (canonical_certificate(Graph(1, (0,))),)
    seen: set[bytes] = set()
    out = []
    for parent_cert in sorted(_connected_certs(n - 1)):
        parent = decode(parent_cert.decode("ascii"))
        for subset in range(1, 1 << (n - 1)):
            adj = tuple(nb | (subset >> v & 1) << (n - 1) for v, nb in enumerate(parent.adj))
            child = Graph(n, adj + (subset,))
            cert = canonical_certificate(child)
            if cert not in seen:
                seen.add(cert)
                out.append(cert)
    return tuple(out)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonical-form representative per class of connected graphs on n vertices."""
    if not 1 <= n <= ENUMERATION_MAX:
        raise ValueError(f"built-in enumeration covers 1 <= n <= {ENUMERATION_MAX}, got {n}")
    for cert in _connected_certs(n):
        yield decode(cert.decode("ascii"))


def labelled_classes(n: int, connected_only: bool = True) -> set[bytes]:
    """Certificates of all graphs on n vertices found by scanning every labelled graph."""
    if n > BRUTEFORCE_MAX:
        raise ValueError(f"labelled scan limited to n <= {BRUTEFORCE_MAX}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    out = set()
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if bits >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(n, tuple(adj))
        if connected_only and not g.is_connected():
            continue
        out.add(canonical_certificate(g))
    return out


@lru_cache(maxsize=None)
def _tree_certs(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (canonical_certificate(Graph(1, (0,))),)
    seen: set[bytes] = set()
    out = []
    for parent_cert in sorted(_tree_certs(n - 1)):
        parent = decode(parent_cert.decode("ascii"))
        for v in range(n - 1):
            adj = list(parent.adj)
            adj[v] |= 1 << (n - 1)
            cert = canonical_certificate(Graph(n, tuple(adj) + (1 << v,)))
            if cert not in seen:
                seen.add(cert)
                out.append(cert)
    return tuple(out)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on n vertices (leaf augmentation)."""
    if not 1 <= n <= 16:
        raise ValueError(f"tree enumeration covers 1 <= n <= 16, got {n}")
    for cert in _tree_certs(n):
        yield decode(cert.decode("ascii"))
