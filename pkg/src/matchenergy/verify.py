"""Exhaustive and randomized checks of the extremal statements.

The central sweep partitions the connected graphs of order n by edge
connectivity k and confirms that the apex graph K^k_{n-1,1} is the unique
maximizer of both matching energy and Hosoya index in every class.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .canon import canonical_certificate
from .cuts import all_min_cut_sides, edge_connectivity
from .energy import matching_energy_roots
from .enumeration import ENUMERATION_MAX, enumerate_connected
from .graph import Graph, apex_family, build_graph, delete_edge, operation_I, split_family
from .graph6 import decode, encode
from .matchcount import MatchCounter, MatchVector, QuasiOrder, hosoya_index, match_vector, quasi_compare

ME_SEPARATION = 1e-7
CORPUS_MAX = 10

_BELOW_OR_EQUAL = (QuasiOrder.STRICTLY_BELOW, QuasiOrder.EQUAL)


@dataclass(frozen=True)
class GraphRecord:
    cert: str
    n: int
    kappa: int
    min_degree: int
    mv: MatchVector

    @property
    def graph(self) -> Graph:
        return decode(self.cert)

    @property
    def z(self) -> int:
        return hosoya_index(self.mv)


_worker_cache: Optional[MatchCounter] = None


def _record(g6: str) -> tuple[str, int, int, int, tuple[int, ...]]:
    global _worker_cache
    if _worker_cache is None:
        _worker_cache = MatchCounter()
    g = decode(g6)
    cert = canonical_certificate(g).decode("ascii")
    kappa = edge_connectivity(g)[0] if g.n >= 2 else 0
    return cert, g.n, kappa, g.min_degree, match_vector(g, _worker_cache).counts


def graph_records(graphs: Iterable[Graph], workers: int = 1) -> list[GraphRecord]:
    """Per-graph invariants, sorted by certificate regardless of worker count."""
    lines = [encode(g) for g in graphs]
    if workers > 1 and len(lines) > 1:
        chunk = max(1, len(lines) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_record, lines, chunksize=chunk))
    else:
        rows = [_record(line) for line in lines]
    out = {}
    for cert, n, kappa, delta, counts in rows:
        out.setdefault(cert, GraphRecord(cert, n, kappa, delta, MatchVector(n, counts)))
    return [out[c] for c in sorted(out)]


def classify(graphs: Iterable[Graph]) -> dict[int, list[Graph]]:
    """Group connected graphs by edge connectivity."""
    out: dict[int, list[Graph]] = {}
    for g in graphs:
        if g.n < 2 or not g.is_connected():
            raise ValueError(f"classify expects connected graphs of order >= 2, got {encode(g)}")
        out.setdefault(edge_connectivity(g)[0], []).append(g)
    return dict(sorted(out.items()))


@dataclass
class SweepReport:
    n: int
    k: int
    class_size: int
    me_max_certs: list[str]
    z_max_certs: list[str]
    expected_cert: str
    unique: bool
    counterexample: Optional[str]
    quasi_dominated: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "class_size": self.class_size,
            "me_max_certs": self.me_max_certs,
            "z_max_certs": self.z_max_certs,
            "expected_cert": self.expected_cert,
            "unique": self.unique,
            "counterexample": self.counterexample,
            "quasi_dominated": self.quasi_dominated,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _MECache:
    def __init__(self) -> None:
        self._values: dict[str, float] = {}

    def __call__(self, rec: GraphRecord) -> float:
        if rec.cert not in self._values:
            self._values[rec.cert] = matching_energy_roots(rec.mv).value
        return self._values[rec.cert]


def me_maximizers(records: list[GraphRecord], me=None) -> list[GraphRecord]:
    """Maximizers of matching energy.

    The exact quasi-order decides whenever the candidate and incumbent are
    comparable; otherwise root-route energies decide, and candidates within
    ``ME_SEPARATION`` of the incumbent are kept as ties rather than dropped.
    """
    me = me or _MECache()
    best = [records[0]]
    for rec in records[1:]:
        rel = quasi_compare(rec.mv, best[0].mv)
        if rel is QuasiOrder.INCOMPARABLE:
            diff = me(rec) - me(best[0])
            if diff > ME_SEPARATION:
                best = [rec]
            elif diff >= -ME_SEPARATION:
                best.append(rec)
        elif rel is QuasiOrder.STRICTLY_ABOVE:
            best = [rec]
        elif rel is QuasiOrder.EQUAL:
            best.append(rec)
    return best


def z_maximizers(records: list[GraphRecord]) -> list[GraphRecord]:
    top = max(r.z for r in records)
    return [r for r in records if r.z == top]


def _report(n: int, k: int, members: list[GraphRecord], cache: MatchCounter) -> SweepReport:
    if not members:
        raise RuntimeError(f"class G({n},{k}) is empty")
    apex = apex_family(n, k)
    expected = canonical_certificate(apex).decode("ascii")
    apex_mv = match_vector(apex, cache)
    me_certs = [r.cert for r in me_maximizers(members)]
    z_certs = [r.cert for r in z_maximizers(members)]
    unique = me_certs == z_certs == [expected]
    counter = None
    if not unique:
        counter = next((c for c in me_certs + z_certs if c != expected), expected)
    dominated = all(quasi_compare(r.mv, apex_mv) is QuasiOrder.STRICTLY_BELOW
                    for r in members if r.cert != expected)
    return SweepReport(n, k, len(members), me_certs, z_certs, expected, unique, counter, dominated)


def _builtin_graphs(n: int) -> list[Graph]:
    if not 2 <= n <= ENUMERATION_MAX:
        raise ValueError(f"built-in enumeration covers 2 <= n <= {ENUMERATION_MAX}; supply a corpus")
    return list(enumerate_connected(n))


def sweep(n: int, ks: Optional[Iterable[int]] = None, graphs: Optional[Iterable[Graph]] = None,
          workers: int = 1) -> list[SweepReport]:
    """Sweep reports for the requested edge-connectivity classes of order n.

    ``graphs`` may be an external corpus; graphs of other orders or
    disconnected ones are ignored and isomorphic repeats collapse.
    """
    if graphs is None:
        pool = _builtin_graphs(n)
    else:
        if not 2 <= n <= CORPUS_MAX:
            raise ValueError(f"corpus sweeps cover 2 <= n <= {CORPUS_MAX}")
        pool = [g for g in graphs if g.n == n and g.is_connected()]
    ks = list(range(1, n)) if ks is None else sorted(set(ks))
    for k in ks:
        if not 1 <= k <= n - 1:
            raise ValueError(f"k must lie in 1..{n - 1}, got {k}")
    records = graph_records(pool, workers)
    cache = MatchCounter()
    return [_report(n, k, [r for r in records if r.kappa == k], cache) for k in ks]


def verify_theorem(n: int, k: int, graphs: Optional[Iterable[Graph]] = None, workers: int = 1) -> SweepReport:
    return sweep(n, [k], graphs, workers)[0]


_record_cache: dict[int, list[GraphRecord]] = {}


def _class_records(n: int) -> list[GraphRecord]:
    if n not in _record_cache:
        _record_cache[n] = graph_records(_builtin_graphs(n))
    return _record_cache[n]


def trivial_cut_failures(n: int, k: int) -> Iterator[str]:
    """Members of G(n,k) with a trivial k-edge cut not strictly below the apex graph."""
    cache = MatchCounter()
    apex = apex_family(n, k)
    expected = canonical_certificate(apex).decode("ascii")
    apex_mv = match_vector(apex, cache)
    for rec in _class_records(n):
        if rec.kappa == k and rec.min_degree == k and rec.cert != expected:
            if quasi_compare(rec.mv, apex_mv) is not QuasiOrder.STRICTLY_BELOW:
                yield rec.cert


def verify_lemma_trivial_cut(n: int, k: int) -> bool:
    return not any(trivial_cut_failures(n, k))


def side_bound_failures(n: int) -> Iterator[tuple[str, frozenset]]:
    """Minimum-cut sides 2 <= |S| <= n//2 with |S| < kappa' in graphs lacking trivial minimum cuts."""
    if n < 2:
        return
    for rec in _class_records(n):
        if rec.min_degree == rec.kappa:
            continue
        for w in all_min_cut_sides(rec.graph):
            if len(w.side) < rec.kappa:
                yield rec.cert, w.side


def verify_lemma_side_bound(n: int) -> bool:
    return not any(side_bound_failures(n))


@dataclass(frozen=True)
class OperationIConfig:
    """A two-clique graph with cross edges, plus where to apply Operation I."""

    n: int
    m: int
    k: int
    graph: Graph
    v2: int
    u1: int
    u2: int
    resamples: int


def sample_operation_I_config(rng: random.Random, max_n: int = 12) -> OperationIConfig:
    """Random clique pair K_{n-m} (vertices 0..n-m-1), K_m (the rest) with k cross edges.

    Layouts with no vertex carrying two cross edges, no cross-free vertex on
    the large side, or edge connectivity other than k are resampled.
    """
    resamples = 0
    while True:
        n = rng.randint(4, max_n)
        m = rng.randint(2, n // 2)
        k = rng.randint(1, m)
        big = n - m
        cross = rng.sample([(u, v) for u in range(big) for v in range(big, n)], k)
        edges = [(i, j) for j in range(big) for i in range(j)]
        edges += [(i, j) for j in range(big, n) for i in range(big, j)]
        g = build_graph(n, edges + cross)
        load = [0] * big
        for u, _ in cross:
            load[u] += 1
        doubled = [u for u in range(big) if load[u] >= 2]
        free = [u for u in range(big) if load[u] == 0]
        if doubled and free and edge_connectivity(g)[0] == k:
            u1 = rng.choice(doubled)
            v2 = rng.choice(sorted(v for u, v in cross if u == u1))
            u2 = rng.choice(free)
            return OperationIConfig(n, m, k, g, v2, u1, u2, resamples)
        resamples += 1


def operation_I_failures(trials: int, seed: int) -> Iterator[OperationIConfig]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    cache = MatchCounter()
    for _ in range(trials):
        cfg = sample_operation_I_config(rng)
        after = operation_I(cfg.graph, cfg.v2, cfg.u1, cfg.u2)
        rel = quasi_compare(match_vector(cfg.graph, cache), match_vector(after, cache))
        if rel is not QuasiOrder.STRICTLY_BELOW or edge_connectivity(after)[0] != cfg.k:
            yield cfg


def verify_operation_I(trials: int = 100, seed: int = 7) -> bool:
    return not any(operation_I_failures(trials, seed))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def edge_deletion_failures(trials: int, seed: int, max_n: int = 10) -> Iterator[tuple[str, tuple[int, int]]]:
    """Edges whose deletion fails to lower the counts strictly or the energy strictly."""
    rng = random.Random(seed)
    cache = MatchCounter()
    done = 0
    while done < trials:
        g = random_graph(rng, rng.randint(2, max_n), rng.random())
        if not g.size:
            continue
        done += 1
        mv = match_vector(g, cache)
        me = matching_energy_roots(mv).value
        for u, v in g.edges():
            smaller = match_vector(delete_edge(g, u, v), cache)
            if quasi_compare(smaller, mv) is not QuasiOrder.STRICTLY_BELOW or \
                    not matching_energy_roots(smaller).value < me:
                yield encode(g), (u, v)


def verify_edge_deletion(trials: int = 200, seed: int = 0) -> bool:
    return not any(edge_deletion_failures(trials, seed))


def split_params(n: int, max_m: Optional[int] = None) -> Iterator[tuple[int, int]]:
    """(k, m) with max(k, 2) <= m <= n // 2 (and m <= max_m when given)."""
    top = n // 2 if max_m is None else min(n // 2, max_m)
    for m in range(2, top + 1):
        for k in range(1, m + 1):
            yield k, m


def edge_count_failures(max_n: int = 14) -> Iterator[tuple[int, int, int]]:
    for n in range(4, max_n + 1):
        for k, m in split_params(n):
            apex, split = apex_family(n, k), split_family(n, k, m)
            closed = m * (m - 1) // 2 + (n - m) * (n - m - 1) // 2 + k
            if split.size != closed or apex.size != (n - 1) * (n - 2) // 2 + k or \
                    apex.size - split.size != (m - 1) * (n - m - 1):
                yield n, k, m


def verify_edge_count_identity(max_n: int = 14) -> bool:
    return not any(edge_count_failures(max_n))


def family_inequality_failures(max_m: int) -> Iterator[str]:
    """Violations of the split-versus-apex comparisons for all m <= max_m."""
    if max_m > 10:
        raise ValueError("max_m limited to 10")
    cache = MatchCounter()

    def mv(g: Graph) -> MatchVector:
        return match_vector(g, cache)

    for m in range(1, max_m + 1):
        if quasi_compare(mv(split_family(2 * m, 1, m)), mv(apex_family(2 * m, 1))) not in _BELOW_OR_EQUAL:
            yield f"K^1_{{{m},{m}}} vs K^1_{{{2 * m - 1},1}}"
        if quasi_compare(mv(split_family(2 * m + 1, 1, m)), mv(apex_family(2 * m + 1, 1))) not in _BELOW_OR_EQUAL:
            yield f"K^1_{{{m + 1},{m}}} vs K^1_{{{2 * m},1}}"
    for n in range(4, 2 * max_m + 5):
        for k, m in split_params(n, max_m):
            rel = quasi_compare(mv(split_family(n, k, m)), mv(apex_family(n, k)))
            if k == 1 and rel not in _BELOW_OR_EQUAL:
                yield f"K^1_{{{n - m},{m}}} vs K^1_{{{n - 1},1}}"
            if rel is not QuasiOrder.STRICTLY_BELOW:
                yield f"K^{k}_{{{n - m},{m}}} not strictly below K^{k}_{{{n - 1},1}}"


def verify_family_inequalities(max_m: int = 5) -> bool:
    return not any(family_inequality_failures(max_m))
