"""Command-line front end.

    matchenergy invariants [--input PATH|-] [--format csv|json]
    matchenergy construct --family apex|split --n N --k K [--m M]
    matchenergy compare [--input PATH|-] [--format csv|json]
    matchenergy verify --n N [--k K] [--input CORPUS] [--format csv|json] [--workers W]
    matchenergy oracle --suite matchvec|recurrence|energy-routes|lemmas [--trials T] [--seed S]

Exit status: 0 success, 1 verification failure, 2 usage error, 3 input format error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import IO, Optional

from . import verify as V
from .canon import canonical_certificate
from .cuts import edge_connectivity
from .energy import graph_energy, matching_energy_quadrature, matching_energy_roots
from .enumeration import enumerate_connected, enumerate_trees
from .graph import FamilyParams
from .graph6 import Graph6Error, decode, encode, read_lines
from .matchcount import (MatchCounter, edge_recurrence_check, hosoya_index, match_vector,
                         match_vector_bruteforce, quasi_compare, vertex_recurrence_check)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

INVARIANT_FIELDS = ["certificate", "n", "e", "kappa", "delta", "match_vector", "hosoya",
                    "me_roots", "me_quadrature", "graph_energy"]
REPORT_FIELDS = ["n", "k", "class_size", "me_max_certs", "z_max_certs", "expected_cert",
                 "unique", "counterexample", "quasi_dominated"]
COMPARE_FIELDS = ["relation", "mv_a", "mv_b", "me_a", "me_b", "me_difference"]


class UsageError(Exception):
    pass


def fmt_float(x: float) -> float:
    return float(f"{x:.12g}")


def _open_input(path: str) -> IO[str]:
    return sys.stdin if path == "-" else open(path)


def _emit(rows: list[dict], fields: list[str], fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        cells = []
        for f in fields:
            v = row[f]
            if isinstance(v, list):
                v = json.dumps(v) if f.startswith("mv") or f == "match_vector" else " ".join(v)
            elif v is None:
                v = ""
            elif isinstance(v, bool):
                v = str(v).lower()
            cells.append(v)
        writer.writerow(cells)


def invariant_row(g, cache: Optional[MatchCounter] = None) -> dict:
    mv = match_vector(g, cache)
    kappa = edge_connectivity(g)[0] if g.n >= 2 else None
    return {
        "certificate": canonical_certificate(g).decode("ascii"),
        "n": g.n,
        "e": g.size,
        "kappa": kappa,
        "delta": g.min_degree,
        "match_vector": [str(c) for c in mv.counts],
        "hosoya": str(hosoya_index(mv)),
        "me_roots": fmt_float(matching_energy_roots(mv).value),
        "me_quadrature": fmt_float(matching_energy_quadrature(mv).value),
        "graph_energy": fmt_float(graph_energy(g).value),
    }


def cmd_invariants(args, out: IO[str], err: IO[str]) -> int:
    rows, bad = [], False
    cache = MatchCounter()
    with _open_input(args.input) as stream:
        for lineno, line in read_lines(stream):
            try:
                g = decode(line)
                if g.n > 16:
                    raise Graph6Error(f"order {g.n} above the certificate bound 16")
            except Graph6Error as exc:
                err.write(json.dumps({"line": lineno, "error": str(exc)}) + "\n")
                bad = True
                continue
            rows.append(invariant_row(g, cache))
    _emit(rows, INVARIANT_FIELDS, args.format, out)
    return EXIT_INPUT if bad else EXIT_OK


def cmd_construct(args, out: IO[str], err: IO[str]) -> int:
    if args.n is None or args.k is None:
        raise UsageError("construct needs --n and --k")
    if args.family == "apex":
        if args.m not in (None, 1):
            raise UsageError("the apex family has m = 1")
        params = FamilyParams(args.n, args.k, 1)
    else:
        if args.m is None:
            raise UsageError("the split family needs --m")
        if args.m < 2:
            raise UsageError("the split family needs m >= 2")
        params = FamilyParams(args.n, args.k, args.m)
    try:
        params.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(encode(params.build()) + "\n")
    return EXIT_OK


def cmd_compare(args, out: IO[str], err: IO[str]) -> int:
    with _open_input(args.input) as stream:
        lines = list(read_lines(stream))
    if len(lines) != 2:
        err.write(f"compare needs exactly two graphs, got {len(lines)}\n")
        return EXIT_INPUT
    graphs = []
    for lineno, line in lines:
        try:
            graphs.append(decode(line))
        except Graph6Error as exc:
            err.write(json.dumps({"line": lineno, "error": str(exc)}) + "\n")
            return EXIT_INPUT
    a, b = graphs
    if a.n != b.n:
        err.write(f"order mismatch: {a.n} vs {b.n}\n")
        return EXIT_INPUT
    cache = MatchCounter()
    mva, mvb = match_vector(a, cache), match_vector(b, cache)
    me_a, me_b = matching_energy_roots(mva).value, matching_energy_roots(mvb).value
    row = {
        "relation": quasi_compare(mva, mvb).value,
        "mv_a": [str(c) for c in mva.counts],
        "mv_b": [str(c) for c in mvb.counts],
        "me_a": fmt_float(me_a),
        "me_b": fmt_float(me_b),
        "me_difference": fmt_float(me_b - me_a),
    }
    _emit([row], COMPARE_FIELDS, args.format, out)
    return EXIT_OK


def cmd_verify(args, out: IO[str], err: IO[str]) -> int:
    if args.n is None:
        raise UsageError("verify needs --n")
    limit = V.CORPUS_MAX if args.input else V.ENUMERATION_MAX
    if not 2 <= args.n <= limit:
        source = "a corpus" if args.input else "the built-in enumerator (supply --input for more)"
        raise UsageError(f"--n must lie in 2..{limit} with {source}")
    if args.k is not None and not 1 <= args.k <= args.n - 1:
        raise UsageError(f"--k must lie in 1..{args.n - 1}")
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    graphs = None
    if args.input:
        graphs = []
        with _open_input(args.input) as stream:
            for lineno, line in read_lines(stream):
                try:
                    graphs.append(decode(line))
                except Graph6Error as exc:
                    err.write(json.dumps({"line": lineno, "error": str(exc)}) + "\n")
                    return EXIT_INPUT
    ks = None if args.k is None else [args.k]
    reports = V.sweep(args.n, ks, graphs, args.workers)
    _emit([r.to_dict() for r in reports], REPORT_FIELDS, args.format, out)
    return EXIT_OK if all(r.unique for r in reports) else EXIT_FAILURE


def _suite_matchvec(args, out) -> bool:
    rng = random.Random(args.seed)
    graphs = [g for n in range(2, 8) for g in enumerate_connected(n)]
    graphs += [V.random_graph(rng, rng.randint(1, 10), rng.random()) for _ in range(args.trials or 500)]
    cache = MatchCounter()
    bad = sum(match_vector(g, cache) != match_vector_bruteforce(g) for g in graphs)
    out.write(f"matchvec: {len(graphs)} graphs, {bad} mismatches (seed {args.seed})\n")
    return bad == 0


def _suite_recurrence(args, out) -> bool:
    cache = MatchCounter()
    checks = bad = 0
    for n in range(2, 8):
        for g in enumerate_connected(n):
            for u, v in g.edges():
                checks += 1
                bad += not edge_recurrence_check(g, u, v, cache)
            for u in range(g.n):
                checks += 1
                bad += not vertex_recurrence_check(g, u, cache)
    out.write(f"recurrence: {checks} identities checked, {bad} failures\n")
    return bad == 0


def _suite_energy_routes(args, out) -> bool:
    worst = 0.0
    for n in range(2, 8):
        for g in enumerate_connected(n):
            mv = match_vector(g)
            worst = max(worst, abs(matching_energy_roots(mv).value - matching_energy_quadrature(mv).value))
    tree_worst = 0.0
    for n in range(1, 11):
        for t in enumerate_trees(n):
            tree_worst = max(tree_worst, abs(matching_energy_roots(match_vector(t)).value - graph_energy(t).value))
    out.write(f"energy-routes: max |roots - quadrature| = {worst:.3e}; "
              f"max tree |ME - E| = {tree_worst:.3e}\n")
    return worst <= 1e-5 and tree_worst <= 1e-8


def _suite_lemmas(args, out) -> bool:
    trials = args.trials or 100
    results = {
        "edge deletion (200 trials)": V.verify_edge_deletion(200, args.seed),
        "trivial cut, n <= 8": all(V.verify_lemma_trivial_cut(n, k) for n in range(2, 9) for k in range(1, n)),
        "min-cut side bound, n <= 8": all(V.verify_lemma_side_bound(n) for n in range(2, 9)),
        f"operation I ({trials} trials)": V.verify_operation_I(trials, args.seed),
        "edge-count identity, n <= 14": V.verify_edge_count_identity(14),
        "family inequalities, m <= 8": V.verify_family_inequalities(8),
    }
    for name, ok in results.items():
        out.write(f"lemmas: {name}: {'pass' if ok else 'FAIL'} (seed {args.seed})\n")
    return all(results.values())


SUITES = {
    "matchvec": _suite_matchvec,
    "recurrence": _suite_recurrence,
    "energy-routes": _suite_energy_routes,
    "lemmas": _suite_lemmas,
}


def cmd_oracle(args, out: IO[str], err: IO[str]) -> int:
    if args.suite is None:
        raise UsageError("oracle needs --suite")
    return EXIT_OK if SUITES[args.suite](args, out) else EXIT_FAILURE


COMMANDS = {
    "invariants": cmd_invariants,
    "construct": cmd_construct,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matchenergy", description="Matching energy and Hosoya index toolkit.")
    p.add_argument("command", choices=list(COMMANDS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--family", choices=["apex", "split"], default="apex")
    p.add_argument("--input", default=None, help="graph6 file, or - for stdin")
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--suite", choices=list(SUITES))
    return p


def main(argv: Optional[list[str]] = None, out: Optional[IO[str]] = None, err: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command in ("invariants", "compare") and args.input is None:
        args.input = "-"
    if args.trials is not None and args.trials < 1:
        err.write("error: --trials must be >= 1\n")
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def run(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in-process, capturing (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    status = main(argv, out, err)
    return status, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
