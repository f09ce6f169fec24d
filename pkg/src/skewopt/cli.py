"""Command line interface.

JSON goes to stdout (sorted keys), diagnostics to stderr.  Exit codes:
0 optimum / success, 2 checked and not optimum (or no orientation exists),
1 usage, parse or limit errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import constructions as C
from .graph import CliqueLevel, even_neighborhood_check
from .io import (
    ParseError,
    detect_format,
    dumps,
    fmt_float,
    from_sgf,
    read_graph,
    roundtrip_text,
    to_graph6,
    to_sgf,
)
from .oriented import energy_bound, gram, skew_energy
from .search import (
    Outcome,
    brute_force_orientations,
    build_catalog,
    find_optimum_orientation,
    iter_unique_regular,
    within_feasibility_bound,
)

EXIT_OK, EXIT_ERROR, EXIT_NOT_OPTIMUM = 0, 1, 2

log = logging.getLogger("skewopt")


def verify_report(path: str) -> dict:
    o, k = from_sgf(Path(path).read_text())
    rep = gram(o, k)
    energy = skew_energy(o)
    return {
        "input_path": str(path),
        "n": o.n,
        "k": k,
        "is_optimum": rep.is_optimum,
        "energy": fmt_float(energy),
        "energy_bound": fmt_float(energy_bound(o.graph)),
        "even_neighborhood_ok": not even_neighborhood_check(o.graph),
        "gram_violations": [[u + 1, v + 1, val] for u, v, val in rep.off_diagonal_violations],
        "diagonal_violations": [[u + 1, val] for u, val in rep.diagonal_violations],
    }


def cmd_verify(args) -> int:
    report = verify_report(args.path)
    print(dumps(report))
    return EXIT_OK if report["is_optimum"] else EXIT_NOT_OPTIMUM


def cmd_energy(args) -> int:
    o, k = from_sgf(Path(args.path).read_text())
    print(dumps({
        "n": o.n,
        "k": k,
        "max_degree": o.graph.max_degree,
        "energy": fmt_float(skew_energy(o)),
        "energy_bound": fmt_float(energy_bound(o.graph)),
    }))
    return EXIT_OK


def cmd_search(args) -> int:
    g = read_graph(args.graph)
    k = args.k
    if args.brute_force:
        t0 = time.perf_counter()
        res = brute_force_orientations(g, k, collect=args.all, stop_at_first=not args.all)
        out = {
            "outcome": "FOUND" if res.witness else "NONE",
            "witness": to_sgf(res.witness, k) if res.witness else None,
            "nodes": res.total,
            "classes": None,
            "time": fmt_float(time.perf_counter() - t0),
            "engine": "brute-force",
        }
        if args.all:
            out["count"] = res.optimum_count
            out["witnesses"] = [to_sgf(w, k) for w in res.optimum]
        print(dumps(out))
        return EXIT_OK if res.witness else EXIT_NOT_OPTIMUM

    cert = find_optimum_orientation(g, k, find_all=args.all, max_nodes=args.max_nodes)
    out = {
        "outcome": cert.outcome.value,
        "witness": to_sgf(cert.witness, k) if cert.witness else None,
        "nodes": cert.nodes_explored,
        "classes": cert.classes_covered,
        "cycle_space_dim": cert.cycle_space_dim,
        "time": fmt_float(cert.wall_time),
        "engine": "switching-quotient",
    }
    if args.all:
        out["count"] = len(cert.witnesses)
        out["witnesses"] = [to_sgf(w, k) for w in cert.witnesses]
    print(dumps(out))
    if cert.outcome is Outcome.LIMIT:
        print(f"node limit {args.max_nodes} reached before a decision", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK if cert.outcome is Outcome.FOUND else EXIT_NOT_OPTIMUM


def _entry_json(e) -> dict:
    return {
        "order": e.order,
        "graph6": to_graph6(e.graph),
        "certificate": e.certificate,
        "clique_level": e.clique_level.value,
    }


def cmd_enumerate(args) -> int:
    level = CliqueLevel.TRIANGLE_FREE if args.triangle_free else args.clique_level
    if level is not None:
        level = CliqueLevel(level)
    even = not args.all_regular
    beyond = not within_feasibility_bound(args.k, args.n, even)
    if beyond and not args.force:
        print(f"k={args.k} n={args.n} exceeds the feasibility bound; rerun with --force", file=sys.stderr)
        return EXIT_ERROR
    stream = iter_unique_regular(args.k, args.n, even_neighborhood=even, clique_level=level, force=args.force)
    if beyond:
        count = 0
        for e in stream:
            count += 1
            print(json.dumps(_entry_json(e), sort_keys=True), flush=True)
        print(json.dumps({"k": args.k, "n": args.n, "count": count, "complete": True}, sort_keys=True))
        return EXIT_OK
    entries = sorted(stream, key=lambda e: e.certificate)
    print(dumps({
        "k": args.k,
        "n": args.n,
        "even_neighborhood": even,
        "count": len(entries),
        "graphs": [_entry_json(e) for e in entries],
    }))
    return EXIT_OK


def parse_range(text: str) -> list[int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(x) for x in text.split(",")]


def catalog_json(k: int, entries) -> dict:
    counts: dict[str, dict[str, int]] = {}
    for e in entries:
        c = counts.setdefault(str(e.order), {"graphs": 0, "orientable": 0})
        c["graphs"] += 1
        c["orientable"] += int(bool(e.orientable))
    return {
        "k": k,
        "counts": counts,
        "entries": [
            dict(
                _entry_json(e),
                orientable=e.orientable,
                witness=to_sgf(e.witness, k) if e.witness else None,
                search_nodes=e.search_nodes,
            )
            for e in entries
        ],
    }


def cmd_catalog(args) -> int:
    orders = [n for n in parse_range(args.n_range) if (n * args.k) % 2 == 0]
    entries = build_catalog(args.k, orders, threads=args.threads, force=args.force)
    doc = catalog_json(args.k, entries)
    if args.out:
        Path(args.out).write_text(dumps(doc) + "\n")
    print(dumps({"k": args.k, "counts": doc["counts"], "out": args.out}))
    return EXIT_OK


def construct(family: str, n: int | None, input_path: str | None):
    if family in ("g4", "g16", "g17", "g31"):
        return C.paper_matrix(family.upper())
    if n is None and family != "p2lift":
        raise ValueError(f"--n is required for family {family}")
    if family == "g12":
        return C.g12_family(n)
    if family == "g26":
        return C.g26_family(n)
    if family == "un":
        return C.u_orientation(n)
    if family == "hypercube":
        return C.hypercube_orientation(n)
    if family == "p2lift":
        if not input_path:
            raise ValueError("p2lift needs --input FILE.sgf")
        o, _ = from_sgf(Path(input_path).read_text())
        return C.p2_lift(o)
    raise ValueError(f"unknown family {family!r}")


def cmd_construct(args) -> int:
    o = construct(args.family, args.n, args.input)
    k = o.graph.max_degree
    if args.format == "sgf":
        sys.stdout.write(to_sgf(o, k))
    elif args.format == "graph6":
        print(to_graph6(o.graph))
    else:
        print(dumps({
            "family": args.family,
            "n": o.n,
            "k": k,
            "is_optimum": gram(o, k).is_optimum,
            "sgf": to_sgf(o, k),
            "graph6": to_graph6(o.graph),
        }))
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    fmt = args.format or detect_format(args.path)
    text = Path(args.path).read_text()
    out = roundtrip_text(text, fmt)
    sys.stdout.write(out)
    if args.check and out != text:
        print("serialization differs from input (input is not in canonical form)", file=sys.stderr)
        return EXIT_NOT_OPTIMUM
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewopt", description="Optimum skew energy orientations of regular graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check S^T S = kI for an sgf file")
    s.add_argument("path")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("energy", help="skew energy of an sgf file")
    s.add_argument("path")
    s.set_defaults(func=cmd_energy)

    s = sub.add_parser("search", help="find an optimum orientation or prove none exists")
    s.add_argument("--graph", required=True, help="graph file (.g6, .edges or .sgf)")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--all", action="store_true", help="collect every normalized witness")
    s.add_argument("--brute-force", action="store_true", help="try all 2^m orientations instead")
    s.add_argument("--max-nodes", type=int, default=None)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("enumerate", help="connected k-regular graphs with even neighborhoods")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--triangle-free", action="store_true")
    s.add_argument("--clique-level", choices=[c.value for c in CliqueLevel])
    s.add_argument("--all-regular", action="store_true", help="drop the even-neighborhood filter")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("catalog", help="enumerate and classify a range of orders")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-range", required=True, help="e.g. 6..12 or 6,8,12")
    s.add_argument("--out")
    s.add_argument("--threads", type=int, default=None, help="defaults to $SKEWOPT_THREADS or 1")
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("construct", help="emit a known optimum orientation")
    s.add_argument("--family", required=True, choices=C.FAMILIES)
    s.add_argument("--n", type=int)
    s.add_argument("--input", help="sgf input for p2lift")
    s.add_argument("--format", choices=["json", "sgf", "graph6"], default="json")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("roundtrip", help="parse and re-serialize a graph or sgf file")
    s.add_argument("path")
    s.add_argument("--format", choices=["sgf", "graph6", "edges"])
    s.add_argument("--check", action="store_true", help="exit 2 if output differs from input")
    s.set_defaults(func=cmd_roundtrip)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
