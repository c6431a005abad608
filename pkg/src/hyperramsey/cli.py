"""Command-line front end.

Exit codes: 0 success, 1 mathematical negative (not good, coloring
rejected, certificate does not replay), 2 usage or parse error, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from hyperramsey import __version__
from hyperramsey import formulas
from hyperramsey.cnf import export_cnf
from hyperramsey.config import Caps, set_caps
from hyperramsey.engine import (
    ExhaustionCertificate,
    WitnessRejected,
    compute_ramsey,
    import_witness,
    replay_certificate,
)
from hyperramsey.errors import CapExceeded, HypergraphError
from hyperramsey.extremal import ramsey_lower_bound
from hyperramsey.goodness import is_good_bipartite, is_good_covering, is_good_definitional
from hyperramsey.hypergraph import (
    Hypergraph,
    complete,
    complete_kpartite,
    disjoint_union,
    kneser,
    lift_graph,
    loose_cycle,
    loose_path,
    parse_uhg,
    star,
    tight_cycle,
    tight_path,
)
from hyperramsey.invariants import invariants
from hyperramsey.propagate import KnownValue, bound_propagate, derivation, label

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FAMILIES = {
    "complete": lambda a: complete(a.k, a.n),
    "loose-path": lambda a: loose_path(a.k, a.n),
    "loose-cycle": lambda a: loose_cycle(a.k, a.n),
    "tight-path": lambda a: tight_path(a.k, a.n),
    "tight-cycle": lambda a: tight_cycle(a.k, a.n),
    "star": lambda a: star(a.k, a.n),
    "kpartite": lambda a: complete_kpartite(_int_list(a.parts)),
    "kneser": lambda a: kneser(a.n, a.r, a.k),
    "lift": lambda a: lift_graph(_read_uhg(a.graph), a.k),
}


class UsageError(Exception):
    pass


def _int_list(text: str | None) -> list[int]:
    if not text:
        raise UsageError("--parts is required, e.g. --parts 2,2,3")
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _read_uhg(path: str | None) -> Hypergraph:
    if not path:
        raise UsageError("an input .uhg file is required")
    return parse_uhg(Path(path).read_text())


def _emit(args: argparse.Namespace, payload: Any, table: list[tuple[str, Any]] | str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif isinstance(table, str):
        print(table)
    else:
        width = max((len(k) for k, _ in table), default=0)
        for key, value in table:
            print(f"{key:<{width}}  {value}")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


# --- subcommands -------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family in ("complete", "loose-path", "loose-cycle", "tight-path", "tight-cycle", "star", "kneser"):
        if args.n is None:
            raise UsageError(f"{args.family} needs -n")
    if args.family == "kneser" and args.r is None:
        raise UsageError("kneser needs -r")
    h = FAMILIES[args.family](args)
    if args.copies > 1:
        h = disjoint_union(h, args.copies)
    text = h.to_uhg(args.comment)
    if args.output:
        _write(args.output, text)
        _emit(args, {"vertices": h.num_vertices, "edges": h.num_edges, "k": h.k, "path": args.output},
              [("file", args.output), ("k", h.k), ("vertices", h.num_vertices), ("edges", h.num_edges)])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    h = _read_uhg(args.input)
    rep = invariants(h)
    payload = {"k": h.k, "vertices": h.num_vertices, "edges": h.num_edges, **rep.as_dict()}
    _emit(
        args,
        payload,
        [
            ("k", h.k),
            ("vertices", h.num_vertices),
            ("edges", h.num_edges),
            ("alpha", rep.alpha),
            ("alpha*", "none (not in F_k)" if rep.alpha_star is None else rep.alpha_star),
            ("nu", rep.nu),
            ("tau", rep.tau),
            ("independent set", list(rep.independent_set)),
            ("strong independent set", rep.strong_independent_set and list(rep.strong_independent_set)),
        ],
    )
    return EXIT_OK


def cmd_good(args: argparse.Namespace) -> int:
    h = _read_uhg(args.input)
    routes = {"definitional": is_good_definitional, "covering": is_good_covering, "bipartite": is_good_bipartite}
    names = list(routes) if args.route == "all" else [args.route]
    if h.k != 2:
        if args.route == "bipartite":
            raise UsageError("the bipartite route needs a graph (k = 2)")
        names = [n for n in names if n != "bipartite"]
    certs = [routes[n](h) for n in names]
    verdicts = {c.verdict for c in certs}
    if len(verdicts) > 1:
        raise HypergraphError(f"routes disagree: {[c.as_dict() for c in certs]}")
    cert = certs[0]
    payload = {"verdict": cert.verdict, "routes": [c.as_dict() for c in certs]}
    rows = [("verdict", cert.verdict)]
    for c in certs:
        detail = c.violation if c.violation is not None else c.strong_set
        rows.append((c.route, f"{c.verdict} {list(detail) if detail is not None else ''}".rstrip()))
    _emit(args, payload, rows)
    return EXIT_OK if cert.good else EXIT_NEGATIVE


def cmd_coloring(args: argparse.Namespace) -> int:
    g, h = _read_uhg(args.red), _read_uhg(args.blue)
    lb = ramsey_lower_bound(g, h)
    payload = {
        "bound": lb.value,
        "construction": lb.construction,
        "vertices": None if lb.coloring is None else lb.coloring.n,
        "path": args.output,
    }
    if lb.coloring is not None:
        _write(args.output, lb.coloring.to_col())
    _emit(args, payload, [("lower bound", lb.value), ("construction", lb.construction), ("coloring vertices", payload["vertices"])])
    return EXIT_OK


def cmd_ramsey(args: argparse.Namespace) -> int:
    g, h = _read_uhg(args.red), _read_uhg(args.blue)
    verdict = compute_ramsey(
        g,
        h,
        args.nmax,
        symmetry=not args.no_symmetry,
        split_depth=args.split_depth,
        threads=args.threads,
        node_limit=args.node_limit,
    )
    paths = {}
    if args.witness_out and verdict.witness is not None:
        _write(args.witness_out, verdict.witness.to_col())
        paths["witness"] = args.witness_out
    if args.certificate_out and verdict.certificate is not None:
        _write(args.certificate_out, json.dumps(verdict.certificate.as_dict(), indent=2))
        paths["certificate"] = args.certificate_out
    payload = verdict.as_dict(paths or None)
    hi = "?" if verdict.hi is None else verdict.hi
    rows = [("R", verdict.lo if verdict.exact else f"[{verdict.lo}, {hi}]"), ("exact", verdict.exact)]
    rows.append(("lower bound from", verdict.lower_construction))
    if verdict.certificate is not None:
        rows.append(("upper bound", f"exhaustive search at n={verdict.certificate.n}, {verdict.certificate.nodes} nodes"))
    rows += [("note", n) for n in verdict.notes]
    _emit(args, payload, rows)
    return EXIT_OK


def cmd_cnf(args: argparse.Namespace) -> int:
    g, h = _read_uhg(args.red), _read_uhg(args.blue)
    inst = export_cnf(g, h, args.n)
    text = inst.to_dimacs()
    if args.output:
        _write(args.output, text)
        _emit(args, {"variables": inst.num_vars, "clauses": inst.num_clauses, "path": args.output},
              [("variables", inst.num_vars), ("clauses", inst.num_clauses), ("file", args.output)])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, h = _read_uhg(args.red), _read_uhg(args.blue)
    if bool(args.coloring) == bool(args.certificate):
        raise UsageError("give exactly one of --coloring or --certificate")
    if args.certificate:
        cert = ExhaustionCertificate.from_dict(json.loads(Path(args.certificate).read_text()))
        ok = replay_certificate(cert, g, h)
        _emit(args, {"replayed": ok, "n": cert.n, "nodes": cert.nodes}, [("certificate", "replays" if ok else "REJECTED"), ("n", cert.n)])
        return EXIT_OK if ok else EXIT_NEGATIVE
    text = Path(args.coloring).read_text()
    try:
        verdict = import_witness(text, g, h, n=args.n)
    except WitnessRejected as exc:
        _emit(args, {"accepted": False, "reason": str(exc)}, [("coloring", "REJECTED"), ("reason", str(exc))])
        return EXIT_NEGATIVE
    payload = {"accepted": True, **verdict.as_dict()}
    _emit(args, payload, [("coloring", "accepted"), ("lo", verdict.lo), ("hi", verdict.hi)] + [("note", n) for n in verdict.notes])
    return EXIT_OK


def _formula_params(args: argparse.Namespace) -> dict:
    params: dict[str, Any] = {}
    for item in args.params:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not NAME=VALUE")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = parse_uhg(Path(value).read_text())
    return params


def cmd_formulas(args: argparse.Namespace) -> int:
    if args.action == "list":
        table = formulas.registry_table()
        _emit(args, {"entries": table}, "\n".join(f"{e['id']:<28} {e['status']:<20} {e['statement']}" for e in table))
        return EXIT_OK
    if args.action == "consistency":
        rep = formulas.consistency_check()
        payload = {"points": rep.points, "overlaps": rep.overlaps, "conflicts": [repr(c) for c in rep.conflicts]}
        _emit(args, payload, [("points", rep.points), ("overlaps", rep.overlaps), ("conflicts", len(rep.conflicts))])
        return EXIT_OK if rep.ok else EXIT_NEGATIVE
    if not args.id:
        raise UsageError(f"formulas {args.action} needs an entry id")
    params = _formula_params(args)
    if args.action == "eval":
        ev = formulas.evaluate(args.id, params)
        _emit(args, ev.as_dict(), [("id", ev.id), ("value", ev.value), ("status", ev.status), ("kind", ev.kind)] + [("note", n) for n in ev.notes])
        return EXIT_OK
    report = formulas.cross_check(args.id, params, args.budget)
    rows = [(k, v) for k, v in report.as_dict().items() if k != "notes"] + [("note", n) for n in report.notes]
    _emit(args, report.as_dict(), rows)
    return EXIT_NEGATIVE if report.severity == "failure" else EXIT_OK


def _parse_known(text: str) -> KnownValue:
    # RED:m,BLUE:n=lo or RED:m,BLUE:n=lo..hi
    try:
        lhs, rhs = text.split("=")
        red, blue = lhs.split(",")
        rname, m = red.split(":")
        bname, n = blue.split(":")
        lo, _, hi = rhs.partition("..")
        return KnownValue(rname, int(m), bname, int(n), int(lo), int(hi) if hi else int(lo), "command line")
    except ValueError:
        raise UsageError(f"bad --known value {text!r}; expected RED:m,BLUE:n=lo[..hi]") from None


def cmd_propagate(args: argparse.Namespace) -> int:
    bases = {}
    for item in args.base:
        name, sep, path = item.partition("=")
        if not sep:
            raise UsageError(f"bad --base {item!r}; expected NAME=file.uhg")
        bases[name] = _read_uhg(path)
    known = [_parse_known(t) for t in args.known]
    pairs = []
    for item in args.pair:
        a, sep, b = item.partition(",")
        if not sep:
            raise UsageError(f"bad --pair {item!r}; expected A,B")
        pairs.append((a, b))
    table = bound_propagate(known, bases, max_copies=args.max_copies, pairs=pairs)
    payload = {
        "intervals": [
            {
                "red": key[0],
                "m": key[1],
                "blue": key[2],
                "n": key[3],
                "lo": iv.lo,
                "hi": iv.hi,
                "lo_rule": iv.lo_rule,
                "derivation": derivation(table, key),
            }
            for key, iv in table.items()
        ]
    }
    lines = []
    for key, iv in table.items():
        hi = "?" if iv.hi is None else iv.hi
        lines.append(f"{label(key):<22} [{iv.lo}, {hi}]  lower: {iv.lo_rule}; upper: {iv.hi_rule or '-'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    defaults = Caps()
    p = argparse.ArgumentParser(prog="hyperramsey", description="k-uniform hypergraph Ramsey toolkit")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--json", action="store_true", help="machine-readable JSON output")
    p.add_argument("-v", "--verbose", action="store_true", help="log search progress to stderr")
    caps_group = p.add_argument_group("caps")
    caps_group.add_argument("--vertex-cap", type=int, default=defaults.vertex_cap, help="max vertices of constructed objects (default %(default)s)")
    caps_group.add_argument("--alpha-cap", type=int, default=defaults.alpha_cap, help="max component size for exact invariants (default %(default)s)")
    caps_group.add_argument("--variable-cap", type=int, default=defaults.variable_cap, help="max C(N,k) for search and CNF export (default %(default)s)")
    caps_group.add_argument("--image-cap", type=int, default=defaults.image_cap, help="max embedding images per pattern (default %(default)s)")
    caps_group.add_argument("--subset-cap", type=int, default=defaults.subset_cap, help="max |V1| for the covering criterion (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated hypergraph as .uhg")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("-k", type=int, default=3, help="uniformity (default %(default)s)")
    g.add_argument("-n", type=int, help="number of edges; vertices for complete; ground set size for kneser")
    g.add_argument("-r", type=int, help="subset size for kneser")
    g.add_argument("--parts", help="comma-separated part sizes for kpartite")
    g.add_argument("--graph", help="input graph (.uhg, k = 2) for lift")
    g.add_argument("--copies", type=int, default=1, help="disjoint copies (default %(default)s)")
    g.add_argument("--comment", help="comment line for the output file")
    g.add_argument("-o", "--output", help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    i = sub.add_parser("invariants", help="alpha, alpha*, nu, tau with witnesses")
    i.add_argument("--in", dest="input", required=True)
    i.set_defaults(func=cmd_invariants)

    gd = sub.add_parser("good", help="certify alpha* = alpha (exit 1 if not good)")
    gd.add_argument("--in", dest="input", required=True)
    gd.add_argument("--route", choices=["definitional", "covering", "bipartite", "all"], default="all")
    gd.set_defaults(func=cmd_good)

    c = sub.add_parser("coloring", help="general lower-bound coloring for a pair")
    c.add_argument("--red", required=True)
    c.add_argument("--blue", required=True)
    c.add_argument("-o", "--output", help="write the witness .col here")
    c.set_defaults(func=cmd_coloring)

    r = sub.add_parser("ramsey", help="exact R(red, blue) by search")
    r.add_argument("--red", required=True)
    r.add_argument("--blue", required=True)
    r.add_argument("--nmax", type=int, required=True, help="largest vertex count to search")
    r.add_argument("--threads", type=int, default=1)
    r.add_argument("--split-depth", type=int, default=0, help="split the search on the first d variables")
    r.add_argument("--node-limit", type=int, help="give up a vertex count after this many nodes")
    r.add_argument("--no-symmetry", action="store_true", help="disable colour-swap symmetry breaking")
    r.add_argument("--witness-out", help="write the best witness coloring (.col)")
    r.add_argument("--certificate-out", help="write the exhaustion certificate (JSON)")
    r.set_defaults(func=cmd_ramsey)

    cn = sub.add_parser("cnf", help="DIMACS CNF for 'some coloring of K_n^k avoids both'")
    cn.add_argument("--red", required=True)
    cn.add_argument("--blue", required=True)
    cn.add_argument("-n", type=int, required=True)
    cn.add_argument("-o", "--output")
    cn.set_defaults(func=cmd_cnf)

    v = sub.add_parser("verify", help="check a coloring/solver model or replay a certificate")
    v.add_argument("--red", required=True)
    v.add_argument("--blue", required=True)
    v.add_argument("--coloring", help=".col file or solver output")
    v.add_argument("--certificate", help="exhaustion certificate JSON")
    v.add_argument("-n", type=int, help="vertex count (needed for an UNSAT answer)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formulas", help="closed-form registry")
    f.add_argument("action", choices=["list", "eval", "check", "consistency"])
    f.add_argument("id", nargs="?")
    f.add_argument("params", nargs="*", help="NAME=VALUE; a non-integer VALUE is read as a .uhg path")
    f.add_argument("--budget", type=int, help="node limit per vertex count for check")
    f.set_defaults(func=cmd_formulas)

    pr = sub.add_parser("propagate", help="intervals for R(mA, nB) from known values")
    pr.add_argument("--base", action="append", default=[], help="NAME=file.uhg (repeatable)")
    pr.add_argument("--known", action="append", default=[], help="RED:m,BLUE:n=lo[..hi] (repeatable)")
    pr.add_argument("--pair", action="append", default=[], help="A,B base pair to expand without known values")
    pr.add_argument("--max-copies", type=int, default=3)
    pr.set_defaults(func=cmd_propagate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    set_caps(
        vertex_cap=args.vertex_cap,
        alpha_cap=args.alpha_cap,
        variable_cap=args.variable_cap,
        image_cap=args.image_cap,
        subset_cap=args.subset_cap,
    )
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, HypergraphError, formulas.UnknownEntry, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_caps(**vars(Caps()))


if __name__ == "__main__":
    sys.exit(main())
