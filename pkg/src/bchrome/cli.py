"""Command line entry point.

Subcommands: gen, info, hypcheck, color, verify, bchrom.  Exit codes:
0 success/Accept, 1 Reject, 2 no strategy applies or precondition violated,
3 parse error, 4 budget exceeded, 5 construction failed (a counterexample
candidate, dumped to a timestamped file).
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from . import construct, generators, oracle
from .coloring import verify_certificate
from .errors import (
    ConstructionFailed,
    GenerationFailed,
    MalformedDimacs,
    MalformedGraph6,
    NoStrategyApplies,
    PreconditionViolated,
    SchemaViolation,
)
from .formats import (
    parse_dimacs,
    parse_graph6,
    read_certificate,
    write_certificate,
    write_dimacs,
    write_graph6,
)
from .graph import Graph, bunches, closed_bunches, count_c6_in_n2, count_c6_through_vertex, girth

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_NOT_APPLICABLE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_CONSTRUCTION_FAILED = 5

_FAMILIES = ("cycle", "petersen", "hoffman-singleton", "robertson", "random-regular")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("BCHROME_THREADS", "1")))
    except ValueError:
        return 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    stripped = text.lstrip()
    if stripped[:1] in ("p", "c"):
        return parse_dimacs(text)
    return parse_graph6(text)


def _cmd_gen(args) -> int:
    if args.family == "cycle":
        g = generators.cycle(args.n if args.n is not None else 5)
    elif args.family == "petersen":
        g = generators.petersen()
    elif args.family == "hoffman-singleton":
        g = generators.hoffman_singleton()
    elif args.family == "robertson":
        g = generators.robertson()
    else:
        if args.n is None or args.d is None:
            print("random-regular needs --n and --d", file=sys.stderr)
            return EXIT_PARSE
        g = generators.random_regular_girth(
            generators.GenSpec(
                n=args.n, d=args.d, girth_min=args.girth_min, seed=args.seed
            )
        )
    if args.format == "dimacs":
        sys.stdout.write(write_dimacs(g))
    else:
        print(write_graph6(g))
    return EXIT_OK


def _girth_json(g: Graph):
    gth = girth(g)
    return None if gth == float("inf") else int(gth)


def _cmd_info(args) -> int:
    g = _load_graph(args.graph)
    gth = girth(g)
    verts = [args.vertex] if args.vertex is not None else list(range(g.n))
    per_vertex = []
    for x in verts:
        entry = {
            "vertex": x,
            "degree": g.degree(x),
            "c6_through": count_c6_through_vertex(g, x),
        }
        if gth >= 5:
            entry["c6_in_n2"] = count_c6_in_n2(g, x)
            entry["closed_bunches"] = len(closed_bunches(g, x))
        else:
            entry["c6_in_n2"] = None
            entry["closed_bunches"] = None
        per_vertex.append(entry)
    doc = {
        "n": g.n,
        "m": g.m,
        "d": g.regular_degree(),
        "girth": _girth_json(g),
        "per_vertex": per_vertex,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_hypcheck(args) -> int:
    g = _load_graph(args.graph)
    report = construct.hypothesis_report(g, threads=_threads())
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def _print_b_table(cert) -> None:
    print(f"strategy: {cert.strategy}  center: {cert.center}  k: {cert.k}")
    print("class  b-vertex")
    for cls in sorted(cert.b_vertices):
        print(f"{cls:>5}  {cert.b_vertices[cls]}")


def _cmd_color(args) -> int:
    g = _load_graph(args.graph)
    if args.strategy == "auto":
        if args.vertex is not None:
            report = construct.hypothesis_report(g, threads=_threads())
            vr = next(v for v in report.per_vertex if v.vertex == args.vertex)
            if not vr.strategies:
                raise NoStrategyApplies({args.vertex: "no strategy applicable"})
            cert = construct.run_strategy(g, args.vertex, vr.strategies[0])
        else:
            cert = construct.auto_color(g, threads=_threads())
    else:
        if args.vertex is not None:
            cert = construct.run_strategy(g, args.vertex, args.strategy)
        else:
            report = construct.hypothesis_report(g, threads=_threads())
            if report.d is None:
                raise PreconditionViolated("graph is not regular")
            if report.d < 7:
                raise PreconditionViolated(f"d = {report.d} < 7")
            if report.girth != 5:
                raise PreconditionViolated(f"girth = {report.girth} != 5")
            for vr in report.per_vertex:
                if args.strategy in vr.strategies:
                    cert = construct.run_strategy(g, vr.vertex, args.strategy)
                    break
            else:
                raise PreconditionViolated(
                    f"strategy {args.strategy} applies to no vertex"
                )
    res = verify_certificate(cert, g)
    if not res:
        print(f"Reject: {res.reason}")
        return EXIT_REJECT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(write_certificate(cert))
    _print_b_table(cert)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    cert = read_certificate(_read_text(args.cert))
    res = verify_certificate(cert, g)
    if res:
        print("Accept")
        return EXIT_OK
    print(f"Reject: {res.reason}")
    return EXIT_REJECT


def _cmd_bchrom(args) -> int:
    g = _load_graph(args.graph)
    lim = oracle.SearchLimits(
        max_nodes=args.node_budget, time_budget=args.time_budget
    )
    res = oracle.exact_b_chromatic(g, lim)
    if res.exact:
        print(res.value)
        return EXIT_OK
    print(f"{res.value} LowerBoundOnly")
    return EXIT_BUDGET


def _dump_counterexample(argv: list[str], e: ConstructionFailed) -> str:
    stamp = datetime.datetime.now().strftime("%Y%m%d-%H%M%S")
    path = f"counterexample-candidate-{stamp}.json"
    graph_g6 = None
    for tok in argv:
        if tok in ("-",) or tok.startswith("-"):
            continue
        try:
            graph_g6 = write_graph6(_load_graph(tok))
            break
        except Exception:
            continue
    doc = {"step": e.step, "log": list(e.log), "graph6": graph_g6, "argv": argv}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    return path


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bchrome")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a graph from a named family")
    g.add_argument("--family", choices=_FAMILIES, required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--girth-min", type=int, default=5)
    g.add_argument("--format", choices=("g6", "dimacs"), default="g6")
    g.set_defaults(fn=_cmd_gen)

    i = sub.add_parser("info", help="structural census (JSON)")
    i.add_argument("graph")
    i.add_argument("--vertex", type=int)
    i.set_defaults(fn=_cmd_info)

    h = sub.add_parser("hypcheck", help="strategy applicability report (JSON)")
    h.add_argument("graph")
    h.set_defaults(fn=_cmd_hypcheck)

    c = sub.add_parser("color", help="construct a b-coloring certificate")
    c.add_argument("graph")
    c.add_argument(
        "--strategy",
        choices=("auto",) + construct.STRATEGIES,
        default="auto",
    )
    c.add_argument("--vertex", type=int)
    c.add_argument("--out")
    c.set_defaults(fn=_cmd_color)

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("graph")
    v.add_argument("cert")
    v.set_defaults(fn=_cmd_verify)

    b = sub.add_parser("bchrom", help="oracle b-chromatic number")
    b.add_argument("graph")
    b.add_argument("--time-budget", type=float, default=60.0)
    b.add_argument("--node-budget", type=int, default=10_000_000)
    b.set_defaults(fn=_cmd_bchrom)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (MalformedGraph6, MalformedDimacs, SchemaViolation) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (NoStrategyApplies, PreconditionViolated) as e:
        print(f"not applicable: {e}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    except GenerationFailed as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionFailed as e:
        path = _dump_counterexample(argv, e)
        print(f"construction failed at {e.step}; dump written to {path}", file=sys.stderr)
        return EXIT_CONSTRUCTION_FAILED
    except (FileNotFoundError, IsADirectoryError) as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
