"""Command-line interface.

Exit codes (stable): 0 success / affirmative answer, 1 negative answer
(invalid cover, uncolorable, not degree-colorable, not critical), 2 parse or
input error, 3 resource cap exceeded, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys

from .census import connected_multigraphs
from .characterization import assemble_witness, decide_degree_colorable_any
from .config import Config
from .cover import (Cover, format_cover, iter_violations, parse_cover,
                    reduce_list, validate_cover)
from .critical import check_bound_multigraph, check_critical
from .errors import (CapExceeded, CoverInvalid, InternalInvariantError,
                     ParseError)
from .multigraph import Multigraph, parse_multigraph
from .solver import chi_dp, degree_colorable_oracle, solve


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _load_graph(path) -> Multigraph:
    return parse_multigraph(_read(path))


def _load_cover(path, base=None, strict=False) -> Cover:
    cover = parse_cover(_read(path), base=base)
    if strict:
        viol = validate_cover(cover)
        if viol is not None:
            raise ParseError(f"strict mode: {viol}")
    return cover


def _parse_lists(text):
    """Lists file: one line per vertex, 'v color color ...'; colors are tokens."""
    lists = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        try:
            v = int(parts[0])
        except ValueError:
            raise ParseError(f"bad vertex {parts[0]!r}", lineno) from None
        if v in lists:
            raise ParseError(f"duplicate list for vertex {v}", lineno)
        colors = parts[1:]
        if len(set(colors)) != len(colors):
            raise ParseError(f"list of vertex {v} repeats a color", lineno)
        lists[v] = colors
    return lists


def cmd_validate(args, config):
    base = _load_graph(args.graph) if args.graph else None
    cover = _load_cover(args.cover, base=base, strict=config.strict)
    violations = list(iter_violations(cover))
    if not violations:
        print("valid")
        return 0
    for v in violations:
        print(str(v))
    return 1


def cmd_solve(args, config):
    g = _load_graph(args.graph)
    cover = _load_cover(args.cover, base=g, strict=config.strict)
    viol = validate_cover(cover)
    if viol is not None:
        raise CoverInvalid(str(viol))
    res = solve(cover, config)
    if config.output_format == "lines":
        if res.colorable:
            print("colorable " + " ".join(str(i) for i in res.transversal.choice))
        else:
            print("uncolorable")
    else:
        if res.colorable:
            choice = ",".join(str(i) for i in res.transversal.choice)
            print(f"COLORABLE choice={choice} nodes={res.nodes_explored}")
        else:
            print(f"UNCOLORABLE nodes={res.nodes_explored}")
    return 0 if res.colorable else 1


def cmd_chi_dp(args, config):
    g = _load_graph(args.graph)
    print(chi_dp(g, config))
    return 0


def cmd_degree_colorable(args, config):
    g = _load_graph(args.graph)
    if args.oracle:
        if not g.is_connected():
            raise ValueError("--oracle needs a connected multigraph")
        ok, witness = degree_colorable_oracle(g, config)
        verdicts = None
    else:
        verdicts = decide_degree_colorable_any(g)
        ok = all(cv.verdict.colorable for cv in verdicts)
        witness = None if ok else assemble_witness(g, verdicts)
    if verdicts is not None and len(verdicts) > 1:
        for cv in verdicts:
            state = "degree-colorable" if cv.verdict.colorable else "not-degree-colorable"
            print(f"component {' '.join(str(v) for v in cv.vertices)}: {state}")
    print("DEGREE-COLORABLE" if ok else "NOT-DEGREE-COLORABLE")
    if witness is not None and args.witness:
        with open(args.witness, "w") as fh:
            fh.write(format_cover(witness))
        print(f"witness written to {args.witness}")
    return 0 if ok else 1


def cmd_check_critical(args, config):
    g = _load_graph(args.graph)
    report = check_critical(g, args.k, config)
    ok_bound, slack = check_bound_multigraph(g, args.k)
    if config.output_format == "lines":
        fail = "-" if report.failing_subgraph is None else \
            ":".join(str(x) for x in report.failing_subgraph)
        print(f"{'critical' if report.is_critical else 'not-critical'} "
              f"{report.chi} {slack.numerator}/{slack.denominator} {fail}")
    else:
        print(f"chi_dp = {report.chi}")
        if report.is_critical:
            print(f"CRITICAL at k={args.k}")
        elif report.chi != args.k:
            print(f"NOT CRITICAL: chi_dp differs from k={args.k}")
        else:
            kind, *rest = report.failing_subgraph
            print(f"NOT CRITICAL: deleting {kind} {tuple(rest)} keeps chi_dp at {args.k}")
        print(f"edge bound slack 2E-(k-1)n = {slack}")
    return 0 if report.is_critical else 1


def cmd_reduce(args, config):
    g = _load_graph(args.graph)
    lists = _parse_lists(_read(args.lists))
    cover = reduce_list(g, lists)
    text = format_cover(cover)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _census_record(idx, n, pairs, config):
    g = Multigraph.from_edges(n, pairs)
    chi = chi_dp(g, config)
    verdicts = decide_degree_colorable_any(g, build_witness=False)
    colorable = all(cv.verdict.colorable for cv in verdicts)
    _, slack = check_bound_multigraph(g, chi)
    state = "degree-colorable" if colorable else "not-degree-colorable"
    return (f"g{idx} {g.n} {2 * g.edge_total()} {chi} "
            f"{slack.numerator}/{slack.denominator} {state}")


def cmd_census(args, config):
    graphs = connected_multigraphs(args.max_n, args.max_mult)
    jobs = [(i, g.n, [(u, v, k) for u, v, k in g.pairs()]) for i, g in enumerate(graphs)]
    if config.output_format == "text":
        print("# id n 2E chi_dp slack verdict")
    if config.worker_count > 1:
        try:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(max_workers=config.worker_count) as pool:
                lines = list(pool.map(_census_worker,
                                      [(job, config) for job in jobs]))
        except OSError:
            lines = [_census_record(i, n, pairs, config) for i, n, pairs in jobs]
    else:
        lines = [_census_record(i, n, pairs, config) for i, n, pairs in jobs]
    for line in lines:
        print(line)
    return 0


def _census_worker(payload):
    (idx, n, pairs), config = payload
    return _census_record(idx, n, pairs, config)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dpcolor",
        description="Covers of multigraphs: validation, exact colorability, "
                    "DP-chromatic numbers, degree-colorability, criticality.")
    parser.add_argument("--node-budget", type=int, help="backtracking node cap")
    parser.add_argument("--strict", action="store_true",
                        help="reject invalid cover files instead of reporting")
    parser.add_argument("--format", choices=("text", "lines"), default=None,
                        help="output style (default text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a cover file against the cover conditions")
    p.add_argument("cover")
    p.add_argument("--graph", help="base multigraph file (else inferred minimally)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="decide whether a cover admits a transversal")
    p.add_argument("graph")
    p.add_argument("cover")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("chi-dp", help="exact DP-chromatic number")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chi_dp)

    p = sub.add_parser("degree-colorable",
                       help="decide colorability under every degree cover")
    p.add_argument("graph")
    p.add_argument("--witness", help="write an uncolorable degree cover here")
    p.add_argument("--oracle", action="store_true",
                   help="use the exhaustive search instead of the block decision")
    p.set_defaults(func=cmd_degree_colorable)

    p = sub.add_parser("check-critical", help="DP-criticality at a given k")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check_critical)

    p = sub.add_parser("reduce", help="encode a list-coloring instance as a cover")
    p.add_argument("graph")
    p.add_argument("lists")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("census", help="survey small connected multigraphs")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-mult", type=int, default=1)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {}
    if args.node_budget is not None:
        overrides["node_budget"] = args.node_budget
    if args.strict:
        overrides["strict"] = True
    if args.format is not None:
        overrides["output_format"] = args.format
    if getattr(args, "workers", None) is not None:
        overrides["worker_count"] = args.workers
    try:
        config = Config.from_env(**overrides)
        return args.func(args, config)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (CoverInvalid, ValueError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return 2
    except CapExceeded as e:
        print(f"resource cap: {e}", file=sys.stderr)
        return 3
    except InternalInvariantError as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
