"""Command line front end.

Subcommands: ``gen`` writes a graph as edge-list text, ``compute`` solves the
invariants of one instance, ``verify`` runs the bound catalogue, and
``ensemble`` sweeps seeded random instances into a CSV.  Identical
configuration (including seeds) always produces byte-identical artifacts;
exit status is 0 on success, 1 when a check is violated or an oracle
cross-check disagrees, and 2 for configuration or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import CHECK_IDS, DEFAULT_SCAN_CAP, BoundsReport, verify_all
from .graphs import GraphSpec, build_graph, parse_part, write_graph
from .reports import compute_invariants

NA = "NA"

CSV_COLUMNS = (
    "instance_id",
    "model",
    "n_param",
    "p",
    "r_param",
    "instance_seed",
    "n",
    "edge_count",
    "delta",
    "Delta",
    "k",
    "gamma",
    "d",
    "gamma_total",
    "d_total",
    "d_complement",
    *(f"check_{cid}" for cid in CHECK_IDS),
)

_EPILOG = f"""\
ensemble CSV columns (fixed order):
  {", ".join(CSV_COLUMNS)}
Absent values (a failed degree gate, an inapplicable model parameter) are
written as {NA}.  Rows are sorted by instance id; runs with the same
configuration are byte-identical.  Instance i of a run with master seed s
uses seed s * 1000003 + i.
"""


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktdom",
        description="Exact k-tuple domination and domatic invariants with certificates.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph and write edge-list text")
    gen.add_argument("family", help="complete, complete-bipartite, cycle, path, clique-chain, "
                                    "disjoint-union, k-join, gnp, random-regular, from-file")
    gen.add_argument("params", nargs="*", help="family parameters; compound families take part "
                                               "tokens such as complete:3")
    gen.add_argument("--seed", type=int, default=None, help="seed for random families and seeded joins")
    gen.add_argument("--join-k", type=int, default=None, help="k of a k-join")
    gen.add_argument("--join-rule", choices=("all", "seeded"), default="all", help="k-join rule")
    gen.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
    gen.set_defaults(handler=_cmd_gen)

    compute = sub.add_parser("compute", help="solve the invariants of one graph")
    compute.add_argument("--input", required=True, help="edge-list file, '-' for stdin")
    compute.add_argument("--k", type=int, required=True)
    compute.add_argument("--mode", choices=("closed", "open", "both"), default="both")
    compute.add_argument("--oracle", action="store_true", help="cross-check against the brute-force references")
    compute.add_argument("--report", default="-", help="report path, '-' for stdout")
    compute.set_defaults(handler=_cmd_compute)

    verify = sub.add_parser("verify", help="run the bound catalogue on one graph")
    verify.add_argument("--input", required=True, help="edge-list file, '-' for stdin")
    verify.add_argument("--k", type=int, required=True)
    verify.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP,
                        help="vertex cap for the exhaustive exact-size scan (C11)")
    verify.add_argument("--report", default="-", help="report path, '-' for stdout")
    verify.set_defaults(handler=_cmd_verify)

    ensemble = sub.add_parser("ensemble", help="verify a seeded ensemble of random graphs")
    ensemble.add_argument("--model", choices=("gnp", "random-regular"), required=True)
    ensemble.add_argument("--n", type=int, required=True)
    ensemble.add_argument("--p", type=float, default=None, help="edge probability (gnp)")
    ensemble.add_argument("--r", type=int, default=None, help="degree (random-regular)")
    ensemble.add_argument("--count", type=int, required=True)
    ensemble.add_argument("--seed", type=int, required=True, help="master seed")
    ensemble.add_argument("--k", type=int, required=True)
    ensemble.add_argument("--oracle", action="store_true",
                          help="also cross-check each instance against the brute-force references")
    ensemble.add_argument("--csv", default="-", help="CSV path, '-' for stdout")
    ensemble.set_defaults(handler=_cmd_ensemble)

    return parser


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _read_input(path: str):
    from .graphs import read_graph

    if path == "-":
        return read_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return read_graph(fh.read())


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _spec_from_args(args: argparse.Namespace) -> GraphSpec:
    family = args.family
    params: list[str] = args.params
    if family in ("disjoint-union", "k-join"):
        parts = tuple(parse_part(tok) for tok in params)
        return GraphSpec(family=family, parts=parts, k=args.join_k, rule=args.join_rule, seed=args.seed)
    if family == "from-file":
        if len(params) != 1:
            raise ValueError("from-file takes exactly one path")
        return GraphSpec(family=family, path=params[0])
    if family == "gnp":
        if len(params) != 2:
            raise ValueError("gnp takes two parameters: n p")
        return GraphSpec(family=family, sizes=(_int(params[0]),), p=_float(params[1]), seed=args.seed)
    sizes = tuple(_int(tok) for tok in params)
    return GraphSpec(family=family, sizes=sizes, seed=args.seed)


def _int(token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"expected an integer parameter, got {token!r}") from None


def _float(token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"expected a number, got {token!r}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    g = build_graph(spec)
    header = f"# ktdom gen {args.family}" + ("".join(" " + p for p in args.params)) + "\n"
    _write_text(args.output, header + write_graph(g))
    return 0


def _cmd_compute(args: argparse.Namespace) -> int:
    g = _read_input(args.input)
    report = compute_invariants(g, args.k, args.mode, with_oracle=args.oracle)
    _write_text(args.report, _json_text(report.to_dict()))
    if report.oracle_mismatches:
        for line in report.oracle_mismatches:
            print(f"oracle mismatch: {line}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _read_input(args.input)
    report = verify_all(g, args.k, scan_cap=args.scan_cap)
    _write_text(args.report, _json_text(report.to_dict()))
    if report.violations:
        for check in report.violations:
            print(f"violated: {check.check_id}: {check.statement}", file=sys.stderr)
        return 1
    return 0


def _instance_seed(master: int, index: int) -> int:
    return master * 1000003 + index


def _cmd_ensemble(args: argparse.Namespace) -> int:
    from .graphs import gnp, random_regular

    if args.count < 1:
        raise ValueError("count must be positive")
    if args.model == "gnp":
        if args.p is None:
            raise ValueError("gnp needs --p")
        make = lambda seed: gnp(args.n, args.p, seed)
    else:
        if args.r is None:
            raise ValueError("random-regular needs --r")
        make = lambda seed: random_regular(args.n, args.r, seed)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    violations = 0
    mismatches = 0
    counts = {"holds": 0, "sharp": 0, "violated": 0, "not-applicable": 0}
    for index in range(args.count):
        seed = _instance_seed(args.seed, index)
        g = make(seed)
        report = verify_all(g, args.k)
        for status, value in report.status_counts().items():
            counts[status] += value
        violations += len(report.violations)
        if args.oracle:
            inv = compute_invariants(g, args.k, "both", with_oracle=True)
            mismatches += len(inv.oracle_mismatches)
            for line in inv.oracle_mismatches:
                print(f"oracle mismatch on instance {index}: {line}", file=sys.stderr)
        writer.writerow(_row(args, index, seed, report))
    _write_text(args.csv, buffer.getvalue())
    print(
        f"ensemble: {args.count} instances, checks "
        f"holds={counts['holds']} sharp={counts['sharp']} "
        f"violated={counts['violated']} not-applicable={counts['not-applicable']}",
        file=sys.stderr,
    )
    return 1 if violations or mismatches else 0


def _row(args: argparse.Namespace, index: int, seed: int, report: BoundsReport) -> list:
    def cell(value) -> object:
        return NA if value is None else value

    row = [
        f"{args.model}-n{args.n}-{index:04d}",
        args.model,
        args.n,
        cell(args.p if args.model == "gnp" else None),
        cell(args.r if args.model == "random-regular" else None),
        seed,
        report.n,
        report.edge_count,
        report.delta,
        report.Delta,
        report.k,
        cell(report.gamma),
        cell(report.d),
        cell(report.gamma_total),
        cell(report.d_total),
        cell(report.d_complement),
    ]
    by_id = {check.check_id: check.status for check in report.checks}
    row.extend(by_id[cid] for cid in CHECK_IDS)
    return row


if __name__ == "__main__":
    sys.exit(main())
