"""Command-line front end.

Subcommands cover parsing, statistics, verification, transforms, catalog
access, histograms, link correlation, diagrams and bundled reports. Exit
codes: 0 success / verification passed, 1 verification failed, 2 parse or
validation error, 3 enumeration limit exceeded, 4 usage error. Reports go
to stdout, diagnostics to stderr. Identical invocations produce
byte-identical output.

The permutation-enumeration cap (default order 10) can be raised or
lowered with the CEN_MAX_ORDER environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, dsl, engine, render, transforms
from .core import Network, validate

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3
EXIT_USAGE = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 4, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _max_order() -> int | None:
    raw = os.environ.get("CEN_MAX_ORDER")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"CEN_MAX_ORDER must be an integer, got {raw!r}", EXIT_USAGE)


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--dsl", metavar="TEXT", help="network document text")
    g.add_argument("--file", metavar="PATH", help="path to a .cen document")
    g.add_argument("--catalog", metavar="NAME", help="catalog entry (batcher:N for the generator)")
    p.add_argument("--order", type=int, metavar="N", help="wire count (required with --dsl/--file)")


def _load_network(args) -> Network:
    if args.catalog is not None:
        try:
            return catalog.resolve(args.catalog)
        except (KeyError, ValueError) as exc:
            raise CliError(str(exc), EXIT_INVALID)
    if args.order is None:
        raise CliError("--order is required with --dsl/--file", EXIT_USAGE)
    if args.file is not None:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"--file: {exc}", EXIT_INVALID)
    else:
        text = args.dsl
    try:
        net = dsl.parse(text, args.order)
    except dsl.ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_INVALID)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    problems = validate(net)
    if problems:
        raise CliError("; ".join(str(v) for v in problems), EXIT_INVALID)
    return net


def _stats(net: Network, cost_weight: Fraction = engine.DEFAULT_COST_WEIGHT) -> engine.StatsReport:
    try:
        return engine.exhaustive_stats(net, cost_weight, max_order=_max_order())
    except engine.LimitExceeded as exc:
        raise CliError(str(exc), EXIT_LIMIT)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _print_stats_text(net: Network, rep: engine.StatsReport) -> None:
    name = f" {net.name}" if net.name else ""
    print(f"network{name}: order {rep.order}, {rep.links} links, "
          f"{len(net.elements)} elements, {rep.stages} stages")
    for idx, (el, ep) in enumerate(zip(net.elements, rep.element_probs), start=1):
        wires = ",".join(str(w) for w in el.endpoints)
        slots = " ".join(render.format_probability(p) for p in ep.slots)
        print(f"  {idx}\t({wires})\t{slots}")
    print(f"avg swaps {rep.avg_swaps} ({float(rep.avg_swaps):.6g})  max swaps {rep.max_swaps}")
    print(f"avg comparisons {rep.avg_comparisons} ({float(rep.avg_comparisons):.6g})  "
          f"max comparisons {rep.max_comparisons}")
    print(f"weighted cost {rep.weighted_cost} ({float(rep.weighted_cost):.6g})")
    print(f"settled {sorted(rep.settled)}  disorder {rep.disorder}")
    print("histogram " + " ".join(f"{k}:{v}" for k, v in rep.histogram))
    worst = " ".join("(" + ",".join(map(str, w)) + ")" for w in rep.worst_inputs[:8])
    more = "" if len(rep.worst_inputs) <= 8 else f" (+{len(rep.worst_inputs) - 8} more)"
    print(f"worst inputs {worst}{more}")


def cmd_stats(args) -> int:
    net = _load_network(args)
    rep = _stats(net, args.cost_weight)
    if args.json:
        print(json.dumps(engine.stats_to_json(rep), indent=2))
    else:
        _print_stats_text(net, rep)
    return EXIT_OK


def cmd_histogram(args) -> int:
    net = _load_network(args)
    try:
        hist = engine.histogram(net, max_order=_max_order())
    except engine.LimitExceeded as exc:
        raise CliError(str(exc), EXIT_LIMIT)
    if args.json:
        print(json.dumps({str(k): v for k, v in sorted(hist.items())}, indent=2))
    else:
        print("swaps\tinputs")
        for k, v in sorted(hist.items()):
            print(f"{k}\t{v}")
    return EXIT_OK


def cmd_verify(args) -> int:
    net = _load_network(args)
    checks: list[tuple[str, int, int | None]] = []
    if args.sort:
        checks.append(("sort", 0, None))
    if args.median:
        mid = (net.order + 1) // 2
        checks.append((f"select rank {mid} at position {mid}", mid, mid))
    if args.select:
        k, p = args.select
        checks.append((f"select rank {k} at position {p}", k, p))
    if not checks:
        raise CliError("choose at least one of --sort, --select, --median", EXIT_USAGE)
    failed = False
    for label, k, p in checks:
        try:
            if p is None:
                ok = engine.verify_sorts(net, max_order=_max_order())
            else:
                ok = engine.verify_selection(net, k, p, max_order=_max_order())
        except engine.LimitExceeded as exc:
            raise CliError(str(exc), EXIT_LIMIT)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INVALID)
        print(f"{label}: {'pass' if ok else 'FAIL'}")
        failed = failed or not ok
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_render(args) -> int:
    net = _load_network(args)
    rep = _stats(net) if args.stats else None
    try:
        text = render.render_svg(net, rep) if args.svg else render.render_ascii(net, rep)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _summary_line(tag: str, rep: engine.StatsReport) -> str:
    return (f"{tag}: links {rep.links}, max swaps {rep.max_swaps}, "
            f"avg swaps {rep.avg_swaps} ({float(rep.avg_swaps):.6g})")


def cmd_transform(args) -> int:
    net = _load_network(args)
    try:
        if args.pre_exchange is not None:
            result = transforms.pre_exchange(net, args.pre_exchange - 1)
        elif args.deoffend:
            result = transforms.deoffend(net, max_order=_max_order())
        elif args.fuse:
            result = transforms.fuse(net, max_order=_max_order())
        elif args.decompose:
            from .core import decompose

            result = decompose(net)
        else:
            res = transforms.minimize_max_swaps(net, budget=args.budget)
            if res.budget_exhausted:
                print(f"search budget {args.budget} exhausted; best seen returned",
                      file=sys.stderr)
            result = res.network
    except engine.LimitExceeded as exc:
        raise CliError(str(exc), EXIT_LIMIT)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    print(dsl.serialize(result))
    try:
        before, after = _stats(net), _stats(result)
    except CliError:
        return EXIT_OK  # beyond the statistics cap; the rewritten document stands alone
    print(_summary_line("before", before))
    print(_summary_line("after", after))
    return EXIT_OK


def cmd_correlate(args) -> int:
    net = _load_network(args)
    i, j = args.links
    try:
        table = engine.joint_swap_table(net, i - 1, j - 1, max_order=_max_order())
    except engine.LimitExceeded as exc:
        raise CliError(str(exc), EXIT_LIMIT)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    print(f"inputs {table.total}")
    print(f"neither\t{table.neither}")
    print(f"only {i}\t{table.first_only}")
    print(f"only {j}\t{table.second_only}")
    print(f"both\t{table.both}")
    print(f"P({i} swaps) = {table.first_marginal}")
    print(f"P({j} swaps) = {table.second_marginal}")
    if table.first_only + table.both:
        print(f"P({j} swaps | {i} swaps) = {table.second_given_first()}")
    if table.second_only + table.both:
        print(f"P({i} swaps | {j} swaps) = {table.first_given_second()}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name, provenance, summary in catalog.entries():
            print(f"{name}\t{summary}\t{provenance}")
        return EXIT_OK
    try:
        if args.action == "export":
            print(dsl.serialize(catalog.resolve(args.name)))
            return EXIT_OK
        entry = catalog.get(args.name.partition(":")[0])
    except (KeyError, ValueError) as exc:
        raise CliError(str(exc), EXIT_INVALID)
    print(f"name: {entry.name}")
    print(f"provenance: {entry.provenance}")
    if entry.summary():
        print(f"expected: {entry.summary()}")
    if entry.note:
        print(f"note: {entry.note}")
    if entry.generator is not None:
        print("parameterized: yes (use name:N)")
    else:
        print(f"dsl: {dsl.serialize(entry.network)}")
    return EXIT_OK


def cmd_report(args) -> int:
    from . import report

    net = _load_network(args)
    rep = _stats(net, args.cost_weight)
    created = report.write_report(net, rep, args.out)
    for path in created:
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="cenet", description="comparison-exchange network workbench")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[], help="exact swap/comparison statistics")
    _add_source(p)
    p.add_argument("--json", action="store_true", help="emit the JSON report schema")
    p.add_argument("--cost-weight", type=_frac, default=engine.DEFAULT_COST_WEIGHT,
                   metavar="W", help="swap weight in the cost figure (default 2)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="check sorting/selection exhaustively")
    _add_source(p)
    p.add_argument("--sort", action="store_true", help="full sort check (zero-one inputs)")
    p.add_argument("--select", nargs=2, type=int, metavar=("K", "P"),
                   help="rank K must land on wire P for every input")
    p.add_argument("--median", action="store_true", help="middle rank on the middle wire")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw the network")
    _add_source(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--ascii", action="store_true", help="character diagram (default)")
    fmt.add_argument("--svg", action="store_true", help="SVG diagram")
    p.add_argument("--stats", action="store_true", help="annotate with probabilities")
    p.add_argument("-o", "--output", metavar="PATH", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("transform", help="rewrite the network")
    _add_source(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--pre-exchange", type=int, metavar="IDX",
                      help="transpose upstream of link IDX (1-based)")
    mode.add_argument("--deoffend", action="store_true",
                      help="flip every link biased past one half")
    mode.add_argument("--fuse", action="store_true",
                      help="merge certified non-interfering pairs")
    mode.add_argument("--decompose", action="store_true",
                      help="expand fused elements into plain links")
    mode.add_argument("--min-max-swaps", action="store_true",
                      help="search even-odds pre-exchanges for a lower worst case")
    p.add_argument("--budget", type=int, default=1000, metavar="B",
                   help="candidate cap for --min-max-swaps")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("histogram", help="swap-count distribution")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("catalog", help="built-in networks")
    cat = p.add_subparsers(dest="action", required=True)
    cat.add_parser("list", help="all entries")
    q = cat.add_parser("show", help="entry details")
    q.add_argument("name")
    q = cat.add_parser("export", help="entry as a network document")
    q.add_argument("name")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("correlate", help="joint swap table of two elements")
    _add_source(p)
    p.add_argument("--links", nargs=2, type=int, required=True, metavar=("I", "J"),
                   help="element numbers, 1-based as in diagrams")
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("report", help="write the full report bundle to a directory")
    _add_source(p)
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--cost-weight", type=_frac, default=engine.DEFAULT_COST_WEIGHT, metavar="W")
    p.set_defaults(func=cmd_report)
    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except CliError as exc:
        print(f"cenet: {exc}", file=sys.stderr)
        code = exc.code
    except engine.LimitExceeded as exc:
        print(f"cenet: {exc}", file=sys.stderr)
        code = EXIT_LIMIT
    except ValueError as exc:
        print(f"cenet: {exc}", file=sys.stderr)
        code = EXIT_INVALID
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
