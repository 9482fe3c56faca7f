"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 construction error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import FORMATS, RunConfig, resolve_config
from .decomposition import local_decomposition
from .deciders import ClassificationReport, classify
from .errors import ParseError, PruferLabError
from .harness import load_corpus, render_table, run_corpus
from .ideals import all_ideals
from .ring import TableRing, idempotents, units
from .search import search
from .spec import build, loads

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_CONSTRUCTION = 0, 1, 2, 3


def _read_spec(path: str):
    if path == "-":
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read spec file: {exc.strerror}", path) from None
    return loads(text)


def ring_summary(R: TableRing) -> dict:
    return {
        "order": R.order,
        "char": R.char,
        "units": len(units(R)),
        "idempotents": len(idempotents(R)),
        "ideals": len(all_ideals(R)),
        "factors": local_decomposition(R).orders(),
    }


def format_summary(summary: dict) -> str:
    factors = ",".join(str(n) for n in summary["factors"])
    return (f"order={summary['order']} char={summary['char']} units={summary['units']} "
            f"idempotents={summary['idempotents']} ideals={summary['ideals']} factors=[{factors}]")


def _flag(value: bool) -> str:
    return "true" if value else "false"


def format_classification(report: ClassificationReport, description: str) -> str:
    R = report.ring
    lines = [f"ring: {description} (order {R.order}, char {R.char})", f"degree bound: {report.degree_bound}"]
    g = report.gaussian
    if g.witness is not None:
        gaussian = f"refuted(f={g.witness.f.format()},g={g.witness.g.format()})"
    else:
        gaussian = str(g)
    witnesses = report.to_json()["witnesses"]
    rows = [
        ("pruefer", _flag(report.pruefer.holds)),
        ("gaussian", gaussian),
        ("arithmetical", _flag(report.arithmetical.holds)),
        ("wdim_le_1", f"{_flag(report.wdim_le_1)} (class {report.wdim.value})"),
        ("semihereditary", _flag(report.semihereditary.holds)),
    ]
    for name, value in rows:
        line = f"{name}={value}"
        w = witnesses.get(name)
        if name == "gaussian" and w is not None:
            line += f"  c(fg)={w['c(fg)']} c(f)c(g)={w['c(f)c(g)']}"
        elif name == "arithmetical" and w is not None:
            line += f"  witness {w['ideal']} at maximal ideal {w['maximal_ideal']}"
        elif name == "semihereditary" and w is not None:
            line += f"  witness {w['ideal']} is not projective"
        elif name == "wdim_le_1" and w is not None and "resolution" in w:
            r = w["resolution"]
            line += f"  resolution witness on {r['shape']} with x={r['x']}"
        lines.append(line)
    lines.append(f"total={_flag(report.total)} local={_flag(report.local)}")
    return "\n".join(lines)


# -- commands -----------------------------------------------------------------------

def cmd_build(args, config: RunConfig) -> int:
    spec = _read_spec(args.spec)
    R = build(spec, config.order_cap, config.pair_cap)
    summary = ring_summary(R)
    if config.format == "machine":
        print(json.dumps({"ring": spec.describe(), **summary}, ensure_ascii=False))
    else:
        print(format_summary(summary))
    return EXIT_OK


def cmd_classify(args, config: RunConfig) -> int:
    spec = _read_spec(args.spec)
    R = build(spec, config.order_cap, config.pair_cap)
    report = classify(R, config.degree_bound, config.gaussian_budget)
    if config.format == "machine":
        print(json.dumps(report.to_json(spec.describe()), indent=2, ensure_ascii=False))
    else:
        print(format_classification(report, spec.describe()))
    return EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    entries = load_corpus(args.corpus)
    report = run_corpus(entries, config)
    if config.format == "machine":
        sys.stdout.write(report.dumps())
    else:
        print(render_table(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_search(args, config: RunConfig) -> int:
    entries = load_corpus(args.corpus)
    matches = search(args.expression, args.max_order, config, entries)
    if config.format == "machine":
        doc = {
            "expression": args.expression,
            "max_order": args.max_order,
            "degree_bound": config.degree_bound,
            "matches": [{"name": m.name, "source": m.source, "description": m.description,
                         "order": m.order, "verdicts": m.values} for m in matches],
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(f"{len(matches)} match(es) for {args.expression!r} up to order {args.max_order} "
              f"(gaussian = unrefuted up to degree {config.degree_bound})")
        for m in matches:
            print(f"  order {m.order:<4d} {m.source:<9s} {m.name}: {m.description}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-bound", type=int, default=None, help="Gaussian sweep degree bound D (default 2)")
    common.add_argument("--order-cap", type=int, default=None,
                        help="largest ring order to build (default 4096, or PRUFERLAB_ORDER_CAP)")
    common.add_argument("--iso-cap", type=int, default=None, help="isomorphism search cap (default 64)")
    common.add_argument("--format", choices=FORMATS, default=None, help="output format (default table)")

    parser = argparse.ArgumentParser(prog="pruferlab",
                                     description="Decide Prüfer-like conditions on finite commutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build a ring from a spec file and summarize it")
    p.add_argument("spec", help="JSON spec file, or - for stdin")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("classify", parents=[common], help="decide the five conditions for a ring")
    p.add_argument("spec", help="JSON spec file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run the theorem harness over a corpus")
    p.add_argument("--corpus", default=None, help="corpus directory (default: the bundled corpus)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="find rings satisfying a property expression")
    p.add_argument("expression", help='e.g. "pruefer and not gaussian"')
    p.add_argument("--max-order", type=int, default=16, help="largest order searched (default 16)")
    p.add_argument("--corpus", default=None, help="corpus directory (default: the bundled corpus)")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = resolve_config(args.degree_bound, args.order_cap, args.iso_cap, args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, config)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PruferLabError as exc:
        print(f"construction error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION


if __name__ == "__main__":
    sys.exit(main())
