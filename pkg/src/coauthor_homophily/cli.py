"""Command line entry point.

Exit codes: 0 success, 1 I/O or parse error, 2 validation error,
3 equivalence check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .errors import ParseError, UndefinedMetric, ValidationError
from .graph import ValidationPolicy, build_network, build_reciprocated_graph
from .ingest import FORMATS, LabelMapping, infer_format, load_dataset, read_edges, write_records
from .report import build_report, equivalence_section, render_equivalence, render_text, to_json
from .synth import SynthConfig, generate, parse_size_dist

log = logging.getLogger(__name__)

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_UNCERTIFIED = 0, 1, 2, 3
DEFAULT_C_VALUES = "0.5,1,3"


class UsageError(Exception):
    pass


def _c_values(text):
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad scale constants {text!r}") from None
    if not values or any(not v > 0 for v in values):
        raise argparse.ArgumentTypeError("scale constants must be positive")
    return values


def _mapping(text):
    try:
        return LabelMapping.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_input_args(p):
    p.add_argument("input", nargs="?", help="dataset file (CSV or JSONL)")
    p.add_argument("--edges", metavar="PATH", help="undirected edge list CSV instead of a dataset")
    p.add_argument("--format", choices=FORMATS, help="dataset format (default: from file extension)")
    p.add_argument("--mapping", type=_mapping, default=LabelMapping.default(), help="label tokens, e.g. F=+,M=-")
    p.add_argument("--on-unknown", choices=["reject-record", "reject-dataset"], default="reject-record")
    p.add_argument("--out", choices=["text", "json"], default="text")
    p.add_argument("--c-values", type=_c_values, default=_c_values(DEFAULT_C_VALUES), metavar="C1,C2,...")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coauthor-homophily",
        description="Gender homophily and assortativity of co-authorship data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="report alpha, r (both weightings) and mixing matrices")
    _add_input_args(p)

    p = sub.add_parser("check", help="verify inverse-degree r equals alpha")
    _add_input_args(p)

    p = sub.add_parser("synth", help="write a random dataset")
    p.add_argument("--papers", type=int, required=True)
    size = p.add_mutually_exclusive_group()
    size.add_argument("--size", type=int, help="authors per paper (default 3)")
    size.add_argument("--size-dist", help="'2-8' for uniform sizes or '2:5,3:3' for weights")
    p.add_argument("--pfrac", type=float, default=0.5, help="probability an author is positive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, help="output format (default: from extension)")
    p.add_argument("--mapping", type=_mapping, default=LabelMapping.default())
    p.add_argument("-o", "--output", required=True, help="output path")
    return parser


def _load(args):
    if bool(args.input) == bool(args.edges):
        raise UsageError("give exactly one of INPUT or --edges")
    orientation = args.mapping.orientation()
    if args.edges:
        network = build_reciprocated_graph(read_edges(args.edges, args.mapping))
        source = {"kind": "edges"}
        return network, source, orientation, None, []
    records, diag = load_dataset(args.input, args.format, args.mapping, ValidationPolicy(args.on_unknown))
    network, warnings = build_network(records)
    source = {"kind": "records", "format": args.format or infer_format(args.input)}
    return network, source, orientation, diag.as_dict(), warnings


def cmd_compute(args, out) -> int:
    network, source, orientation, dataset, warnings = _load(args)
    doc = build_report(
        network, source=source, orientation=orientation, dataset=dataset, c_values=args.c_values, warnings=warnings
    )
    out.write(to_json(doc) if args.out == "json" else render_text(doc))
    return EXIT_OK


def cmd_check(args, out) -> int:
    network, *_ = _load(args)
    eq = equivalence_section(network, args.c_values)
    if args.out == "json":
        out.write(json.dumps(eq, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(render_equivalence(eq)) + "\n")
    return EXIT_OK if eq["certified"] else EXIT_UNCERTIFIED


def cmd_synth(args, out) -> int:
    try:
        if args.size_dist:
            config = SynthConfig(args.papers, size_weights=parse_size_dist(args.size_dist),
                                 positive_fraction=args.pfrac, seed=args.seed)
        else:
            config = SynthConfig(args.papers, size=args.size or 3, positive_fraction=args.pfrac, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records = generate(config)
    write_records(records, args.output, args.format, args.mapping)
    log.info("wrote %d papers to %s", len(records), args.output)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "check": cmd_check, "synth": cmd_synth}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except UndefinedMetric as exc:
        print(f"error: metric undefined: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValidationError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        name = exc.filename if exc.filename is not None else ""
        print(f"error: parse error: cannot read {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
