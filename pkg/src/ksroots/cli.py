"""Command line: ``ksroots generate | analyze | reproduce``.

Exit codes: 0 ok, 1 usage, 2 I/O or malformed input, 3 check failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import colouring, fileformat
from .reproduce import NAMES, analyze, build, reproduce

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_CHECK = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ksroots", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a configuration file")
    g.add_argument("system", choices=NAMES)
    g.add_argument("out", type=Path)

    a = sub.add_parser("analyze", help="analyse a configuration file")
    a.add_argument("input", type=Path)
    a.add_argument("--cliques", type=int, metavar="K", help="count orthogonal k-tuples for k=2..K")
    a.add_argument("--anticliques", type=int, metavar="Q", help="count non-orthogonal q-tuples for q=2..Q")
    a.add_argument("--saturation", action="store_true")
    a.add_argument("--colour", choices=("decide", "count", "enumerate"), metavar="MODE")
    a.add_argument("--cnf", type=Path, metavar="OUT", help="write DIMACS CNF")
    a.add_argument("-o", "--output", type=Path, help="write the JSON report here instead of stdout")

    r = sub.add_parser("reproduce", help="recompute every numerical claim")
    r.add_argument("out_dir", type=Path)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.command == "generate":
            return _generate(args)
        if args.command == "analyze":
            return _analyze(args)
        return _reproduce(args)
    except OSError as exc:
        print(f"ksroots: {exc}", file=sys.stderr)
        return EXIT_IO
    except fileformat.ConfigFormatError as exc:
        print(f"ksroots: {args.__dict__.get('input')}: {exc}", file=sys.stderr)
        return EXIT_IO
    except AssertionError as exc:
        print(f"ksroots: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


def _generate(args) -> int:
    c = build(args.system)
    fileformat.save(c, args.out)
    print(f"{args.system}: {len(c)} rays, d={c.d} -> {args.out}")
    return EXIT_OK


def _analyze(args) -> int:
    c = fileformat.load(args.input)
    if args.cliques is not None and args.cliques < 2:
        print("ksroots: --cliques must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if args.anticliques is not None and args.anticliques < 2:
        print("ksroots: --anticliques must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    doc = analyze(
        c,
        cliques=args.cliques,
        anticliques=args.anticliques,
        saturation=args.saturation,
        colour=args.colour,
    )
    if args.cnf is not None:
        args.cnf.write_text(colouring.export_cnf(c))
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _reproduce(args) -> int:
    checks = reproduce(args.out_dir)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        print(c.line())
    print(f"TOTAL {len(checks) - len(failed)}/{len(checks)} PASS")
    if failed:
        print("failing checks: " + ", ".join(c.name for c in failed), file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
