"""Command line front end.

Subcommands: count, enumerate, analyze, render, rankpattern.  Results go
to standard output (render also accepts --out), diagnostics to standard
error.  Exit codes: 0 success, 2 usage or parse errors, 3 self-check
mismatch, 4 irrational eigenvalues, 5 output I/O failure, 6 invalid rank
pattern.
"""

import argparse
import json
import sys

from .jordan import (IrrationalEigenvalueError, JordanSpec, analyze,
                     build_jordan)
from .linalg import matrix_from_json_dict
from .rank_analysis import (NonMonotoneGrowthError, RankPattern,
                            blocks_from_rank_pattern, nullity_growth)
from .render import grid_of, render_ascii, render_svg
from .segre import count_segre_gf, count_segre_sum, enumerate_segre, format_segre

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_IRRATIONAL = 4
EXIT_IO = 5
EXIT_BAD_PATTERN = 6


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segre",
        description="Enumerate, count, analyze, and draw Jordan structures "
                    "(Segre characteristics) with exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser(
        "count", help="number of equivalence classes of n x n structures")
    p_count.add_argument("n", type=int)
    p_count.add_argument("--method", choices=("gf", "sum", "both"),
                         default="gf",
                         help="generating function, partition sum, or both "
                              "(both cross-checks and fails on mismatch)")

    p_enum = sub.add_parser(
        "enumerate", help="list every Segre characteristic of weight n")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--format", choices=("text", "json"), default="text")

    p_analyze = sub.add_parser(
        "analyze", help="Segre characteristic of a rational matrix")
    p_analyze.add_argument("matrix_file",
                           help="JSON file: {\"rows\": n, \"cols\": n, "
                                "\"entries\": [[int or \"p/q\", ...], ...]}")
    p_analyze.add_argument("--format", choices=("text", "json"), default="text")

    p_render = sub.add_parser(
        "render", help="draw every weight-n structure as SVG or ASCII")
    p_render.add_argument("n", type=int)
    p_render.add_argument("--out", help="output path (default: stdout)")
    p_render.add_argument("--columns", type=int, default=4)
    p_render.add_argument("--format", choices=("svg", "ascii"), default="svg")

    p_rank = sub.add_parser(
        "rankpattern", help="Jordan blocks from a measured rank pattern")
    p_rank.add_argument("pattern",
                        help="textual form, e.g. \"n=10: 10,7,5,3,2,1,0\"")

    return parser


def cmd_count(args) -> int:
    if args.n < 0:
        return _fail("n must be >= 0", EXIT_USAGE)
    if args.method == "gf":
        print(count_segre_gf(args.n))
    elif args.method == "sum":
        print(count_segre_sum(args.n))
    else:
        by_gf = count_segre_gf(args.n)
        by_sum = count_segre_sum(args.n)
        print(by_gf)
        print(by_sum)
        if by_gf != by_sum:
            return _fail(
                f"counting methods disagree: gf={by_gf} sum={by_sum}",
                EXIT_MISMATCH)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    items = enumerate_segre(args.n)
    if args.format == "json":
        print(json.dumps([format_segre(s) for s in items]))
    else:
        for s in items:
            print(format_segre(s))
        print(f"total: {len(items)}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        with open(args.matrix_file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        return _fail(f"cannot read {args.matrix_file}: {exc}", EXIT_USAGE)
    except json.JSONDecodeError as exc:
        return _fail(f"{args.matrix_file} is not valid JSON: {exc}", EXIT_USAGE)
    try:
        matrix = matrix_from_json_dict(data)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if matrix.rows != matrix.cols:
        return _fail(f"matrix must be square, got {matrix.rows}x{matrix.cols}",
                     EXIT_USAGE)
    try:
        report = analyze(matrix)
    except IrrationalEigenvalueError as exc:
        return _fail(str(exc), EXIT_IRRATIONAL)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"segre: {report.segre}")
        for entry in report.per_eigenvalue:
            print(f"eigenvalue {entry.eigenvalue}:")
            print(f"  rank pattern: {entry.rank_pattern}")
            print(f"  blocks: {entry.blocks}")
    return EXIT_OK


def cmd_render(args) -> int:
    if args.n < 1:
        return _fail("n must be >= 1", EXIT_USAGE)
    if args.columns < 1:
        return _fail("--columns must be >= 1", EXIT_USAGE)
    items = enumerate_segre(args.n)
    grids = [grid_of(JordanSpec.positional(s)) for s in items]
    if args.format == "svg":
        text = render_svg(grids, args.columns)
    else:
        blocks = [f"{format_segre(s)}\n{render_ascii(g)}"
                  for s, g in zip(items, grids)]
        text = "\n\n".join(blocks) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            return _fail(f"cannot write {args.out}: {exc}", EXIT_IO)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_rankpattern(args) -> int:
    try:
        pattern = RankPattern.parse(args.pattern)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        growth = nullity_growth(pattern)
    except NonMonotoneGrowthError as exc:
        return _fail(str(exc), EXIT_BAD_PATTERN)
    blocks = blocks_from_rank_pattern(pattern)
    print("growth: [" + ",".join(map(str, growth)) + "]")
    print(f"blocks: {blocks}")
    return EXIT_OK


_COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "analyze": cmd_analyze,
    "render": cmd_render,
    "rankpattern": cmd_rankpattern,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return _COMMANDS[args.command](args)


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
