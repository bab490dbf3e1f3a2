"""Command-line front end.

Subcommands: gen (emit a sequence), matrix (emit a generation matrix),
verify (check a sequence, nonzero exit on failure), analyze (always
exit 0, print the full report), rank-stats (full-rank statistics),
permute (rearrange address bits of a sequence).

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .analysis import analyze, format_report
from .families import (
    FAMILY_HELP,
    exhaustive_rank_counts,
    expected_rank_deficit,
    family_matrix,
    fullrank_acceptance_rate,
    fullrank_probability,
    permute_address_bits,
)
from .formats import FORMATS, SequenceParseError, format_lines, parse_lines
from .generate import (
    AddressStream,
    generate_direct,
    generate_down,
    generate_recursive,
    generate_shifted,
)
from .gf2 import GenerationMatrix, RankDeficiencyError

DEFAULT_VERIFY_CAP = 28  # verify materializes a 2^m-bit presence map


def _int_flag(text: str) -> int:
    # accepts decimal, or binary/hex/octal with explicit 0b/0x/0o prefix
    try:
        return int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an integer (use decimal, or a 0b/0x prefix)"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addrseq",
        description="Generate and analyze memory-test address sequences.",
    )
    parser.add_argument("--version", action="version", version=f"addrseq {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit an address sequence on stdout")
    gen.add_argument("-m", type=int, help="address width in bits (1..64)")
    src = gen.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help=f"matrix family: {FAMILY_HELP}")
    src.add_argument("--matrix", help="matrix text file (first line m=<int>)")
    gen.add_argument("--engine", choices=("recursive", "direct"), default="recursive")
    gen.add_argument("--down", action="store_true", help="emit the reversed sequence")
    gen.add_argument("--shift", type=int, help="emit the sequence rotated by L positions")
    gen.add_argument("--a0", type=_int_flag, default=0, help="initial address (e.g. 0b1000 or 8)")
    gen.add_argument("--b0", type=_int_flag, default=0, help="initial counter (e.g. 0b0011 or 3)")
    gen.add_argument("--count", type=int, help="addresses to emit (default 2^m)")
    gen.add_argument("--format", choices=FORMATS, default="bin")
    gen.add_argument("--seed", type=int, help="seed for the random family")

    mat = sub.add_parser("matrix", help="emit a family matrix in the text format")
    mat.add_argument("-m", type=int, required=True)
    mat.add_argument("--family", required=True, help=f"matrix family: {FAMILY_HELP}")
    mat.add_argument("--check", action="store_true", help="report the rank on stderr")
    mat.add_argument("--seed", type=int, help="seed for the random family")

    ver = sub.add_parser("verify", help="check a sequence; exit 1 on any property failure")
    ana = sub.add_parser("analyze", help="print the full report; always exit 0")
    for p in (ver, ana):
        p.add_argument("-m", type=int, required=True)
        p.add_argument("input", nargs="?", help="sequence file (default: stdin)")
        p.add_argument("--format", choices=FORMATS + ("auto",), default="auto")
        p.add_argument("--max-r", type=int, default=4, help="largest balance tuple size")
    ver.add_argument(
        "--max-m",
        type=int,
        default=DEFAULT_VERIFY_CAP,
        help=f"refuse widths above this cap (default {DEFAULT_VERIFY_CAP})",
    )

    rs = sub.add_parser("rank-stats", help="full-rank statistics for random matrices")
    rs.add_argument("-m", type=int, required=True)
    rs.add_argument("-n", "--samples", type=int, default=100_000)
    rs.add_argument("--seed", type=int, default=0)
    rs.add_argument("--exhaustive", action="store_true", help="enumerate all matrices (m <= 4)")

    perm = sub.add_parser("permute", help="rearrange the bits of every address")
    perm.add_argument("-m", type=int, required=True)
    perm.add_argument("input", nargs="?", help="sequence file (default: stdin)")
    perm.add_argument("--perm", required=True, help="comma list: output bit k reads input bit perm[k]")
    perm.add_argument("--format", choices=FORMATS, default="bin")
    perm.add_argument("--in-format", choices=FORMATS + ("auto",), default="auto")

    return parser


def _load_matrix(path: str) -> GenerationMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return GenerationMatrix.from_text(fh.read())


def _read_lines(path: str | None) -> list[str]:
    if path is None:
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read().splitlines()


def _cmd_gen(args) -> int:
    if args.matrix:
        matrix = _load_matrix(args.matrix)
        if args.m is not None and args.m != matrix.m:
            raise ValueError(f"-m {args.m} conflicts with matrix width {matrix.m}")
    else:
        if args.m is None:
            raise ValueError("-m is required with --family")
        matrix = family_matrix(args.family, args.m, seed=args.seed)
    m = matrix.m

    if args.shift is not None and (args.a0 or args.b0 or args.down):
        raise ValueError("--shift computes a0/b0 itself; do not combine with --a0/--b0/--down")
    if args.engine == "direct" and (args.a0 or args.b0 or args.down or args.shift is not None):
        raise ValueError("--engine direct runs the plain counter form; use recursive for variants")

    if args.engine == "direct":
        stream = generate_direct(matrix, args.count)
    elif args.shift is not None:
        stream = generate_shifted(matrix, args.shift, args.count)
    elif args.down:
        stream = generate_down(matrix, args.a0, args.b0, args.count)
    else:
        stream = generate_recursive(matrix, args.a0, args.b0, args.count)

    for line in format_lines(stream.words(), m, args.format):
        print(line)
    return 0


def _cmd_matrix(args) -> int:
    matrix = family_matrix(args.family, args.m, seed=args.seed)
    sys.stdout.write(matrix.to_text())
    if args.check:
        print(f"rank={matrix.rank}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.m > args.max_m:
        raise ValueError(
            f"verify materializes a 2^{args.m}-bit presence map; "
            f"raise --max-m beyond {args.max_m} to allow it"
        )
    words = parse_lines(_read_lines(args.input), args.m, args.format)
    report = analyze(words, args.m, max_r=args.max_r)
    sys.stdout.write(format_report(report))
    return 0 if report.ok else 1


def _cmd_analyze(args) -> int:
    words = parse_lines(_read_lines(args.input), args.m, args.format)
    report = analyze(words, args.m, max_r=args.max_r)
    sys.stdout.write(format_report(report))
    return 0


def _cmd_rank_stats(args) -> int:
    print(f"m={args.m}")
    print(f"analytic_fullrank_probability={fullrank_probability(args.m):.13f}")
    if args.exhaustive:
        counts = exhaustive_rank_counts(args.m)
        total = sum(counts.values())
        full = counts[args.m]
        deficit = sum((args.m - r) * c for r, c in counts.items()) / total
        print(f"exhaustive_total={total}")
        print(f"exhaustive_fullrank={full}")
        print(f"exhaustive_fullrank_fraction={full / total}")
        print(f"exhaustive_expected_rank_deficit={deficit}")
    print(f"samples={args.samples}")
    print(f"seed={args.seed}")
    print(f"mc_fullrank_rate={fullrank_acceptance_rate(args.m, args.samples, args.seed)}")
    print(f"mc_expected_rank_deficit={expected_rank_deficit(args.m, args.samples, args.seed)}")
    return 0


def _cmd_permute(args) -> int:
    try:
        perm = [int(x) for x in args.perm.split(",")]
    except ValueError:
        raise ValueError(f"--perm expects a comma list of positions, got {args.perm!r}") from None
    words = parse_lines(_read_lines(args.input), args.m, args.in_format)
    stream = permute_address_bits(AddressStream.from_words(args.m, words), perm)
    for line in format_lines(stream.words(), args.m, args.format):
        print(line)
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "matrix": _cmd_matrix,
    "verify": _cmd_verify,
    "analyze": _cmd_analyze,
    "rank-stats": _cmd_rank_stats,
    "permute": _cmd_permute,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    m = getattr(args, "m", None)
    if m is not None and not 1 <= m <= 64:
        print(f"addrseq: m must be in 1..64, got {m}", file=sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except RankDeficiencyError as exc:
        print(f"addrseq: {exc}", file=sys.stderr)
        return 2
    except SequenceParseError as exc:
        print(f"addrseq: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"addrseq: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
