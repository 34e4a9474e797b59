"""Command-line front end: solve, inspect normalizers, verify, benchmark.

Exit codes: 0 success, 1 verification or agreement failure, 2 domain
errors (unsolvable instances, bad values, unwritable output), 64 usage
errors.  Integer arguments accept decimal or 0x-prefixed hex of any
length, with an optional leading sign.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import oracle
from .baselines import GcdAlgorithmId, binary_gcd, euclid_gcd, mixed_euclid_gcd
from .bench import (
    CorpusSpec,
    GcdDisagreement,
    emit_report,
    generate_corpus,
    merge_corpora,
    run_benchmark,
)
from .core import (
    BezoutTriple,
    NotRepresentableError,
    canonical_min_v,
    ext_gcd,
    normalizer_of,
)

EX_OK = 0
EX_FAILURE = 1
EX_DOMAIN = 2
EX_USAGE = 64

DEFAULT_BITS = (16, 32, 64, 256, 1024)
DEFAULT_PAIRS = 10_000
DEFAULT_PAIRS_LARGE = 500
LARGE_BITS_THRESHOLD = 512


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; 2 is reserved for domain errors
    here, so usage problems exit 64 instead."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # -0x1f must read as a negative number, not as an option flag
        self._negative_number_matcher = re.compile(r"^-(?:\d+|0[xX][0-9a-fA-F]+)$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _bigint(text: str) -> int:
    s = text.strip()
    negative = s.startswith("-")
    if negative or s.startswith("+"):
        s = s[1:]
    try:
        value = int(s, 16) if s[:2].lower() == "0x" else int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    return -value if negative else value


def _positive_int(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits: {text}")
    return value


def _bits_list(text: str) -> tuple[int, ...]:
    try:
        bits = tuple(int(part, 10) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"not a comma-separated list of integers: {text!r}"
        ) from None
    if not bits or any(k < 2 for k in bits) or len(set(bits)) != len(bits):
        raise argparse.ArgumentTypeError(
            f"bit sizes must be unique integers >= 2: {text!r}"
        )
    return bits


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="normgcd",
        description="Extended gcd with a normalized Bezout coordinate: "
        "solvers, verification, and benchmarking.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("extgcd", help="print u v g with u*a + v*b = g = gcd(a, b)")
    p.add_argument("a", type=_bigint)
    p.add_argument("b", type=_bigint)
    p.add_argument(
        "--canonical",
        action="store_true",
        help="report the solution with the smallest nonnegative v",
    )
    p.add_argument(
        "--conormalizer",
        action="store_true",
        help="append the t in [0, |a|-1] with |a| dividing g + t*b",
    )
    p.set_defaults(func=_cmd_extgcd)

    p = sub.add_parser("gcd", help="print gcd(a, b) computed by one algorithm")
    p.add_argument("a", type=_bigint)
    p.add_argument("b", type=_bigint)
    p.add_argument(
        "--algo",
        choices=[algo.value for algo in GcdAlgorithmId],
        default=GcdAlgorithmId.WWL2.value,
        help="algorithm to run (default: %(default)s)",
    )
    p.set_defaults(func=_cmd_gcd)

    p = sub.add_parser(
        "normalizer",
        help="print the v in [0, a-1] with a dividing c - v*b",
    )
    p.add_argument("a", type=_bigint)
    p.add_argument("b", type=_bigint)
    p.add_argument("c", type=_bigint)
    p.set_defaults(func=_cmd_normalizer)

    p = sub.add_parser(
        "verify",
        help="exhaustively check all pairs up to a bound against brute force",
    )
    p.add_argument(
        "--max",
        type=_positive_int,
        default=300,
        help="largest operand value to sweep (default: %(default)s)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the four algorithms on seeded corpora")
    p.add_argument(
        "--bits",
        type=_bits_list,
        default=None,
        help="comma-separated operand bit sizes (default: 16,32,64,256,1024)",
    )
    p.add_argument(
        "--count",
        type=_positive_int,
        default=None,
        help="pairs per bit size (default: 10000, 500 above 512 bits)",
    )
    p.add_argument("--seed", type=_seed, default=1, help="corpus seed (default: 1)")
    p.add_argument(
        "--format",
        choices=("csv", "json"),
        default="csv",
        help="report format (default: %(default)s)",
    )
    p.add_argument("--out", required=True, help="report output path")
    p.add_argument(
        "--reps",
        type=_positive_int,
        default=1,
        help="timed repetitions per pair (default: 1)",
    )
    p.set_defaults(func=_cmd_bench)

    return parser


def _canonicalize(a: int, b: int, t: BezoutTriple) -> BezoutTriple:
    """Minimal-nonnegative-v form of t, extended to signed operands."""
    if t.g == 0:
        raise ValueError("no canonical solution for (0, 0)")
    if a == 0 or b == 0:
        # one coordinate is forced and the other free: t is already canonical
        return t
    if a > 0 and b > 0:
        return canonical_min_v(a, b, t)
    step = abs(a) // t.g
    vn = t.v % step
    k = (t.v - vn) // (a // t.g)
    return BezoutTriple(t.u + k * (b // t.g), vn, t.g)


def _cmd_extgcd(args) -> int:
    t = ext_gcd(args.a, args.b)
    if args.canonical:
        t = _canonicalize(args.a, args.b, t)
    line = f"{t.u} {t.v} {t.g}"
    if args.conormalizer:
        if args.a == 0:
            print("co-normalizer undefined for a = 0", file=sys.stderr)
            return EX_DOMAIN
        line += f" {-t.v % abs(args.a)}"
    print(line)
    return EX_OK


def _cmd_gcd(args) -> int:
    algo = GcdAlgorithmId(args.algo)
    if algo is GcdAlgorithmId.WWL2:
        g = ext_gcd(args.a, args.b).g
    else:
        fn = {
            GcdAlgorithmId.EUCLID: euclid_gcd,
            GcdAlgorithmId.BINARY: binary_gcd,
            GcdAlgorithmId.MIXED: mixed_euclid_gcd,
        }[algo]
        g = fn(abs(args.a), abs(args.b))
    print(g)
    return EX_OK


def _cmd_normalizer(args) -> int:
    print(normalizer_of(args.a, args.b, args.c).value)
    return EX_OK


def _cmd_verify(args) -> int:
    report = oracle.exhaustive_verify(args.max)
    print(report.summary())
    if not report.passed:
        shown = report.failures[:20]
        for f in shown:
            print(
                f"  a={f.a} b={f.b} c={f.c}: expected {f.expected}, got {f.actual}",
                file=sys.stderr,
            )
        if len(report.failures) > len(shown):
            print(f"  ... and {len(report.failures) - len(shown)} more", file=sys.stderr)
        return EX_FAILURE
    return EX_OK


def _cmd_bench(args) -> int:
    bits = args.bits if args.bits is not None else DEFAULT_BITS
    if args.count is not None:
        counts = {k: args.count for k in bits}
    else:
        counts = {
            k: DEFAULT_PAIRS if k <= LARGE_BITS_THRESHOLD else DEFAULT_PAIRS_LARGE
            for k in bits
        }
    by_count: dict[int, list[int]] = {}
    for k in bits:
        by_count.setdefault(counts[k], []).append(k)
    corpora = [
        generate_corpus(CorpusSpec(tuple(sizes), n, args.seed))
        for n, sizes in by_count.items()
    ]
    corpus = merge_corpora(*corpora)

    report = run_benchmark(corpus, list(GcdAlgorithmId), args.reps)
    data = emit_report(report, args.format)
    try:
        with open(args.out, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EX_DOMAIN

    ratios = []
    for k in bits:
        w = report.cell(GcdAlgorithmId.WWL2.value, k).mean_ns
        x = report.cell(GcdAlgorithmId.MIXED.value, k).mean_ns
        ratios.append(w / x)
        print(f"wwl2/mixed mean-time ratio at {k} bits: {w / x:.3f}")
    print(f"wwl2/mixed mean-time ratio, average over sizes: {sum(ratios) / len(ratios):.3f}")
    print(args.out)
    return EX_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotRepresentableError as exc:
        print(f"not representable: {exc}", file=sys.stderr)
        return EX_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DOMAIN
    except GcdDisagreement as exc:
        print(f"agreement failure: {exc}", file=sys.stderr)
        return EX_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)
