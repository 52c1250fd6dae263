"""``qparity`` command line.

Exit codes: 0 success, 1 usage error, 2 domain error (e.g. element cap).
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import density, partition, trees
from .rational import INF, classify, format_rational, nu, nu2, parse_rational

EXIT_USAGE = 1
EXIT_DOMAIN = 2


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-5/4" through as a positional value, not an option
        self._negative_number_matcher = re.compile(r"^-\d+(/-?\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _decimal(x) -> str:
    return f"{float(x):.12g}"


def _val(v) -> str:
    return "inf" if v == INF else str(v)


@contextmanager
def _csv_out(path, stdout):
    if path is None or path == "-":
        yield csv.writer(stdout, lineterminator="\n")
        return
    with open(path, "w", newline="", encoding="utf-8") as fh:
        yield csv.writer(fh, lineterminator="\n")


def cmd_classify(args, out):
    q = args.q
    v = nu2(q)
    print(f"q={format_rational(q)}", file=out)
    print(f"parity={classify(q)}", file=out)
    print(f"nu2={_val(v)}", file=out)
    print(f"level=Q_{_val(v)}", file=out)
    form = partition.dyadic_decompose(q)
    if form is None:
        print("dyadic=not dyadic", file=out)
    elif form.is_zero:
        print("dyadic=0", file=out)
    else:
        print(f"dyadic=2^{form.k}*(2*{form.ell}-1)", file=out)
    print(f"in_QP={'yes' if partition.in_QP(q) else 'no'}", file=out)
    rep = partition.coset_rep(q)
    if rep is not None:
        print(f"rep={rep} (k={rep.k}, ell={rep.ell})", file=out)


def cmd_valuation(args, out):
    if args.p < 2:
        raise UsageError(f"--p must be >= 2, got {args.p}")
    print(_val(nu(args.q, args.p)), file=out)


def _tree_rows(kind, rows, parity_only, cap):
    if kind == "cw":
        total = (1 << rows) - 1
    else:
        total = sum((1 << k) + 1 for k in range(1, rows + 1))
    if total > cap:
        raise DomainError(f"{total} tree elements requested, cap is {cap}")
    for r in range(1, rows + 1):
        if kind == "cw":
            if parity_only:
                yield r, None, trees.cw_parity_row(r, cap)
            else:
                pairs = trees.cw_row_pairs(r, cap)
                yield r, pairs, "".join(
                    classify(Fraction(m, n)).symbol for m, n in pairs)
        else:
            if parity_only:
                yield r, None, trees.sb_parity_level(r, cap)
            else:
                entries = trees.sb_level(r, cap)
                pairs = [(e.value.numerator, e.value.denominator) for e in entries]
                yield r, pairs, "".join(e.parity.symbol for e in entries)


def cmd_tree(args, out):
    if args.rows < 1:
        raise UsageError("--rows must be >= 1")
    rows = list(_tree_rows(args.kind, args.rows, args.parity_only and not args.csv, args.cap))
    if args.csv:
        with _csv_out(args.csv, out) as w:
            w.writerow(["row", "index_in_row", "num", "den", "parity"])
            for r, pairs, syms in rows:
                for i, ((m, n), s) in enumerate(zip(pairs, syms)):
                    w.writerow([r, i, m, n, s])
        return
    for r, pairs, syms in rows:
        if args.parity_only:
            print(syms, file=out)
        else:
            print(" ".join(f"{m}/{n}" for m, n in pairs), file=out)


DENSITY_HEADER = ["ordering", "n", "count_even", "count_odd", "count_none",
                  "ratio_even", "ratio_odd", "ratio_none"]


def cmd_density(args, out):
    try:
        ordering = density.Ordering.parse(args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    count = args.count
    if ordering is density.Ordering.LIST and args.n_max is not None and count is None:
        count = len(density.list_order(args.n_max))
    if ordering is density.Ordering.FAREY and args.n_max is not None and count is None:
        count = density.farey_length(args.n_max)
    if count is None or count < 1:
        raise UsageError("--count must be given and >= 1")
    checkpoints = None
    if args.checkpoints:
        try:
            checkpoints = [int(c) for c in args.checkpoints.split(",")]
        except ValueError:
            raise UsageError(f"bad --checkpoints {args.checkpoints!r}") from None
        if any(not 1 <= c <= count for c in checkpoints):
            raise UsageError(f"checkpoints must lie in [1, {count}]")
    elif ordering is density.Ordering.LIST and args.n_max is not None:
        # one row per denominator cut-off 2..n_max
        checkpoints = [c for c in density.list_order_cutoffs(args.n_max) if c <= count]
    if count > args.cap:
        raise DomainError(f"{count} elements requested, cap is {args.cap}")
    try:
        report = density.density_report(ordering, count, checkpoints,
                                        n_max=args.n_max, cap=args.cap)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    with _csv_out(args.csv, out) as w:
        w.writerow(DENSITY_HEADER)
        for row in report.rows:
            w.writerow([ordering.value, row.n, *row.counts,
                        *(_decimal(r) for r in row.ratios)])


def cmd_coset(args, out):
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    print(" ".join(str(r) for r in partition.coset_reps(args.k)), file=out)


def cmd_coset_eq(args, out):
    q1, q2 = args.q1, args.q2
    equal = partition.coset_equal(q1, q2)
    line = "equal" if equal else "distinct"
    w = partition.coset_witness(q1, q2)
    if w is not None:
        line += f" (k={-nu2(q1)}, nu2(a1*b2-a2*b1)={_val(w)})"
    else:
        line += f" (nu2(q1)={_val(nu2(q1))}, nu2(q2)={_val(nu2(q2))})"
    print(line, file=out)


def cmd_farey(args, out):
    if args.n < 1:
        raise UsageError("N must be >= 1")
    print(" ".join(format_rational(q) for q in density.farey(args.n)), file=out)


def cmd_plane(args, out):
    if args.k_min > args.k_max:
        raise UsageError("--k-min must not exceed --k-max")
    if args.max_odd < 1:
        raise UsageError("--max-odd must be >= 1")
    top = args.max_odd if args.max_odd % 2 else args.max_odd - 1
    with _csv_out(args.csv, out) as w:
        w.writerow(["num", "den", "value_decimal", "nu2", "mu2"])
        for k in range(args.k_min, args.k_max + 1):
            scale = Fraction(2) ** k
            for odd in range(-top, top + 1, 2):
                q = scale * odd
                w.writerow([q.numerator, q.denominator, _decimal(q), k, _decimal(scale)])


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qparity", description="Parity and 2-adic partition of the rationals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", help="parity, valuation, level and coset of a rational")
    s.add_argument("q", type=_rational)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("valuation", help="p-adic valuation")
    s.add_argument("q", type=_rational)
    s.add_argument("--p", type=int, default=2)
    s.set_defaults(func=cmd_valuation)

    s = sub.add_parser("tree", help="Calkin-Wilf rows or Stern-Brocot levels")
    s.add_argument("kind", choices=["cw", "sb"])
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--parity-only", action="store_true")
    s.add_argument("--csv")
    s.add_argument("--cap", type=int, default=trees.DEFAULT_CAP)
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("density", help="prefix densities of the parity classes")
    s.add_argument("--order", required=True)
    s.add_argument("--count", type=int)
    s.add_argument("--n-max", type=int, help="denominator bound for list-order / farey")
    s.add_argument("--checkpoints")
    s.add_argument("--csv", help="output path ('-' or omitted for stdout)")
    s.add_argument("--cap", type=int, default=trees.DEFAULT_CAP)
    s.set_defaults(func=cmd_density)

    s = sub.add_parser("coset", help="coset representatives of Q_P at level -k")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_coset)

    s = sub.add_parser("coset-eq", help="do q1 and q2 lie in the same coset of Q_P")
    s.add_argument("q1", type=_rational)
    s.add_argument("q2", type=_rational)
    s.set_defaults(func=cmd_coset_eq)

    s = sub.add_parser("farey", help="Farey sequence in (0, 1)")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_farey)

    s = sub.add_parser("plane", help="dyadic points 2^k (2l - 1) as CSV")
    s.add_argument("--k-min", type=int, required=True)
    s.add_argument("--k-max", type=int, required=True)
    s.add_argument("--max-odd", type=int, required=True)
    s.add_argument("--csv")
    s.set_defaults(func=cmd_plane)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except UsageError as exc:
        print(f"qparity: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, trees.CapExceededError) as exc:
        print(f"qparity: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture stdout."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
