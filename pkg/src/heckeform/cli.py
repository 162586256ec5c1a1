"""Command-line interface: gram, unitary, locus, verify, jantzen, det, element.

Exit codes: 0 success/agreement, 1 mathematical mismatch, 2 usage error,
3 resource guard. Output is deterministic for fixed inputs regardless of
--threads.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .combinat import Partition
from .cyclo import RationalC
from .hecke import AlgebraSpec, jucys_murphy, m_lambda, sigma, x_lambda
from .specht import (GuardError, det_factor_table, gram_determinant_cached,
                     hermitian_gram, jantzen_layers, symbolic_specht)
from .unitarity import (CSV_HEADER, scan_locus, verdict, verify_classification)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

MAX_SYMBOLIC_N = 8  # single-shape commands refuse larger ranks


def _default_bits() -> int:
    return int(os.environ.get("HECKEFORM_PRECISION_BITS", "64"))


def _emit(args, payload: dict | list, csv_rows: list | None = None,
          csv_header: list | None = None, pretty: str | None = None) -> None:
    out = sys.stdout
    path = getattr(args, "out", None)
    if path:
        out = open(path, "w", encoding="utf-8")
    try:
        if args.format == "json":
            json.dump(payload, out, indent=2, sort_keys=False)
            out.write("\n")
        elif args.format == "csv":
            if csv_rows is None:
                raise ValueError("this command has no CSV form")
            if csv_header:
                out.write(",".join(csv_header) + "\n")
            for row in csv_rows:
                out.write(",".join(row) + "\n")
        else:
            out.write((pretty if pretty is not None else json.dumps(payload, indent=2)) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _parse_partition(text: str) -> Partition:
    try:
        p = Partition.parse(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}") from exc
    if p.is_empty:
        raise UsageError("the empty partition is not a valid shape here")
    return p


def _parse_c(text: str) -> RationalC:
    try:
        return RationalC.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational angle {text!r}: {exc}") from exc


class UsageError(ValueError):
    pass


def _guard_n(p: Partition) -> None:
    if p.n > MAX_SYMBOLIC_N:
        raise GuardError(f"|lambda| = {p.n} exceeds the symbolic guard {MAX_SYMBOLIC_N}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gram(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    sd = symbolic_specht(shape.parts)
    if args.hermitian:
        if args.c is None:
            raise UsageError("--hermitian needs --c")
        c = _parse_c(args.c)
        hg = hermitian_gram(sd, c)
        payload = {
            "lambda": str(shape),
            "c": str(c),
            "kind": "hermitian",
            "alpha": hg.alpha.to_json(),
            "matrix": [[x.to_json() for x in row] for row in hg.matrix],
        }
    elif args.c is not None:
        from .specht import specialize_matrix
        c = _parse_c(args.c)
        g_c = specialize_matrix(sd.gram, c)
        payload = {
            "lambda": str(shape),
            "c": str(c),
            "kind": "specialized",
            "matrix": [[x.to_json() for x in row] for row in g_c],
        }
    else:
        payload = {
            "lambda": str(shape),
            "kind": "symbolic",
            "basis": [str(t) for t in sd.basis],
            "matrix": [[x.to_json() for x in row] for row in sd.gram],
        }
    _emit(args, payload)
    return EXIT_OK


def cmd_unitary(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    if args.c is None:
        raise UsageError("unitary needs --c")
    v = verdict(shape, _parse_c(args.c), start_bits=args.precision_start_bits)
    pretty = (f"lambda={shape} c={args.c}: {v.status} "
              f"signature={v.signature} dim_S={v.dim_s} dim_D={v.dim_d}")
    _emit(args, v.to_json(), pretty=pretty)
    return EXIT_OK


def cmd_locus(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    report = scan_locus(shape, args.bound, start_bits=args.precision_start_bits)
    pretty_lines = [f"lambda={shape} bound={args.bound} agreement={report.agreement}"]
    pretty_lines += [f"  MISMATCH {m}" for m in report.mismatches]
    _emit(args, report.to_json(), csv_rows=report.csv_rows(), csv_header=CSV_HEADER,
          pretty="\n".join(pretty_lines))
    return EXIT_OK if report.agreement else EXIT_MISMATCH


def cmd_verify(args) -> int:
    if args.n_max > 7:
        raise GuardError("verify is guarded to --n-max <= 7")
    bound = args.bound if args.bound is not None else max(14, 2 * args.n_max + 2)
    if bound < 2 * args.n_max + 2:
        raise UsageError(f"--bound must be at least 2*n_max+2 = {2 * args.n_max + 2}")
    summary = verify_classification(args.n_max, bound, threads=args.threads,
                                    start_bits=args.precision_start_bits)
    payload = {
        "n_max": summary["n_max"],
        "bound": summary["bound"],
        "agreement": summary["agreement"],
        "shapes": summary["shapes"],
        "mismatches": summary["mismatches"],
    }
    lines = [f"verify n_max={args.n_max} bound={bound}: "
             f"{'AGREEMENT' if summary['agreement'] else 'MISMATCH'}"]
    for s in summary["shapes"]:
        lines.append(f"  {s['lambda']}: {'ok' if s['agreement'] else 'MISMATCH'}")
    lines += [f"  {m}" for m in summary["mismatches"]]
    csv_rows = [[s["lambda"], "1" if s["agreement"] else "0"] for s in summary["shapes"]]
    _emit(args, payload, csv_rows=csv_rows, csv_header=["lambda", "agreement"],
          pretty="\n".join(lines))
    return EXIT_OK if summary["agreement"] else EXIT_MISMATCH


def cmd_jantzen(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    if args.c is None:
        raise UsageError("jantzen needs --c")
    c = _parse_c(args.c)
    report = jantzen_layers(symbolic_specht(shape.parts), c)
    payload = {"lambda": str(shape), "c": str(c), "layers": report.layer_dims}
    _emit(args, payload, pretty=f"lambda={shape} c={c} layers={report.layer_dims}")
    return EXIT_OK


def cmd_det(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    det = gram_determinant_cached(shape.parts)
    table = det_factor_table(shape.parts)
    payload = {
        "lambda": str(shape),
        "det": det.to_json(),
        "unit_sign": table["unit_sign"],
        "unit_exponent": table["unit_exponent"],
        "cyclotomic_multiplicities": {str(e): m for e, m
                                      in sorted(table["multiplicities"].items())},
    }
    factors = " * ".join(f"Phi_{e}^{m}" for e, m in sorted(table["multiplicities"].items()))
    pretty = (f"det G({shape}) = {'-' if table['unit_sign'] < 0 else ''}"
              f"q^{table['unit_exponent']} * {factors or '1'}")
    _emit(args, payload, pretty=pretty)
    return EXIT_OK


def cmd_element(args) -> int:
    shape = _parse_partition(args.lam)
    _guard_n(shape)
    spec = AlgebraSpec(n=shape.n)
    kind = args.kind
    if kind == "x":
        el = x_lambda(spec, shape)
    elif kind == "m":
        el = m_lambda(spec, shape)
    elif kind == "sigma-m":
        el = sigma(m_lambda(spec, shape))
    elif kind.startswith("jm:"):
        el = jucys_murphy(spec, int(kind.split(":", 1)[1]))
    else:
        raise UsageError(f"unknown element kind {kind!r}")
    payload = {"lambda": str(shape), "kind": kind, "terms": el.to_json()}
    if args.dump_element:
        with open(args.dump_element, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print(f"wrote {args.dump_element}")
    else:
        _emit(args, payload)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="heckeform",
        description="Exact Specht-module forms, signatures and unitarity scans "
                    "for the type A Hecke algebra.",
        epilog="Default starting precision for sign certificates is 64 bits; "
               "override with --precision-start-bits or HECKEFORM_PRECISION_BITS.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_c=False, scan=False):
        p.add_argument("--lambda", dest="lam", required=True,
                       help="partition, e.g. 3,1,1")
        if needs_c:
            p.add_argument("--c", help="rational angle r/m with q = exp(2*pi*i*c)")
        if scan:
            p.add_argument("--bound", type=int, default=14,
                           help="denominator bound for tested rationals")
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
        p.add_argument("--out", help="write output to a file instead of stdout")
        p.add_argument("--precision-start-bits", type=int, default=_default_bits())

    p = sub.add_parser("gram", help="symbolic, specialized or Hermitian Gram matrix")
    common(p, needs_c=True)
    p.add_argument("--hermitian", action="store_true",
                   help="emit the braid-invariant Hermitian form at --c")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("unitary", help="unitarity verdict at one parameter")
    common(p, needs_c=True)
    p.set_defaults(func=cmd_unitary)

    p = sub.add_parser("locus", help="scan a shape's unitarity locus")
    common(p, scan=True)
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("verify", help="compare all shapes against the predicted loci")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--bound", type=int, default=None,
                   help="denominator bound (default max(14, 2*n_max+2))")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--out")
    p.add_argument("--precision-start-bits", type=int, default=_default_bits())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("jantzen", help="layer dimensions of the local filtration")
    common(p, needs_c=True)
    p.set_defaults(func=cmd_jantzen)

    p = sub.add_parser("det", help="Gram determinant with cyclotomic factor table")
    common(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("element", help="dump distinguished algebra elements as JSON")
    common(p)
    p.add_argument("--kind", default="m", help="x | m | sigma-m | jm:<k>")
    p.add_argument("--dump-element", help="path to write the element JSON")
    p.set_defaults(func=cmd_element)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"heckeform: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"heckeform: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
