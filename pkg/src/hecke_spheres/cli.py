"""``hecke-spheres`` command line: verify, table, krawtchouk.

Exit codes: 0 success, 1 failed check or vanishing denominator, 2 usage error.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .characters import character_table
from .coxeter import all_sign_vectors
from .errors import CapExceeded, DenominatorVanishes, DomainError
from .hecke import check_cap
from .qseries import QKrawParams, q_krawtchouk
from .scalars import P, Scalar
from .spherical import LieType, lie_type_preset, phi_via_recurrence
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _preset(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hecke-spheres",
                     description="Spherical functions on the hyperoctahedral group.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite and print a JSON report")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--suite", choices=list(SUITES), default="all")
    v.add_argument("--timing", action="store_true",
                   help="include elapsed_ms in the report (output is then not reproducible)")

    t = sub.add_parser("table", help="character or spherical function table")
    t.add_argument("--kind", choices=["characters", "spherical"], required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--format", choices=["json", "csv"], default="json")
    _add_specialization(t)

    k = sub.add_parser("krawtchouk", help="K_f(q^-d; a, n; q)")
    k.add_argument("--f", type=int, required=True)
    k.add_argument("--d", type=int, required=True)
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--a", default="p", help="parameter a as a scalar expression (default p)")
    _add_specialization(k)
    return parser


def _add_specialization(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p-half", type=_rational, help="value of p^(1/2)")
    p.add_argument("--q-half", type=_rational, help="value of q^(1/2)")
    p.add_argument("--preset", type=_preset, help="B, C, 2D, 2A-odd or 2A-even (needs --q0)")
    p.add_argument("--q0", type=_rational, help="field size for --preset")


def _specialization(args) -> Optional[dict]:
    """Keyword arguments for Scalar.specialize, or None for symbolic output."""
    if args.preset is not None or args.q0 is not None:
        if args.preset is None or args.q0 is None:
            raise UsageError("--preset and --q0 must be given together")
        if args.p_half is not None or args.q_half is not None:
            raise UsageError("--preset cannot be combined with --p-half/--q-half")
        p, q = lie_type_preset(args.preset, args.q0)
        return {"p": p, "q": q}
    if args.p_half is not None or args.q_half is not None:
        if args.p_half is None or args.q_half is None:
            raise UsageError("--p-half and --q-half must be given together")
        return {"p_half": args.p_half, "q_half": args.q_half}
    return None


def _fmt(value) -> str:
    return str(value)


def _check_rank(n: int) -> None:
    if n < 1:
        raise UsageError(f"--n must be at least 1, got {n}")
    check_cap(n, "rank")


def _cmd_verify(args, out) -> int:
    _check_rank(args.n)
    rep = run_suite(args.suite, args.n)
    json.dump(rep.to_json(timing=args.timing), out, indent=2)
    out.write("\n")
    print(f"{rep.suite}: {len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks passed "
          f"in {rep.elapsed_ms} ms", file=sys.stderr)
    for c in rep.failures():
        print(f"FAIL {c.name} {c.witness}", file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _specialize_rows(labels: Sequence[str], rows: Sequence[Sequence[Scalar]], spec: dict,
                     what: str) -> List[List[Fraction]]:
    out = []
    for label, row in zip(labels, rows):
        vals = []
        for col, v in enumerate(row):
            try:
                vals.append(v.specialize(**spec))
            except DenominatorVanishes as exc:
                raise DenominatorVanishes(f"{what} entry ({label}, column {col}) = {v}: {exc}") from None
        out.append(vals)
    return out


def _cmd_table(args, out) -> int:
    _check_rank(args.n)
    spec = _specialization(args)
    n = args.n
    if args.kind == "spherical":
        table = phi_via_recurrence(n)
        row_key, labels = "f", list(range(n + 1))
        col_labels = [f"d={d}" for d in range(n + 1)]
        rows = [list(r) for r in table.values]
    else:
        xs = all_sign_vectors(n)
        row_key, labels = "y", [str(y) for y in xs]
        col_labels = [f"x={x}" for x in xs]
        rows = character_table(n)
    special = None
    if spec is not None:
        special = _specialize_rows([f"{row_key}={l}" for l in labels], rows, spec, args.kind)
    if args.format == "json":
        doc = {"kind": args.kind, "n": n, "columns": col_labels,
               "rows": [{row_key: l, "values": [_fmt(v) for v in r]} for l, r in zip(labels, rows)]}
        if special is not None:
            doc["specialization"] = {k: _fmt(v) for k, v in spec.items()}
            doc["specialized"] = [[_fmt(v) for v in r] for r in special]
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([row_key] + col_labels)
        for l, r in zip(labels, special if special is not None else rows):
            writer.writerow([l] + [_fmt(v) for v in r])
        out.write(buf.getvalue())
    return EXIT_OK


def _cmd_krawtchouk(args, out) -> int:
    spec = _specialization(args)
    try:
        a = Scalar.parse(args.a)
    except (ValueError, DomainError) as exc:
        raise UsageError(f"cannot parse --a {args.a!r}: {exc}") from None
    value = q_krawtchouk(QKrawParams(args.f, args.d, a, args.n))
    if spec is not None:
        value = value.specialize(**spec)
    out.write(_fmt(value) + "\n")
    return EXIT_OK


COMMANDS = {"verify": _cmd_verify, "table": _cmd_table, "krawtchouk": _cmd_krawtchouk}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"hecke-spheres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"hecke-spheres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DenominatorVanishes as exc:
        print(f"hecke-spheres: denominator vanishes: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except DomainError as exc:
        print(f"hecke-spheres: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
