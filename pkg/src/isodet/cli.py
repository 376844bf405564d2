"""Command line front end: matrix ingestion, decision reports, canonical
block generation and brute-force oracle runs.

Matrix documents are JSON objects {"field": "Q"|"F3"|..., "rows": [["0","1"],
...]} with entries kept as strings so rationals stay exact; a whitespace text
form (first line "n field", then n rows) is accepted too.  Exit codes: 0 when
every isometry has determinant one, 1 when not, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .blocks import (
    PolySpec,
    direct_sum,
    frobenius,
    gamma,
    jordan,
    kronecker_pair_blocks,
    skew_sum,
    symplectic_unit,
)
from .decide import (
    DecisionReport,
    GammaExhaustedError,
    decide,
    decide_gamma_shift,
    verify_certificate,
)
from .exactmat import QQ, Field, FieldError, Matrix, Poly
from .oracle import BudgetExceededError, enumerate_isometries
from .regularize import regularize, verify_congruence


class DocumentError(ValueError):
    pass


def parse_field(tag: str) -> Field:
    tag = tag.strip()
    if tag == "Q":
        return QQ
    m = re.fullmatch(r"F(\d+)", tag)
    if not m:
        raise DocumentError(f"unknown field tag {tag!r} (use Q or F<p>)")
    try:
        return Field(int(m.group(1)))
    except FieldError as exc:
        raise DocumentError(str(exc)) from None


def field_tag(field: Field) -> str:
    return "Q" if field.p is None else f"F{field.p}"


def parse_document(text: str) -> Matrix:
    """A matrix from either the JSON or the plain text document form."""
    stripped = text.lstrip()
    if not stripped:
        raise DocumentError("empty input")
    if stripped[0] == "{":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "field" not in doc or "rows" not in doc:
            raise DocumentError('JSON document needs "field" and "rows"')
        field = parse_field(str(doc["field"]))
        rows = doc["rows"]
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise DocumentError('"rows" must be a list of lists')
        str_rows = [[str(x) for x in r] for r in rows]
    else:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 2:
            raise DocumentError('text form starts with a "n field" line')
        try:
            n = int(head[0])
        except ValueError:
            raise DocumentError(f"bad size {head[0]!r}") from None
        field = parse_field(head[1])
        if len(lines) != n + 1:
            raise DocumentError(f"expected {n} rows, found {len(lines) - 1}")
        str_rows = [lines[1 + i].split() for i in range(n)]
    n = len(str_rows)
    if any(len(r) != n for r in str_rows):
        raise DocumentError("matrix must be square")
    try:
        return Matrix(field, str_rows)
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"bad entry: {exc}") from None


def matrix_rows_str(M: Matrix) -> list[list[str]]:
    return [[M.field.to_str(x) for x in row] for row in M.rows]


def print_document(M: Matrix, as_text: bool = False, out=None) -> None:
    out = out or sys.stdout
    if as_text:
        print(f"{M.nrows} {field_tag(M.field)}", file=out)
        for row in matrix_rows_str(M):
            print(" ".join(row), file=out)
    else:
        doc = {"field": field_tag(M.field), "rows": matrix_rows_str(M)}
        print(json.dumps(doc), file=out)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _report_json(M: Matrix, rep: DecisionReport, want_cert: bool, emit_reg: bool) -> dict:
    f = M.field
    out = {
        "verdict": "all-det-one" if rep.all_det_one else "det-not-one-exists",
        "all_det_one": rep.all_det_one,
        "method": rep.method.value,
        "field": field_tag(f),
        "size": M.nrows,
        "singular_sizes": list(rep.singular_sizes),
        "rank_sequence": list(rep.rank_sequence),
        "odd_block_counts": list(rep.odd_block_counts),
        "gamma_used": None if rep.gamma_used is None else f.to_str(rep.gamma_used),
        "certificate": None,
        "certificate_verified": None,
    }
    if want_cert and rep.certificate is not None:
        out["certificate"] = matrix_rows_str(rep.certificate)
        out["certificate_verified"] = verify_certificate(M, rep.certificate)
    if emit_reg:
        reg = regularize(M)
        canonical = reg.transform.transpose() * M * reg.transform
        out["regularization"] = {
            "transform": matrix_rows_str(reg.transform),
            "regular_part": matrix_rows_str(reg.regular_part),
            "singular_sizes": list(reg.singular_sizes),
            "verified": verify_congruence(reg.transform, M, canonical),
        }
    return out


def _cmd_decide(args) -> int:
    M = parse_document(_read_input(args.matrix))
    if args.method == "gamma-shift":
        rep = decide_gamma_shift(M)
    elif args.method == "regularize":
        rep = decide(M, use_fast_path=False)
    else:
        rep = decide(M)
    payload = _report_json(M, rep, args.certificate, args.emit_regularization)
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"verdict: {payload['verdict']}")
        print(f"method: {payload['method']}")
        print(f"singular sizes: {payload['singular_sizes']}")
        if payload["rank_sequence"]:
            print(f"rank sequence: {payload['rank_sequence']}")
        print(f"odd block counts: {payload['odd_block_counts']}")
        if payload["gamma_used"] is not None:
            print(f"gamma used: {payload['gamma_used']}")
        if args.certificate:
            if payload["certificate"] is None:
                print("certificate: none available on this path")
            else:
                status = "VERIFIED" if payload["certificate_verified"] else "FAILED"
                print(f"certificate ({status}):")
                for row in payload["certificate"]:
                    print("  " + " ".join(row))
        if args.emit_regularization:
            reg = payload["regularization"]
            print(f"regularization sizes: {reg['singular_sizes']} "
                  f"(verified: {reg['verified']})")
            print("transform:")
            for row in reg["transform"]:
                print("  " + " ".join(row))
            print("regular part:")
            for row in reg["regular_part"]:
                print("  " + " ".join(row))
    return 0 if rep.all_det_one else 1


def _parse_coeffs(field: Field, text: str) -> Poly:
    return Poly(field, [field.convert(c) for c in text.split(",")])


def _cmd_blocks(args) -> int:
    field = parse_field(args.field)
    kind = args.kind
    params = args.params
    try:
        if kind == "jordan":
            size, lam = int(params[0]), params[1]
            M = jordan(size, field.convert(lam), field)
        elif kind == "gamma":
            M = gamma(int(params[0]), field)
        elif kind == "frobenius":
            poly = _parse_coeffs(field, params[0])
            power = int(params[1]) if len(params) > 1 else 1
            M = frobenius(PolySpec(poly, power))
        elif kind == "symplectic":
            M = symplectic_unit(int(params[0]), field)
        elif kind == "skewsum":
            A = parse_document(_read_input(params[0]))
            B = parse_document(_read_input(params[1]))
            M = skew_sum(A, B)
        elif kind == "directsum":
            parts = [parse_document(_read_input(p)) for p in params]
            M = direct_sum(parts, field=field)
        elif kind == "kronecker":
            F, G = kronecker_pair_blocks(int(params[0]), field)
            print_document(F, as_text=args.text)
            print_document(G, as_text=args.text)
            return 0
        else:
            raise DocumentError(f"unknown block kind {kind!r}")
    except (IndexError, ValueError) as exc:
        raise DocumentError(f"bad parameters for {kind}: {exc}") from None
    print_document(M, as_text=args.text)
    return 0


def _cmd_oracle(args) -> int:
    M = parse_document(_read_input(args.matrix))
    if M.field.p is None:
        print("oracle needs a finite prime field (F3 or F5)", file=sys.stderr)
        return 2
    summary = enumerate_isometries(M, limit=args.limit)
    tally = {str(k): v for k, v in sorted(summary.det_counts.items())}
    if args.json:
        print(json.dumps({
            "group_order": summary.group_order,
            "det_counts": tally,
            "all_det_one": summary.all_det_one,
            "verdict": "all-det-one" if summary.all_det_one else "det-not-one-exists",
        }))
    else:
        print(f"isometry group order: {summary.group_order}")
        print(f"determinant tally: {tally}")
        print(f"verdict: {'all-det-one' if summary.all_det_one else 'det-not-one-exists'}")
    return 0 if summary.all_det_one else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="isodet",
        description="Decide whether every isometry of a bilinear form has determinant one.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="run the decision procedure on a matrix document")
    d.add_argument("matrix", help="path to a matrix document, or - for stdin")
    d.add_argument("--method", choices=["auto", "regularize", "gamma-shift"], default="auto")
    d.add_argument("--certificate", action="store_true",
                   help="print a determinant -1 isometry when one is constructed")
    d.add_argument("--emit-regularization", action="store_true",
                   help="also print the regularizing transform and regular part")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=_cmd_decide)

    b = sub.add_parser("blocks", help="emit a canonical block as a matrix document")
    b.add_argument("kind", choices=["jordan", "gamma", "frobenius", "skewsum",
                                    "directsum", "symplectic", "kronecker"])
    b.add_argument("params", nargs="*",
                   help="jordan SIZE LAMBDA | gamma SIZE | frobenius COEFFS [POWER] "
                        "(comma separated, constant first) | symplectic M | "
                        "skewsum FILE FILE | directsum FILE... | kronecker T")
    b.add_argument("--field", default="Q")
    b.add_argument("--text", action="store_true", help="plain text instead of JSON")
    b.set_defaults(func=_cmd_blocks)

    o = sub.add_parser("oracle", help="enumerate the isometry group over F_p")
    o.add_argument("matrix", help="path to a matrix document, or - for stdin")
    o.add_argument("--limit", type=int, default=50_000_000,
                   help="candidate budget (default admits F3 up to 4x4, F5 up to 3x3)")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=_cmd_oracle)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (DocumentError, FieldError, BudgetExceededError,
            GammaExhaustedError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
