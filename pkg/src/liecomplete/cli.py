"""Command-line interface.

Exit status: 0 when the verdict is true or cleanly not applicable, 1 when it
is false, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import center, derived_subalgebra, validate
from .catalog import NAMES, CatalogSpec, build_named
from .certificate import FALSE, NOT_APPLICABLE, TRUE, Certificate, jsonable
from .derivations import derivation_basis, derivation_tower, is_complete, outer_center, COMPLETE_REACHED
from .errors import LieError
from .fields import Field, QQ, GF
from .forms import check_perp_center, killing_form
from .holomorph import build_holomorph, certify_completeness_theorem
from .io import Report, algebra_to_json, digest, parse_algebra_file, read_json, write_algebra_file
from .torus import COMMUTATOR, ExponentTorus, graded_decomposition_check, radical_basis

EXIT = {TRUE: 0, NOT_APPLICABLE: 0, FALSE: 1}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt_matrix(F, m):
    return [[F.format(x) for x in row] for row in m]


def _field_arg(s: str) -> Field:
    if s.upper() in ("Q", "QQ", "RATIONAL"):
        return QQ
    try:
        return GF(int(s))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"field must be Q or a prime, got {s!r}") from exc


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the machine-readable report here")

    p = _Parser(prog="liecomplete", description="Exact derivation algebras, holomorphs and completeness checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [("validate", "check antisymmetry and Jacobi"),
                        ("center", "center of the algebra"),
                        ("derived", "derived subalgebra [g,g]"),
                        ("complete", "is the algebra complete?"),
                        ("verify", "certify the derivation-algebra completeness theorem"),
                        ("form", "invariant form checks; uses the file's form or the Killing form")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("file")

    for name, help_ in [("der", "derivation algebra"), ("holomorph", "holomorph g ⋉ Der g")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("file")
        s.add_argument("--emit-algebra", metavar="OUT", help="write the resulting algebra file")

    s = sub.add_parser("tower", parents=[common], help="derivation tower")
    s.add_argument("file")
    s.add_argument("--max", type=int, default=5, dest="max_levels")

    t = sub.add_parser("torus", help="quantum torus exponent computations")
    tsub = t.add_subparsers(dest="torus_command", required=True, parser_class=_Parser)
    for name in ("rad", "graded"):
        s = tsub.add_parser(name, parents=[common])
        s.add_argument("--file", help="torus JSON {n, N, E}")
        s.add_argument("--n", type=int)
        s.add_argument("--order", type=int, help="order N of the root of unity (0 = generic)")
        s.add_argument("--e", type=_int_list, help="row-major exponent matrix entries")
        if name == "graded":
            s.add_argument("--box", type=int, required=True)
            s.add_argument("--list", action="store_true", help="include every degree in the report")

    s = sub.add_parser("catalog", parents=[common], help="write a named example algebra")
    s.add_argument("name", choices=NAMES)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--field", type=_field_arg, default=QQ)
    s.add_argument("--parts", help="direct_sum parts, e.g. sl:2,abelian:1,current_sl2:2")
    s.add_argument("--killing-form", action="store_true", help="also store the Killing form")
    s.add_argument("--out", required=True)
    return p


def _parse_parts(text: str) -> tuple[CatalogSpec, ...]:
    parts = []
    for item in text.split(","):
        name, _, arg = item.strip().partition(":")
        if name in ("abelian", "sl"):
            parts.append(CatalogSpec(name, n=int(arg)))
        elif name == "current_sl2":
            parts.append(CatalogSpec(name, k=int(arg)))
        elif name in ("heisenberg", "affine2"):
            parts.append(CatalogSpec(name))
        else:
            raise LieError(f"unknown direct_sum part {item!r}")
    return tuple(parts)


def _load(args, validate_axioms=True):
    L, form = parse_algebra_file(args.file, validate=validate_axioms)
    _, raw = read_json(args.file)
    return L, form, digest(raw)


def _cert_results(cert: Certificate) -> dict:
    return {"certificate": cert.to_json()}


def _torus(args) -> tuple[ExponentTorus, str]:
    if args.file:
        data, raw = read_json(args.file)
        try:
            return ExponentTorus.from_json(data), digest(raw)
        except (KeyError, TypeError) as exc:
            raise LieError(f"{args.file}: torus file needs n, N, E") from exc
    if args.n is None or args.order is None or args.e is None:
        raise UsageError("torus needs --file or all of --n, --order, --e")
    T = ExponentTorus.from_flat(args.n, args.order, args.e)
    return T, digest(json.dumps(T.to_json(), sort_keys=True).encode())


def _dispatch(args) -> tuple[dict, str, str | None, list[str]]:
    """Return ``(results, verdict, input_digest, human_lines)``."""
    cmd = args.command
    if cmd == "validate":
        L, _, dg = _load(args, validate_axioms=False)
        cert = validate(L)
        return {"dim": L.dim, **_cert_results(cert)}, cert.verdict, dg, [cert.summary()]

    if cmd in ("center", "derived"):
        L, _, dg = _load(args)
        S = center(L) if cmd == "center" else derived_subalgebra(L)
        res = {"dim": L.dim, f"{cmd}_dim": S.dim, "basis": _fmt_matrix(L.field, S.basis)}
        return res, TRUE, dg, [f"{cmd} of {L.name or args.file}: dim {S.dim} (of {L.dim})"]

    if cmd == "der":
        L, _, dg = _load(args)
        der = derivation_basis(L)
        oc = outer_center(L, der)
        res = {"dim": L.dim, "der_dim": der.dim, "inner_dim": der.inner_dim,
               "outer_dim": der.outer_dim, "outer_center_dim": oc.dim,
               "basis": [_fmt_matrix(L.field, d) for d in der.basis],
               "inner_elements": [L.labels[i] for i in der.inner_elements]}
        if args.emit_algebra:
            write_algebra_file(args.emit_algebra, der.der_algebra)
            res["emitted"] = args.emit_algebra
        lines = [f"Der({L.name or args.file}): dim {der.dim}, inner {der.inner_dim}, "
                 f"outer {der.outer_dim}, outer center {oc.dim}"]
        return res, TRUE, dg, lines

    if cmd == "complete":
        L, _, dg = _load(args)
        cert = is_complete(L)
        return _cert_results(cert), cert.verdict, dg, [cert.summary()]

    if cmd == "holomorph":
        L, _, dg = _load(args)
        hol = build_holomorph(L)
        hc = center(hol.algebra)
        res = {"dim": L.dim, "der_dim": hol.m, "holomorph_dim": hol.algebra.dim,
               "holomorph_center_dim": hc.dim}
        if args.emit_algebra:
            write_algebra_file(args.emit_algebra, hol.algebra)
            res["emitted"] = args.emit_algebra
        return res, TRUE, dg, [f"holomorph: dim {hol.algebra.dim} = {L.dim} + {hol.m}, center dim {hc.dim}"]

    if cmd == "tower":
        L, _, dg = _load(args)
        rep = derivation_tower(L, args.max_levels)
        res = {"dims": list(rep.dims), "status": rep.status, "length": rep.length}
        verdict = TRUE if rep.status == COMPLETE_REACHED else FALSE
        return res, verdict, dg, [f"tower dims {list(rep.dims)}: {rep.status}"]

    if cmd == "verify":
        L, _, dg = _load(args)
        cert = certify_completeness_theorem(L)
        return _cert_results(cert), cert.verdict, dg, [cert.summary()]

    if cmd == "form":
        L, form, dg = _load(args)
        source = "file"
        if form is None:
            form, source = killing_form(L), "killing"
        cert = check_perp_center(form, L)
        res = {"form_source": source, "gram": _fmt_matrix(L.field, form.gram), **_cert_results(cert)}
        return res, cert.verdict, dg, [f"form: {source}", cert.summary()]

    if cmd == "torus":
        T, dg = _torus(args)
        if args.torus_command == "rad":
            basis = radical_basis(T)
            return ({"torus": T.to_json(), "radical_basis": basis, "radical_rank": len(basis)},
                    TRUE, dg, [f"rad(f) basis: {basis}"])
        classes, cert = graded_decomposition_check(T, args.box)
        res = {"torus": T.to_json(), **_cert_results(cert)}
        if args.list:
            res["classes"] = [{"degree": list(c.degree), "class": c.kind,
                               **({"witness": jsonable(c.witness)} if c.kind == COMMUTATOR else {})}
                              for c in classes]
        return res, cert.verdict, dg, [cert.summary()]

    if cmd == "catalog":
        parts = _parse_parts(args.parts) if args.parts else ()
        spec = CatalogSpec(args.name, args.n, args.k, args.field, parts)
        L = build_named(spec)
        form = killing_form(L) if args.killing_form else None
        write_algebra_file(args.out, L, form)
        blob = json.dumps(algebra_to_json(L, form), sort_keys=True).encode()
        return ({"name": L.name, "dim": L.dim, "out": args.out}, TRUE, digest(blob),
                [f"wrote {L.name} (dim {L.dim}) to {args.out}"])
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Sequence[str] | None = None, out=None) -> tuple[int, Report]:
    """Execute a command line; returns the exit code and the report."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2, Report(argv, None, {"error": str(exc)}, "error")
    except SystemExit as exc:  # --help
        return int(exc.code or 0), Report(argv, None, {}, "usage")
    try:
        results, verdict, dg, lines = _dispatch(args)
        code = EXIT[verdict]
        report = Report(argv, dg, results, verdict)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2, Report(argv, None, {"error": str(exc)}, "error")
    except (LieError, ValueError) as exc:
        witness = getattr(exc, "witness", None)
        print(f"error: {exc}", file=sys.stderr)
        res = {"error": str(exc), "error_type": type(exc).__name__}
        if witness is not None:
            res["witness"] = jsonable(witness)
        report = Report(argv, None, res, "error")
        code = 2
        lines = []
    for line in lines:
        print(line, file=out)
    if getattr(args, "json", None):
        report.write(args.json)
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
