"""Command-line front end.

``--q`` is always the base parameter: Hermitian codes live over GF(q^2) and
symplectic codes over GF(q).  ``--n`` is the Hermitian length or the symplectic
half-length.  Generator files, in contrast, state the actual field order.

Exit codes: 0 success, 1 usage or input error, 2 a verification found the
mathematics disagreeing with itself.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

from . import census, code, formulas
from .field import FieldError, gf, register_modulus, reset_moduli
from .matrix import Matrix, gram

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class ParseError(UsageError):
    pass


# -- generator files -------------------------------------------------------------


def parse_code(text: str, source: str = "<string>") -> code.LinearCode:
    """Parse ``q=<order> n=<length> k=<dim>`` followed by k rows of n integers."""
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            try:
                fields = dict(tok.split("=", 1) for tok in line.split())
                header = {key: int(fields[key]) for key in ("q", "n", "k")}
            except (ValueError, KeyError) as exc:
                raise ParseError(f"{source}:{lineno}: bad header {line!r}, expected 'q=<order> n=<length> k=<dim>'") from exc
            try:
                field = gf(header["q"])
            except FieldError as exc:
                raise ParseError(f"{source}:{lineno}: {exc}") from exc
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: non-integer entry in {line!r}") from exc
        if len(row) != header["n"]:
            raise ParseError(f"{source}:{lineno}: row has {len(row)} entries, expected {header['n']}")
        bad = [x for x in row if not 0 <= x < header["q"]]
        if bad:
            raise ParseError(f"{source}:{lineno}: entry {bad[0]} outside [0, {header['q']})")
        rows.append(row)
    if header is None:
        raise ParseError(f"{source}: missing header line")
    if len(rows) != header["k"]:
        raise ParseError(f"{source}: header says k={header['k']} but {len(rows)} rows were given")
    return code.LinearCode.from_rows(field, rows, header["n"])


def load_code(path) -> code.LinearCode:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    return parse_code(text, str(path))


def format_code(field_order: int, M: Matrix) -> str:
    lines = [f"q={field_order} n={M.cols} k={M.rows}"]
    lines += [" ".join(str(x) for x in row) for row in M.tolist()]
    return "\n".join(lines)


# -- output ------------------------------------------------------------------------


def _jsonable(x):
    """Exact numbers become decimal strings so JSON round-trips are lossless."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def emit(report: dict, fmt: str, text: str, rows: list[dict] | None = None, out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(_jsonable(report), indent=2) + "\n")
    elif fmt == "csv":
        rows = rows if rows is not None else [report]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: json.dumps(_jsonable(v)) if isinstance(v, (list, dict)) else _jsonable(v) for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        out.write(text.rstrip("\n") + "\n")


def _matrix_text(M: Matrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in M.tolist())


# -- subcommands ---------------------------------------------------------------------


def _query(args) -> dict:
    return {"inner": args.inner, "q": args.q, "n": args.n, "k": args.k, "ell": args.ell}


def cmd_mass(args) -> int:
    rep = formulas.hull_mass(formulas.CountQuery(args.inner, args.q, args.n, args.k, args.ell))
    report = {"query": _query(args), "count": rep.count, "formula_id": rep.formula_id}
    emit(report, args.format, str(rep.count), [{**_query(args), "count": rep.count}])
    return EXIT_OK


def cmd_census(args) -> int:
    length = args.n if args.inner == "hermitian" else 2 * args.n
    rep = census.hull_census(args.inner, args.q, length, args.k)
    rows = rep.rows()
    lines = ["ell enumerated formula match"]
    lines += [f"{r['ell']} {r['enumerated']} {r['formula']} {'match' if r['match'] else 'MISMATCH'}" for r in rows]
    lines.append(f"total {rep.total}")
    query = {"inner": args.inner, "q": args.q, "n": args.n, "k": args.k}
    emit({"query": query, "rows": rows, "total": rep.total}, args.format, "\n".join(lines), rows)
    return EXIT_OK if rep.all_match else EXIT_MISMATCH


def cmd_classify(args) -> int:
    length = args.n if args.inner == "hermitian" else 2 * args.n
    rep = census.classify(args.inner, args.q, length, args.k, args.ell)
    classes = [
        {"generator": c.representative.generator.tolist(), "aut_order": c.aut_order, "class_size": c.class_size}
        for c in rep.classes
    ]
    lines = [f"{len(classes)} classes of [{length},{args.k}] codes with hull dimension {args.ell}"]
    for c in classes:
        lines.append(f"aut={c['aut_order']} size={c['class_size']} generator={c['generator']}")
    lines.append(f"mass {rep.mass_identity_lhs} formula {rep.mass_identity_rhs} {'match' if rep.mass_identity_holds else 'MISMATCH'}")
    report = {
        "classes": classes,
        "mass_lhs": rep.mass_identity_lhs,
        "mass_rhs": rep.mass_identity_rhs,
        "match": rep.mass_identity_holds,
    }
    emit(report, args.format, "\n".join(lines), classes)
    return EXIT_OK if rep.mass_identity_holds else EXIT_MISMATCH


def cmd_analyze(args) -> int:
    C = load_code(args.file)
    report = {"field_order": C.field.order, "length": C.length, "k": C.k}
    inners = [args.inner] if args.inner else [
        i for i in ("hermitian", "symplectic")
        if (i == "hermitian" and C.field.is_quadratic) or (i == "symplectic" and C.length % 2 == 0)
    ]
    for inner in inners:
        rep = code.hull(C, inner)
        report[inner] = {
            "hull_dimension": rep.hull_dimension,
            "gram_rank": C.k - rep.hull_dimension,
            "lcd": rep.hull_dimension == 0,
            "self_orthogonal": rep.hull_dimension == C.k,
            "hull_basis": rep.hull_basis.tolist(),
        }
    lines = [f"[{C.length},{C.k}] code over GF({C.field.order})"]
    for inner in inners:
        r = report[inner]
        lines.append(f"{inner} hull dimension {r['hull_dimension']} (lcd={r['lcd']}, self_orthogonal={r['self_orthogonal']})")
    emit(report, args.format, "\n".join(lines), [{"inner": i, **{k: v for k, v in report[i].items() if k != "hull_basis"}} for i in inners])
    return EXIT_OK


def cmd_basis(args) -> int:
    C = load_code(args.file)
    if args.inner == "hermitian":
        G = code.hermitian_normal_form(C)
    else:
        G = code.symplectic_basis(C)
    Gm = gram(G, args.inner)
    report = {"inner": args.inner, "generator": G.tolist(), "gram": Gm.tolist()}
    text = format_code(C.field.order, G) + "\n# gram\n" + "\n".join("# " + line for line in _matrix_text(Gm).splitlines())
    emit(report, args.format, text, [{"row": i, "vector": r} for i, r in enumerate(G.tolist())])
    return EXIT_OK


def cmd_transporter(args) -> int:
    C1, C2 = load_code(args.file1), load_code(args.file2)
    Q = code.transporter(C1, C2, args.inner)
    preserves = code.is_unitary(Q) if args.inner == "hermitian" else code.is_symplectic(Q)
    maps = C1 @ Q == C2
    report = {"inner": args.inner, "matrix": Q.tolist(), "form_preserving": preserves, "maps_code": maps}
    text = _matrix_text(Q) + f"\n# form_preserving={preserves} maps_code={maps}"
    emit(report, args.format, text, [{"row": i, "vector": r} for i, r in enumerate(Q.tolist())])
    return EXIT_OK if preserves and maps else EXIT_MISMATCH


def cmd_limits(args) -> int:
    limit = formulas.limit_density(args.inner, args.q, args.ell, args.tol)
    report = {"inner": args.inner, "q": args.q, "ell": args.ell, "tolerance": args.tol, "limit": limit}
    lines = [f"limit {limit:.15f}"]
    rows = [{"n": "inf", "k": "inf", "value": limit, "difference": ""}]
    if args.n is not None and args.k is not None:
        ratio = formulas.finite_density(args.inner, args.q, args.n, args.k, args.ell)
        r = Decimal(ratio.numerator) / Decimal(ratio.denominator)
        diff = r - limit
        report.update({"n": args.n, "k": args.k, "ratio": r, "difference": diff})
        lines += [f"ratio {r:.15f} (n={args.n}, k={args.k})", f"difference {diff:.3e}"]
        rows.append({"n": args.n, "k": args.k, "value": r, "difference": diff})
    emit(report, args.format, "\n".join(lines), rows)
    return EXIT_OK


def cmd_jacobi(args) -> int:
    chk = formulas.jacobi_sum_check(args.q, args.n)
    report = {
        "q": chk.q,
        "n": chk.n,
        "lhs_zero_sum": chk.lhs_zero_sum,
        "rhs_zero": chk.rhs_zero,
        "lhs_one_sum": chk.lhs_one_sum,
        "rhs_one": chk.rhs_one,
        "match": chk.holds,
    }
    text = (
        f"a=0: character sum {chk.lhs_zero_sum}, closed form {chk.rhs_zero}\n"
        f"a=1: character sum {chk.lhs_one_sum}, closed form {chk.rhs_one}\n"
        f"{'match' if chk.holds else 'MISMATCH'}"
    )
    emit(report, args.format, text)
    return EXIT_OK if chk.holds else EXIT_MISMATCH


def cmd_group(args) -> int:
    count = sum(1 for _ in census.enumerate_group(args.kind, args.n, args.q))
    expected = formulas.group_order(args.kind, args.n, args.q)
    ok = count == expected
    report = {"kind": args.kind, "n": args.n, "q": args.q, "enumerated": count, "formula": expected, "match": ok}
    lines = [f"{args.kind} n={args.n} q={args.q}: enumerated {count}, formula {expected} {'match' if ok else 'MISMATCH'}"]
    if args.stabilizer_k is not None:
        inner = "hermitian" if args.kind == "unitary" else "symplectic"
        st = census.stabilizer_check(inner, args.q, args.n, args.stabilizer_k)
        report["stabilizer"] = {
            "k": st.k,
            "orbit_size": st.orbit_size,
            "stabilizer_size": st.stabilizer_size,
            "lcd_count": st.lcd_count,
            "product_equals_group_order": st.product_equals_group_order,
            "passed": st.passed,
        }
        ok = ok and st.passed
        lines.append(
            f"stabilizer k={st.k}: orbit {st.orbit_size} x stabilizer {st.stabilizer_size} = "
            f"{st.orbit_size * st.stabilizer_size} (group {st.group_order}, LCD codes {st.lcd_count}) "
            f"{'match' if st.passed else 'MISMATCH'}"
        )
    emit(report, args.format, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _positive_float(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {s}")
    return v


def _modulus(s: str) -> tuple[int, tuple[int, ...]]:
    try:
        order, coeffs = s.split(":", 1)
        return int(order), tuple(int(c) for c in coeffs.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected ORDER:c0,c1,...,1, got {s!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument(
        "--modulus",
        type=_modulus,
        action="append",
        default=[],
        metavar="ORDER:c0,c1,...",
        help="override the modulus of GF(ORDER), coefficients constant term first",
    )

    p = _Parser(prog="hullmass", description="Mass formulas for codes with prescribed hull dimension.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def inner_opts(sp, ell=True):
        sp.add_argument("--inner", choices=("hermitian", "symplectic"), required=True)
        sp.add_argument("--q", type=int, required=True, help="base parameter (Hermitian codes live over GF(q^2))")
        sp.add_argument("--n", type=_nonneg, required=True, help="Hermitian length or symplectic half-length")
        sp.add_argument("--k", type=_nonneg, required=True)
        if ell:
            sp.add_argument("--ell", type=_nonneg, required=True)

    sp = sub.add_parser("mass", parents=[common], help="closed-form count")
    inner_opts(sp)
    sp.set_defaults(func=cmd_mass)

    sp = sub.add_parser("census", parents=[common], help="exhaustive hull census vs formulas")
    inner_opts(sp, ell=False)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("classify", parents=[common], help="permutation classes and the mass identity")
    inner_opts(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("analyze", parents=[common], help="hull of a code from a generator file")
    sp.add_argument("file")
    sp.add_argument("--inner", choices=("hermitian", "symplectic"))
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("basis", parents=[common], help="Hermitian normal form or symplectic basis")
    sp.add_argument("file")
    sp.add_argument("--inner", choices=("hermitian", "symplectic"), required=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("transporter", parents=[common], help="form-preserving matrix mapping one LCD code to another")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--inner", choices=("hermitian", "symplectic"), required=True)
    sp.set_defaults(func=cmd_transporter)

    sp = sub.add_parser("limits", parents=[common], help="asymptotic density and a finite-size ratio")
    sp.add_argument("--inner", choices=("hermitian", "symplectic"), required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--ell", type=_nonneg, required=True)
    sp.add_argument("--tol", type=_positive_float, default=1e-9)
    sp.add_argument("--n", type=_nonneg)
    sp.add_argument("--k", type=_nonneg)
    sp.set_defaults(func=cmd_limits)

    sp = sub.add_parser("jacobi", parents=[common], help="character-sum identities by direct summation")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_jacobi)

    sp = sub.add_parser("group", parents=[common], help="enumerate a unitary or symplectic group")
    sp.add_argument("--kind", choices=("unitary", "symplectic"), required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--stabilizer-k", type=_nonneg, default=None, help="also run the orbit/stabilizer check")
    sp.set_defaults(func=cmd_group)
    return p


def run(argv=None) -> int:
    args = None
    try:
        args = build_parser().parse_args(argv)
        for order, coeffs in args.modulus:
            register_modulus(order, coeffs)
        return args.func(args)
    except (UsageError, ValueError, ZeroDivisionError, RuntimeError) as exc:
        # RuntimeError covers the enumeration caps and budgets
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    finally:
        if args is not None and args.modulus:
            reset_moduli()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
