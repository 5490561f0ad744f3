"""Command-line surface: load algebras, run certifications, emit reports.

Exit codes: 0 = PASS/OK, 1 = certified FAIL, 2 = INCONCLUSIVE or a
usage/parse error.  Reports are deterministic for fixed inputs and tool
version, modulo the "timings" block.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import __version__, catalog
from .anosov import certify_anosov, lemma_m1_filter, M1Verdict
from .documents import (algebra_to_document, dump_json, encode_scalar,
                        load_document)
from .exceptions import AlgebraError, ParseError
from .liealg import abelian_factor_dim, graded_type
from .liealg import reduce as reduce_algebra
from .pfaffian import det_consistency, pfaffian_form, skew_forms

OK, FAIL, INCONCLUSIVE = 0, 1, 2


def _precision_cap():
    raw = os.environ.get("ANOSOV_PRECISION_CAP")
    if raw is None:
        return 1024
    try:
        return max(64, int(raw))
    except ValueError:
        raise ParseError(f"ANOSOV_PRECISION_CAP: not an integer: {raw!r}")


def _emit(report, as_json):
    if as_json:
        print(dump_json(report))


def _cmd_type(args):
    doc = load_document(args.file)
    parts = graded_type(doc.algebra)[0]
    m, _, _ = abelian_factor_dim(doc.algebra)
    report = {"command": "type", "input": args.file, "version": __version__,
              "graded_type": list(parts), "abelian_factor_dim": m}
    if args.json:
        print(dump_json(report))
    else:
        print(f"type: ({', '.join(str(n) for n in parts)})")
        print(f"abelian factor dimension: {m}")
    return OK


def _cmd_jacobi(args):
    doc = load_document(args.file)
    witness = None
    from .liealg import jacobi_check
    w = jacobi_check(doc.algebra)
    if w is not None:
        witness = [w[0] + 1, w[1] + 1, w[2] + 1]
    report = {"command": "jacobi", "input": args.file, "version": __version__,
              "ok": w is None, "witness": witness}
    if args.json:
        print(dump_json(report))
    else:
        print("Jacobi: OK" if w is None else
              f"Jacobi FAILS at triple {tuple(witness)}")
    return OK if w is None else FAIL


def _cmd_pfaffian(args):
    doc = load_document(args.file)
    S = skew_forms(doc.algebra)
    P = pfaffian_form(S)
    bad = det_consistency(S, P, args.samples, seed=args.seed)
    report = {"command": "pfaffian", "input": args.file, "version": __version__,
              "options": {"samples": args.samples, "seed": args.seed},
              "form": repr(P),
              "det_consistency": "OK" if bad is None else
              [encode_scalar(v) for v in bad]}
    if args.json:
        print(dump_json(report))
    else:
        print(f"Pf = {P}")
        print("det consistency: OK" if bad is None else
              f"det consistency FAILS at {bad}")
    return OK if bad is None else FAIL


def _certificate_report(target, cert, auto_square, cap):
    def enc(x):
        return None if x is None else encode_scalar(x)

    stages = {
        "automorphism": {
            "ok": cert.automorphism_ok,
            "witness": None if cert.automorphism_witness is None else
            [cert.automorphism_witness[0] + 1, cert.automorphism_witness[1] + 1],
        },
        "unit_products": {
            "products": [encode_scalar(p) for p in cert.products.products],
            "labels": list(cert.products.labels),
            "squared": cert.squared,
        },
        "hyperbolicity": {
            "status": cert.hyperbolic.status,
            "margin": cert.hyperbolic.margin,
            "witness": None if cert.hyperbolic.witness is None
            else cert.hyperbolic.witness + 1,
        },
        "zbasis": {
            "ok": cert.zbasis_ok,
            "witness": None if cert.zbasis_witness is None else {
                "i": cert.zbasis_witness[0] + 1,
                "j": cert.zbasis_witness[1] + 1,
                "k": cert.zbasis_witness[2] + 1,
                "coefficient": enc(cert.zbasis_witness[3]),
            },
        },
        "integrality": {
            "all_integer": cert.matrix_integral,
            "det": enc(cert.det),
            "det_pm1": cert.det_pm1,
            "witness": None if cert.integrality_witness is None else {
                "row": cert.integrality_witness[0] + 1,
                "col": cert.integrality_witness[1] + 1,
                "entry": enc(cert.integrality_witness[2]),
            },
        },
    }
    return {
        "command": "certify",
        "input": target,
        "version": __version__,
        "options": {"auto_square": auto_square, "precision_cap": cap},
        "stages": stages,
        "verdict": cert.verdict,
        "failure_stage": cert.failure_stage,
    }


def _certify_one(target, auto_square, cap):
    if target.startswith("case:"):
        case = catalog.paper_case(target[5:])
        L, A, B = case.algebra, case.automorphism, case.basis
    else:
        doc = load_document(target)
        if doc.automorphism is None or doc.basis is None:
            raise ParseError(
                f"{target}: certify needs both an automorphism and a basis")
        L, A, B = doc.algebra, doc.automorphism, doc.basis
    cert = certify_anosov(L, A, B, auto_square=auto_square, cap=cap)
    return cert


def _print_cert_text(target, cert):
    print(f"== {target}")
    print(f"  automorphism: {'OK' if cert.automorphism_ok else 'FAIL'}")
    print(f"  block products: {', '.join(cert.products.labels)}"
          + ("  (automorphism squared once)" if cert.squared else ""))
    margin = (f" margin {cert.hyperbolic.margin:.6g}"
              if cert.hyperbolic.margin is not None else "")
    print(f"  hyperbolicity: {cert.hyperbolic.status}{margin}")
    print(f"  Z-basis structure constants: {'OK' if cert.zbasis_ok else 'FAIL'}")
    det = "" if cert.det is None else f" det {cert.det}"
    print(f"  [A]_beta integral: {'yes' if cert.matrix_integral else 'no'}{det}")
    print(f"  verdict: {cert.verdict}")


def _cmd_certify(args):
    cap = _precision_cap()
    t0 = time.monotonic()
    if args.all_cases:
        reports = []
        worst = OK
        for name in catalog.case_names():
            cert = _certify_one(f"case:{name}", args.auto_square, cap)
            reports.append(_certificate_report(f"case:{name}", cert,
                                               args.auto_square, cap))
            if not args.json:
                _print_cert_text(f"case:{name}", cert)
            if cert.verdict == "FAIL":
                worst = FAIL
            elif cert.verdict == "INCONCLUSIVE" and worst == OK:
                worst = INCONCLUSIVE
        if args.json:
            print(dump_json({"command": "certify", "all_cases": reports,
                             "timings": {"total_ms": (time.monotonic() - t0) * 1e3}}))
        return worst
    cert = _certify_one(args.target, args.auto_square, cap)
    report = _certificate_report(args.target, cert, args.auto_square, cap)
    report["timings"] = {"total_ms": (time.monotonic() - t0) * 1e3}
    if args.json:
        print(dump_json(report))
    else:
        _print_cert_text(args.target, cert)
    if cert.verdict == "PASS":
        return OK
    if cert.verdict == "FAIL":
        return FAIL
    return INCONCLUSIVE


def _cmd_catalog(args):
    if args.what == "list":
        print("algebras:")
        for name in catalog.algebra_names():
            count = catalog._TABLES[name][0]
            print(f"  {name}" + (f"  ({count} params)" if count else ""))
        print("cases:")
        for name in catalog.case_names():
            print(f"  {name}")
        return OK
    case = catalog.paper_case(args.name)
    doc = algebra_to_document(case.algebra, case.automorphism, case.basis)
    doc["name"] = case.name
    doc["expected_type"] = list(case.expected_type)
    doc["provenance"] = case.provenance
    print(dump_json(doc))
    return OK


def _cmd_reduce(args):
    doc = load_document(args.file)
    quotient, derived = reduce_algebra(doc.algebra)
    qt = graded_type(quotient)[0]
    dt = graded_type(derived)[0] if derived.dim else ()
    report = {
        "command": "reduce", "input": args.file, "version": __version__,
        "quotient": algebra_to_document(quotient),
        "quotient_type": list(qt),
        "derived": algebra_to_document(derived),
        "derived_type": list(dt),
    }
    if args.json:
        print(dump_json(report))
    else:
        print(f"quotient: dim {quotient.dim}, type ({', '.join(map(str, qt))})")
        print(f"derived:  dim {derived.dim}, type ({', '.join(map(str, dt))})")
    return OK


def _cmd_filter_m1(args):
    verdict = lemma_m1_filter(args.deg_a, args.deg_b, args.deg_ab,
                              product_is_eigenvalue=args.product_eigen)
    if verdict is M1Verdict.ADMISSIBLE:
        print("ADMISSIBLE")
        return OK
    print(f"VIOLATES rule {verdict.rule}")
    return FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="anosovcert",
        description="Exact certification of Anosov automorphisms of "
                    "nilpotent Lie algebras.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("type", help="graded type and abelian factor dimension")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_type)

    p = sub.add_parser("jacobi", help="verify the Jacobi identity")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_jacobi)

    p = sub.add_parser("pfaffian", help="Pfaffian form of a (2k, m) algebra")
    p.add_argument("file")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pfaffian)

    p = sub.add_parser("certify", help="run the Anosov certification pipeline")
    p.add_argument("target", nargs="?",
                   help="document file or case:NAME")
    p.add_argument("--auto-square", action="store_true")
    p.add_argument("--all-cases", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    psub = p.add_subparsers(dest="what", required=True)
    pl = psub.add_parser("list")
    pl.set_defaults(func=_cmd_catalog, what="list")
    ps = psub.add_parser("show")
    ps.add_argument("name")
    ps.set_defaults(func=_cmd_catalog, what="show")

    p = sub.add_parser("reduce",
                       help="quotient by the last layer and derived algebra")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("filter-m1", help="eigenvalue degree filter")
    p.add_argument("deg_a", type=int)
    p.add_argument("deg_b", type=int)
    p.add_argument("deg_ab", type=int)
    p.add_argument("--product-eigen", action="store_true")
    p.set_defaults(func=_cmd_filter_m1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "certify" and not args.all_cases and args.target is None:
        parser.error("certify needs a target or --all-cases")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except AlgebraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
