"""Command-line front end: `stringy compute|check|defect|compare`.

Exit codes: 0 on success (and all-nonnegative for `check`), 1 when `check`
finds a negative stringy Hodge number or `compare` finds a mismatch, 2 on
input or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, Optional

from .analysis import conjecture_report, defect_bound_check, local_defect
from .descriptors import DescriptorFileError, load_bundle
from .sncweights import weight_graded_dims
from .stringy import (
    DescriptorError,
    check_polynomial_consequences,
    crepant_compare,
    first_coefficient_difference,
    stringy_hodge_table,
)

EXPANSION_NOTE = "series expansion taken at the origin (u = v = 0)"


def _emit(doc: Dict[str, object], fmt: str, text_renderer) -> None:
    if fmt == "machine":
        json.dump(doc, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        text_renderer(doc)


def _pq_map(table) -> Dict[str, int]:
    return {f"{p},{q}": v for (p, q), v in sorted(table.items())}


def cmd_compute(args) -> int:
    bundle = load_bundle(args.path)
    report = stringy_hodge_table(bundle.descriptor, args.max_degree)
    doc: Dict[str, object] = {
        "label": report.label,
        "dim": report.n,
        "expansion_bound": report.bound,
        "expansion_point": EXPANSION_NOTE,
        "e_function": {
            "numerator": _pq_map(report.e_function.numerator.terms),
            "denominator_factors": list(report.e_function.denominator.factors),
        },
        "polynomial": _pq_map(report.polynomial.terms) if report.polynomial else None,
        "b_coefficients": _pq_map(report.coefficients),
        "stringy_hodge_numbers": _pq_map(report.h_st_table()),
        "checks": {
            "symmetry": report.symmetry,
            "poincare_duality": report.pd_identity,
            "polynomial_consequences": _jsonable(
                check_polynomial_consequences(bundle.descriptor)
            ),
        },
        "negative_at": [f"{p},{q}" for p, q in report.negative],
    }
    if bundle.snc is not None:
        top = bundle.snc.max_level()
        doc["snc_h0_weight_dims"] = {
            str(l): weight_graded_dims(bundle.snc, 0, l, 0, 0) for l in range(top)
        }

    def render(doc):
        print(f"== {doc['label'] or args.path} (dim {doc['dim']}) ==")
        print(f"E_st = {report.e_function}")
        if report.polynomial is not None:
            print(f"polynomial: {report.polynomial}")
        else:
            print("not a polynomial; coefficients below are expansion coefficients")
        print(f"({doc['expansion_point']}, bound {doc['expansion_bound']})")
        print("stringy Hodge numbers h^{p,q}_st:")
        for key, value in doc["stringy_hodge_numbers"].items():
            print(f"  h^{{{key}}}_st = {value}")
        checks = doc["checks"]
        print(f"u<->v symmetry: {checks['symmetry']}")
        pd = checks["poincare_duality"]
        print(f"Poincare duality identity: {'inconclusive' if pd is None else pd}")
        if "snc_h0_weight_dims" in doc:
            dims = ", ".join(
                f"Gr^W_0 H^{l}(D) = {v}" for l, v in doc["snc_h0_weight_dims"].items()
            )
            print(f"SNC dual-complex weights (H^0 row): {dims}")
        if doc["negative_at"]:
            print(f"NEGATIVE stringy Hodge numbers at: {doc['negative_at']}")

    _emit(doc, args.format, render)
    return 0


def cmd_check(args) -> int:
    bundle = load_bundle(args.path)
    report = conjecture_report(bundle.descriptor, args.max_degree)
    doc = {
        "label": report.label,
        "dim": report.n,
        "expansion_bound": report.bound,
        "expansion_point": EXPANSION_NOTE,
        "polynomial": report.polynomial,
        "verdicts": {f"{p},{q}": v for (p, q), v in sorted(report.verdicts.items())},
        "values": _pq_map(report.values),
        "provenance": {f"{p},{q}": v for (p, q), v in sorted(report.provenance.items())},
        "negative_details": {
            f"{p},{q}": detail for (p, q), detail in sorted(report.negative_details.items())
        },
        "threefold_inequality": report.threefold_inequality,
        "all_nonnegative": report.all_nonnegative(),
    }

    def render(doc):
        print(f"== {doc['label'] or args.path} (dim {doc['dim']}) ==")
        print(f"polynomial stringy E-function: {doc['polynomial']}")
        if doc["all_nonnegative"]:
            print(f"all stringy Hodge numbers with p+q <= {doc['expansion_bound']} are nonnegative")
        else:
            for key, detail in doc["negative_details"].items():
                print(
                    f"NEGATIVE h^{{{key}}}_st = {detail['h_st']} "
                    f"(a_pq = {detail['a_pq']}, "
                    f"discrepancy-1 count = {detail['discrepancy_one_count']})"
                )
        if doc["threefold_inequality"] is not None:
            print(f"threefold h^{{2,2}}_st >= h^{{1,1}}_st: {doc['threefold_inequality']}")

    _emit(doc, args.format, render)
    return 0 if report.all_nonnegative() else 1


def cmd_defect(args) -> int:
    bundle = load_bundle(args.path)
    if not bundle.fibers:
        raise DescriptorFileError(args.path, "no `fibers` block in this file")
    rows = []
    for fd in bundle.fibers:
        rows.append(
            {
                "point": fd.point,
                "local_defect": local_defect(fd),
                "bound_satisfied": defect_bound_check(fd),
                "discrepancy_one_count": sum(
                    c.diamond.h0() for c in fd.components if c.discrepancy == 1
                ),
            }
        )
    doc = {"label": bundle.descriptor.label, "fibers": rows}

    def render(doc):
        print(f"== {doc['label'] or args.path}: local defects ==")
        for row in doc["fibers"]:
            status = "ok" if row["bound_satisfied"] else "VIOLATED (not geometrically realizable)"
            print(
                f"  {row['point']}: sigma = {row['local_defect']}, "
                f"discrepancy-1 bound {row['discrepancy_one_count']}: {status}"
            )

    _emit(doc, args.format, render)
    return 0


def cmd_compare(args) -> int:
    d1 = load_bundle(args.path_a).descriptor
    d2 = load_bundle(args.path_b).descriptor
    equal = crepant_compare(d1, d2)
    diff = None if equal else first_coefficient_difference(d1, d2)
    doc = {
        "labels": [d1.label, d2.label],
        "equal": equal,
        "first_difference": (
            None
            if diff is None
            else {"p": diff[0], "q": diff[1], "b_a": diff[2], "b_b": diff[3]}
        ),
    }

    def render(doc):
        if doc["equal"]:
            print("stringy E-functions are EQUAL (exact rational-function identity)")
        else:
            d = doc["first_difference"]
            print(
                "stringy E-functions DIFFER: first mismatch at "
                f"u^{d['p']} v^{d['q']} ({d['b_a']} vs {d['b_b']})"
            )

    _emit(doc, args.format, render)
    return 0 if equal else 1


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringy",
        description="Exact stringy E-function and stringy Hodge number computations "
        "from JSON log-resolution descriptors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--max-degree", type=int, default=None,
                       help="expansion bound on p+q (default 2*dim)")
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("compute", help="full stringy report for one descriptor")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("check", help="nonnegativity verdicts (exit 1 on a negative)")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("defect", help="per-point local defect table")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(fn=cmd_defect)

    p = sub.add_parser("compare", help="exact equality of two stringy E-functions")
    p.add_argument("path_a")
    p.add_argument("path_b")
    add_common(p)
    p.set_defaults(fn=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DescriptorFileError, DescriptorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
