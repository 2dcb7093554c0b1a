"""Command-line interface.

Exit codes: 0 success / PASS, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import (Certificate, divalg_torsion_admissible, pipeline_certify,
                      verify_certificate)
from .cyclo import field_make
from .elliptic import classify, element_order
from .errors import ChyplatError, UnsupportedPrimeError
from .gmp2 import build_group, torsion_census
from .intervals import find_indefinite_scalar
from .matrices import build_diagonal_form, su_membership
from .presentation import verify_p2_presentation
from .serialize import canonical_json_bytes, load_matrix_input


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chyplat",
        description="exact certificates for regular elliptic torsion separated "
                    "from reflections in congruence quotients")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="build a certificate for an odd prime")
    c.add_argument("--p", type=int, required=True, help="odd prime")
    c.add_argument("--max-prime", type=int, default=10000,
                   help="bound for the separating-prime search (default 10000)")
    c.add_argument("--search-radius", type=int, default=3,
                   help="coefficient radius for the scalar search (default 3)")
    c.add_argument("--out", type=Path, help="certificate file (default stdout)")

    v = sub.add_parser("verify", help="re-verify a certificate file from scratch")
    v.add_argument("--cert", type=Path, required=True)

    g = sub.add_parser("gmp2", help="torsion census of G(m,p,2) as TSV")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--beta-conductor", type=int, default=None,
                   help="censor against diag(1,1,beta) over this conductor "
                        "instead of diag(1,1,-1)")
    g.add_argument("--out", type=Path, help="TSV file (default stdout)")
    g.add_argument("--plot", type=Path, help="also render a summary figure here")

    cl = sub.add_parser("classify", help="classify matrices from a matrix-input file")
    cl.add_argument("--in", dest="infile", type=Path, required=True)

    d = sub.add_parser("divalg-admissible",
                       help="whether 3 divides phi(n) or phi(3n)")
    d.add_argument("--n", type=int, required=True)

    p2 = sub.add_parser("p2-check",
                        help="relation/torsion report for generators R1, J from a "
                             "matrix-input file (matrices[0] = R1, matrices[1] = J)")
    p2.add_argument("--in", dest="infile", type=Path, required=True)
    return parser


def _cmd_certify(args) -> int:
    cert = pipeline_certify(args.p, max_prime=args.max_prime,
                            search_radius=args.search_radius)
    blob = cert.to_bytes()
    if args.out:
        args.out.write_bytes(blob)
        print(f"certificate written to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(blob.decode("utf-8"))
    return 0


def _cmd_verify(args) -> int:
    data = json.loads(Path(args.cert).read_text(encoding="utf-8"))
    result = verify_certificate(Certificate.from_dict(data))
    if result:
        print("PASS")
        return 0
    print(f"FAIL: {result.failure}")
    return 1


def _census_form(args):
    if args.beta_conductor is not None:
        conductor = args.beta_conductor
        if conductor % args.m:
            raise ValueError(
                f"--beta-conductor {conductor} is not a multiple of m = {args.m}")
        field = field_make(conductor)
        return build_diagonal_form(find_indefinite_scalar(field, 3))
    field = field_make(args.m if args.m >= 3 else 3 * args.m)
    return build_diagonal_form(field.from_int(-1))


def _cmd_gmp2(args) -> int:
    group = build_group(args.m, args.p)
    report = torsion_census(group, _census_form(args))
    lines = ["element\torder\tclass"]
    for row in report.rows:
        e = row.element
        lines.append(f"({e.a1},{e.a2},{e.swap})\t{row.order}\t{row.tag}")
    text = "\n".join(lines) + "\n"
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plots import render_census_figure

        render_census_figure(report, str(args.plot))
        print(f"figure written to {args.plot}", file=sys.stderr)
    if not report.ok:
        for v in report.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    return 0


def _cmd_classify(args) -> int:
    payload = json.loads(Path(args.infile).read_text(encoding="utf-8"))
    field, H, mats = load_matrix_input(payload)
    cap = 3 * field.conductor**2
    failures = 0
    print("matrix\torder\tclass")
    for i, g in enumerate(mats):
        if not su_membership(g, H):
            print(f"{i}\t-\terror:not-in-SU(H)")
            failures += 1
            continue
        order = element_order(g, cap)
        if order is None:
            print(f"{i}\t-\terror:order-exceeds-cap")
            failures += 1
            continue
        verdict = classify(g, H, cap=cap)
        print(f"{i}\t{order}\t{verdict.tag}")
    return 1 if failures else 0


def _cmd_divalg(args) -> int:
    print("true" if divalg_torsion_admissible(args.n) else "false")
    return 0


def _cmd_p2check(args) -> int:
    payload = json.loads(Path(args.infile).read_text(encoding="utf-8"))
    _, H, mats = load_matrix_input(payload)
    if len(mats) != 2:
        raise ValueError("p2-check expects exactly two matrices: R1 then J")
    report = verify_p2_presentation(mats[0], mats[1], H)
    sys.stdout.write(canonical_json_bytes(report.to_dict()).decode("utf-8"))
    return 0


_DISPATCH = {
    "certify": _cmd_certify,
    "verify": _cmd_verify,
    "gmp2": _cmd_gmp2,
    "classify": _cmd_classify,
    "divalg-admissible": _cmd_divalg,
    "p2-check": _cmd_p2check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except UnsupportedPrimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChyplatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
