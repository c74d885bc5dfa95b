"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or argument error.  Negative
coordinates can be passed after `--` or via the four-value --box option.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from .categories import CategoryId, Functor
from .graphs import Box, generate
from .grothendieck import dim, tensor, upoly
from .eigvec import pf_value
from .verify import ALL_CHECKS, check_iso_family, run_checks
from .weights import (
    CosetClass,
    Weight,
    category_of_simple,
    dot_orbit,
    weight_to_json,
)

_CAT_CHOICES = [c.value for c in CategoryId]


def _label_key(l: tuple[int, int]) -> str:
    return f"{l[0]},{l[1]}"


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_weight(args) -> Weight:
    return Weight(CosetClass(args.cls), (args.p, args.q))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sl3graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tensor", help="tensor-product multiplicities of two simples")
    for name in ("i", "j", "k", "l"):
        t.add_argument(name, type=int)

    d = sub.add_parser("dim", help="dimension of the simple with highest weight (i, j)")
    d.add_argument("i", type=int)
    d.add_argument("j", type=int)

    u = sub.add_parser("upoly", help="basis polynomial of a label, as a monomial map")
    u.add_argument("i", type=int)
    u.add_argument("j", type=int)

    o = sub.add_parser("orbit", help="dot-orbit of a weight within its coset")
    o.add_argument("cls", choices=[c.value for c in CosetClass])
    o.add_argument("p", type=int)
    o.add_argument("q", type=int)

    c = sub.add_parser("classify", help="transitive subquotient families of a simple")
    c.add_argument("cls", choices=[c.value for c in CosetClass])
    c.add_argument("p", type=int)
    c.add_argument("q", type=int)
    c.add_argument("--whittaker", action="store_true")

    e = sub.add_parser("eig", help="positive eigenvector value at a vertex")
    e.add_argument("--category", required=True, choices=_CAT_CHOICES)
    e.add_argument("p", type=int)
    e.add_argument("q", type=int)

    g = sub.add_parser("graph", help="generate a window of an action graph")
    g.add_argument("--category", required=True, choices=_CAT_CHOICES)
    g.add_argument("--functor", default="F", choices=["F", "G"])
    g.add_argument("--box", nargs=4, type=int, required=True,
                   metavar=("PMIN", "PMAX", "QMIN", "QMAX"))
    g.add_argument("--format", default="json", choices=["dot", "json", "csv"])
    g.add_argument("--out")

    v = sub.add_parser("verify", help="run the exact invariant checks")
    v.add_argument("--category", default="all", choices=_CAT_CHOICES + ["all"])
    v.add_argument("--window", type=int, default=24)
    v.add_argument("--checks", default=",".join(ALL_CHECKS))
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--out")

    i = sub.add_parser("iso", help="verify a catalogued graph isomorphism edge-exactly")
    i.add_argument("left", choices=_CAT_CHOICES)
    i.add_argument("right", choices=_CAT_CHOICES)
    i.add_argument("--window", type=int, default=20)

    return ap


def _cmd_verify(args) -> int:
    cats = list(CategoryId) if args.category == "all" else [CategoryId(args.category)]
    checks = tuple(s.strip() for s in args.checks.split(",") if s.strip())
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        print(f"unknown checks: {unknown}", file=sys.stderr)
        return 2
    if args.jobs > 1 and len(cats) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as ex:
            chunks = list(ex.map(
                lambda c: run_checks([c], args.window,
                                     tuple(k for k in checks if k not in ("iso", "distinct"))),
                cats))
        reports = [r for chunk in chunks for r in chunk]
        reports += run_checks(cats, args.window,
                              tuple(k for k in checks if k in ("iso", "distinct")))
    else:
        reports = run_checks(cats, args.window, checks)
    text = "".join(json.dumps(r.to_json_obj()) + "\n" for r in reports)
    _write(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "tensor":
            mults = tensor((args.i, args.j), (args.k, args.l))
            _write(json.dumps({_label_key(m): c for m, c in sorted(mults.items())}) + "\n", None)
        elif args.command == "dim":
            _write(f"{dim((args.i, args.j))}\n", None)
        elif args.command == "upoly":
            poly = upoly(args.i, args.j)
            _write(json.dumps({_label_key(m): c for m, c in sorted(poly.coeffs.items())}) + "\n", None)
        elif args.command == "orbit":
            orbit = sorted(dot_orbit(_parse_weight(args)))
            _write(json.dumps([weight_to_json(w) for w in orbit]) + "\n", None)
        elif args.command == "classify":
            cats = category_of_simple(_parse_weight(args), whittaker=args.whittaker)
            _write(json.dumps([c.value for c in cats]) + "\n", None)
        elif args.command == "eig":
            _write(f"{pf_value(CategoryId(args.category), (args.p, args.q))}\n", None)
        elif args.command == "graph":
            box = Box(*args.box)
            g = generate(CategoryId(args.category), Functor(args.functor), box)
            text = {"dot": g.to_dot, "json": g.to_json, "csv": g.to_csv}[args.format]()
            _write(text, args.out)
        elif args.command == "verify":
            return _cmd_verify(args)
        elif args.command == "iso":
            half = args.window // 2
            report = check_iso_family(CategoryId(args.left), CategoryId(args.right),
                                      Box(-half, half, -half, half))
            _write(json.dumps(report.to_json_obj()) + "\n", None)
            return 0 if report.passed else 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
