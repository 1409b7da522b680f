"""Command-line front end.

Exit codes: 0 success, 1 a conjecture check produced a finding (a
non-integral or non-representable value), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import characters, verify
from .errors import (
    KlmovError,
    NonIntegerCoefficient,
    NotDivisible,
    NotPolynomial,
    NotZRepresentable,
)
from .laurent import RationalQT
from .lmov import (
    UnlinkSpec,
    conjecture_lhs,
    degree_check,
    describe_source,
    extract_n_table,
    format_genus,
)
from .partitions import format_partition, parse_multipartition, parse_partition
from .rmatrix import bmw_relations_check, braid_relation_check, ribbon_check
from .schur import pb_in_sb, sb_closed_form
from .torus import TorusLinkSpec, ctilde, torus_invariant, unlink_invariant
from . import bmw

SCHEMA = "klmov-v1"

_FINDINGS = (NotDivisible, NotPolynomial, NotZRepresentable, NonIntegerCoefficient)


def rationalqt_to_json(x):
    return {
        "num": [[a, b, str(Fraction(c))] for (a, b), c in sorted(x.num.items())],
        "den": [[a, str(Fraction(c))] for a, c in sorted(x.den.items())],
    }


def rationalqt_from_json(data):
    num = {(a, b): Fraction(c) for a, b, c in data["num"]}
    den = {a: Fraction(c) for a, c in data["den"]}
    return RationalQT(num, den)


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _configure_cache(args):
    if args.no_cache:
        characters.set_cache_dir(None)
        return
    cache_dir = args.cache_dir or os.environ.get("KLMOV_CACHE")
    if cache_dir:
        characters.set_cache_dir(cache_dir)


def _parse_source(args):
    if getattr(args, "torus", None):
        try:
            r, k, L = (int(x) for x in args.torus.split(","))
        except ValueError:
            raise KlmovError(f"--torus wants r,k,L, got {args.torus!r}") from None
        return TorusLinkSpec(r, k, L).validate()
    if getattr(args, "unlink", None):
        return UnlinkSpec(args.unlink)
    raise KlmovError("one of --torus r,k,L or --unlink L is required")


def _source_json(src):
    if isinstance(src, TorusLinkSpec):
        return {"torus": [src.r, src.k, src.L]}
    return {"unlink": src.L}


def cmd_char_table(args):
    table = characters.brauer_table(args.n)
    labels = characters.brauer_labels(args.n)
    from .partitions import partitions_of

    classes = partitions_of(args.n)
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "char-table",
            "n": args.n,
            "labels": [list(a) for a in labels],
            "classes": [list(m) for m in classes],
            "values": [[table[(a, m)] for m in classes] for a in labels],
        }
        _emit(args, json.dumps(data, indent=2))
        return 0
    width = max(len(format_partition(m)) for m in classes) + 2
    head = "chi".ljust(width) + "".join(format_partition(m).rjust(width) for m in classes)
    lines = [head]
    for a in labels:
        row = format_partition(a).ljust(width)
        row += "".join(str(table[(a, m)]).rjust(width) for m in classes)
        lines.append(row)
    _emit(args, "\n".join(lines))
    return 0


def cmd_sb(args):
    lam = parse_partition(args.partition)
    lines = []
    if args.pb or not args.closed:
        lines.append(f"pb expansion of {format_partition(lam)}: {pb_in_sb(lam)}")
    if args.closed or not args.pb:
        lines.append(f"closed form: {sb_closed_form(lam)}")
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "sb",
            "partition": list(lam),
            "closed": rationalqt_to_json(sb_closed_form(lam)),
            "pb_expansion": {
                format_partition(mu): str(Fraction(c))
                for mu, c in pb_in_sb(lam).items()
            },
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        _emit(args, "\n".join(lines))
    return 0


def cmd_ctilde(args):
    colors = parse_multipartition(args.colors)
    table = ctilde(colors, args.r, args.bound) if args.bound else ctilde(colors, args.r)
    entries = sorted(table.entries.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "ctilde",
            "colors": [list(a) for a in colors],
            "r": args.r,
            "entries": [[list(lam), str(Fraction(c))] for lam, c in entries],
        }
        _emit(args, json.dumps(data, indent=2))
        return 0
    lines = [f"cabling constants for colors {args.colors} at r={args.r}:"]
    for lam, c in entries:
        lines.append(f"  {format_partition(lam):>10} : {c}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_invariant(args):
    src = _parse_source(args)
    colors = parse_multipartition(args.colors)
    if isinstance(src, TorusLinkSpec):
        value = (
            torus_invariant(src, colors, args.bound)
            if args.bound
            else torus_invariant(src, colors)
        )
    else:
        value = unlink_invariant(colors)
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "invariant",
            "link": _source_json(src),
            "colors": [list(a) for a in colors],
            "value": rationalqt_to_json(value),
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        _emit(args, str(value))
    return 0


def cmd_lmov(args):
    src = _parse_source(args)
    mu = parse_multipartition(args.mu)
    try:
        kwargs = {"bound": args.bound} if args.bound else {}
        poly = conjecture_lhs(src, mu, antisymmetrize=not args.no_antisym, **kwargs)
        table = extract_n_table(poly, mu)
    except _FINDINGS as exc:
        finding = {
            "schema": SCHEMA,
            "kind": "lmov",
            "link": _source_json(src),
            "mu": args.mu,
            "integral": False,
            "finding": f"{type(exc).__name__}: {exc}",
        }
        if args.format == "json":
            _emit(args, json.dumps(finding, indent=2))
        else:
            _emit(args, f"FINDING for {describe_source(src)} colored {args.mu}: "
                        f"{finding['finding']}")
        return 1
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "lmov",
            "link": _source_json(src),
            "mu": args.mu,
            "integral": True,
            "entries": [
                {"g": format_genus(g), "beta": b, "N": n}
                for (g, b), n in sorted(table.entries.items())
            ],
        }
        _emit(args, json.dumps(data, indent=2))
    elif args.format == "csv":
        lines = ["g,beta,N"]
        for (g, b), n in sorted(table.entries.items()):
            lines.append(f"{format_genus(g)},{b},{n}")
        _emit(args, "\n".join(lines))
    else:
        head = f"{describe_source(src)} colored {args.mu}"
        _emit(args, head + "\n" + table.render_text())
    return 0


def cmd_degree(args):
    src = _parse_source(args)
    mu = parse_multipartition(args.mu)
    res = degree_check(src, mu, args.bound) if args.bound else degree_check(src, mu)
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "kind": "degree",
            "link": _source_json(src),
            "mu": args.mu,
            "valuation": res.valuation,
            "bound": res.bound,
            "pass": res.passed,
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        val = "vacuous (zero)" if res.valuation is None else str(res.valuation)
        _emit(args, f"valuation {val}, bound {res.bound}: "
                    f"{'pass' if res.passed else 'FAIL'}")
    return 0 if res.passed else 1


def cmd_bmw(args):
    checks = [
        ("cubic-relation", bmw.cubic_relation_holds),
        ("skein-relation", bmw.relation_a5_holds),
        ("inverse", bmw.inverse_check),
        ("idempotents", bmw.idempotent_checks),
        ("eigenvalues", bmw.eigenvalue_checks),
    ]
    results = [(name, fn()) for name, fn in checks]
    results += [
        (f"trace-crosscheck-m{m}", bmw.power_trace_crosscheck(m))
        for m in range(1, 7)
    ]
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    _emit(args, "\n".join(lines))
    return 0 if all(ok for _, ok in results) else 1


def cmd_rmatrix(args):
    n = args.N
    results = []
    if args.check in ("all", "ribbon"):
        results.append(("ribbon", ribbon_check(n)))
    if args.check in ("all", "braid"):
        results.append(("braid", braid_relation_check(n)))
    if args.check in ("all", "bmw"):
        results.append(("bmw", bmw_relations_check(n)))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name} (N={n})" for name, ok in results]
    _emit(args, "\n".join(lines))
    return 0 if all(ok for _, ok in results) else 1


def cmd_verify(args):
    results = verify.run_suite(
        suite=args.suite, only=args.only, seed=args.seed, jobs=args.jobs or 1
    )
    lines = []
    for name, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name:<28} {detail}")
    passed = sum(1 for _, ok, _ in results if ok)
    lines.append(f"{passed}/{len(results)} checks passed")
    _emit(args, "\n".join(lines))
    return 0 if passed == len(results) else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--cache-dir", help="directory for the character-table cache")
    common.add_argument("--no-cache", action="store_true", help="disable the disk cache")
    common.add_argument("--jobs", type=int, default=0, help="parallel workers (verify)")
    common.add_argument("--bound", type=int, default=0, help="override size bounds")

    parser = argparse.ArgumentParser(
        prog="klmov",
        description="Exact colored Kauffman polynomials of torus links and the "
        "associated integrality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-table", parents=[common], help="print a character table")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("sb", parents=[common], help="type-B Schur data for a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--pb", action="store_true", help="only the power-sum expansion")
    p.add_argument("--closed", action="store_true", help="only the closed form")
    p.set_defaults(func=cmd_sb)

    p = sub.add_parser("ctilde", parents=[common], help="cabling-constant table")
    p.add_argument("--colors", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_ctilde)

    p = sub.add_parser("invariant", parents=[common], help="colored link invariant")
    p.add_argument("--torus", help="r,k,L for the torus link T(rL,kL)")
    p.add_argument("--unlink", type=int, help="number of unknot components")
    p.add_argument("--colors", required=True)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("lmov", parents=[common], help="integer coefficient table")
    p.add_argument("--torus")
    p.add_argument("--unlink", type=int)
    p.add_argument("--mu", required=True)
    p.add_argument("--no-antisym", action="store_true")
    p.set_defaults(func=cmd_lmov)

    p = sub.add_parser("degree", parents=[common], help="free-energy degree check")
    p.add_argument("--torus")
    p.add_argument("--unlink", type=int)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("bmw", parents=[common], help="rank-2 algebra checks")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_bmw)

    p = sub.add_parser("rmatrix", parents=[common], help="braiding matrix checks")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--check", choices=("all", "ribbon", "braid", "bmw"), default="all")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=("paper", "properties", "all"), default="paper")
    p.add_argument("--only", help="substring filter on check names")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure_cache(args)
        return args.func(args)
    except KlmovError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
