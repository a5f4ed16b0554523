"""Command-line interface: ``curvecount count|verify|tacnode|salmon``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import checks, classical, tacnode
from .irreducible import count_irr, decomposition_weight, decompositions
from .severi import CountTable, InvalidKeyError, SeveriKey, count, expand
from .tally import Tally, TallyError, parse_tally

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(fmt: str, command: str, inputs: dict, result: Any, text: str, citations: Sequence[str] = ()) -> None:
    if fmt == "json":
        print(json.dumps({"command": command, "inputs": inputs, "result": result, "citations": list(citations)}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["command", "result"])
        w.writerow([command, result if isinstance(result, str) else json.dumps(result)])
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational {s!r}; use p or p/q") from exc


def _rationals(s: str) -> list[Fraction]:
    return [_rational(p) for p in s.split(",")] if s.strip() else []


# --------------------------------------------------------------------------
# count


def _key_from_args(args) -> SeveriKey:
    try:
        alpha = parse_tally(args.alpha)
        beta = parse_tally(args.beta)
    except TallyError as exc:
        raise UsageError(str(exc)) from exc
    try:
        return SeveriKey(args.d, args.delta, alpha, beta)
    except InvalidKeyError as exc:
        raise UsageError(f"invalid key: {exc}") from exc


def _expansion_tree(k: SeveriKey, memo: CountTable, irr: bool, depth: int) -> dict:
    value = count_irr(k, memo) if irr else count(k, memo)
    label = str(k).replace("N^", "N_irr^") if irr else str(k)
    node: dict[str, Any] = {"key": label, "value": str(value)}
    if depth <= 0 or k.d < 2 or value == 0:
        return node
    children = []
    if irr:
        for order, _ in k.beta.orders():
            e = Tally.unit(order)
            child = SeveriKey(k.d, k.delta, k.alpha + e, k.beta - e)
            sub = _expansion_tree(child, memo, irr, depth - 1)
            if sub["value"] != "0":
                children.append({"coefficient": str(order), "origin": f"first_sum(k={order})", **sub})
        for dec in decompositions(k):
            w = decomposition_weight(k, dec, memo)
            if w:
                parts = " + ".join(
                    f"C(d={p.d},delta={p.delta},alpha={p.alpha},beta={p.beta},gamma={p.gamma})" for p in dec.profiles
                )
                children.append({"origin": "second_sum", "components": parts, "contribution": str(w)})
    else:
        for t in expand(k, memo, prune=True):
            sub = _expansion_tree(t.child, memo, irr, depth - 1)
            children.append({"coefficient": str(t.coefficient), "origin": t.origin, **sub})
    node["terms"] = children
    return node


def _tree_text(node: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if "components" in node:
        return [f"{pad}{node['contribution']}  <- {node['components']}"]
    coef = f"{node['coefficient']} * " if "coefficient" in node else ""
    origin = f"  [{node['origin']}]" if "origin" in node else ""
    lines = [f"{pad}{coef}{node['key']} = {node['value']}{origin}"]
    for c in node.get("terms", []):
        lines.extend(_tree_text(c, indent + 1))
    return lines


def cmd_count(args) -> int:
    k = _key_from_args(args)
    memo = CountTable()
    if args.cache:
        try:
            memo = CountTable.load(args.cache)
        except FileNotFoundError:
            pass
        except OSError as exc:
            logging.warning("cannot read cache %s: %s", args.cache, exc)
    inputs = {
        "d": k.d,
        "delta": k.delta,
        "alpha": k.alpha.to_list(),
        "beta": k.beta.to_list(),
        "irr": args.irr,
    }
    label = str(k).replace("N^", "N_irr^") if args.irr else str(k)
    cites = ["recursion over contact conditions with a fixed line"]
    if args.expand:
        tree = _expansion_tree(k, memo, args.irr, args.depth)
        _emit(args.format, "count", inputs, tree, "\n".join(_tree_text(tree)), cites)
    else:
        value = count_irr(k, memo) if args.irr else count(k, memo)
        if args.format == "csv":
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(["expression", "value"])
            w.writerow([label, value])
        else:
            _emit(args.format, "count", inputs, str(value), str(value), cites)
    if args.cache:
        memo.save(args.cache)
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    results = checks.run(args.only)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = {
            "command": "verify",
            "inputs": {"only": args.only},
            "result": {"passed": ok, "rows": [r.as_dict() for r in results]},
            "citations": sorted({r.citation for r in results}),
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["expression", "expected", "computed", "status", "citation"])
        for r in results:
            w.writerow([r.expression, r.expected, r.computed, r.status, r.citation])
    else:
        width = max(len(r.expression) for r in results)
        for r in results:
            print(f"{r.status:4}  {r.expression:<{width}}  expected {r.expected}  got {r.computed}  ({r.citation})")
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# tacnode


def _point(args) -> tacnode.VersalPoint:
    try:
        return tacnode.VersalPoint(args.m, tuple(_rationals(args.alpha)), tuple(_rationals(args.beta)))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_tacnode(args) -> int:
    fmt = args.format
    sub = args.tac
    if sub == "disc":
        p = _point(args)
        poly = str(tacnode.fiber_discriminant(p))
        _emit(fmt, "tacnode disc", {"m": p.m, "alpha": args.alpha, "beta": args.beta}, poly, poly)
    elif sub == "profile":
        p = _point(args)
        prof = tacnode.node_profile(p)
        res = {"double_roots": prof.double_roots, "worse": prof.worse}
        _emit(fmt, "tacnode profile", {"m": p.m, "alpha": args.alpha, "beta": args.beta}, res, str(prof))
    elif sub == "psi":
        if args.m < 2:
            raise UsageError("m must be >= 2")
        t = _rational(args.t)
        p = tacnode.psi_point(args.m, t)
        inputs = {"m": args.m, "t": str(t)}
        if args.profile:
            prof = tacnode.node_profile(p)
            _emit(fmt, "tacnode psi", inputs, {"double_roots": prof.double_roots, "worse": prof.worse}, str(prof))
        else:
            res = {"alpha": [str(a) for a in p.alpha], "beta": [str(b) for b in p.beta]}
            text = f"alpha = {', '.join(res['alpha'])}\nbeta = {', '.join(res['beta'])}"
            _emit(fmt, "tacnode psi", inputs, res, text)
    elif sub == "nu":
        try:
            poly = str(tacnode.nu_gamma(args.m, _rational(args.gamma)))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(fmt, "tacnode nu", {"m": args.m, "gamma": args.gamma}, poly, poly)
    elif sub == "swallowtail":
        poly = tacnode.swallowtail()
        _emit(fmt, "tacnode swallowtail", {}, str(poly), str(poly))
    elif sub == "cusp":
        ok = tacnode.cusp_locus_verify()
        _emit(fmt, "tacnode cusp", {}, str(ok).lower(), str(ok).lower())
        return EXIT_OK if ok else EXIT_FAIL
    elif sub == "cheb":
        if args.n < 0:
            raise UsageError("n must be >= 0")
        poly = str(tacnode.chebyshev(args.kind, args.n))
        _emit(fmt, "tacnode cheb", {"kind": args.kind, "n": args.n}, poly, poly)
    return EXIT_OK


def cmd_salmon(args) -> int:
    if args.d < 2:
        raise UsageError("surface degree must be >= 2")
    s = classical.salmon(args.d)
    res = {k: str(v) for k, v in vars(s).items()}
    text = "\n".join(f"{k}: {v}" for k, v in res.items())
    _emit(args.format, "salmon", {"d": args.d}, res, text)
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = argparse.ArgumentParser(prog="curvecount", description="Exact plane curve counts and a tacnode deformation lab.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[fmt], help="generalized Severi degree")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--delta", type=int, required=True)
    c.add_argument("--alpha", default="[]", help="tally: k or [n1,n2,...]")
    c.add_argument("--beta", default="[]", help="tally: k or [n1,n2,...]")
    c.add_argument("--irr", action="store_true", help="count irreducible curves only")
    c.add_argument("--expand", action="store_true", help="show the recursion terms")
    c.add_argument("--depth", type=int, default=1, help="levels of --expand (default 1)")
    c.add_argument("--cache", help="newline-delimited JSON memo file (read and updated)")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", parents=[fmt], help="recompute the table of known values")
    v.add_argument("--only", choices=checks.SUITES)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tacnode", help="tacnode deformation lab")
    tsub = t.add_subparsers(dest="tac", required=True)
    for name in ("disc", "profile"):
        q = tsub.add_parser(name, parents=[fmt])
        q.add_argument("--m", type=int, required=True)
        q.add_argument("--alpha", required=True, help="alpha_0,...,alpha_{m-2} (use --alpha=-1,... for negatives)")
        q.add_argument("--beta", required=True, help="beta_0,...,beta_{m-1}")
    q = tsub.add_parser("psi", parents=[fmt])
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--t", required=True)
    q.add_argument("--profile", action="store_true")
    q = tsub.add_parser("nu", parents=[fmt])
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--gamma", required=True)
    tsub.add_parser("swallowtail", parents=[fmt])
    tsub.add_parser("cusp", parents=[fmt])
    q = tsub.add_parser("cheb", parents=[fmt])
    q.add_argument("--kind", choices=("T", "U", "V", "W"), required=True)
    q.add_argument("--n", type=int, required=True)
    t.set_defaults(func=cmd_tacnode)

    s = sub.add_parser("salmon", parents=[fmt], help="classical degrees for a surface in P^3")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_salmon)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"curvecount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
