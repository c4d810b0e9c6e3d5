"""Command-line front end: every command prints one deterministic report."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__, chow_witt, flag, motive, schubert, verify
from .tableau import (
    Tableau,
    TableauError,
    Truncation,
    Twist,
    addable_positions,
    classify,
    irredundant_components,
    max_degree_of,
    removable_positions,
    shape_key,
    shapes_of_degree,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _truncation(args) -> Truncation:
    if args.k is None or args.n is None:
        raise UsageError("both -k and -n are required")
    try:
        return Truncation(args.k, args.n)
    except TableauError as exc:
        raise UsageError(str(exc)) from exc


def _twist(args) -> Twist:
    return Twist.of(args.twist)


def _shape_str(s) -> str:
    return "(" + ",".join(map(str, s)) + ")" if s else "∅"


# -- commands ------------------------------------------------------------------


def cmd_tableaux(args):
    tr, tw = _truncation(args), _twist(args)
    top = max_degree_of(tr) if args.max_degree is None else min(args.max_degree, max_degree_of(tr))
    degrees, evens = [], []
    for d in range(top + 1):
        rows = []
        for s in shapes_of_degree(tr, d):
            t = Tableau(s, tw)
            c = classify(t, tr)
            rows.append({
                "shape": list(s),
                "irredundant": c.irredundant,
                "full": c.full,
                "even": c.even,
                "addable_rows": addable_positions(t, tr),
                "removable_rows": removable_positions(t, tr),
            })
            if c.even:
                evens.append(list(s))
        entry = {"d": d, "tableaux": rows}
        if args.matrices:
            m = schubert.sq2_matrix(tr, tw, d)
            entry["sq2_matrix"] = {"target": [list(s) for s in m.target], "rows": m.rows()}
        degrees.append(entry)
    comps = irredundant_components(tr, tw)
    components = [
        {"root": list(root), "size": len(comps[root]),
         "shapes": [list(s) for s in sorted(comps[root], key=lambda x: (sum(x), shape_key(x)))]}
        for root in sorted(comps, key=lambda x: (sum(x), shape_key(x)))
    ]
    count = sum(len(e["tableaux"]) for e in degrees)
    return {"k": tr.k, "n": tr.n, "twist": tw.name.lower(), "count": count,
            "degrees": degrees, "evens": evens, "components": components}


def _md_tableaux(res) -> str:
    lines = [f"## Tableaux of ({res['k']},{res['n']}), {res['twist']}", "",
             "| d | shape | irredundant | full | even |", "|---|---|---|---|---|"]
    for e in res["degrees"]:
        for t in e["tableaux"]:
            lines.append(f"| {e['d']} | {_shape_str(t['shape'])} | {t['irredundant']} | {t['full']} | {t['even']} |")
    lines += ["", "even: " + (", ".join(_shape_str(s) for s in res["evens"]) or "none")]
    return "\n".join(lines) + "\n"


def cmd_decompose(args):
    if args.flag is not None:
        if args.flag < 1:
            raise UsageError("--flag needs n >= 1")
        d = motive.flag_motive(args.flag)
        return {"decomposition": d.to_json(),
                "realization": [r.to_json() for r in motive.realization_rows(d)]}
    tr, tw = _truncation(args), _twist(args)
    d = motive.decompose_grassmannian(tr.k, tr.n, tw)
    out = {"decomposition": d.to_json()}
    if tw is Twist.UNTWISTED:
        out["realization"] = [r.to_json() for r in motive.realization_report(tr.k, tr.n)]
    out["witt_constraints"] = [
        {"item": c.item, "residues_mod_4": list(c.residues)} for c in motive.witt_constraints(tr.k, tr.n, tw)
    ]
    out["recursions"] = [
        {"item": i, "holds": ok} for i, ok in sorted(motive.recursion_items(tr.k, tr.n, tw).items())
    ]
    return out


def _md_decompose(res) -> str:
    d = res["decomposition"]
    lines = [f"## {d['object']}", "", "| kind | weight | count |", "|---|---|---|"]
    for s in d["summands"]:
        lines.append(f"| {s['kind']} | {s['weight']} | {s['count']} |")
    c = d["counts"]
    lines += ["", f"Witt weights: {d['witt_weights']}", f"s = {c['s']}", f"w = {c['w']}", f"t = {c['t']}"]
    return "\n".join(lines) + "\n"


def cmd_chow_witt(args):
    tr, tw = _truncation(args), _twist(args)
    table = chow_witt.chow_witt_basis(tr.k, tr.n, tw)
    out = table.to_json()
    out["ranks"] = [r.to_json() for r in chow_witt.rank_report(tr.k, tr.n, tw)]
    if (tr.k, tr.n) in ((2, 4), (3, 6)):
        out["reference_match"] = chow_witt.reference_comparison(tr.k, tr.n, tw)
    args._table = table
    return out


def cmd_e_cohomology(args):
    tr, tw = _truncation(args), _twist(args)
    rows = []
    for d in range(max_degree_of(tr) + 1):
        split = schubert.ker_im_split(tr, tw, d)
        rows.append({
            "d": d,
            "e_dim": schubert.e_dimension(tr, tw, d),
            "ker_dim": split.ker_dim,
            "im_dim": schubert.im_dimension(tr, tw, d),
            "even": [list(s) for s in split.even_basis],
            "split_verified": split.verified,
        })
    return {"k": tr.k, "n": tr.n, "twist": tw.name.lower(), "degrees": rows}


def _md_e(res) -> str:
    lines = [f"## E-cohomology of ({res['k']},{res['n']}), {res['twist']}", "",
             "| d | E | ker | im | even |", "|---|---|---|---|---|"]
    for r in res["degrees"]:
        lines.append(f"| {r['d']} | {r['e_dim']} | {r['ker_dim']} | {r['im_dim']} | "
                     f"{', '.join(_shape_str(s) for s in r['even'])} |")
    return "\n".join(lines) + "\n"


def cmd_flag(args):
    n = args.n
    if n is None or n < 1:
        raise UsageError("flag needs -n >= 1")
    ts = []
    for a in range(1, n // 2 + 1):
        t = flag.t_class(n, a)
        ts.append({"a": a, "degree": flag.t_degree(n, a), "class": str(t),
                   "monomials": [list(e) for e in t.sorted_terms()]})
    return {"n": n, "e_dims": flag.e_flag_dims(n), "exterior_dims": flag.exterior_dims(n),
            "t_classes": ts, "exterior_check": flag.exterior_check(n)}


def _md_flag(res) -> str:
    lines = [f"## Fl({res['n']})", "", f"E dims: {res['e_dims']}", ""]
    for t in res["t_classes"]:
        lines.append(f"- T_{t['a']} (degree {t['degree']}): {t['class']}")
    lines.append(f"\nexterior check: {res['exterior_check']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    bounds = verify.Bounds(max_n=args.max_n, max_degree=args.max_degree, seed=args.seed)
    results = verify.run(args.scope, bounds)
    return {"scope": args.scope, "passed": all(r.passed for r in results),
            "checks": [r.to_json() for r in results]}


def _md_verify(res) -> str:
    lines = ["| scope | check | cases | result |", "|---|---|---|---|"]
    for c in res["checks"]:
        lines.append(f"| {c['scope']} | {c['name']} | {c['cases']} | {'pass' if c['passed'] else 'FAIL'} |")
    return "\n".join(lines) + "\n"


# -- plumbing ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mwmotive", description=__doc__)
    p.add_argument("--version", action="version", version=f"mwmotive {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, kn=True):
        if kn:
            sp.add_argument("-k", type=int)
            sp.add_argument("-n", type=int)
            sp.add_argument("--twist", action="store_true", help="use O(1)-twisted tableaux")
        sp.add_argument("--format", choices=("json", "markdown"), default="json")

    sp = sub.add_parser("tableaux", help="list tableaux with their classification")
    common(sp)
    sp.add_argument("--max-degree", type=int)
    sp.add_argument("--matrices", action="store_true", help="include Sq² matrices")
    sp.set_defaults(func=cmd_tableaux, md=_md_tableaux)

    sp = sub.add_parser("decompose", help="MW-motivic decomposition")
    common(sp)
    sp.add_argument("--flag", type=int, metavar="N", help="complete flag variety Fl(N) instead")
    sp.set_defaults(func=cmd_decompose, md=_md_decompose)

    sp = sub.add_parser("chow-witt", help="additive Chow-Witt basis")
    common(sp)
    sp.set_defaults(func=cmd_chow_witt, md=None)

    sp = sub.add_parser("e-cohomology", help="Ker/Im of Sq² per degree")
    common(sp)
    sp.set_defaults(func=cmd_e_cohomology, md=_md_e)

    sp = sub.add_parser("flag", help="E-cohomology of Fl(n) and T_a classes")
    sp.add_argument("-n", type=int)
    common(sp, kn=False)
    sp.set_defaults(func=cmd_flag, md=_md_flag)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--scope", choices=verify.SCOPES + ("all",), default="all")
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--max-degree", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, kn=False)
    sp.set_defaults(func=cmd_verify, md=_md_verify)
    return p


def _parameters(args) -> dict:
    skip = {"func", "md", "command", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and not k.startswith("_")}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"mwmotive {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "markdown":
        if args.command == "chow-witt":
            sys.stdout.write(args._table.to_markdown())
        else:
            sys.stdout.write(args.md(result))
    else:
        report = {"command": args.command, "parameters": _parameters(args),
                  "result": result, "version": __version__}
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    if args.command == "verify" and not result["passed"]:
        failed = [f"{c['scope']}/{c['name']}" for c in result["checks"] if not c["passed"]]
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
