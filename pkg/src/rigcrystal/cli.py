"""Command-line front end: ``rigcrystal {gen,fold,virtcheck,decompose,validate}``.

Exit status: 0 success, 1 domain error, 2 usage error, 3 virtualization
check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import CartanMatrix, Weight, parse_cartan, symmetrize
from .errors import CrystalError
from .explorer import DEFAULT_MAX_NODES, export_dot, export_json, generate
from .folding import build_folding, check_virtualization, verify_folding
from .tensor import lr_decompose

EXIT_DOMAIN = 1
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


def _weight(A: CartanMatrix, text: str, allow_inf: bool = False) -> Weight | None:
    if text.strip().lower() in ("inf", "infinity"):
        if allow_inf:
            return None
        raise UsageError("'inf' is not allowed here")
    try:
        coeffs = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}; expected comma-separated integers") from None
    if len(coeffs) != A.rank:
        raise UsageError(f"weight {text!r} has {len(coeffs)} coefficients, rank is {A.rank}")
    w = Weight.fundamental(A.labels, coeffs)
    if not w.is_dominant():
        raise UsageError(f"weight {text!r} is not dominant")
    return w


def _graph_text(g) -> str:
    lines = [f"nodes: {len(g.nodes)}  edges: {len(g.edges)}  complete: {str(g.complete).lower()}"]
    for k, rc in enumerate(g.nodes):
        lines.append(f"[{k}]")
        lines.extend("  " + ln for ln in rc.to_text().splitlines())
    lines.append("edges:")
    lines.extend(f"  {s} -{a}-> {d}" for s, d, a in g.edges)
    return "\n".join(lines)


def _fold_dot(fd) -> str:
    palette = ["darkred", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "teal"]
    colors = {a: palette[k % len(palette)] for k, a in enumerate(fd.base.labels)}
    name = {v: "v_" + "_".join(map(str, v)) for v in fd.virtual_labels}
    out = ["graph folding {"]
    for v in fd.virtual_labels:
        out.append(f'  {name[v]} [label="{",".join(map(str, v))}", color="{colors[fd.orbit[v]]}"];')
    for u, v in fd.edges:
        out.append(f"  {name[u]} -- {name[v]};")
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_gen(args) -> tuple[str, int]:
    A = parse_cartan(args.cartan)
    hw = _weight(A, args.hw, allow_inf=True)
    if hw is None and args.depth is None:
        raise UsageError("--depth is required with --hw inf")
    g = generate(A, hw, depth=args.depth, max_nodes=args.max_nodes, workers=args.workers)
    if args.format == "dot":
        return export_dot(g), 0
    if args.format == "json":
        return export_json(g) + "\n", 0
    return _graph_text(g) + "\n", 0


def cmd_fold(args) -> tuple[str, int]:
    A = parse_cartan(args.cartan)
    fd = build_folding(A)
    report = verify_folding(fd, A)
    if args.format == "dot":
        return _fold_dot(fd), 0
    doc = fd.to_json()
    doc["report"] = report.to_json()
    if args.format == "json":
        return json.dumps(doc, indent=1, sort_keys=True) + "\n", 0
    lines = [f"N = {fd.N}, d = {list(fd.symmetrizer.d)}",
             f"vertices: {len(fd.virtual_labels)}  edges: {len(fd.edges)}",
             str(report)]
    return "\n".join(lines) + "\n", 0


def cmd_virtcheck(args) -> tuple[str, int]:
    A = parse_cartan(args.cartan)
    hw = _weight(A, args.hw, allow_inf=True)
    fd = build_folding(A)
    g = generate(A, hw, depth=args.depth, workers=args.workers)
    violations = check_virtualization(fd, g.nodes)
    status = EXIT_VIOLATION if violations else 0
    if args.format == "json":
        doc = {"elements": len(g.nodes), "depth": args.depth,
               "violations": [{"element": v.element.to_json(), "index": v.index, "check": v.check,
                               "detail": v.detail} for v in violations]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n", status
    lines = [f"checked {len(g.nodes)} elements to depth {args.depth}: {len(violations)} violations"]
    lines += [f"  {v.check} at index {v.index}: {v.detail}" for v in violations[:20]]
    return "\n".join(lines) + "\n", status


def cmd_decompose(args) -> tuple[str, int]:
    A = parse_cartan(args.cartan)
    mu = _weight(A, args.mu)
    lam = _weight(A, args.lam)
    dec = lr_decompose(A, mu, lam, depth=args.depth, max_nodes=args.max_nodes)
    if args.format == "json":
        return json.dumps(dec.to_json(), indent=1, sort_keys=True) + "\n", 0
    return dec.to_table() + "\n", 0


def cmd_validate(args) -> tuple[str, int]:
    A = parse_cartan(args.cartan)
    D = symmetrize(A)
    if args.format == "json":
        doc = A.to_json()
        doc["symmetrizer"] = list(D.d)
        return json.dumps(doc, indent=1, sort_keys=True) + "\n", 0
    rows = "\n".join("  " + " ".join(f"{x:>3}" for x in r) for r in A.entries)
    return f"labels: {list(A.labels)}\n{rows}\nsymmetrizer: {list(D.d)}\n", 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigcrystal", description="Rigged-configuration crystals.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default):
        sp.add_argument("--cartan", required=True,
                        help="named type (A2, G2, A2~), inline JSON matrix, or JSON file path")
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", "-o", help="write to this path instead of stdout")

    sp = sub.add_parser("gen", help="generate RC(inf) or RC(lambda)")
    common(sp, ["dot", "json", "text"], "text")
    sp.add_argument("--hw", required=True, help="'inf' or comma-separated Lambda coefficients")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("fold", help="build and verify the simply-laced folding")
    common(sp, ["json", "dot", "text"], "json")
    sp.set_defaults(func=cmd_fold)

    sp = sub.add_parser("virtcheck", help="check virtualization commutes with the crystal operators")
    common(sp, ["text", "json"], "text")
    sp.add_argument("--hw", default="inf")
    sp.add_argument("--depth", type=int, default=6)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_virtcheck)

    sp = sub.add_parser("decompose", help="Littlewood-Richardson decomposition of B(mu) x B(lambda)")
    common(sp, ["text", "json"], "text")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("validate", help="validate a Cartan matrix and print its symmetrizer")
    common(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CrystalError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
