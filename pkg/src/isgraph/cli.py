"""Command-line front end.

Exit codes: 0 ok, 1 domain error, 2 cap exceeded, 3 parse error,
4 firm discrepancies in ``verify``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .arithmetic import catalan_solutions, suzuki_cograph_condition
from .classes import CLASS_NAMES, DEFAULT_PERFECT_CAP, classify
from .errors import IsgraphError, ParseError
from .graphs import SimpleGraph, z_fragment_graph
from .groups import DEFAULT_ORDER_CAP, build_group
from .lattice import DEFAULT_SUBGROUP_CAP, enumerate_subgroups, structural_profile
from .theorems import CatalogConfig, build_catalog, group_data, run_verification

EXIT_DISCREPANCY = 4


@dataclass(frozen=True)
class CliConfig:
    order_cap: int = DEFAULT_ORDER_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    perfect_vertex_cap: int = DEFAULT_PERFECT_CAP
    format: str = "text"
    jobs: int = 1

    def __post_init__(self):
        for name in ("order_cap", "subgroup_cap", "perfect_vertex_cap", "jobs"):
            if getattr(self, name) < 1:
                raise ParseError(f"--{name.replace('_', '-')} must be positive")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which means "cap exceeded" here
        raise ParseError(message)


def _classes(text: str | None) -> tuple[str, ...]:
    if not text:
        return CLASS_NAMES
    out = tuple(c.strip().replace("-", "_") for c in text.split(",") if c.strip())
    for c in out:
        if c not in CLASS_NAMES:
            raise ParseError(f"unknown class {c!r}", c, text.find(c))
    return out


# ---------------------------------------------------------------------------
# commands; each returns (text, exit code)


def _graph_text(g: SimpleGraph) -> str:
    lines = [f"vertices {g.n}  edges {g.edge_count}"]
    for i in range(g.n):
        lines.append(f"  {i}: {g.labels[i]}")
    for i, j in g.edges():
        lines.append(f"  {i} -- {j}")
    return "\n".join(lines) + "\n"


def cmd_graph(spec: str, cfg: CliConfig) -> tuple[str, int]:
    g = group_data(spec, cfg.order_cap).graph
    if cfg.format == "json":
        return json.dumps({"spec": spec, **g.to_json()}, indent=2) + "\n", 0
    if cfg.format == "dot":
        return g.to_dot(), 0
    return _graph_text(g), 0


def _classify_output(name: str, g: SimpleGraph, classes, cfg: CliConfig) -> str:
    certs = classify(g, classes, perfect_cap=cfg.perfect_vertex_cap)
    if cfg.format == "json":
        return json.dumps({"graph": name, "vertices": g.n, "classes": [c.to_json() for c in certs.values()]}, indent=2) + "\n"
    lines = [f"{name}: {g.n} vertices, {g.edge_count} edges"]
    for c in certs.values():
        line = f"  {c.class_name:<14} {str(c.verdict).lower()}"
        if c.witness:
            line += "  witness " + ", ".join(g.labels[v] for v in c.witness)
            if c.side == "complement":
                line += "  (in complement)"
        lines.append(line)
    return "\n".join(lines) + "\n"


def cmd_classify(spec: str, classes, cfg: CliConfig) -> tuple[str, int]:
    g = group_data(spec, cfg.order_cap).graph
    return _classify_output(spec, g, classes, cfg), 0


def cmd_lattice(spec: str, cfg: CliConfig) -> tuple[str, int]:
    G = build_group(spec, order_cap=cfg.order_cap)
    L = enumerate_subgroups(G, subgroup_cap=cfg.subgroup_cap)
    if cfg.format == "json":
        prof = structural_profile(L)
        return json.dumps({"spec": spec, "profile": prof.to_json(), "subgroups": L.to_json()}, indent=2) + "\n", 0
    lines = [f"{spec}: order {G.order}, {len(L)} subgroups"]
    for i, s in enumerate(L):
        lines.append(f"  H{i}  order {s.order:<5} {s.describe()}")
    return "\n".join(lines) + "\n", 0


def cmd_verify(max_order: int, cfg: CliConfig) -> tuple[str, int]:
    cat = build_catalog(CatalogConfig(max_order=max_order, perfect_cap=cfg.perfect_vertex_cap, order_cap=cfg.order_cap))
    rep = run_verification(cat, perfect_cap=cfg.perfect_vertex_cap, jobs=cfg.jobs, order_cap=cfg.order_cap)
    code = EXIT_DISCREPANCY if rep.firm_discrepancies else 0
    if cfg.format == "json":
        return rep.dumps() + "\n", code
    return rep.to_text(), code


def cmd_zgraph(n: int, classes, cfg: CliConfig) -> tuple[str, int]:
    g = z_fragment_graph(n)
    if cfg.format == "dot":
        return g.to_dot(), 0
    return _classify_output(f"Z[2..{n}]", g, classes, cfg), 0


def cmd_suzuki(q: int, cfg: CliConfig) -> tuple[str, int]:
    res = suzuki_cograph_condition(q)
    if cfg.format == "json":
        return json.dumps(res, indent=2) + "\n", 0
    lines = [f"q = {q}  e = {res['e']}  sqrt(2q) = {res['sqrt_2q']}"]
    for c in res["classification"]:
        fac = " * ".join(f"{p}^{a}" if a > 1 else str(p) for p, a in c["factors"])
        lines.append(f"  {c['value']:<8} {c['kind']:<12} {fac}")
    lines.append(f"condition {str(res['condition']).lower()}")
    if res["q_eq_8_flag"]:
        lines.append("flag: q = 8 (the lemma for this case states the opposite verdict)")
    return "\n".join(lines) + "\n", 0


def cmd_catalan(limit: int, cfg: CliConfig) -> tuple[str, int]:
    sols = catalan_solutions(limit)
    if cfg.format == "json":
        return json.dumps([list(s) for s in sols]) + "\n", 0
    if not sols:
        return "no solutions\n", 0
    return "".join(f"{x}^{a} - {y}^{b} = 1\n" for x, a, y, b in sols), 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP)
    common.add_argument("--subgroup-cap", type=int, default=DEFAULT_SUBGROUP_CAP)
    common.add_argument("--perfect-cap", type=int, default=DEFAULT_PERFECT_CAP)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = _Parser(prog="isgraph", description="Intersection subgroup graphs and their graph classes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    g = sub.add_parser("graph", parents=[common], help="build the graph of a group")
    g.add_argument("spec")
    c = sub.add_parser("classify", parents=[common], help="recognize graph classes")
    c.add_argument("spec")
    c.add_argument("--classes")
    la = sub.add_parser("lattice", parents=[common], help="list all subgroups")
    la.add_argument("spec")
    v = sub.add_parser("verify", parents=[common], help="replay the classifications over a catalog")
    v.add_argument("--max-order", type=int, default=60)
    z = sub.add_parser("zgraph", parents=[common], help="finite window of the integer model")
    z.add_argument("n", type=int)
    z.add_argument("--classes")
    s = sub.add_parser("suzuki-check", parents=[common], help="Suzuki order arithmetic")
    s.add_argument("q", type=int)
    ca = sub.add_parser("catalan", parents=[common], help="perfect powers differing by one")
    ca.add_argument("limit", type=int)
    return p


def dispatch(args: argparse.Namespace) -> tuple[str, int]:
    cfg = CliConfig(args.order_cap, args.subgroup_cap, args.perfect_cap, args.format, args.jobs)
    if args.command == "graph":
        return cmd_graph(args.spec, cfg)
    if args.command == "classify":
        return cmd_classify(args.spec, _classes(args.classes), cfg)
    if args.command == "lattice":
        return cmd_lattice(args.spec, cfg)
    if args.command == "verify":
        return cmd_verify(args.max_order, cfg)
    if args.command == "zgraph":
        return cmd_zgraph(args.n, _classes(args.classes), cfg)
    if args.command == "suzuki-check":
        return cmd_suzuki(args.q, cfg)
    return cmd_catalan(args.limit, cfg)


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        text, code = dispatch(args)
    except IsgraphError as exc:
        msg = " ".join(str(exc).split())
        print(f"error[{type(exc).__name__}]: {msg}", file=sys.stderr)
        return exc.exit_code
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
