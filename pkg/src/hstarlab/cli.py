"""Command-line front end.

Sources name the object to work on::

    family cycle 5 | family complete_bipartite 2 3 | family tree 1-2,2-3
    poset chain 3 | poset antichain 2 | poset file.json
    twinned chain 2 antichain 2
    file.json              (graph, poset, polytope or orthant assignment; '-' reads stdin)

Exit status: 0 success, 1 usage or input error, 2 resource cap hit,
3 formula and oracle disagree (or a sweep failed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass
from typing import Callable

from hstarlab import graphpoly as gp
from hstarlab import labengine as le
from hstarlab import lattice as lat
from hstarlab import posetpoly as pp
from hstarlab.errors import DomainError, HStarError, ResourceError, VerificationError
from hstarlab.polycore import (
    IntPolynomial,
    gamma_decompose,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
)

EXIT_OK, EXIT_USAGE, EXIT_RESOURCE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Target:
    """Something with an h*: a name, its polytope, and possibly a formula."""

    label: str
    polytope: Callable[[], lat.VPolytope]
    formula: Callable[[], IntPolynomial] | None = None
    payload: dict | None = None


# -- source parsing ----------------------------------------------------------------------------


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {tok!r}") from None


def _take(tokens: list[str], k: int, what: str) -> list[str]:
    if len(tokens) < k:
        raise UsageError(f"{what} needs {k} more argument(s)")
    out = tokens[:k]
    del tokens[:k]
    return out


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for part in text.split(","):
        a, sep, b = part.partition("-")
        if not sep:
            raise UsageError(f"edge {part!r} should look like i-j")
        edges.append((_int(a, "vertex"), _int(b, "vertex")))
    return edges


def _graph_family(tokens: list[str]) -> gp.Graph:
    name = _take(tokens, 1, "family")[0]
    if name == "cycle":
        return gp.cycle_graph(_int(_take(tokens, 1, name)[0], "n"))
    if name == "complete":
        return gp.complete_graph(_int(_take(tokens, 1, name)[0], "n"))
    if name == "complete_bipartite":
        a, b = (_int(t, "side") for t in _take(tokens, 2, name))
        return gp.complete_bipartite_graph(a, b)
    if name == "path":
        return gp.path_graph(_int(_take(tokens, 1, name)[0], "n"))
    if name == "star":
        return gp.star_graph(_int(_take(tokens, 1, name)[0], "leaves"))
    if name == "tree":
        edges = _parse_edges(_take(tokens, 1, name)[0])
        n = max(max(e) for e in edges)
        G = gp.Graph(n, tuple(edges))
        if not G.is_connected() or len(G.edges) != n - 1:
            raise UsageError("edge list is not a tree on 1..n")
        return G
    if name == "suspension":
        return gp.suspension(gp.Graph.from_json(_read_json(_take(tokens, 1, name)[0])))
    if name == "graph":
        return gp.Graph.from_json(_read_json(_take(tokens, 1, name)[0]))
    raise UsageError(f"unknown family {name!r}")


def _poset(tokens: list[str]) -> pp.Poset:
    head = _take(tokens, 1, "poset")[0]
    if head == "chain":
        return pp.chain(_int(_take(tokens, 1, head)[0], "n"))
    if head == "antichain":
        return pp.antichain(_int(_take(tokens, 1, head)[0], "n"))
    return pp.Poset.from_json(_read_json(head))


def _graph_target(G: gp.Graph, kind: str) -> Target:
    if kind == "B":
        formula = (lambda: gp.hstar_B(G)) if G.is_bipartite() else None
        return Target(f"B[{G.to_json()}]", lambda: gp.symmetric_edge_B(G), formula, G.to_json())
    if not G.is_connected():
        return Target(f"A[{G.to_json()}]", lambda: gp.symmetric_edge_A(G), None, G.to_json())
    return Target(f"A[{G.to_json()}]", lambda: gp.symmetric_edge_A(G), lambda: gp.hstar_A(G), G.to_json())


def _polytope_family(name: str, k: int) -> Target:
    comp = (name, k)
    return Target(f"{name}({k})", lambda: gp.component_polytope(comp), lambda: gp.component_hstar(comp))


def resolve(tokens: list[str], args) -> Target:
    tokens = list(tokens)
    if not tokens:
        raise UsageError("missing source")
    head = tokens.pop(0)
    if head == "family":
        if tokens and tokens[0] in ("delpezzo", "pseudo_delpezzo", "cross"):
            name = tokens.pop(0)
            t = _polytope_family(name, _int(_take(tokens, 1, name)[0], "parameter"))
        else:
            t = _graph_target(_graph_family(tokens), args.type)
    elif head == "poset":
        P = _poset(tokens)
        if args.enriched:
            t = Target("enriched", lambda: pp.enriched_chain_polytope(P), lambda: pp.hstar_enriched_chain(P), P.to_json())
        else:
            t = Target("chain", lambda: pp.chain_polytope(P), None, P.to_json())
    elif head == "twinned":
        P = _poset(tokens)
        Q = _poset(tokens)
        t = Target("twinned", lambda: pp.twinned_chain_polytope(P, Q), lambda: pp.hstar_twinned(P, Q))
    else:
        t = _file_target(_read_json(head), args)
    if tokens:
        raise UsageError(f"unexpected arguments {tokens}")
    return t


def _file_target(data: dict, args) -> Target:
    if not isinstance(data, dict):
        raise UsageError("JSON input must be an object")
    if "edges" in data:
        return _graph_target(gp.Graph.from_json(data), args.type)
    if "covers" in data:
        P = pp.Poset.from_json(data)
        if args.enriched:
            return Target("enriched", lambda: pp.enriched_chain_polytope(P), lambda: pp.hstar_enriched_chain(P))
        return Target("chain", lambda: pp.chain_polytope(P), None)
    if "pieces" in data:
        A = le.OrthantAssignment.from_json(data)
        return Target("assignment", lambda: le.assemble(A), lambda: le.hstar_locally_antiblocking(A))
    if "vertices" in data and "dim" in data:
        P = lat.VPolytope.from_json(data)
        formula = None
        if lat.is_anti_blocking(P) and args.enriched:
            return Target("unconditional", lambda: lat.unconditional_closure(P), lambda: le.hstar_unconditional_via_projections(P))
        return Target("polytope", lambda: P, formula)
    raise UsageError("unrecognised JSON object")


# -- computation -------------------------------------------------------------------------------


def compute(t: Target, method: str) -> dict:
    out: dict = {}
    if method in ("formula", "both") and t.formula is not None:
        out["formula"] = t.formula()
    if method in ("oracle", "both") or t.formula is None:
        out["oracle"] = lat.hstar(t.polytope())
    if method == "both" and "formula" in out and out["formula"] != out["oracle"]:
        raise VerificationError(f"formula {out['formula']} != oracle {out['oracle']}")
    return out


def describe(h: IntPolynomial) -> dict:
    d = h.degree
    pal = d >= 0 and is_palindromic(h, d)
    out = {"hstar": h.to_json()}
    if pal:
        out["gamma"] = gamma_decompose(h, d)
    out["palindromic"] = pal
    out["unimodal"] = is_unimodal(h)
    out["log_concave"] = is_log_concave(h)
    out["real_rooted"] = is_real_rooted(h)
    if pal:
        out["gamma_positive"] = is_gamma_positive(h, d)
    return out


def cmd_hstar(args) -> tuple[dict, int]:
    t = resolve(args.source, args)
    res = compute(t, args.method)
    h = res.get("formula", res.get("oracle"))
    out = describe(h)
    if args.method == "both":
        out["verified"] = True
    return out, EXIT_OK


def cmd_ehrhart(args) -> tuple[dict, int]:
    t = resolve(args.source, args)
    data = lat.ehrhart_data(t.polytope())
    return data.to_json(), EXIT_OK


def cmd_gamma(args) -> tuple[dict, int]:
    t = resolve(args.source, args)
    res = compute(t, args.method)
    h = res.get("formula", res.get("oracle"))
    if not is_palindromic(h, h.degree):
        return {"hstar": h.to_json(), "gamma": None, "gamma_positive": False}, EXIT_OK
    g = gamma_decompose(h, h.degree)
    return {"hstar": h.to_json(), "gamma": g, "gamma_positive": all(x >= 0 for x in g)}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    t = resolve(args.source, args)
    if t.formula is None:
        raise UsageError("no formula route for this source")
    f, o = t.formula(), lat.hstar(t.polytope())
    ok = f == o
    return {"formula": f.to_json(), "oracle": o.to_json(), "match": ok}, EXIT_OK if ok else EXIT_VERIFY


def cmd_family(args) -> tuple[dict, int]:
    tokens = list(args.source)
    if tokens and tokens[0] in ("chain", "antichain"):
        P = _poset(tokens)
        out = P.to_json()
    elif tokens and tokens[0] in ("delpezzo", "pseudo_delpezzo", "cross"):
        name = tokens.pop(0)
        out = gp.component_polytope((name, _int(_take(tokens, 1, name)[0], "parameter"))).to_json()
    else:
        out = _graph_family(tokens).to_json()
    if tokens:
        raise UsageError(f"unexpected arguments {tokens}")
    return out, EXIT_OK


def sweep(max_graph: int = 5, max_poset: int = 4, max_pair: int = 3, sample: int | None = None, seed: int = 0) -> list[dict]:
    """Formula against oracle over small instances; one row per check."""
    rng = random.Random(seed)

    def pick(items):
        items = list(items)
        return items if sample is None or len(items) <= sample else rng.sample(items, sample)

    rows = []

    def run(name, cases, fn):
        passed = failed = 0
        for c in cases:
            if fn(c):
                passed += 1
            else:
                failed += 1
        rows.append({"check": name, "cases": passed + failed, "passed": passed, "failed": failed})

    graphs = [G for n in range(2, max_graph + 1) for G in gp.connected_graphs(n)]
    run("type A formula = oracle", pick(graphs), lambda G: gp.hstar_A(G) == lat.hstar(gp.symmetric_edge_A(G)))
    bip = [G for n in range(1, max_graph + 1) for G in gp.all_graphs(n) if G.is_bipartite()]
    run("type B formula = oracle", pick(bip), lambda G: gp.hstar_B(G) == lat.hstar(gp.symmetric_edge_B(G)))
    posets = [P for n in range(1, max_poset + 1) for P in pp.all_posets(n)]
    run("enriched chain formula = oracle", pick(posets),
        lambda P: pp.hstar_enriched_chain(P) == lat.hstar(pp.enriched_chain_polytope(P)))
    pairs = [(P, Q) for n in range(1, max_pair + 1) for P in pp.all_posets(n) for Q in pp.all_posets(n)]
    run("twinned formula = oracle", pick(pairs),
        lambda PQ: pp.hstar_twinned(*PQ) == lat.hstar(pp.twinned_chain_polytope(*PQ)))
    nat = [(P, Q) for n in range(1, max_pair + 1) for P in pp.all_posets(n, True) for Q in pp.all_posets(n, True)]
    run("enriched (P,Q)-partitions = lattice points", pick(nat),
        lambda PQ: all(pp.enriched_PQ_count(*PQ, m) == lat.count_lattice_points(pp.twinned_chain_polytope(*PQ), m)
                       for m in range(1, PQ[0].n + 2)))
    return rows


def cmd_report(args) -> tuple[dict, int]:
    rows = sweep(args.max_graph, args.max_poset, args.max_pair, args.sample, args.seed)
    ok = all(r["failed"] == 0 for r in rows)
    return {"rows": rows, "ok": ok}, EXIT_OK if ok else EXIT_VERIFY


COMMANDS = {
    "hstar": cmd_hstar,
    "ehrhart": cmd_ehrhart,
    "gamma": cmd_gamma,
    "verify": cmd_verify,
    "family": cmd_family,
    "report": cmd_report,
}


# -- output ------------------------------------------------------------------------------------


def _flat(v) -> str:
    if isinstance(v, list):
        return " ".join(_flat(x) for x in v)
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, separators=(",", ":"), default=str)
    if "rows" in result:
        rows = result["rows"]
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=["check", "cases", "passed", "failed"], lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
            return buf.getvalue().rstrip("\n")
        width = max(len(r["check"]) for r in rows)
        lines = [f"{r['check']:<{width}}  {'PASS' if r['failed'] == 0 else 'FAIL'}  {r['passed']}/{r['cases']}" for r in rows]
        return "\n".join(lines)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in result.items():
            w.writerow([k, _flat(v) if not isinstance(v, dict) else json.dumps(v)])
        return buf.getvalue().rstrip("\n")
    width = max((len(k) for k in result), default=0)
    return "\n".join(f"{k:<{width}}  {_flat(v) if not isinstance(v, dict) else json.dumps(v)}" for k, v in result.items())


# -- entry point -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    common.add_argument("--output", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--enriched", action="store_true", help="use the unconditional closure (posets, anti-blocking polytopes)")
    common.add_argument("--type", choices=["A", "B"], default="A", help="symmetric edge polytope type for graph sources")
    common.add_argument("--max-box", type=int, default=None, help="cap on bounding-box lattice points")
    common.add_argument("--max-dim", type=int, default=None, help="cap on ambient dimension")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")

    parser = _Parser(prog="hstarlab", description="Exact h*-polynomials of lattice polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("hstar", "ehrhart", "gamma", "verify", "family"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("source", nargs="+")
    rp = sub.add_parser("report", parents=[common])
    rp.add_argument("--max-graph", type=int, default=5)
    rp.add_argument("--max-poset", type=int, default=4)
    rp.add_argument("--max-pair", type=int, default=3)
    rp.add_argument("--sample", type=int, default=None, help="check a seeded random sample per row")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"hstarlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    caps = {}
    if args.max_box is not None:
        caps["max_box"] = args.max_box
    if args.max_dim is not None:
        caps["max_dim"] = args.max_dim
    try:
        with lat.limits(**caps):
            result, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"hstarlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"hstarlab: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationError as exc:
        print(f"hstarlab: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DomainError, HStarError) as exc:
        print(f"hstarlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(result, args.output))
    return code


if __name__ == "__main__":
    sys.exit(main())
