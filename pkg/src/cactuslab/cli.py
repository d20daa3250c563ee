"""Command-line front end: build families, run checks and searches, manage certificates."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .certificates import (
    CertificateFormatError,
    build_certificate,
    build_family,
    graph_reference,
    verify_certificate,
)
from .checks import CHECKS, run_check
from .families import anchor_cactus, build_G, certificate_cactus, fragment_A
from .graphs import GraphError
from .io import chart_to_json, graph_from_json, graph_to_dot, graph_to_json
from .prism import stitch_hamilton_GD
from .search import (
    Budget,
    CactusConstraints,
    hamilton_cycle,
    hamilton_path,
    k_tree,
    k_walk,
    spanning_even_cactus,
)

_SIZED = ("C", "D", "GC", "GD")


def _parse_budget(text: str | None) -> Budget:
    if text is None:
        text = os.environ.get("CACTUSLAB_BUDGET", "300")
    text = text.strip()
    unit = 1.0
    if text.endswith(("s", "m", "h")):
        unit = {"s": 1.0, "m": 60.0, "h": 3600.0}[text[-1]]
        text = text[:-1]
    try:
        seconds = float(text) * unit
    except ValueError:
        raise GraphError(f"cannot parse budget {text!r}")
    if seconds <= 0:
        raise GraphError("budget must be positive")
    return Budget(wall_s=seconds)


def _write_out(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_colors(chart) -> dict:
    colors = {v: "lightblue" for v in chart.upper_path}
    colors.update({v: "khaki" for v in chart.lower_path})
    for v in set(chart.upper_path) & set(chart.lower_path):
        colors[v] = "palegreen"
    colors["s"] = "salmon"
    colors["t"] = "salmon"
    return colors


def _cmd_build(args) -> int:
    kind = args.kind
    if kind in _SIZED and args.n is None:
        print(f"kind {kind} needs n", file=sys.stderr)
        return 2
    if kind in ("GC", "GD"):
        g, chart = build_G("C" if kind == "GC" else "D", args.n)
        if args.format == "dot":
            text = graph_to_dot(g, f"{kind}{args.n}", vertex_colors=_family_colors(chart))
            payload = None
        else:
            payload = {"graph": graph_to_json(g), "chart": chart_to_json(chart)}
    else:
        g = build_family(kind, args.n)
        if args.format == "dot":
            text = graph_to_dot(g, kind if args.n is None else f"{kind}{args.n}")
            payload = None
        else:
            payload = {"graph": graph_to_json(g)}
    if payload is None:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _write_out(payload, args.out)
    print(f"built {kind}: {g.num_vertices()} vertices, {g.num_edges()} edges",
          file=sys.stderr)
    return 0


def _cmd_check(args) -> int:
    result = run_check(args.lemma_id, n=args.n, budget=_parse_budget(args.budget),
                       samples=args.samples, seed=args.seed)
    print(f"{result.check_id}: {result.status} in {result.elapsed_s:.1f}s")
    for key, value in result.details.items():
        print(f"  {key}: {value}")
    if args.out:
        params = {"check_id": args.lemma_id, "samples": args.samples, "seed": args.seed}
        if args.n is not None:
            params["n"] = args.n
        family = {"L3": "I", "L4": "A", "L5C": "C", "L5D": "D"}.get(args.lemma_id)
        ref = None
        if family in ("I", "A"):
            ref = graph_reference(family)
        elif family:
            ref = graph_reference(family, args.n or 1)
        doc = build_certificate(
            "lemma_check", ref, None, "search",
            parameters=params, elapsed_s=result.elapsed_s,
            deterministic=args.deterministic)
        _write_out(doc, args.out)
    return result.exit_code


def _cmd_certify(args) -> int:
    start = time.monotonic()
    try:
        if args.target == "kA":
            graph = fragment_A()
            witness = list(anchor_cactus().edges)
            doc = build_certificate(
                "spanning_good_even_cactus", graph, witness, "search",
                parameters={"required_block_degree_1": ["u1", "u3"]},
                elapsed_s=time.monotonic() - start, deterministic=args.deterministic)
        elif args.target == "cactus_GC":
            if args.n is None:
                print("cactus_GC needs n", file=sys.stderr)
                return 2
            g, chart, k, meta = certificate_cactus(args.n)
            doc = build_certificate(
                "spanning_good_even_cactus", graph_reference("GC", args.n),
                list(k.edges), meta["provenance"],
                parameters={"n": args.n, "num_a": chart.num_a,
                            "printed_pattern": meta["printed_pattern"],
                            "pattern": meta.get("pattern"),
                            "apex_degrees": meta.get("apex_degrees")},
                elapsed_s=time.monotonic() - start, deterministic=args.deterministic)
        else:
            if args.n is None:
                print("prism_GD needs n", file=sys.stderr)
                return 2
            budget = _parse_budget(args.budget)
            gp, seq, meta = stitch_hamilton_GD(args.n, budget)
            systems = meta["systems"]
            shifted = systems["tails_xa_variant"] or systems["tails_xb_variant"]
            doc = build_certificate(
                "prism_hamilton", graph_reference("GD", args.n), list(seq),
                "search" if shifted else "formula",
                parameters={"n": args.n, "systems": systems,
                            "connectors": [list(c) for c in meta["connectors"]]},
                elapsed_s=time.monotonic() - start, deterministic=args.deterministic)
    except GraphError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return 1
    ok = all(doc["verification"].values())
    _write_out(doc, args.out)
    print(f"certify {args.target}: {'verified' if ok else 'FAILED'} "
          f"{doc['verification']}", file=sys.stderr)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read certificate: {exc}", file=sys.stderr)
        return 2
    try:
        ok, verification = verify_certificate(doc)
    except CertificateFormatError as exc:
        print(f"schema: {exc}", file=sys.stderr)
        return 2
    for key, value in sorted(verification.items()):
        print(f"  {key}: {'pass' if value else 'FAIL'}")
    print("verified" if ok else "claim does not hold")
    return 0 if ok else 1


def _load_search_graph(args):
    if args.graph:
        with open(args.graph, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        return graph_from_json(data.get("graph", data))
    if args.family:
        return build_family(args.family, args.n)
    raise GraphError("need --graph FILE or --family KIND")


def _cmd_search(args) -> int:
    g = _load_search_graph(args)
    budget = _parse_budget(args.budget)
    claim = None
    parameters: dict = {}
    if args.problem == "hamilton_cycle":
        out = hamilton_cycle(g, budget)
        claim = "hamilton_cycle"
    elif args.problem == "hamilton_path":
        endpoints = tuple(args.endpoints.split(",")) if args.endpoints else None
        out = hamilton_path(g, endpoints, budget)
        claim = "hamilton_path"
        if endpoints:
            parameters["endpoints"] = list(endpoints)
    elif args.problem == "k_tree":
        out = k_tree(g, args.k, budget)
        claim, parameters = "k_tree", {"k": args.k}
    elif args.problem == "k_walk":
        out = k_walk(g, args.k, budget)
        claim, parameters = "k_walk", {"k": args.k}
    else:
        required = frozenset(args.required_b1.split(",")) if args.required_b1 else frozenset()
        endpoints = tuple(args.endpoints.split(",")) if args.endpoints else None
        cons = CactusConstraints(
            goodness=args.goodness,
            max_degree=args.max_degree,
            required_block_degree_1=required,
            required_edge_path_endpoints=endpoints,
        )
        out = spanning_even_cactus(g, cons, budget)
        claim = "spanning_good_even_cactus" if args.goodness == "good" else None
        parameters = {"goodness": args.goodness}
        if args.max_degree is not None:
            parameters["max_degree"] = args.max_degree
        if required:
            parameters["required_block_degree_1"] = sorted(required)
    print(f"{args.problem}: {out.status} nodes={out.nodes} "
          f"elapsed={out.elapsed_s:.1f}s exhaustive={out.exhaustive}")
    if out.status == "FOUND" and args.out and claim:
        doc = build_certificate(claim, g, list(out.witness), "search",
                                parameters=parameters, elapsed_s=out.elapsed_s,
                                deterministic=args.deterministic)
        _write_out(doc, args.out)
    elif out.status == "FOUND" and args.out:
        _write_out({"witness": sorted(map(list, out.witness))}, args.out)
    return {"FOUND": 0, "NONE": 1, "TIMEOUT": 3}[out.status]


def _cmd_export(args) -> int:
    if args.certificate:
        with open(args.certificate, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        try:
            from .certificates import resolve_graph

            g = resolve_graph(doc["graph"])
        except (KeyError, GraphError) as exc:
            print(f"bad certificate graph: {exc}", file=sys.stderr)
            return 2
        witness = doc.get("witness") or []
        highlight = set()
        if witness and isinstance(witness[0], list):
            highlight = {tuple(e) for e in witness}
        elif witness:
            highlight = set(zip(witness, witness[1:]))
        text = graph_to_dot(g, "certificate", highlight=highlight)
    else:
        if args.family is None:
            print("need --certificate FILE or --family KIND", file=sys.stderr)
            return 2
        if args.family in ("GC", "GD"):
            if args.n is None:
                print(f"kind {args.family} needs n", file=sys.stderr)
                return 2
            g, chart = build_G("C" if args.family == "GC" else "D", args.n)
            text = graph_to_dot(g, f"{args.family}{args.n}",
                                vertex_colors=_family_colors(chart))
        else:
            g = build_family(args.family, args.n)
            text = graph_to_dot(g, args.family)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cactuslab",
        description="Build plane graph families, search spanning structures, "
                    "emit and verify certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a family member")
    p_build.add_argument("kind", choices=["I", "A", "C", "D", "GC", "GD"])
    p_build.add_argument("n", nargs="?", type=int)
    p_build.add_argument("--out")
    p_build.add_argument("--format", choices=["json", "dot"], default="json")
    p_build.set_defaults(fn=_cmd_build)

    p_check = sub.add_parser("check", help="run a named verification suite")
    p_check.add_argument("lemma_id", choices=sorted(CHECKS),
                         metavar="lemma_id",
                         help="one of " + ", ".join(sorted(CHECKS)))
    p_check.add_argument("n", nargs="?", type=int)
    p_check.add_argument("--budget")
    p_check.add_argument("--samples", type=int, default=100)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--out")
    p_check.add_argument("--deterministic", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_cert = sub.add_parser("certify", help="build and verify a named certificate")
    p_cert.add_argument("target", choices=["cactus_GC", "prism_GD", "kA"])
    p_cert.add_argument("n", nargs="?", type=int)
    p_cert.add_argument("--out")
    p_cert.add_argument("--budget")
    p_cert.add_argument("--deterministic", action="store_true")
    p_cert.set_defaults(fn=_cmd_certify)

    p_verify = sub.add_parser("verify", help="re-verify a certificate file")
    p_verify.add_argument("certificate")
    p_verify.set_defaults(fn=_cmd_verify)

    p_search = sub.add_parser("search", help="run one exact search")
    p_search.add_argument("problem", choices=["hamilton_cycle", "hamilton_path",
                                              "k_tree", "k_walk", "cactus"])
    p_search.add_argument("--graph", help="graph JSON file")
    p_search.add_argument("--family", choices=["I", "A", "C", "D", "GC", "GD"])
    p_search.add_argument("--n", type=int)
    p_search.add_argument("--k", type=int, default=3)
    p_search.add_argument("--goodness", default="good",
                          choices=["even", "good", "p_good", "p1p2_good"])
    p_search.add_argument("--max-degree", type=int)
    p_search.add_argument("--required-b1", help="comma-separated labels")
    p_search.add_argument("--endpoints", help="u,v")
    p_search.add_argument("--budget")
    p_search.add_argument("--out")
    p_search.add_argument("--deterministic", action="store_true")
    p_search.set_defaults(fn=_cmd_search)

    p_export = sub.add_parser("export", help="emit DOT, optionally from a certificate")
    p_export.add_argument("--certificate")
    p_export.add_argument("--family", choices=["I", "A", "C", "D", "GC", "GD"])
    p_export.add_argument("--n", type=int)
    p_export.add_argument("--out")
    p_export.set_defaults(fn=_cmd_export)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
