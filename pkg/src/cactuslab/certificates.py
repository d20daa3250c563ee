"""Machine-checkable claim certificates: schema, construction, re-verification."""

from __future__ import annotations

import jsonschema

from . import __version__
from .cactus import analyze_cactus
from .families import build_G, fragment_A, fragment_C, fragment_D, gadget_I
from .graphs import Graph, GraphError, edge_key, is_connected
from .io import graph_from_json, graph_to_json
from .prism import prism
from .search import (
    Budget,
    verify_hamilton_cycle,
    verify_hamilton_path,
    verify_k_tree,
    verify_k_walk,
)

SCHEMA_VERSION = "1.0"

CLAIMS = (
    "spanning_good_even_cactus",
    "hamilton_cycle",
    "hamilton_path",
    "k_walk",
    "k_tree",
    "prism_hamilton",
    "lemma_check",
)

_EDGE_LIST = {
    "type": "array",
    "items": {
        "type": "array",
        "items": {"type": "string"},
        "minItems": 2,
        "maxItems": 2,
    },
}

_VERTEX_SEQ = {"type": "array", "items": {"type": "string"}}

CERTIFICATE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "claim", "graph", "parameters", "witness",
                 "verification", "provenance", "tool_version", "timing"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "claim": {"enum": list(CLAIMS)},
        "graph": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["vertices", "edges"],
                    "additionalProperties": False,
                    "properties": {
                        "vertices": {"type": "array", "items": {"type": "string"}},
                        "edges": _EDGE_LIST,
                    },
                },
                {
                    "type": "object",
                    "required": ["family"],
                    "additionalProperties": False,
                    "properties": {
                        "family": {
                            "type": "object",
                            "required": ["kind"],
                            "additionalProperties": False,
                            "properties": {
                                "kind": {"enum": ["I", "A", "C", "D", "GC", "GD"]},
                                "n": {"type": "integer", "minimum": 1},
                                "num_a": {"type": "integer", "minimum": 2},
                            },
                        },
                    },
                },
                {"type": "null"},
            ],
        },
        "parameters": {"type": "object"},
        "witness": {"oneOf": [_EDGE_LIST, _VERTEX_SEQ, {"type": "null"}]},
        "verification": {
            "type": "object",
            "additionalProperties": {"type": "boolean"},
        },
        "provenance": {"enum": ["formula", "search", "external"]},
        "tool_version": {"type": "string"},
        "timing": {
            "type": "object",
            "required": ["elapsed_s"],
            "properties": {"elapsed_s": {"type": "number", "minimum": 0}},
        },
    },
}


class CertificateFormatError(GraphError):
    """The document does not match the certificate schema."""


def build_family(kind: str, n: int | None = None, num_a: int = 8) -> Graph:
    """Construct a named family member; n is required for the sized kinds."""
    if kind == "I":
        return gadget_I()
    if kind == "A":
        return fragment_A()
    if n is None:
        raise GraphError(f"kind {kind!r} needs n")
    if kind == "C":
        return fragment_C(n)
    if kind == "D":
        return fragment_D(n)
    if kind == "GC":
        return build_G("C", n, num_a)[0]
    if kind == "GD":
        return build_G("D", n, num_a)[0]
    raise GraphError(f"unknown family kind {kind!r}")


def graph_reference(kind: str, n: int | None = None, num_a: int = 8) -> dict:
    """Compact graph field that names a rebuildable family member."""
    family: dict = {"kind": kind}
    if kind in ("C", "D", "GC", "GD"):
        if n is None:
            raise GraphError(f"kind {kind!r} needs n")
        family["n"] = n
        if kind in ("GC", "GD") and num_a != 8:
            family["num_a"] = num_a
    return {"family": family}


def resolve_graph(graph_field: dict) -> Graph:
    if "family" in graph_field:
        fam = graph_field["family"]
        return build_family(fam["kind"], fam.get("n"), fam.get("num_a", 8))
    return graph_from_json(graph_field)


def build_certificate(
    claim: str,
    graph: Graph | dict,
    witness,
    provenance: str,
    parameters: dict | None = None,
    elapsed_s: float = 0.0,
    deterministic: bool = False,
) -> dict:
    """Assemble a certificate document with freshly computed verification flags."""
    if claim not in CLAIMS:
        raise GraphError(f"unknown claim {claim!r}")
    graph_field = graph_to_json(graph) if isinstance(graph, Graph) else graph
    doc = {
        "schema_version": SCHEMA_VERSION,
        "claim": claim,
        "graph": graph_field,
        "parameters": parameters or {},
        "witness": _canonical_witness(witness),
        "verification": {},
        "provenance": provenance,
        "tool_version": __version__,
        "timing": {"elapsed_s": 0.0 if deterministic else round(elapsed_s, 3)},
    }
    doc["verification"] = _recompute(doc)
    return doc


def _canonical_witness(witness):
    if witness is None:
        return None
    witness = list(witness)
    if witness and not isinstance(witness[0], str):
        pairs = sorted(edge_key(u, v) for u, v in witness)
        return [list(p) for p in pairs]
    return witness


def validate_schema(doc) -> None:
    """Raise CertificateFormatError when the document violates the schema."""
    validator = jsonschema.Draft202012Validator(CERTIFICATE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = "/".join(str(p) for p in first.absolute_path) or "(root)"
        raise CertificateFormatError(f"schema violation at {where}: {first.message}")


def _witness_edges(witness) -> list[tuple[str, str]]:
    return [tuple(e) for e in witness]


def _check_cactus(g: Graph, witness, parameters: dict) -> dict:
    edges = _witness_edges(witness)
    out = {"edges_in_graph": all(g.has_edge(u, v) for u, v in edges)}
    sub = Graph(g.vertices, edges if out["edges_in_graph"] else [])
    out["connected"] = is_connected(sub) and sub.num_vertices() > 0
    if not out["connected"]:
        out.update(cactus=False, even=False, good=False)
    else:
        rep = analyze_cactus(sub)
        out.update(cactus=rep.is_cactus, even=rep.is_even, good=rep.is_good)
        caps = parameters.get("required_block_degree_1")
        if caps:
            out["required_block_degree_one"] = all(
                rep.block_degrees.get(v) == 1 for v in caps)
    cap = parameters.get("max_degree")
    if cap is not None:
        out["max_degree_ok"] = all(sub.degree(v) <= cap for v in sub.vertices)
    return out


def _recompute(doc: dict) -> dict:
    claim = doc["claim"]
    parameters = doc.get("parameters", {})
    witness = doc.get("witness")
    if claim == "lemma_check":
        from .checks import run_check

        budget = parameters.get("budget_s")
        result = run_check(
            parameters["check_id"],
            n=parameters.get("n"),
            budget=Budget(wall_s=budget) if budget else None,
            samples=parameters.get("samples", 100),
            seed=parameters.get("seed", 0),
        )
        return {"check_confirmed": result.status == "confirmed"}

    if doc["graph"] is None:
        raise CertificateFormatError("only lemma_check certificates may omit the graph")
    g = resolve_graph(doc["graph"])
    if claim == "spanning_good_even_cactus":
        return _check_cactus(g, witness, parameters)
    if claim == "hamilton_cycle":
        return {"hamilton_cycle": verify_hamilton_cycle(g, witness)}
    if claim == "prism_hamilton":
        return {"hamilton_cycle_of_prism": verify_hamilton_cycle(prism(g), witness)}
    if claim == "hamilton_path":
        endpoints = parameters.get("endpoints")
        return {"hamilton_path": verify_hamilton_path(
            g, witness, tuple(endpoints) if endpoints else None)}
    if claim == "k_walk":
        return {"k_walk": verify_k_walk(g, witness, parameters["k"])}
    if claim == "k_tree":
        return {"k_tree": verify_k_tree(g, _witness_edges(witness), parameters["k"])}
    raise GraphError(f"unknown claim {claim!r}")


def verify_certificate(doc: dict) -> tuple[bool, dict]:
    """Re-run every predicate for the claim; stored booleans are ignored."""
    validate_schema(doc)
    verification = _recompute(doc)
    return all(verification.values()), verification
