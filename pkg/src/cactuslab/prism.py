"""Prisms (graph times an edge), reflections, and Hamilton cycle assembly."""
from __future__ import annotations

from dataclasses import dataclass

from .cactus import analyze_cactus
from .families import anchor_cactus, build_G, fragment_D
from .graphs import Graph, GraphError
from .search import Budget, linear_forest, verify_hamilton_cycle

SIDE_A = "a"
SIDE_B = "b"


def pv(base: str, side: str) -> str:
    """Prism vertex label for one copy of a base vertex."""
    if side not in (SIDE_A, SIDE_B):
        raise GraphError(f"prism side must be 'a' or 'b', got {side!r}")
    return f"{base}@{side}"


def pv_split(label: str) -> tuple[str, str]:
    base, _, side = label.rpartition("@")
    if not base or side not in (SIDE_A, SIDE_B):
        raise GraphError(f"not a prism vertex label: {label!r}")
    return base, side


def _flip(label: str) -> str:
    base, side = pv_split(label)
    return pv(base, SIDE_B if side == SIDE_A else SIDE_A)


def prism(g: Graph) -> Graph:
    """Two labeled copies of g joined by a vertical edge at every vertex."""
    out = Graph()
    for v in g.vertices:
        out.add_vertex(pv(v, SIDE_A))
        out.add_vertex(pv(v, SIDE_B))
    for u, v in g.edges:
        out.add_edge(pv(u, SIDE_A), pv(v, SIDE_A))
        out.add_edge(pv(u, SIDE_B), pv(v, SIDE_B))
    for v in g.vertices:
        out.add_edge(pv(v, SIDE_A), pv(v, SIDE_B))
    return out


def reflect(s: Graph) -> Graph:
    """Side-swapped copy of a prism subgraph; an involution."""
    out = Graph(tuple(_flip(v) for v in s.vertices))
    for u, v in s.edges:
        out.add_edge(_flip(u), _flip(v))
    return out


def reflect_edges(edges) -> tuple:
    return tuple((_flip(u), _flip(v)) for u, v in edges)


def cycle_sequence(edges) -> tuple:
    """Closed vertex sequence of a 2-regular connected edge set, canonical start."""
    adj: dict[str, list] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for v, ns in adj.items():
        if len(ns) != 2:
            raise GraphError(f"vertex {v!r} has degree {len(ns)} in the cycle")
    start = min(adj)
    prev, cur = start, min(adj[start])
    seq = [start]
    while cur != start:
        seq.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    seq.append(start)
    if len(seq) != len(adj) + 1:
        raise GraphError("edge set is not a single cycle")
    return tuple(seq)


def cactus_prism_hamilton(q: Graph, required=frozenset()) -> tuple:
    """Hamilton cycle edges of prism(q) for a good even cactus q.

    Keeps the vertical edge at every vertex lying in a single block, so all
    required block-degree-1 verticals are present. Cycle blocks contribute a
    side-alternating double cover, edge blocks a ladder rung pair.
    """
    rep = analyze_cactus(q)
    if not (rep.is_cactus and rep.is_even and rep.is_good):
        raise GraphError("prism Hamilton construction needs a good even cactus")
    for v in required:
        if rep.block_degrees.get(v) != 1:
            raise GraphError(f"required vertex {v!r} does not have block degree one")
    if q.num_vertices() < 2:
        raise GraphError("the prism of a single vertex has no Hamilton cycle")

    from .graphs import block_decomposition

    dec = block_decomposition(q)
    edges: list[tuple[str, str]] = []
    for block in dec.blocks:
        if block.is_edge:
            (u, v), = block.edges
            edges.append((pv(u, SIDE_A), pv(v, SIDE_A)))
            edges.append((pv(u, SIDE_B), pv(v, SIDE_B)))
        else:
            cyc = _block_cycle_order(block)
            for j, (u, v) in enumerate(zip(cyc, cyc[1:] + cyc[:1])):
                side = SIDE_A if j % 2 == 0 else SIDE_B
                edges.append((pv(u, side), pv(v, side)))
    for v in q.vertices:
        if rep.block_degrees[v] == 1:
            edges.append((pv(v, SIDE_A), pv(v, SIDE_B)))

    seq = cycle_sequence(edges)
    if not verify_hamilton_cycle(prism(q), seq):
        raise GraphError("internal error: prism cycle assembly failed verification")
    return tuple(sorted(tuple(sorted(e)) for e in edges))


def _block_cycle_order(block) -> list:
    """Vertices of a cycle block in traversal order, lex-least start and turn."""
    adj: dict[str, list] = {}
    for u, v in block.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    prev, cur = start, min(adj[start])
    order = [start]
    while cur != start:
        order.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


@dataclass(frozen=True)
class PathSystem:
    """Spanning vertex-disjoint paths of a fragment prism with fixed endpoints."""

    endpoint_pairs: tuple
    paths: tuple

    def edges(self) -> tuple:
        out = []
        for path in self.paths:
            out.extend(zip(path, path[1:]))
        return tuple(out)

    def reflected(self) -> "PathSystem":
        return PathSystem(
            endpoint_pairs=tuple((_flip(a), _flip(b)) for a, b in self.endpoint_pairs),
            paths=tuple(tuple(_flip(v) for v in path) for path in self.paths),
        )


def solve_path_system(fragment: Graph, pairs, budget: Budget | None = None) -> PathSystem | None:
    """Exact search for a spanning path system of the fragment's prism.

    Returns None when the endpoint declaration is infeasible (exhaustive);
    raises on timeout since callers rely on a definite answer.
    """
    fp = prism(fragment)
    out = linear_forest(fp, pairs, budget)
    if out.status == "TIMEOUT":
        raise GraphError("path system search ran out of budget")
    if out.status == "NONE":
        return None
    return PathSystem(endpoint_pairs=tuple(tuple(p) for p in pairs), paths=out.witness)


def _system_specs(n: int, shape: str):
    """Endpoint declarations for the fragment path systems.

    "paired" joins the two copies of each junction; the "tails" shapes leave
    one free end on the upper row and one on the lower row for apex
    connectors. Index-shifted variants cover the opposite cycle parity.
    """
    l, r = "l", "r"
    if shape == "paired":
        return [((pv(l, "a"), pv(l, "b")), (pv(r, "a"), pv(r, "b")))]
    if shape == "tails_xa":
        x_opts = [f"x{2 * n + 1}", f"x{2 * n}"]
        x_side = "a"
    elif shape == "tails_xb":
        x_opts = [f"x{2 * n}", f"x{2 * n + 1}"]
        x_side = "b"
    else:
        raise GraphError(f"unknown path system shape {shape!r}")
    specs = []
    for w in (f"w{n}", f"w{n + 1}"):
        for x in x_opts:
            specs.append((
                (pv(l, "a"), pv(w, "b")),
                (pv(l, "b"), pv(r, "b")),
                (pv(r, "a"), pv(x, x_side)),
            ))
    return specs


def _solve_with_variants(fragment: Graph, n: int, shape: str, budget):
    for variant, spec in enumerate(_system_specs(n, shape)):
        system = solve_path_system(fragment, spec, budget)
        if system is not None:
            return system, variant
    raise GraphError(f"no {shape} path system fits the fragment for n={n}")


def stitch_hamilton_GD(n: int, budget: Budget | None = None):
    """Hamilton cycle of the prism over the two-cycle apex graph.

    Assembles per-fragment prism cycles and searched path systems, then joins
    them with connector edges at the apexes. Returns (prism graph, closed
    vertex sequence, meta).
    """
    if n < 1:
        raise GraphError("fragment size n must be positive")
    g, chart = build_G("D", n)
    gp = prism(g)
    d = fragment_D(n)
    meta: dict = {"family": f"G(D_{n})", "systems": {}}

    anchor = anchor_cactus()
    hc_a = cactus_prism_hamilton(anchor, required=frozenset({"u1", "u3"}))

    edges: list[tuple[str, str]] = []
    num_a = chart.num_a
    for i in range(1, num_a + 1):
        fmap = chart.fragment_maps[f"A{i}"]
        drop = set()
        if i > 1:
            drop.add(fmap["u1"])
        if i < num_a:
            drop.add(fmap["u3"])
        for u, v in hc_a:
            bu, su = pv_split(u)
            bv, sv = pv_split(v)
            if bu == bv and fmap[bu] in drop:
                continue
            edges.append((pv(fmap[bu], su), pv(fmap[bv], sv)))

    shapes = {1: "tails_xa", 3: "tails_xb",
              5: "tails_xa_reflected", 7: "tails_xb_reflected"}
    base_systems: dict[str, PathSystem] = {}
    base_systems["paired"], _ = _solve_with_variants(d, n, "paired", budget)
    xa_sys, xa_var = _solve_with_variants(d, n, "tails_xa", budget)
    xb_sys, xb_var = _solve_with_variants(d, n, "tails_xb", budget)
    base_systems["tails_xa"] = xa_sys
    base_systems["tails_xb"] = xb_sys
    base_systems["tails_xa_reflected"] = xa_sys.reflected()
    base_systems["tails_xb_reflected"] = xb_sys.reflected()
    meta["systems"]["tails_xa_variant"] = xa_var
    meta["systems"]["tails_xb_variant"] = xb_var

    upper = set(chart.upper_path)
    connectors: list[tuple[str, str]] = []
    for i in range(1, num_a):
        shape = shapes.get(i, "paired")
        system = base_systems[shape]
        fmap = chart.fragment_maps[f"B{i}"]
        junction_bases = {"l", "r"}
        for path in system.paths:
            for u, v in zip(path, path[1:]):
                bu, su = pv_split(u)
                bv, sv = pv_split(v)
                edges.append((pv(fmap[bu], su), pv(fmap[bv], sv)))
        for a, b in system.endpoint_pairs:
            for end in (a, b):
                base, side = pv_split(end)
                if base in junction_bases:
                    continue
                apex = "s" if fmap[base] in upper else "t"
                connectors.append((pv(apex, side), pv(fmap[base], side)))
        meta["systems"][f"B{i}"] = shape
    edges.extend(connectors)
    meta["connectors"] = sorted(connectors)

    seq = cycle_sequence(edges)
    if not verify_hamilton_cycle(gp, seq):
        raise GraphError("internal error: stitched cycle failed verification")
    return gp, seq, meta
