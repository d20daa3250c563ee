"""Shared fixtures and naive oracles used across the suite."""

from __future__ import annotations

import itertools
import random

import pytest

from cactuslab.graphs import Graph


def petersen_graph() -> Graph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    verts = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    return Graph(verts, outer + inner + spokes)


def cycle_graph(n: int, prefix: str = "v") -> Graph:
    verts = [f"{prefix}{i}" for i in range(n)]
    return Graph(verts, [(verts[i], verts[(i + 1) % n]) for i in range(n)])


def path_graph(n: int, prefix: str = "p") -> Graph:
    verts = [f"{prefix}{i}" for i in range(n)]
    return Graph(verts, list(zip(verts, verts[1:])))


def star_graph(leaves: int) -> Graph:
    verts = ["hub"] + [f"leaf{i}" for i in range(leaves)]
    return Graph(verts, [("hub", v) for v in verts[1:]])


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    verts = [f"r{i}" for i in range(n)]
    pool = list(itertools.combinations(verts, 2))
    rng.shuffle(pool)
    return Graph(verts, pool[:m])


def _bit_adjacency(g: Graph):
    order = sorted(g.vertices)
    index = {v: i for i, v in enumerate(order)}
    adj = [0] * len(order)
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return order, adj


def oracle_hamilton_cycle(g: Graph) -> bool:
    """Held-Karp reachability over all vertex subsets, anchored at vertex 0."""
    n = g.num_vertices()
    if n < 3:
        return False
    _, adj = _bit_adjacency(g)
    full = (1 << n) - 1
    reach = [0] * (1 << n)
    reach[1] = 1
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        ends = reach[mask]
        if not ends:
            continue
        rest = full & ~mask
        v = ends
        while v:
            low = v & -v
            i = low.bit_length() - 1
            v ^= low
            nxt = adj[i] & rest
            while nxt:
                nlow = nxt & -nxt
                j = nlow.bit_length() - 1
                nxt ^= nlow
                reach[mask | nlow] |= nlow
        if mask == full:
            break
    ends = reach[full]
    return bool(ends and any((ends >> i) & 1 and (adj[i] & 1) for i in range(n)))


def oracle_hamilton_path(g: Graph, endpoints=None) -> bool:
    """Held-Karp from every start vertex; optional fixed endpoint pair."""
    n = g.num_vertices()
    if n == 0:
        return False
    if n == 1:
        return endpoints is None
    order, adj = _bit_adjacency(g)
    index = {v: i for i, v in enumerate(order)}
    full = (1 << n) - 1
    starts = range(n)
    if endpoints is not None:
        starts = [index[endpoints[0]]]
    for s in starts:
        reach = [0] * (1 << n)
        reach[1 << s] = 1 << s
        for mask in range(1 << n):
            ends = reach[mask]
            if not ends:
                continue
            rest = full & ~mask
            v = ends
            while v:
                low = v & -v
                i = low.bit_length() - 1
                v ^= low
                nxt = adj[i] & rest
                while nxt:
                    nlow = nxt & -nxt
                    nxt ^= nlow
                    reach[mask | nlow] |= nlow
        final = reach[full]
        if endpoints is not None:
            if final & (1 << index[endpoints[1]]):
                return True
        elif final:
            return True
    return False


def oracle_k_tree(g: Graph, k: int) -> bool:
    """Iterate every spanning tree and test the degree cap; no pruning."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        return False
    if h.number_of_nodes() == 1:
        return True
    for tree in nx.SpanningTreeIterator(h):
        if max(dict(tree.degree).values()) <= k:
            return True
    return False


def oracle_good_even_cactus(g: Graph) -> bool:
    """Test every edge subset for a spanning good even cactus; no pruning."""
    from cactuslab.cactus import analyze_cactus
    from cactuslab.graphs import is_connected

    edges = list(g.edges)
    n = g.num_vertices()
    for bits in range(1 << len(edges)):
        subset = [edges[i] for i in range(len(edges)) if bits >> i & 1]
        if len(subset) < n - 1:
            continue
        sub = Graph(g.vertices, subset)
        if not is_connected(sub):
            continue
        rep = analyze_cactus(sub)
        if rep.is_cactus and rep.is_even and rep.is_good:
            return True
    return False


@pytest.fixture
def rng():
    return random.Random(20260818)
