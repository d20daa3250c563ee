"""Cactus recognition, block-degree classification, and witness-path search."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Block,
    BlockDecomposition,
    Graph,
    GraphError,
    block_decomposition,
    connected_components,
    delete,
    edge_key,
    is_connected,
)


@dataclass(frozen=True)
class CactusReport:
    """Structure report for a connected graph analyzed as a cactus."""

    is_cactus: bool
    is_even: bool
    is_good: bool
    block_degrees: dict[str, int]
    classification: str  # good | one_good | two_good | none
    witness_paths: tuple[tuple[str, ...], ...]

    def max_block_degree(self) -> int:
        return max(self.block_degrees.values(), default=0)


@dataclass(frozen=True)
class Interval:
    """Chain interval (a, b): the tightest fragment window containing a subgraph."""

    a: int
    b: int


@dataclass(frozen=True)
class DeletionReport:
    """Outcome of removing two hub vertices from a good cactus."""

    component_vertices: tuple[tuple[str, ...], ...]
    components: tuple[CactusReport, ...]
    case: str | None  # "I", "II", or None when neither case applies
    satisfies: bool
    q1: int
    q2: int
    bag_counts: tuple[int, ...] | None
    intervals: tuple[Interval, ...] | None


def _bridges(dec: BlockDecomposition) -> set[tuple[str, str]]:
    return {blk.edges[0] for blk in dec.blocks if blk.is_edge}


def _bridge_adjacency(dec: BlockDecomposition) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {}
    for u, v in sorted(_bridges(dec)):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def validate_edge_path(q: Graph, path, dec: BlockDecomposition | None = None) -> tuple[str, ...]:
    """Check a vertex sequence is a path of q whose every edge is an edge block."""
    seq = tuple(path)
    if not seq:
        raise GraphError("edge path must contain at least one vertex")
    if len(set(seq)) != len(seq):
        raise GraphError(f"edge path repeats a vertex: {seq}")
    for v in seq:
        if not q.has_vertex(v):
            raise GraphError(f"edge path vertex {v!r} is not in the graph")
    if dec is None:
        dec = block_decomposition(q)
    bridges = _bridges(dec)
    for a, b in zip(seq, seq[1:]):
        if not q.has_edge(a, b):
            raise GraphError(f"edge path step {a!r}-{b!r} is not an edge")
        if edge_key(a, b) not in bridges:
            raise GraphError(f"edge path step {a!r}-{b!r} lies on a cycle block")
    return seq


def is_cactus(q: Graph, dec: BlockDecomposition | None = None) -> bool:
    """Connected, and every block is a single edge or a cycle."""
    if not is_connected(q):
        return False
    if dec is None:
        dec = block_decomposition(q)
    return all(blk.is_edge or blk.is_cycle for blk in dec.blocks)


def is_even(q: Graph, dec: BlockDecomposition | None = None) -> bool:
    """Every cycle block has even length (no constraint on non-cycle blocks)."""
    if dec is None:
        dec = block_decomposition(q)
    return all(blk.cycle_length() % 2 == 0 for blk in dec.blocks if blk.is_cycle)


def block_degrees(q: Graph, dec: BlockDecomposition | None = None) -> dict[str, int]:
    if dec is None:
        dec = block_decomposition(q)
    return {v: dec.block_degree(v) for v in q.vertices}


def is_p_good(q: Graph, p, dec: BlockDecomposition | None = None) -> bool:
    """Block degree at most 2 off the interior of edge path p, at most 3 on it."""
    if dec is None:
        dec = block_decomposition(q)
    seq = validate_edge_path(q, p, dec)
    interior = set(seq[1:-1])
    for v in q.vertices:
        cap = 3 if v in interior else 2
        if dec.block_degree(v) > cap:
            return False
    return True


def is_p1p2_good(q: Graph, p1, p2, dec: BlockDecomposition | None = None) -> bool:
    """Two-path relaxation: caps 2 / 3 / exactly 4 by interior membership."""
    if dec is None:
        dec = block_decomposition(q)
    s1 = validate_edge_path(q, p1, dec)
    s2 = validate_edge_path(q, p2, dec)
    if len(set(s1) & set(s2)) > 1:
        raise GraphError("paths share more than one vertex")
    i1 = set(s1[1:-1])
    i2 = set(s2[1:-1])
    for v in q.vertices:
        b = dec.block_degree(v)
        if v in i1 and v in i2:
            if b != 4:
                return False
        elif v in i1 or v in i2:
            if b > 3:
                return False
        elif b > 2:
            return False
    return True


def _canonical_path(seq: tuple[str, ...]) -> tuple[str, ...]:
    rev = tuple(reversed(seq))
    return seq if seq <= rev else rev


def _forest_path(adj: dict[str, list[str]], u: str, v: str) -> tuple[str, ...] | None:
    """Unique path between u and v in the bridge forest, or None if disconnected."""
    if u == v:
        return (u,)
    parent = {u: None}
    queue = [u]
    while queue:
        x = queue.pop(0)
        for y in adj.get(x, ()):
            if y not in parent:
                parent[y] = x
                if y == v:
                    seq = [v]
                    while seq[-1] != u:
                        seq.append(parent[seq[-1]])
                    return tuple(reversed(seq))
                queue.append(y)
    return None


def _spine(adj: dict[str, list[str]], anchors: list[str]) -> tuple[str, ...] | None:
    """Minimal bridge-forest subtree spanning the anchors, if it forms a path."""
    base = anchors[0]
    verts: set[str] = {base}
    deg: dict[str, int] = {}
    edges: set[tuple[str, str]] = set()
    for other in anchors[1:]:
        path = _forest_path(adj, base, other)
        if path is None:
            return None
        for a, b in zip(path, path[1:]):
            e = edge_key(a, b)
            if e not in edges:
                edges.add(e)
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
        verts.update(path)
    if not edges:
        return (base,)
    if any(d > 2 for d in deg.values()):
        return None
    if sum(1 for d in deg.values() if d == 1) != 2:
        return None
    start = min(v for v in verts if deg.get(v, 0) == 1)
    seq = [start]
    prev = None
    while len(seq) < len(verts):
        nxt = [y for y in adj.get(seq[-1], ()) if y != prev and edge_key(seq[-1], y) in edges]
        if len(nxt) != 1:
            return None
        prev = seq[-1]
        seq.append(nxt[0])
    return tuple(seq)


def _extended_candidates(adj: dict[str, list[str]], spine: tuple[str, ...], must_internal: set[str]):
    """All minimal extensions of the spine whose tips leave must_internal."""
    out: list[tuple[str, ...]] = []
    stack = [spine]
    while stack:
        seq = stack.pop()
        if seq[0] in must_internal or (len(seq) == 1 and seq[0] in must_internal):
            used = set(seq)
            for x in adj.get(seq[0], ()):
                if x not in used:
                    stack.append((x,) + seq)
            continue
        if seq[-1] in must_internal:
            used = set(seq)
            for x in adj.get(seq[-1], ()):
                if x not in used:
                    stack.append(seq + (x,))
            continue
        if len(seq) >= 2:
            out.append(seq)
    return out


def _witness_one_path(q: Graph, dec: BlockDecomposition, targets: set[str]) -> tuple[tuple[str, ...], ...] | None:
    """Deterministic least edge path whose interior covers the target vertices."""
    adj = _bridge_adjacency(dec)
    if any(v not in adj for v in targets):
        return None
    spine = _spine(adj, sorted(targets))
    if spine is None:
        return None
    best = None
    for cand in _extended_candidates(adj, spine, targets):
        try:
            ok = is_p_good(q, cand, dec)
        except GraphError:
            ok = False
        if ok:
            c = _canonical_path(cand)
            if best is None or c < best:
                best = c
    return (best,) if best is not None else None


def _witness_two_paths(q: Graph, dec: BlockDecomposition, b3: set[str], b4: set[str]):
    """Deterministic least pair of edge paths splitting the overloaded vertices."""
    adj = _bridge_adjacency(dec)
    if any(v not in adj for v in b3 | b4):
        return None
    b3s = sorted(b3)
    best = None
    for mask in range(1 << len(b3s)):
        s1 = {b3s[i] for i in range(len(b3s)) if mask >> i & 1}
        s2 = set(b3s) - s1
        m1 = s1 | b4
        m2 = s2 | b4
        if not m1 or not m2:
            continue
        spine1 = _spine(adj, sorted(m1))
        spine2 = _spine(adj, sorted(m2))
        if spine1 is None or spine2 is None:
            continue
        cands1 = _extended_candidates(adj, spine1, m1)
        cands2 = _extended_candidates(adj, spine2, m2)
        for c1 in cands1:
            for c2 in cands2:
                try:
                    ok = is_p1p2_good(q, c1, c2, dec)
                except GraphError:
                    ok = False
                if ok:
                    pair = tuple(sorted((_canonical_path(c1), _canonical_path(c2))))
                    if best is None or pair < best:
                        best = pair
    return best


def analyze_cactus(q: Graph) -> CactusReport:
    """Full structure report: cactus flags, block degrees, goodness class, witnesses."""
    if q.num_vertices() == 0:
        raise GraphError("cannot analyze the empty graph")
    if not is_connected(q):
        raise GraphError("analyze_cactus requires a connected graph")
    dec = block_decomposition(q)
    cactus = all(blk.is_edge or blk.is_cycle for blk in dec.blocks)
    even = is_even(q, dec)
    degrees = block_degrees(q, dec)
    good = cactus and all(b <= 2 for b in degrees.values())

    classification = "none"
    witnesses: tuple[tuple[str, ...], ...] = ()
    if cactus:
        b3 = {v for v, b in degrees.items() if b == 3}
        b4 = {v for v, b in degrees.items() if b == 4}
        b5 = {v for v, b in degrees.items() if b >= 5}
        if good:
            classification = "good"
        elif not b4 and not b5:
            found = _witness_one_path(q, dec, b3)
            if found is not None:
                classification = "one_good"
                witnesses = found
        elif not b5 and len(b4) <= 1:
            pair = _witness_two_paths(q, dec, b3, b4)
            if pair is not None:
                classification = "two_good"
                witnesses = pair
        if classification == "none" and not good and not b4 and not b5:
            pair = _witness_two_paths(q, dec, b3, set())
            if pair is not None:
                classification = "two_good"
                witnesses = pair
    return CactusReport(
        is_cactus=cactus,
        is_even=even,
        is_good=good,
        block_degrees=degrees,
        classification=classification,
        witness_paths=witnesses,
    )


def classify_deletion(
    k: Graph,
    s: str,
    t: str,
    max_degree_3: bool = False,
    chart=None,
) -> DeletionReport:
    """Classify the components left after deleting two vertices from a good cactus."""
    if s == t:
        raise GraphError("hub vertices must be distinct")
    for v in (s, t):
        if not k.has_vertex(v):
            raise GraphError(f"hub vertex {v!r} is not in the graph")
    report = analyze_cactus(k)
    if not report.is_cactus or not report.is_good:
        raise GraphError("classify_deletion requires a good cactus")
    if max_degree_3 and any(k.degree(v) > 3 for v in k.vertices):
        raise GraphError("max_degree_3 mode requires maximum degree 3")

    rest = delete(k, [s, t])
    comp_vertex_lists = [tuple(c) for c in connected_components(rest)]
    reports = []
    for comp in comp_vertex_lists:
        sub = Graph(comp, [e for e in rest.edges if e[0] in set(comp)])
        reports.append(analyze_cactus(sub))

    n_one = sum(1 for r in reports if r.classification == "one_good")
    n_two = sum(1 for r in reports if r.classification == "two_good")
    n_none = sum(1 for r in reports if r.classification == "none")
    ncomp = len(reports)
    if max_degree_3:
        case_i = ncomp <= 4 and n_two == 0 and n_none == 0 and n_one <= 2
        case_ii = ncomp <= 3 and n_none == 0 and n_two == 1 and n_one == 0
    else:
        case_i = ncomp <= 4 and n_two == 0 and n_none == 0
        case_ii = ncomp <= 3 and n_none == 0 and n_two == 1
    case = "I" if case_i else "II" if case_ii else None

    bag_counts = None
    intervals = None
    if chart is not None:
        counts = []
        ivals = []
        for comp in comp_vertex_lists:
            sub = Graph(comp, [e for e in rest.edges if e[0] in set(comp)])
            ival, bag_ids = bags(sub, chart)
            counts.append(len(bag_ids))
            ivals.append(ival)
        bag_counts = tuple(counts)
        intervals = tuple(ivals)
    return DeletionReport(
        component_vertices=tuple(comp_vertex_lists),
        components=tuple(reports),
        case=case,
        satisfies=case is not None,
        q1=n_one,
        q2=n_two,
        bag_counts=bag_counts,
        intervals=intervals,
    )


def bags(q: Graph, chart) -> tuple[Interval, list[str]]:
    """Tightest chain interval containing q, and the fragment copies q punctures.

    A copy is a bag when q contains both its junction endpoints but misses at
    least one of its vertices.
    """
    bounds = chart.vertex_bounds
    vq = set(q.vertices)
    if not vq:
        raise GraphError("bags requires a non-empty subgraph")
    missing = sorted(v for v in vq if v not in bounds)
    if missing:
        raise GraphError(f"vertices outside the chain chart: {missing[:4]}")
    a = min(bounds[v][0] for v in vq)
    b = max(bounds[v][1] for v in vq)
    bag_ids = []
    for copy_id in chart.fragment_order:
        e1, e2 = chart.fragment_endpoints[copy_id]
        if e1 in vq and e2 in vq and not chart.fragment_spans[copy_id] <= vq:
            bag_ids.append(copy_id)
    return Interval(a, b), bag_ids
