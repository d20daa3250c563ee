"""Undirected labeled graphs: blocks, connectivity, and rotation embeddings."""
from __future__ import annotations

from dataclasses import dataclass


class GraphError(ValueError):
    """Raised for malformed graphs, unknown labels, or unusable arguments."""


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical undirected edge: endpoints in lexicographic order."""
    if u == v:
        raise GraphError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with string labels and insertion-ordered iteration."""

    __slots__ = ("_adj", "_edges")

    def __init__(self, vertices=(), edges=()):
        self._adj: dict[str, dict[str, None]] = {}
        self._edges: dict[tuple[str, str], None] = {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v: str) -> None:
        if not isinstance(v, str) or not v:
            raise GraphError(f"vertex label must be a non-empty string, got {v!r}")
        self._adj.setdefault(v, {})

    def add_edge(self, u: str, v: str) -> None:
        key = edge_key(u, v)
        self.add_vertex(u)
        self.add_vertex(v)
        if key in self._edges:
            raise GraphError(f"duplicate edge {key}")
        self._edges[key] = None
        self._adj[u][v] = None
        self._adj[v][u] = None

    def remove_edge(self, u: str, v: str) -> None:
        key = edge_key(u, v)
        if key not in self._edges:
            raise GraphError(f"no such edge {key}")
        del self._edges[key]
        del self._adj[u][v]
        del self._adj[v][u]

    def remove_vertex(self, v: str) -> None:
        if v not in self._adj:
            raise GraphError(f"no such vertex {v!r}")
        for w in list(self._adj[v]):
            self.remove_edge(v, w)
        del self._adj[v]

    @property
    def vertices(self) -> list[str]:
        return list(self._adj)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return list(self._edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._edges

    def neighbors(self, v: str) -> list[str]:
        if v not in self._adj:
            raise GraphError(f"no such vertex {v!r}")
        return list(self._adj[v])

    def degree(self, v: str) -> int:
        if v not in self._adj:
            raise GraphError(f"no such vertex {v!r}")
        return len(self._adj[v])

    def num_vertices(self) -> int:
        return len(self._adj)

    def num_edges(self) -> int:
        return len(self._edges)

    def copy(self) -> "Graph":
        return Graph(self.vertices, self.edges)

    def __contains__(self, v: str) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self._adj) == set(other._adj) and set(self._edges) == set(other._edges)

    def __hash__(self):
        raise TypeError("Graph is mutable and unhashable")

    def __repr__(self) -> str:
        return f"Graph({self.num_vertices()} vertices, {self.num_edges()} edges)"


def induced_subgraph(g: Graph, labels) -> Graph:
    """Subgraph on the given labels; labels absent from g are ignored."""
    keep = {v for v in labels if g.has_vertex(v)}
    sub = Graph()
    for v in g.vertices:
        if v in keep:
            sub.add_vertex(v)
    for u, v in g.edges:
        if u in keep and v in keep:
            sub.add_edge(u, v)
    return sub


def delete(g: Graph, items) -> Graph:
    """Copy of g with the given vertices (strings) and edges (pairs) removed."""
    out = g.copy()
    for item in items:
        if isinstance(item, str):
            out.remove_vertex(item)
        elif isinstance(item, (tuple, list)) and len(item) == 2:
            out.remove_edge(item[0], item[1])
        else:
            raise GraphError(f"cannot interpret deletion item {item!r}")
    return out


def union(g1: Graph, g2: Graph) -> Graph:
    """Union by label; vertices of g1 first, then new vertices of g2."""
    out = g1.copy()
    for v in g2.vertices:
        out.add_vertex(v)
    for u, v in g2.edges:
        if not out.has_edge(u, v):
            out.add_edge(u, v)
    return out


def connected_components(g: Graph) -> list[list[str]]:
    """Vertex lists of the connected components, in insertion order."""
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    if g.num_vertices() == 0:
        return False
    return len(connected_components(g)) == 1


@dataclass(frozen=True)
class Block:
    """One block (maximal 2-connected subgraph or bridge) of a graph."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    component: int

    @property
    def is_edge(self) -> bool:
        return len(self.edges) == 1

    @property
    def is_cycle(self) -> bool:
        return len(self.edges) >= 3 and len(self.edges) == len(self.vertices)

    def cycle_length(self) -> int:
        if not self.is_cycle:
            raise GraphError("block is not a cycle")
        return len(self.edges)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices, and per-vertex block membership of a graph."""

    blocks: tuple[Block, ...]
    cut_vertices: frozenset[str]
    block_membership: dict[str, tuple[int, ...]]
    component_of: dict[str, int]

    def block_degree(self, v: str) -> int:
        if v not in self.component_of:
            raise GraphError(f"no such vertex {v!r}")
        return len(self.block_membership.get(v, ()))

    def blocks_at(self, v: str) -> tuple[Block, ...]:
        return tuple(self.blocks[i] for i in self.block_membership.get(v, ()))


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative biconnected-component decomposition (blocks partition the edges)."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    comp_of: dict[str, int] = {}
    cut: set[str] = set()
    blocks_raw: list[tuple[list[tuple[str, str]], int]] = []
    counter = 0
    comp_idx = -1

    for root in g.vertices:
        if root in disc:
            continue
        comp_idx += 1
        comp_of[root] = comp_idx
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[tuple[str, str]] = []
        # frame: (vertex, parent, neighbor iterator)
        stack = [(root, None, iter(g.neighbors(root)))]
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    # skip one occurrence of the tree edge back to the parent
                    parent = None
                    stack[-1] = (v, parent, it)
                    continue
                if w not in disc:
                    comp_of[w] = comp_idx
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block
                    blk: list[tuple[str, str]] = []
                    while edge_stack:
                        e = edge_stack.pop()
                        blk.append(e)
                        if e == (u, v):
                            break
                    if blk:
                        blocks_raw.append((blk, comp_idx))
                    if u != root or root_children > 1:
                        cut.add(u)
        if edge_stack:
            blocks_raw.append((list(edge_stack), comp_idx))
            edge_stack = []

    blocks = []
    membership: dict[str, list[int]] = {}
    for raw, cidx in blocks_raw:
        vs = sorted({x for e in raw for x in e})
        es = sorted(edge_key(*e) for e in raw)
        idx = len(blocks)
        blocks.append(Block(tuple(vs), tuple(es), cidx))
        for x in vs:
            membership.setdefault(x, []).append(idx)
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(cut),
        block_membership={v: tuple(ids) for v, ids in membership.items()},
        component_of=comp_of,
    )


def block_path(g: Graph, u: str, v: str) -> Graph:
    """Minimal union of blocks whose removal of any one disconnects u from v."""
    if not g.has_vertex(u) or not g.has_vertex(v):
        raise GraphError(f"block_path endpoints must be vertices of g: {u!r}, {v!r}")
    if u == v:
        return Graph([u], [])
    dec = block_decomposition(g)
    # Bipartite block-cut structure: vertex nodes and block nodes.
    by_vertex = dec.block_membership
    if u not in by_vertex or v not in by_vertex:
        raise GraphError(f"{u!r} and {v!r} are not connected")
    # BFS from u alternating vertex -> block -> vertex; tree, so the path is unique.
    parent: dict[tuple, tuple] = {("v", u): None}
    queue = [("v", u)]
    goal = None
    while queue and goal is None:
        node = queue.pop(0)
        kind, name = node
        if kind == "v":
            for bidx in by_vertex.get(name, ()):
                nxt = ("b", bidx)
                if nxt not in parent:
                    parent[nxt] = node
                    queue.append(nxt)
        else:
            blk = dec.blocks[name]
            for x in blk.vertices:
                nxt = ("v", x)
                if nxt not in parent:
                    parent[nxt] = node
                    if x == v:
                        goal = nxt
                        break
                    queue.append(nxt)
    if goal is None:
        raise GraphError(f"{u!r} and {v!r} are not connected")
    path_blocks = []
    node = goal
    while node is not None:
        if node[0] == "b":
            path_blocks.append(dec.blocks[node[1]])
        node = parent[node]
    out = Graph()
    out.add_vertex(u)
    for blk in reversed(path_blocks):
        for x in blk.vertices:
            out.add_vertex(x)
        for a, b in blk.edges:
            out.add_edge(a, b)
    return out


def is_k_connected(g: Graph, k: int) -> bool:
    """Vertex connectivity test for k in {1, 2, 3} via separator enumeration."""
    if not isinstance(k, int) or k < 1:
        raise GraphError(f"k must be a positive integer, got {k!r}")
    if k > 3:
        raise GraphError("is_k_connected supports k <= 3 only")
    if g.num_vertices() <= k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if block_decomposition(g).cut_vertices:
        return False
    if k == 2:
        return True
    for v in g.vertices:
        rest = delete(g, [v])
        if not is_connected(rest) or block_decomposition(rest).cut_vertices:
            return False
    return True


@dataclass(frozen=True)
class RotationEmbedding:
    """Counterclockwise neighbor order per vertex plus the declared outer face."""

    rotation: dict[str, tuple[str, ...]]
    outer_face: tuple[str, ...] | None


@dataclass(frozen=True)
class FaceReport:
    """Faces traced from a rotation system, with per-component Euler verdicts."""

    faces: tuple[tuple[str, ...], ...]
    face_count: int
    euler_ok: bool
    outer_face_matches: bool
    euler_by_component: tuple[tuple[int, int, int], ...]


def _canonical_cycle(cycle: tuple[str, ...]) -> tuple[str, ...]:
    """Rotate a cyclic sequence so the least label comes first."""
    if not cycle:
        return cycle
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def _cycles_equal(a: tuple[str, ...], b: tuple[str, ...]) -> bool:
    """Equality of cyclic sequences up to rotation and direction."""
    if len(a) != len(b):
        return False
    return _canonical_cycle(a) == _canonical_cycle(b) or _canonical_cycle(a) == _canonical_cycle(tuple(reversed(b)))


def check_embedding(g: Graph, emb: RotationEmbedding) -> FaceReport:
    """Trace all faces of the rotation system and verify V - E + F = 2 per component."""
    rot = emb.rotation
    for v in g.vertices:
        if v not in rot:
            raise GraphError(f"rotation missing vertex {v!r}")
        if sorted(rot[v]) != sorted(g.neighbors(v)):
            raise GraphError(f"rotation at {v!r} does not list its neighbors exactly")
    if set(rot) - set(g.vertices):
        extra = sorted(set(rot) - set(g.vertices))
        raise GraphError(f"rotation lists unknown vertices {extra}")

    succ: dict[tuple[str, str], str] = {}
    for v, order in rot.items():
        n = len(order)
        for i, w in enumerate(order):
            # next dart leaving v after arriving from w
            succ[(v, w)] = order[(i + 1) % n]

    darts = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    unused = set(darts)
    faces: list[tuple[str, ...]] = []
    for start in sorted(darts):
        if start not in unused:
            continue
        walk = []
        cur = start
        while cur in unused:
            unused.discard(cur)
            walk.append(cur[0])
            u, v = cur
            cur = (v, succ[(v, u)])
        faces.append(_canonical_cycle(tuple(walk)))

    comps = connected_components(g)
    comp_index = {v: i for i, comp in enumerate(comps) for v in comp}
    face_per_comp = [0] * len(comps)
    for f in faces:
        face_per_comp[comp_index[f[0]]] += 1
    euler_rows = []
    euler_ok = True
    for i, comp in enumerate(comps):
        nv = len(comp)
        ne = sum(1 for u, v in g.edges if comp_index[u] == i)
        nf = face_per_comp[i]
        euler_rows.append((nv, ne, nf))
        if nv - ne + nf != 2:
            euler_ok = False
    if emb.outer_face is None:
        # no declared outer face, nothing to match against
        outer_ok = True
    else:
        outer_ok = any(_cycles_equal(f, emb.outer_face) for f in faces)
    return FaceReport(
        faces=tuple(faces),
        face_count=len(faces),
        euler_ok=euler_ok,
        outer_face_matches=outer_ok,
        euler_by_component=tuple(euler_rows),
    )
