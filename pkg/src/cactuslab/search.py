"""Exhaustive branch-and-bound searches for spanning structures.

Every search decides edges in a fixed order (min endpoint degree, then label)
with include/exclude branching, trail-based rollback, and sound pruning, so a
NONE result is a proof of non-existence and FOUND witnesses are re-verified by
predicates that share no code with the search internals.
"""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from . import cactus as cx
from .graphs import Graph, GraphError, block_decomposition, edge_key, is_connected

FOUND = "FOUND"
NONE = "NONE"
TIMEOUT = "TIMEOUT"

_INF = 1 << 30


@dataclass(frozen=True)
class Budget:
    """Wall-clock and node limits for one search invocation."""

    wall_s: float | None = 300.0
    max_nodes: int | None = None


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a budgeted search; NONE always means the space was exhausted."""

    status: str
    witness: object | None
    nodes: int
    elapsed_s: float
    exhaustive: bool

    @property
    def found(self) -> bool:
        return self.status == FOUND


@dataclass(frozen=True)
class CactusConstraints:
    """Constraint set for spanning even cactus searches.

    goodness: "even" (no block-degree cap), "good" (cap 2 everywhere),
    "p_good" (cap 2 off one witness path between the required endpoints,
    interior_cap on it), or "p1p2_good" (cap 4, verified at the leaves).
    """

    goodness: str = "good"
    max_degree: int | None = None
    required_block_degree_1: frozenset = frozenset()
    required_edge_path_endpoints: tuple[str, str] | None = None
    interior_cap: int | None = 3


class _BudgetExceeded(Exception):
    pass


class _Clock:
    def __init__(self, budget: Budget | None):
        self.t0 = time.monotonic()
        self.deadline = None
        self.max_nodes = None
        if budget is not None:
            if budget.wall_s is not None:
                self.deadline = self.t0 + budget.wall_s
            self.max_nodes = budget.max_nodes
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise _BudgetExceeded

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def _ordered_edges(g: Graph) -> list[tuple[str, str]]:
    """Branch order used by every search: (min endpoint degree, label)."""
    return sorted(g.edges, key=lambda e: (min(g.degree(e[0]), g.degree(e[1])), e))


def _ensure_stack(m: int) -> None:
    """The decision DFS recurses once per edge; leave generous headroom."""
    need = 2 * m + 2000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def verify_cactus_witness(g: Graph, edges, constraints: CactusConstraints) -> bool:
    """Independent check that an edge set is a spanning cactus meeting the constraints."""
    sub = Graph(g.vertices, edges)
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
    if not is_connected(sub):
        return False
    report = cx.analyze_cactus(sub)
    if not report.is_cactus or not report.is_even:
        return False
    if constraints.max_degree is not None:
        if any(sub.degree(v) > constraints.max_degree for v in sub.vertices):
            return False
    for v in constraints.required_block_degree_1:
        if report.block_degrees.get(v) != 1:
            return False
    mode = constraints.goodness
    if mode == "good":
        return report.is_good
    if mode == "even":
        return True
    if mode == "p_good":
        u1, u2 = constraints.required_edge_path_endpoints
        path = _bridge_path_between(sub, u1, u2)
        if path is None:
            return False
        cap = constraints.interior_cap if constraints.interior_cap is not None else _INF
        interior = set(path[1:-1])
        for v in sub.vertices:
            limit = cap if v in interior else 2
            if report.block_degrees[v] > limit:
                return False
        return True
    if mode == "p1p2_good":
        return report.classification in ("good", "one_good", "two_good")
    raise GraphError(f"unknown goodness mode {mode!r}")


def _bridge_path_between(q: Graph, u: str, v: str) -> tuple[str, ...] | None:
    """Unique all-bridge path between u and v in a cactus, if one exists."""
    if u == v:
        return (u,)
    dec = block_decomposition(q)
    bridges = {blk.edges[0] for blk in dec.blocks if blk.is_edge}
    adj: dict[str, list[str]] = {}
    for a, b in sorted(bridges):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if u not in adj or v not in adj:
        return None
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


class _CactusEngine:
    """Incremental partial-cactus state over a fixed edge decision order."""

    def __init__(self, g: Graph, constraints: CactusConstraints, clock: _Clock):
        self.g = g
        self.cons = constraints
        self.clock = clock
        self.labels = g.vertices
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.edge_labels = _ordered_edges(g)
        self.m = len(self.edge_labels)
        _ensure_stack(self.m)
        self.elist = [(self.index[u], self.index[v]) for u, v in self.edge_labels]
        self.eidx = {}
        for i, (u, v) in enumerate(self.elist):
            self.eidx[(u, v) if u < v else (v, u)] = i

        deg = [g.degree(v) for v in self.labels]
        self.deg_in = [0] * self.n
        self.undec_deg = deg[:]
        self.bridges_at = [0] * self.n
        self.cycles_at = [0] * self.n
        self.in_cycle = [False] * self.m
        self.parent = list(range(self.n))
        self.parity = [0] * self.n
        self.size = [1] * self.n
        self.in_adj = [0] * self.n
        self.avail_adj = [0] * self.n
        for u, v in self.elist:
            self.avail_adj[u] |= 1 << v
            self.avail_adj[v] |= 1 << u
        self.full_mask = (1 << self.n) - 1
        self.trail: list[tuple] = []

        mode = constraints.goodness
        if mode not in ("even", "good", "p_good", "p1p2_good"):
            raise GraphError(f"unknown goodness mode {mode!r}")
        icap = constraints.interior_cap if constraints.interior_cap is not None else _INF
        if mode == "even":
            base = _INF
        elif mode == "good":
            base = 2
        elif mode == "p_good":
            base = icap
        else:
            base = 4
        self.static_cap = [base] * self.n
        self.interior_cap = icap
        self.endpoints = None
        if mode == "p_good":
            ep = constraints.required_edge_path_endpoints
            if ep is None:
                raise GraphError("p_good constraints require edge path endpoints")
            u1, u2 = ep
            if u1 == u2:
                raise GraphError("edge path endpoints must be distinct")
            for x in (u1, u2):
                if not g.has_vertex(x):
                    raise GraphError(f"endpoint {x!r} is not in the graph")
            self.endpoints = (self.index[u1], self.index[u2])
            self.static_cap[self.endpoints[0]] = 2
            self.static_cap[self.endpoints[1]] = 2
        elif constraints.required_edge_path_endpoints is not None:
            raise GraphError("edge path endpoints only apply to p_good constraints")
        for lab in constraints.required_block_degree_1:
            if not g.has_vertex(lab):
                raise GraphError(f"required vertex {lab!r} is not in the graph")
            i = self.index[lab]
            self.static_cap[i] = min(self.static_cap[i], 1)
        if constraints.max_degree is not None and constraints.max_degree < 1:
            raise GraphError("max_degree must be positive")
        self.max_degree = constraints.max_degree if constraints.max_degree is not None else _INF
        self.mode = mode
        self.corridor_active = False
        self.corridor_edges: frozenset[int] = frozenset()
        self.corridor_interior = 0

    # -- state helpers -------------------------------------------------

    def _find(self, v: int) -> tuple[int, int]:
        p = 0
        while self.parent[v] != v:
            p ^= self.parity[v]
            v = self.parent[v]
        return v, p

    def _cap(self, v: int) -> int:
        c = self.static_cap[v]
        if self.corridor_active and not (self.corridor_interior >> v) & 1:
            if self.endpoints is None or (v != self.endpoints[0] and v != self.endpoints[1]):
                c = min(c, 2)
        return c

    def _b_floor(self, v: int) -> int:
        return self.cycles_at[v] + (self.bridges_at[v] + 1) // 2

    def _cap_ok(self, v: int) -> bool:
        cap = self._cap(v)
        if self._b_floor(v) > cap:
            return False
        if cap < _INF and self.deg_in[v] > 2 * cap:
            return False
        return True

    def _rollback(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            rec = trail.pop()
            kind = rec[0]
            if kind == 0:  # deg/undec pair for a decided edge
                _, u, v, was_include = rec
                self.undec_deg[u] += 1
                self.undec_deg[v] += 1
                if was_include:
                    self.deg_in[u] -= 1
                    self.deg_in[v] -= 1
            elif kind == 1:  # dsu union
                _, child, root = rec
                self.size[root] -= self.size[child]
                self.parent[child] = child
                self.parity[child] = 0
            elif kind == 2:  # included adjacency
                _, u, v = rec
                self.in_adj[u] &= ~(1 << v)
                self.in_adj[v] &= ~(1 << u)
            elif kind == 3:  # available adjacency removed
                _, u, v = rec
                self.avail_adj[u] |= 1 << v
                self.avail_adj[v] |= 1 << u
            elif kind == 4:  # bridge/cycle counters
                _, v, db, dc = rec
                self.bridges_at[v] -= db
                self.cycles_at[v] -= dc
            elif kind == 5:  # edge absorbed into a cycle
                self.in_cycle[rec[1]] = False
            else:  # corridor snapshot
                _, act, edges, interior = rec
                self.corridor_active = act
                self.corridor_edges = edges
                self.corridor_interior = interior

    def _path_in_included(self, u: int, v: int) -> list[int] | None:
        """Vertex path from u to v through included edges (BFS, bitmask frontier)."""
        if u == v:
            return [u]
        parent = {u: -1}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                mask = self.in_adj[x]
                while mask:
                    low = mask & -mask
                    y = low.bit_length() - 1
                    mask ^= low
                    if y not in parent:
                        parent[y] = x
                        if y == v:
                            path = [v]
                            while path[-1] != u:
                                path.append(parent[path[-1]])
                            path.reverse()
                            return path
                        nxt.append(y)
            frontier = nxt
        return None

    def _avail_connected(self) -> bool:
        seen = 1
        frontier = 1
        adj = self.avail_adj
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    # -- decisions -----------------------------------------------------

    def try_include(self, e: int) -> bool:
        u, v = self.elist[e]
        if self.deg_in[u] + 1 > min(2 * self._cap(u), self.max_degree):
            return False
        if self.deg_in[v] + 1 > min(2 * self._cap(v), self.max_degree):
            return False
        ru, pu = self._find(u)
        rv, pv = self._find(v)
        trail = self.trail
        if ru == rv:
            if pu == pv:
                return False  # closing an odd cycle
            path = self._path_in_included(u, v)
            pe = []
            for a, b in zip(path, path[1:]):
                idx = self.eidx[(a, b) if a < b else (b, a)]
                if self.in_cycle[idx]:
                    return False  # two cycles would share an edge
                if self.corridor_active and idx in self.corridor_edges:
                    return False  # the witness path must stay on bridges
                pe.append(idx)
            trail.append((0, u, v, True))
            self.undec_deg[u] -= 1
            self.undec_deg[v] -= 1
            self.deg_in[u] += 1
            self.deg_in[v] += 1
            trail.append((2, u, v))
            self.in_adj[u] |= 1 << v
            self.in_adj[v] |= 1 << u
            for idx in pe + [e]:
                trail.append((5, idx))
                self.in_cycle[idx] = True
            for w in path[1:-1]:
                trail.append((4, w, -2, 1))
                self.bridges_at[w] -= 2
                self.cycles_at[w] += 1
            for w in (u, v):
                trail.append((4, w, -1, 1))
                self.bridges_at[w] -= 1
                self.cycles_at[w] += 1
            return self._cap_ok(u) and self._cap_ok(v)
        # bridge include
        trail.append((0, u, v, True))
        self.undec_deg[u] -= 1
        self.undec_deg[v] -= 1
        self.deg_in[u] += 1
        self.deg_in[v] += 1
        trail.append((2, u, v))
        self.in_adj[u] |= 1 << v
        self.in_adj[v] |= 1 << u
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        # attach rv under ru; parity of rv chosen so u and v get opposite colors
        self.parity[rv] = pu ^ pv ^ 1
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        trail.append((1, rv, ru))
        trail.append((4, u, 1, 0))
        self.bridges_at[u] += 1
        trail.append((4, v, 1, 0))
        self.bridges_at[v] += 1
        if not (self._cap_ok(u) and self._cap_ok(v)):
            return False
        if self.endpoints is not None and not self.corridor_active:
            a, b = self.endpoints
            ra, _ = self._find(a)
            rb, _ = self._find(b)
            if ra == rb:
                return self._activate_corridor()
        return True

    def _activate_corridor(self) -> bool:
        a, b = self.endpoints
        path = self._path_in_included(a, b)
        edges = []
        for x, y in zip(path, path[1:]):
            idx = self.eidx[(x, y) if x < y else (y, x)]
            if self.in_cycle[idx]:
                return False  # witness path would cross a cycle block
            edges.append(idx)
        self.trail.append((6, self.corridor_active, self.corridor_edges, self.corridor_interior))
        self.corridor_active = True
        self.corridor_edges = frozenset(edges)
        interior = 0
        for w in path[1:-1]:
            interior |= 1 << w
        self.corridor_interior = interior
        for w in range(self.n):
            if not self._cap_ok(w):
                return False
        return True

    def try_exclude(self, e: int) -> bool:
        u, v = self.elist[e]
        trail = self.trail
        trail.append((0, u, v, False))
        self.undec_deg[u] -= 1
        self.undec_deg[v] -= 1
        trail.append((3, u, v))
        self.avail_adj[u] &= ~(1 << v)
        self.avail_adj[v] &= ~(1 << u)
        for w in (u, v):
            if self.deg_in[w] + self.undec_deg[w] < 1:
                return False
        return self._avail_connected()

    def leaf_ok(self) -> bool:
        r0, _ = self._find(0)
        for v in range(self.n):
            if self.deg_in[v] < 1:
                return False
            if self._find(v)[0] != r0:
                return False
            b = self.bridges_at[v] + self.cycles_at[v]
            if b > self._cap(v):
                return False
        for lab in self.cons.required_block_degree_1:
            i = self.index[lab]
            if self.bridges_at[i] + self.cycles_at[i] != 1:
                return False
        if self.mode == "p_good" and not self.corridor_active:
            return False
        return True

    def included_edges(self) -> tuple[tuple[str, str], ...]:
        out = []
        for i in range(self.m):
            u, v = self.elist[i]
            if self.in_adj[u] >> v & 1:
                out.append(edge_key(self.labels[u], self.labels[v]))
        return tuple(sorted(out))

    # -- driver ----------------------------------------------------------

    def run(self, visitor=None):
        """DFS over include/exclude decisions; returns first verified witness.

        With a visitor, every verified leaf is visited and counted instead.
        """
        self.visit_count = 0
        if self.n == 0:
            raise GraphError("cannot search the empty graph")
        if not self._avail_connected():
            return None
        return self._dfs(0, visitor)

    def _dfs(self, depth: int, visitor):
        self.clock.tick()
        if depth == self.m:
            if not self.leaf_ok():
                return None
            edges = self.included_edges()
            if not verify_cactus_witness(self.g, edges, self.cons):
                return None
            if visitor is None:
                return edges
            self.visit_count += 1
            visitor(Graph(self.labels, edges))
            return None
        mark = len(self.trail)
        if self.try_include(depth):
            r = self._dfs(depth + 1, visitor)
            if r is not None:
                return r
        self._rollback(mark)
        if self.try_exclude(depth):
            r = self._dfs(depth + 1, visitor)
            if r is not None:
                return r
        self._rollback(mark)
        return None


def _outcome(status: str, witness, clock: _Clock) -> SearchOutcome:
    return SearchOutcome(
        status=status,
        witness=witness,
        nodes=clock.nodes,
        elapsed_s=clock.elapsed(),
        exhaustive=status == NONE,
    )


def spanning_even_cactus(g: Graph, constraints: CactusConstraints, budget: Budget | None = None) -> SearchOutcome:
    """Search for a spanning even cactus of g meeting the constraint set."""
    clock = _Clock(budget)
    if g.num_vertices() == 0:
        raise GraphError("cannot search the empty graph")
    if g.num_vertices() == 1:
        ok = verify_cactus_witness(g, (), constraints)
        return _outcome(FOUND if ok else NONE, () if ok else None, clock)
    engine = _CactusEngine(g, constraints, clock)
    try:
        witness = engine.run()
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    return _outcome(FOUND, witness, clock)


def enumerate_spanning_even_cacti(g: Graph, constraints: CactusConstraints, visitor, allow_large: bool = False) -> int:
    """Visit every spanning even cactus of g meeting the constraints; returns the count."""
    if g.num_edges() > 40 and not allow_large:
        raise GraphError("refusing to enumerate graphs with more than 40 edges (pass allow_large=True)")
    if g.num_vertices() == 0:
        raise GraphError("cannot enumerate over the empty graph")
    clock = _Clock(None)
    if g.num_vertices() == 1:
        if verify_cactus_witness(g, (), constraints):
            visitor(g.copy())
            return 1
        return 0
    engine = _CactusEngine(g, constraints, clock)
    engine.run(visitor=visitor)
    return engine.visit_count


class _SubgraphEngine:
    """Shared DPLL core for degree-constrained acyclic/unicyclic spanning searches."""

    def __init__(self, g: Graph, clock: _Clock):
        self.g = g
        self.clock = clock
        self.labels = g.vertices
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.edge_labels = _ordered_edges(g)
        self.m = len(self.edge_labels)
        _ensure_stack(self.m)
        self.elist = [(self.index[u], self.index[v]) for u, v in self.edge_labels]
        self.deg_in = [0] * self.n
        self.undec_deg = [g.degree(v) for v in self.labels]
        self.parent = list(range(self.n))
        self.size = [1] * self.n
        self.in_adj = [0] * self.n
        self.avail_adj = [0] * self.n
        for u, v in self.elist:
            self.avail_adj[u] |= 1 << v
            self.avail_adj[v] |= 1 << u
        self.full_mask = (1 << self.n) - 1
        self.included = 0
        self.trail: list[tuple] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, ru: int, rv: int) -> None:
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.trail.append((1, rv, ru))

    def rollback(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            rec = trail.pop()
            kind = rec[0]
            if kind == 0:
                _, u, v, was_include = rec
                self.undec_deg[u] += 1
                self.undec_deg[v] += 1
                if was_include:
                    self.deg_in[u] -= 1
                    self.deg_in[v] -= 1
                    self.included -= 1
            elif kind == 1:
                _, child, root = rec
                self.size[root] -= self.size[child]
                self.parent[child] = child
            elif kind == 2:
                _, u, v = rec
                self.in_adj[u] &= ~(1 << v)
                self.in_adj[v] &= ~(1 << u)
            elif kind == 3:
                _, u, v = rec
                self.avail_adj[u] |= 1 << v
                self.avail_adj[v] |= 1 << u
            else:
                self.extra_rollback(rec)

    def extra_rollback(self, rec) -> None:
        raise GraphError(f"unknown trail record {rec!r}")

    def mark_included(self, e: int) -> None:
        u, v = self.elist[e]
        self.trail.append((0, u, v, True))
        self.undec_deg[u] -= 1
        self.undec_deg[v] -= 1
        self.deg_in[u] += 1
        self.deg_in[v] += 1
        self.included += 1
        self.trail.append((2, u, v))
        self.in_adj[u] |= 1 << v
        self.in_adj[v] |= 1 << u

    def mark_excluded(self, e: int) -> None:
        u, v = self.elist[e]
        self.trail.append((0, u, v, False))
        self.undec_deg[u] -= 1
        self.undec_deg[v] -= 1
        self.trail.append((3, u, v))
        self.avail_adj[u] &= ~(1 << v)
        self.avail_adj[v] &= ~(1 << u)

    def avail_connected(self) -> bool:
        seen = 1
        frontier = 1
        adj = self.avail_adj
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def trace_path_from(self, start: int) -> list[int]:
        seq = [start]
        prev = -1
        while True:
            mask = self.in_adj[seq[-1]]
            if prev >= 0:
                mask &= ~(1 << prev)
            if mask == 0:
                return seq
            prev = seq[-1]
            seq.append((mask & -mask).bit_length() - 1)

    def dfs(self, depth: int):
        self.clock.tick()
        if depth == self.m:
            return self.leaf()
        mark = len(self.trail)
        if self.try_include(depth):
            r = self.dfs(depth + 1)
            if r is not None:
                return r
        self.rollback(mark)
        if self.try_exclude(depth):
            r = self.dfs(depth + 1)
            if r is not None:
                return r
        self.rollback(mark)
        return None

    def try_include(self, e: int) -> bool:
        raise NotImplementedError

    def try_exclude(self, e: int) -> bool:
        raise NotImplementedError

    def leaf(self):
        raise NotImplementedError


class _HamiltonCycleEngine(_SubgraphEngine):
    def try_include(self, e: int) -> bool:
        u, v = self.elist[e]
        if self.deg_in[u] >= 2 or self.deg_in[v] >= 2:
            return False
        ru = self.find(u)
        rv = self.find(v)
        if ru == rv:
            # a cycle may close only as the final spanning step
            if self.included + 1 != self.n:
                return False
            self.mark_included(e)
            return True
        self.mark_included(e)
        self.union(ru, rv)
        return True

    def try_exclude(self, e: int) -> bool:
        u, v = self.elist[e]
        self.mark_excluded(e)
        if self.deg_in[u] + self.undec_deg[u] < 2:
            return False
        if self.deg_in[v] + self.undec_deg[v] < 2:
            return False
        return self.avail_connected()

    def leaf(self):
        if self.included != self.n:
            return None
        if any(d != 2 for d in self.deg_in):
            return None
        r0 = self.find(0)
        if any(self.find(v) != r0 for v in range(self.n)):
            return None
        start = min(range(self.n), key=lambda i: self.labels[i])
        mask = self.in_adj[start]
        first = min(((mask & -mask).bit_length() - 1, (mask & (mask - 1)).bit_length() - 1),
                    key=lambda i: self.labels[i])
        seq = [start, first]
        while True:
            mask = self.in_adj[seq[-1]] & ~(1 << seq[-2])
            nxt = (mask & -mask).bit_length() - 1
            if nxt == start:
                break
            seq.append(nxt)
        seq.append(start)
        return tuple(self.labels[i] for i in seq)


class _HamiltonPathEngine(_SubgraphEngine):
    def __init__(self, g: Graph, clock: _Clock, endpoints):
        super().__init__(g, clock)
        self.ends = None
        if endpoints is not None:
            a, b = endpoints
            if a == b:
                raise GraphError("path endpoints must be distinct")
            for x in (a, b):
                if not g.has_vertex(x):
                    raise GraphError(f"endpoint {x!r} is not in the graph")
            self.ends = (self.index[a], self.index[b])

    def _dcap(self, v: int) -> int:
        if self.ends is not None and (v == self.ends[0] or v == self.ends[1]):
            return 1
        return 2

    def _dmin(self, v: int) -> int:
        if self.ends is None:
            return 1
        return 1 if (v == self.ends[0] or v == self.ends[1]) else 2

    def try_include(self, e: int) -> bool:
        u, v = self.elist[e]
        if self.deg_in[u] >= self._dcap(u) or self.deg_in[v] >= self._dcap(v):
            return False
        ru = self.find(u)
        rv = self.find(v)
        if ru == rv:
            return False  # paths contain no cycle
        self.mark_included(e)
        self.union(ru, rv)
        return True

    def try_exclude(self, e: int) -> bool:
        u, v = self.elist[e]
        self.mark_excluded(e)
        for w in (u, v):
            if self.deg_in[w] + self.undec_deg[w] < self._dmin(w):
                return False
        if self.ends is None:
            loose = sum(1 for w in range(self.n)
                        if self.undec_deg[w] == 0 and self.deg_in[w] < 2)
            ones = sum(1 for w in range(self.n)
                       if self.undec_deg[w] == 0 and self.deg_in[w] == 1)
            if ones > 2:
                return False
            if loose > ones:
                return False  # some settled vertex is isolated
        return self.avail_connected()

    def leaf(self):
        if self.included != self.n - 1:
            return None
        ones = [v for v in range(self.n) if self.deg_in[v] == 1]
        if len(ones) != 2 or any(self.deg_in[v] not in (1, 2) for v in range(self.n)):
            return None
        if self.ends is not None and set(ones) != set(self.ends):
            return None
        r0 = self.find(0)
        if any(self.find(v) != r0 for v in range(self.n)):
            return None
        start = min(ones, key=lambda i: self.labels[i])
        seq = self.trace_path_from(start)
        if len(seq) != self.n:
            return None
        return tuple(self.labels[i] for i in seq)


class _KTreeEngine(_SubgraphEngine):
    def __init__(self, g: Graph, clock: _Clock, k: int):
        super().__init__(g, clock)
        self.k = k

    def try_include(self, e: int) -> bool:
        u, v = self.elist[e]
        if self.deg_in[u] >= self.k or self.deg_in[v] >= self.k:
            return False
        ru = self.find(u)
        rv = self.find(v)
        if ru == rv:
            return False
        self.mark_included(e)
        self.union(ru, rv)
        return True

    def try_exclude(self, e: int) -> bool:
        u, v = self.elist[e]
        self.mark_excluded(e)
        if self.included + (self.m - e - 1) < self.n - 1:
            return False
        for w in (u, v):
            if self.deg_in[w] + self.undec_deg[w] < 1:
                return False
        return self.avail_connected()

    def leaf(self):
        if self.included != self.n - 1:
            return None
        r0 = self.find(0)
        if any(self.find(v) != r0 for v in range(self.n)):
            return None
        out = []
        for i in range(self.m):
            u, v = self.elist[i]
            if self.in_adj[u] >> v & 1:
                out.append(edge_key(self.labels[u], self.labels[v]))
        return tuple(sorted(out))


class _LinearForestEngine(_SubgraphEngine):
    def __init__(self, g: Graph, clock: _Clock, pairs):
        super().__init__(g, clock)
        flat = [x for pair in pairs for x in pair]
        if len(set(flat)) != len(flat):
            raise GraphError("path system endpoints must be pairwise distinct")
        for pair in pairs:
            if len(pair) != 2:
                raise GraphError(f"endpoint pair must have two vertices: {pair!r}")
            for x in pair:
                if not g.has_vertex(x):
                    raise GraphError(f"endpoint {x!r} is not in the graph")
        self.pairs = [tuple(p) for p in pairs]
        self.p = len(self.pairs)
        self.pair_of = {}
        for pid, (a, b) in enumerate(self.pairs):
            self.pair_of[self.index[a]] = pid
            self.pair_of[self.index[b]] = pid
        # per-root tuple of terminal pair ids inside the component
        self.terms = [((self.pair_of[v],) if v in self.pair_of else ()) for v in range(self.n)]

    def extra_rollback(self, rec) -> None:
        if rec[0] == 4:
            _, root, old = rec
            self.terms[root] = old
        else:
            raise GraphError(f"unknown trail record {rec!r}")

    def _dcap(self, v: int) -> int:
        return 1 if v in self.pair_of else 2

    def try_include(self, e: int) -> bool:
        u, v = self.elist[e]
        if self.deg_in[u] >= self._dcap(u) or self.deg_in[v] >= self._dcap(v):
            return False
        ru = self.find(u)
        rv = self.find(v)
        if ru == rv:
            return False
        merged = self.terms[ru] + self.terms[rv]
        if len(merged) > 2:
            return False
        if len(merged) == 2 and merged[0] != merged[1]:
            return False
        self.mark_included(e)
        self.union(ru, rv)
        top = self.find(u)
        self.trail.append((4, top, self.terms[top]))
        self.terms[top] = merged
        return True

    def try_exclude(self, e: int) -> bool:
        u, v = self.elist[e]
        self.mark_excluded(e)
        for w in (u, v):
            need = 1 if w in self.pair_of else 2
            if self.deg_in[w] + self.undec_deg[w] < need:
                return False
        return True

    def leaf(self):
        if self.included != self.n - self.p:
            return None
        roots = set()
        for v in range(self.n):
            want = 1 if v in self.pair_of else 2
            if self.deg_in[v] != want:
                return None
            roots.add(self.find(v))
        if len(roots) != self.p:
            return None
        paths = []
        for a, b in self.pairs:
            seq = self.trace_path_from(self.index[a])
            if self.labels[seq[-1]] != b:
                return None
            paths.append(tuple(self.labels[i] for i in seq))
        return tuple(paths)


def hamilton_cycle(g: Graph, budget: Budget | None = None) -> SearchOutcome:
    """Search for a Hamilton cycle; witness is a closed vertex sequence."""
    clock = _Clock(budget)
    if g.num_vertices() < 3:
        return _outcome(NONE, None, clock)
    engine = _HamiltonCycleEngine(g, clock)
    try:
        if not engine.avail_connected():
            witness = None
        else:
            witness = engine.dfs(0)
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    if not verify_hamilton_cycle(g, witness):
        raise GraphError("internal error: Hamilton cycle witness failed verification")
    return _outcome(FOUND, witness, clock)


def hamilton_path(g: Graph, endpoints=None, budget: Budget | None = None) -> SearchOutcome:
    """Search for a spanning path, optionally with pinned endpoints."""
    clock = _Clock(budget)
    if g.num_vertices() == 0:
        raise GraphError("cannot search the empty graph")
    if g.num_vertices() == 1:
        if endpoints is not None:
            return _outcome(NONE, None, clock)
        return _outcome(FOUND, (g.vertices[0],), clock)
    engine = _HamiltonPathEngine(g, clock, endpoints)
    try:
        if not engine.avail_connected():
            witness = None
        else:
            witness = engine.dfs(0)
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    if not verify_hamilton_path(g, witness, endpoints):
        raise GraphError("internal error: Hamilton path witness failed verification")
    return _outcome(FOUND, witness, clock)


def _capped_tree_attempt(g: Graph, k: int, root: str, flip: bool):
    """One DFS tree from root, repaired by degree-reducing edge swaps.

    Each swap removes a tree edge at an over-cap vertex and reconnects across
    the split with a non-tree edge whose ends stay under the cap, so the total
    degree excess strictly drops. Returns None on a stall.
    """
    verts = sorted(g.vertices)
    seen = {root}
    deg = {v: 0 for v in verts}
    tree: set[tuple[str, str]] = set()
    stack = [root]
    while stack:
        v = stack[-1]
        ns = sorted(g.neighbors(v), reverse=flip)
        nxt = next((w for w in ns if w not in seen), None)
        if nxt is None:
            stack.pop()
            continue
        seen.add(nxt)
        tree.add(edge_key(v, nxt))
        deg[v] += 1
        deg[nxt] += 1
        stack.append(nxt)
    if len(seen) != len(verts):
        return None

    adj: dict[str, set[str]] = {v: set() for v in verts}
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        bad = [v for v in verts if deg[v] > k]
        if not bad:
            return tuple(sorted(tree))
        swapped = False
        for v in bad:
            for u in sorted(adj[v]):
                # vertices on u's side once the edge v-u is cut
                side = {u}
                queue = [u]
                while queue:
                    x = queue.pop()
                    for y in adj[x]:
                        if y not in side and not (x == u and y == v):
                            side.add(y)
                            queue.append(y)
                side.discard(v)
                repl = None
                for a, b in g.edges:
                    if edge_key(a, b) in tree or v in (a, b):
                        continue
                    if (a in side) != (b in side) and deg[a] < k and deg[b] < k:
                        repl = edge_key(a, b)
                        break
                if repl is None:
                    continue
                tree.remove(edge_key(v, u))
                adj[v].discard(u)
                adj[u].discard(v)
                deg[v] -= 1
                deg[u] -= 1
                a, b = repl
                tree.add(repl)
                adj[a].add(b)
                adj[b].add(a)
                deg[a] += 1
                deg[b] += 1
                swapped = True
                break
            if swapped:
                break
        if not swapped:
            return None


def _degree_capped_tree(g: Graph, k: int):
    """Constructive front end for k_tree: repaired DFS trees over a root sweep."""
    verts = sorted(g.vertices)
    roots = sorted(verts, key=lambda v: (-g.degree(v), v))[:2] + verts[:8]
    tried = set()
    for flip in (False, True):
        for root in roots:
            if (root, flip) in tried:
                continue
            tried.add((root, flip))
            tree = _capped_tree_attempt(g, k, root, flip)
            if tree is not None:
                return tree
    return None


def k_tree(g: Graph, k: int, budget: Budget | None = None) -> SearchOutcome:
    """Search for a spanning tree with maximum degree at most k (k >= 2)."""
    if not isinstance(k, int) or k < 2:
        raise GraphError("k_tree requires k >= 2")
    clock = _Clock(budget)
    if g.num_vertices() == 0:
        raise GraphError("cannot search the empty graph")
    if g.num_vertices() == 1:
        return _outcome(FOUND, (), clock)
    repaired = _degree_capped_tree(g, k)
    if repaired is not None:
        if not verify_k_tree(g, repaired, k):
            raise GraphError("internal error: spanning tree witness failed verification")
        return _outcome(FOUND, repaired, clock)
    engine = _KTreeEngine(g, clock, k)
    try:
        if not engine.avail_connected():
            witness = None
        else:
            witness = engine.dfs(0)
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    if not verify_k_tree(g, witness, k):
        raise GraphError("internal error: spanning tree witness failed verification")
    return _outcome(FOUND, witness, clock)


def linear_forest(g: Graph, pairs, budget: Budget | None = None) -> SearchOutcome:
    """Search for vertex-disjoint paths with the given endpoints covering g."""
    pairs = [tuple(p) for p in pairs]
    if not pairs:
        raise GraphError("linear_forest requires at least one endpoint pair")
    clock = _Clock(budget)
    engine = _LinearForestEngine(g, clock, pairs)
    try:
        witness = engine.dfs(0)
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    if not verify_linear_forest(g, witness, pairs):
        raise GraphError("internal error: path system witness failed verification")
    return _outcome(FOUND, witness, clock)


class _KWalkEngine:
    """Ternary DPLL over edge multiplicities 0/1/2 for closed spanning walks."""

    def __init__(self, g: Graph, clock: _Clock, k: int):
        self.g = g
        self.clock = clock
        self.k = k
        self.labels = g.vertices
        self.index = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.edge_labels = _ordered_edges(g)
        self.m = len(self.edge_labels)
        _ensure_stack(self.m)
        self.elist = [(self.index[u], self.index[v]) for u, v in self.edge_labels]
        self.mult_deg = [0] * self.n
        self.undec_deg = [g.degree(v) for v in self.labels]
        self.parent = list(range(self.n))
        self.size = [1] * self.n
        self.avail_adj = [0] * self.n
        for u, v in self.elist:
            self.avail_adj[u] |= 1 << v
            self.avail_adj[v] |= 1 << u
        self.full_mask = (1 << self.n) - 1
        self.mult = [0] * self.m
        self.trail: list[tuple] = []

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def rollback(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            rec = trail.pop()
            kind = rec[0]
            if kind == 0:
                _, e, u, v, mult = rec
                self.undec_deg[u] += 1
                self.undec_deg[v] += 1
                self.mult_deg[u] -= mult
                self.mult_deg[v] -= mult
                self.mult[e] = 0
            elif kind == 1:
                _, child, root = rec
                self.size[root] -= self.size[child]
                self.parent[child] = child
            else:
                _, u, v = rec
                self.avail_adj[u] |= 1 << v
                self.avail_adj[v] |= 1 << u

    def try_set(self, e: int, mult: int) -> bool:
        u, v = self.elist[e]
        cap = 2 * self.k
        if self.mult_deg[u] + mult > cap or self.mult_deg[v] + mult > cap:
            return False
        self.trail.append((0, e, u, v, mult))
        self.undec_deg[u] -= 1
        self.undec_deg[v] -= 1
        self.mult_deg[u] += mult
        self.mult_deg[v] += mult
        self.mult[e] = mult
        if mult == 0:
            self.trail.append((2, u, v))
            self.avail_adj[u] &= ~(1 << v)
            self.avail_adj[v] &= ~(1 << u)
        else:
            ru = self.find(u)
            rv = self.find(v)
            if ru != rv:
                if self.size[ru] < self.size[rv]:
                    ru, rv = rv, ru
                self.parent[rv] = ru
                self.size[ru] += self.size[rv]
                self.trail.append((1, rv, ru))
        for w in (u, v):
            if self.undec_deg[w] == 0:
                d = self.mult_deg[w]
                if d < 2 or d % 2 != 0:
                    return False
            elif self.mult_deg[w] + 2 * self.undec_deg[w] < 2:
                return False
        if mult == 0:
            return self._avail_connected()
        return True

    def _avail_connected(self) -> bool:
        seen = 1
        frontier = 1
        adj = self.avail_adj
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def dfs(self, depth: int):
        self.clock.tick()
        if depth == self.m:
            return self.leaf()
        mark = len(self.trail)
        for mult in (1, 2, 0):
            if self.try_set(depth, mult):
                r = self.dfs(depth + 1)
                if r is not None:
                    return r
            self.rollback(mark)
        return None

    def leaf(self):
        r0 = self.find(0)
        for v in range(self.n):
            d = self.mult_deg[v]
            if d < 2 or d % 2 != 0 or d > 2 * self.k:
                return None
            if self.find(v) != r0:
                return None
        # Hierholzer tour over the chosen multigraph
        rem: dict[int, list[int]] = {v: [] for v in range(self.n)}
        for e in range(self.m):
            for _ in range(self.mult[e]):
                u, v = self.elist[e]
                rem[u].append(v)
                rem[v].append(u)
        for v in rem:
            rem[v].sort(key=lambda i: self.labels[i], reverse=True)
        start = min(range(self.n), key=lambda i: self.labels[i])
        stack = [start]
        tour = []
        counts = {v: len(rem[v]) for v in rem}
        while stack:
            v = stack[-1]
            if counts[v]:
                w = rem[v].pop()
                counts[v] -= 1
                rem[w].remove(v)
                counts[w] -= 1
                stack.append(w)
            else:
                tour.append(stack.pop())
        tour.reverse()
        return tuple(self.labels[i] for i in tour)


def k_walk(g: Graph, k: int, budget: Budget | None = None) -> SearchOutcome:
    """Search for a closed spanning walk visiting each vertex at most k times."""
    if not isinstance(k, int) or k < 1:
        raise GraphError("k_walk requires k >= 1")
    clock = _Clock(budget)
    if g.num_vertices() == 0:
        raise GraphError("cannot search the empty graph")
    if g.num_vertices() == 1:
        return _outcome(FOUND, (g.vertices[0],), clock)
    engine = _KWalkEngine(g, clock, k)
    try:
        if not engine._avail_connected():
            witness = None
        else:
            witness = engine.dfs(0)
    except _BudgetExceeded:
        return _outcome(TIMEOUT, None, clock)
    if witness is None:
        return _outcome(NONE, None, clock)
    if not verify_k_walk(g, witness, k):
        raise GraphError("internal error: walk witness failed verification")
    return _outcome(FOUND, witness, clock)


# -- independent witness predicates ------------------------------------------


def verify_hamilton_cycle(g: Graph, seq) -> bool:
    """seq is a closed vertex sequence: the first vertex repeated at the end."""
    seq = tuple(seq)
    if len(seq) != g.num_vertices() + 1 or len(seq) < 4:
        return False
    if seq[0] != seq[-1]:
        return False
    body = seq[:-1]
    if len(set(body)) != len(body) or set(body) != set(g.vertices):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def verify_hamilton_path(g: Graph, seq, endpoints=None) -> bool:
    seq = tuple(seq)
    if len(seq) != g.num_vertices() or len(set(seq)) != len(seq):
        return False
    if set(seq) != set(g.vertices):
        return False
    if len(seq) > 1 and not all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    if endpoints is not None and {seq[0], seq[-1]} != set(endpoints):
        return False
    return True


def verify_k_tree(g: Graph, edges, k: int) -> bool:
    sub = Graph(g.vertices, edges)
    if sub.num_edges() != g.num_vertices() - 1 or not is_connected(sub):
        return False
    if any(not g.has_edge(u, v) for u, v in edges):
        return False
    return all(sub.degree(v) <= k for v in sub.vertices)


def verify_k_walk(g: Graph, seq, k: int) -> bool:
    seq = tuple(seq)
    if len(seq) == 1:
        return g.num_vertices() == 1 and g.has_vertex(seq[0])
    if len(seq) < 2 or seq[0] != seq[-1]:
        return False
    if set(seq) != set(g.vertices):
        return False
    if not all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    counts: dict[str, int] = {}
    for v in seq[:-1]:
        counts[v] = counts.get(v, 0) + 1
    return all(c <= k for c in counts.values())


def verify_linear_forest(g: Graph, paths, pairs) -> bool:
    paths = tuple(tuple(p) for p in paths)
    if len(paths) != len(pairs):
        return False
    seen: set[str] = set()
    for path, (a, b) in zip(paths, pairs):
        if not path or {path[0], path[-1]} != {a, b}:
            return False
        if len(set(path)) != len(path) or (set(path) & seen):
            return False
        if not all(g.has_edge(x, y) for x, y in zip(path, path[1:])):
            return False
        seen.update(path)
    return seen == set(g.vertices)
