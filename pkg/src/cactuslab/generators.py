"""Seeded random cactus generators for property suites."""

from __future__ import annotations

import random

from .graphs import Graph, GraphError


def _attach_points(degree, block_count, max_degree, added_degree):
    """Vertices that can accept one more block without breaking goodness."""
    out = []
    for v, b in block_count.items():
        if b >= 2:
            continue
        if max_degree is not None and degree[v] + added_degree > max_degree:
            continue
        out.append(v)
    return sorted(out)


def random_good_cactus(
    seed: int,
    num_vertices: int = 15,
    max_degree: int | None = None,
    even: bool = False,
) -> Graph:
    """Random good cactus grown block by block, deterministic for a seed.

    Blocks are attached only at vertices of block degree at most one, so the
    result is always good. With even=True every cycle block has even length.
    """
    if num_vertices < 1:
        raise GraphError("need at least one vertex")
    if max_degree is not None and max_degree < 2:
        raise GraphError("max_degree below 2 cannot host cycle blocks")
    rng = random.Random(seed)
    fresh = iter(range(1, 10 ** 6))
    edges: list[tuple[str, str]] = []
    degree = {"c0": 0}
    block_count = {"c0": 0}

    while len(degree) < num_vertices:
        remaining = num_vertices - len(degree)
        lengths = [0]
        if remaining >= 2:
            top = min(remaining + 1, 7)
            pool = range(3, top + 1)
            lengths += [m for m in pool if not even or m % 2 == 0]
        length = rng.choice(lengths)
        added = 1 if length == 0 else 2
        points = _attach_points(degree, block_count, max_degree, added)
        if not points:
            break
        v = rng.choice(points)
        if length == 0:
            w = f"c{next(fresh)}"
            degree[w] = 1
            block_count[w] = 1
            degree[v] += 1
            block_count[v] += 1
            edges.append((v, w))
        else:
            ring = [v] + [f"c{next(fresh)}" for _ in range(length - 1)]
            for w in ring[1:]:
                degree[w] = 2
                block_count[w] = 1
            degree[v] += 2
            block_count[v] += 1
            edges.extend((ring[i], ring[(i + 1) % length]) for i in range(length))
    return Graph(sorted(degree), edges)


def random_good_even_cactus(
    seed: int,
    num_vertices: int = 15,
    max_degree: int | None = None,
) -> Graph:
    """Random good cactus whose cycle blocks are all even."""
    return random_good_cactus(seed, num_vertices, max_degree, even=True)
