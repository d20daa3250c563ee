"""Serialization helpers: graph JSON, DOT export, chart metadata."""
from __future__ import annotations

from .families import FragmentChart
from .graphs import Graph, GraphError, edge_key


def graph_to_json(g: Graph) -> dict:
    """Plain dict with sorted vertices and lexicographic edge pairs."""
    return {
        "vertices": sorted(g.vertices),
        "edges": [list(edge_key(u, v)) for u, v in sorted(edge_key(u, v) for u, v in g.edges)],
    }


def graph_from_json(data: dict) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphError("graph JSON needs 'vertices' and 'edges'")
    g = Graph(data["vertices"])
    for e in data["edges"]:
        if len(e) != 2:
            raise GraphError(f"bad edge entry {e!r}")
        g.add_edge(e[0], e[1])
    return g


def graph_to_dot(g: Graph, name: str = "g", highlight=frozenset(),
                 vertex_colors: dict | None = None) -> str:
    """Undirected DOT text; highlighted edges bold, colored vertices filled."""
    marked = {edge_key(u, v) for u, v in highlight}
    colors = vertex_colors or {}
    lines = [f'graph "{name}" {{']
    for v in sorted(g.vertices):
        if v in colors:
            lines.append(f'  "{v}" [style=filled, fillcolor={colors[v]}];')
        else:
            lines.append(f'  "{v}";')
    for u, v in sorted(edge_key(a, b) for a, b in g.edges):
        attr = " [style=bold]" if (u, v) in marked else ""
        lines.append(f'  "{u}" -- "{v}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def chart_to_json(chart: FragmentChart) -> dict:
    return {
        "kind": chart.kind,
        "n": chart.n,
        "num_a": chart.num_a,
        "fragment_order": list(chart.fragment_order),
        "fragment_endpoints": {k: list(v) for k, v in chart.fragment_endpoints.items()},
        "junctions": list(chart.junctions),
        "hub_vertices": list(chart.hub_vertices),
        "upper_path": list(chart.upper_path),
        "lower_path": list(chart.lower_path),
    }
