"""Cactus recognition, goodness classes, deletion analysis, and bag counting."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactuslab.cactus import (
    Interval,
    analyze_cactus,
    bags,
    block_degrees,
    classify_deletion,
    is_cactus,
    is_even,
    is_p1p2_good,
    is_p_good,
    validate_edge_path,
)
from cactuslab.families import build_chain, certificate_cactus
from cactuslab.generators import random_good_cactus
from cactuslab.graphs import Graph, GraphError, delete

from conftest import cycle_graph, path_graph, star_graph


def figure_eight() -> Graph:
    # two 4-cycles sharing the vertex "a"
    return Graph(
        ["a", "b", "c", "d", "e", "f", "g"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
         ("a", "e"), ("e", "f"), ("f", "g"), ("g", "a")],
    )


def hinged_cactus() -> Graph:
    # bridge path u-v-w with a 4-cycle hanging at v
    return Graph(
        ["u", "v", "w", "a", "b", "c"],
        [("u", "v"), ("v", "w"), ("v", "a"), ("a", "b"), ("b", "c"), ("c", "v")],
    )


def test_is_cactus_basics():
    assert is_cactus(cycle_graph(5))
    assert is_cactus(path_graph(4))
    assert is_cactus(figure_eight())
    # theta graph: two vertices joined by three paths has a non-cycle block
    theta = Graph(
        ["x", "y", "p", "q"],
        [("x", "p"), ("p", "y"), ("x", "q"), ("q", "y"), ("x", "y")],
    )
    assert not is_cactus(theta)
    assert not is_cactus(Graph(["x", "y"], []))


def test_is_even():
    assert is_even(cycle_graph(4))
    assert not is_even(cycle_graph(5))
    assert is_even(path_graph(6))
    assert is_even(figure_eight())


def test_block_degrees_figure_eight():
    deg = block_degrees(figure_eight())
    assert deg["a"] == 2
    assert all(deg[v] == 1 for v in "bcdefg")


def test_validate_edge_path_rejections():
    g = hinged_cactus()
    assert validate_edge_path(g, ("u", "v", "w")) == ("u", "v", "w")
    with pytest.raises(GraphError):
        validate_edge_path(g, ("u", "v", "u"))
    with pytest.raises(GraphError):
        validate_edge_path(g, ("u", "w"))
    with pytest.raises(GraphError):
        validate_edge_path(g, ("v", "a"))  # lies on the cycle
    with pytest.raises(GraphError):
        validate_edge_path(g, ())


def test_is_p_good_hinge():
    g = hinged_cactus()
    assert is_p_good(g, ("u", "v", "w"))
    # v has block degree 3, so it must sit in the path interior
    assert not is_p_good(g, ("u", "v"))


def test_is_p1p2_good_double_star():
    g = star_graph(4)
    leaves = sorted(v for v in g.vertices if g.degree(v) == 1)
    hub = next(v for v in g.vertices if g.degree(v) == 4)
    p1 = (leaves[0], hub, leaves[1])
    p2 = (leaves[2], hub, leaves[3])
    assert is_p1p2_good(g, p1, p2)
    # the degree-4 hub interior to only one path exceeds its cap
    assert not is_p1p2_good(g, p1, (leaves[2], hub))
    with pytest.raises(GraphError):
        is_p1p2_good(g, p1, (leaves[1], hub, leaves[2]))  # shares two vertices


def test_analyze_good():
    rep = analyze_cactus(figure_eight())
    assert rep.is_cactus and rep.is_even and rep.is_good
    assert rep.classification == "good"
    assert rep.witness_paths == ()
    assert rep.max_block_degree() == 2


def test_analyze_one_good():
    rep = analyze_cactus(hinged_cactus())
    assert rep.is_cactus and not rep.is_good
    assert rep.classification == "one_good"
    (path,) = rep.witness_paths
    assert is_p_good(hinged_cactus(), path)
    assert "v" in path[1:-1]


def test_analyze_two_good_star():
    rep = analyze_cactus(star_graph(4))
    assert rep.classification == "two_good"
    p1, p2 = rep.witness_paths
    assert is_p1p2_good(star_graph(4), p1, p2)


def test_analyze_two_good_two_hinges():
    # 4-cycle with two pendant bridges at each of two opposite corners;
    # no single bridge path can absorb both block-degree-3 corners
    g = Graph(
        ["c1", "c2", "c3", "c4", "p1", "p2", "p3", "p4"],
        [("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c1"),
         ("c1", "p1"), ("c1", "p2"), ("c3", "p3"), ("c3", "p4")],
    )
    rep = analyze_cactus(g)
    assert rep.classification == "two_good"
    p1, p2 = rep.witness_paths
    assert is_p1p2_good(g, p1, p2)


def test_analyze_none():
    assert analyze_cactus(star_graph(5)).classification == "none"
    # block degree 4 with only three incident bridges cannot be repaired
    g = Graph(
        ["c1", "c2", "c3", "p1", "p2", "p3"],
        [("c1", "c2"), ("c2", "c3"), ("c3", "c1"),
         ("c1", "p1"), ("c1", "p2"), ("c1", "p3")],
    )
    assert analyze_cactus(g).classification == "none"


def test_analyze_rejects_disconnected():
    with pytest.raises(GraphError):
        analyze_cactus(Graph(["a", "b"], []))
    with pytest.raises(GraphError):
        analyze_cactus(Graph([], []))


def test_classify_deletion_case_i_cycle():
    g = cycle_graph(8)
    rep = classify_deletion(g, "v0", "v4")
    assert rep.case == "I"
    assert rep.satisfies
    assert len(rep.components) == 2
    assert all(c.classification == "good" for c in rep.components)
    assert rep.q1 == 0 and rep.q2 == 0
    assert rep.bag_counts is None and rep.intervals is None


def test_classify_deletion_case_ii():
    # two 4-cycles through s and t respectively, pinned at v; deleting the
    # hubs turns v into a 4-star
    g = Graph(
        ["v", "a", "b", "c", "d", "s", "t"],
        [("v", "a"), ("a", "s"), ("s", "b"), ("b", "v"),
         ("v", "c"), ("c", "t"), ("t", "d"), ("d", "v")],
    )
    rep = classify_deletion(g, "s", "t")
    assert rep.case == "II"
    assert len(rep.components) == 1
    assert rep.components[0].classification == "two_good"
    assert rep.q2 == 1
    # the same graph has a degree-4 vertex, so the bounded-degree mode rejects it
    with pytest.raises(GraphError):
        classify_deletion(g, "s", "t", max_degree_3=True)


def test_classify_deletion_rejections():
    g = cycle_graph(6)
    with pytest.raises(GraphError):
        classify_deletion(g, "v0", "v0")
    with pytest.raises(GraphError):
        classify_deletion(g, "v0", "zz")
    bad = star_graph(5)
    hub = next(v for v in bad.vertices if bad.degree(v) == 5)
    leaves = sorted(v for v in bad.vertices if v != hub)
    with pytest.raises(GraphError):
        classify_deletion(bad, leaves[0], leaves[1])


def test_bags_full_chain_has_none():
    g, chart = build_chain("C", 1, num_a=2)
    ival, bag_ids = bags(g, chart)
    assert ival == Interval(0, 2)
    assert bag_ids == []


def test_bags_punctured_copy():
    g, chart = build_chain("C", 1, num_a=2)
    interior = sorted(
        v for v in chart.fragment_spans["B1"]
        if v not in chart.fragment_endpoints["B1"]
    )
    q = delete(g, [interior[0]])
    ival, bag_ids = bags(q, chart)
    assert ival == Interval(0, 2)
    assert bag_ids == ["B1"]


def test_bags_single_fragment_interval():
    g, chart = build_chain("C", 1, num_a=2)
    span = chart.fragment_spans["B1"]
    q = Graph(sorted(span), [e for e in g.edges if e[0] in span and e[1] in span])
    ival, bag_ids = bags(q, chart)
    assert ival == Interval(1, 1)
    assert bag_ids == []


def test_bags_rejects_foreign_vertices():
    _, chart = build_chain("C", 1, num_a=2)
    with pytest.raises(GraphError):
        bags(Graph(["s"], []), chart)
    with pytest.raises(GraphError):
        bags(Graph([], []), chart)


def test_classify_deletion_with_chart():
    g, chart, cactus, _meta = certificate_cactus(1)
    rep = classify_deletion(cactus, "s", "t", chart=chart)
    assert rep.case == "I"
    assert rep.bag_counts is not None and rep.intervals is not None
    assert len(rep.bag_counts) == len(rep.components)
    for count, ival in zip(rep.bag_counts, rep.intervals):
        assert count >= 0
        assert 0 <= ival.a <= ival.b <= chart.num_a


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=3, max_value=22))
def test_random_good_cactus_analysis(seed, size):
    g = random_good_cactus(seed, num_vertices=size)
    rep = analyze_cactus(g)
    assert rep.is_cactus
    assert rep.is_good
    assert rep.max_block_degree() <= 2


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=3, max_value=22))
def test_random_good_even_cactus_analysis(seed, size):
    g = random_good_cactus(seed, num_vertices=size, even=True)
    rep = analyze_cactus(g)
    assert rep.is_cactus and rep.is_even and rep.is_good


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=3, max_value=30))
def test_cycle_goodness(n):
    rep = analyze_cactus(cycle_graph(n))
    assert rep.is_cactus and rep.is_good
    assert rep.is_even == (n % 2 == 0)
    assert set(rep.block_degrees.values()) == {1}
