"""Exact searches: Hamilton cycles and paths, k-trees, k-walks, cactus searches."""

import pytest

from cactuslab.cactus import analyze_cactus, is_even
from cactuslab.families import build_G, fragment_C, fragment_D, gadget_I
from cactuslab.graphs import Graph, GraphError
from cactuslab.prism import prism
from cactuslab.search import (
    Budget,
    CactusConstraints,
    SearchOutcome,
    enumerate_spanning_even_cacti,
    hamilton_cycle,
    hamilton_path,
    k_tree,
    k_walk,
    linear_forest,
    spanning_even_cactus,
    verify_cactus_witness,
    verify_hamilton_cycle,
    verify_hamilton_path,
    verify_k_tree,
    verify_k_walk,
)

from conftest import (
    cycle_graph,
    oracle_hamilton_cycle,
    oracle_hamilton_path,
    path_graph,
    petersen_graph,
    star_graph,
)


def test_hamilton_cycle_on_cycles():
    out = hamilton_cycle(cycle_graph(5))
    assert out.found
    assert out.witness[0] == out.witness[-1]
    assert len(out.witness) == 6
    assert verify_hamilton_cycle(cycle_graph(5), out.witness)


def test_hamilton_cycle_of_cycle_prism():
    g = prism(cycle_graph(5))
    out = hamilton_cycle(g)
    assert out.found
    assert verify_hamilton_cycle(g, out.witness)


def test_hamilton_cycle_none_on_trees_and_tiny():
    assert hamilton_cycle(path_graph(4)).status == "NONE"
    assert hamilton_cycle(Graph(["a"], [])).status == "NONE"
    assert hamilton_cycle(Graph(["a", "b"], [("a", "b")])).status == "NONE"


def test_petersen_has_no_hamilton_cycle():
    out = hamilton_cycle(petersen_graph())
    assert out.status == "NONE"
    assert out.exhaustive
    assert not oracle_hamilton_cycle(petersen_graph())
    # but it does have a Hamilton path
    assert hamilton_path(petersen_graph()).found


def test_hamilton_path_pinned_endpoints():
    g = path_graph(5)
    out = hamilton_path(g, endpoints=("p0", "p4"))
    assert out.found
    assert verify_hamilton_path(g, out.witness, ("p0", "p4"))
    assert hamilton_path(g, endpoints=("p0", "p3")).status == "NONE"
    # in a cycle the endpoints must be adjacent
    assert hamilton_path(cycle_graph(5), endpoints=("v0", "v2")).status == "NONE"
    assert hamilton_path(cycle_graph(5), endpoints=("v0", "v1")).found


def test_hamilton_path_trivial_cases():
    single = Graph(["z"], [])
    out = hamilton_path(single)
    assert out.found and out.witness == ("z",)
    with pytest.raises(GraphError):
        hamilton_path(Graph([], []))


def test_narrow_fragments_have_no_boundary_hamilton_path():
    for frag in (fragment_C(1), fragment_D(1)):
        out = hamilton_path(frag, endpoints=("l", "r"))
        assert out.status == "NONE"
        assert out.exhaustive
        assert not oracle_hamilton_path(frag, ("l", "r"))


def test_narrow_fragments_admit_two_walks():
    for frag in (fragment_C(1), fragment_D(1)):
        out = k_walk(frag, 2)
        assert out.found
        assert verify_k_walk(frag, out.witness, 2)


def test_k_walk_on_stars():
    assert k_walk(star_graph(3), 1).status == "NONE"
    # any closed spanning walk of a 3-star visits the hub three times
    assert k_walk(star_graph(3), 2).status == "NONE"
    out = k_walk(star_graph(3), 3)
    assert out.found
    assert verify_k_walk(star_graph(3), out.witness, 3)
    assert k_walk(star_graph(2), 2).found


def test_k_walk_rejects_bad_k():
    with pytest.raises(GraphError):
        k_walk(cycle_graph(4), 0)


def test_k_tree_basics():
    out = k_tree(path_graph(6), 2)
    assert out.found
    assert verify_k_tree(path_graph(6), out.witness, 2)
    assert k_tree(star_graph(4), 3).status == "NONE"
    assert k_tree(star_graph(4), 4).found
    with pytest.raises(GraphError):
        k_tree(cycle_graph(4), 1)


def test_k_tree_on_apex_family():
    g, _chart = build_G("C", 1)
    out = k_tree(g, 3)
    assert out.found
    assert verify_k_tree(g, out.witness, 3)


def test_spanning_even_cactus_found():
    g = cycle_graph(4)
    out = spanning_even_cactus(g, CactusConstraints(goodness="good"))
    assert out.found
    assert verify_cactus_witness(g, out.witness, CactusConstraints(goodness="good"))


def test_spanning_even_cactus_respects_block_degree_pins():
    g = cycle_graph(5)
    pins = CactusConstraints(goodness="good", required_block_degree_1=frozenset({"v0", "v1", "v2"}))
    out = spanning_even_cactus(g, pins)
    # every spanning even cactus of an odd cycle is a path, which has only
    # two block-degree-one vertices
    assert out.status == "NONE"
    assert out.exhaustive
    # the path ends are the two endpoints of the dropped edge, so adjacent
    # pins are the feasible ones
    two = CactusConstraints(goodness="good", required_block_degree_1=frozenset({"v0", "v1"}))
    got = spanning_even_cactus(g, two)
    assert got.found
    rep = analyze_cactus(Graph(g.vertices, got.witness))
    assert rep.block_degrees["v0"] == 1 and rep.block_degrees["v1"] == 1


def test_spanning_even_cactus_goodness_modes():
    hub = star_graph(5)
    assert spanning_even_cactus(hub, CactusConstraints(goodness="good")).status == "NONE"
    out = spanning_even_cactus(hub, CactusConstraints(goodness="even"))
    assert out.found
    assert spanning_even_cactus(hub, CactusConstraints(goodness="p1p2_good")).status == "NONE"


def test_spanning_even_cactus_p_good_gadget():
    cons = CactusConstraints(
        goodness="p_good",
        required_edge_path_endpoints=("u1", "u2"),
        interior_cap=None,
    )
    out = spanning_even_cactus(gadget_I(), cons)
    assert out.found
    assert verify_cactus_witness(gadget_I(), out.witness, cons)


def test_enumerate_counts_on_small_cycles():
    seen = []
    count = enumerate_spanning_even_cacti(
        cycle_graph(4), CactusConstraints(goodness="good"), seen.append
    )
    # the 4-cycle itself plus its four spanning paths
    assert count == 5
    assert len(seen) == 5
    assert all(is_even(sub) for sub in seen)

    count_odd = enumerate_spanning_even_cacti(
        cycle_graph(5), CactusConstraints(goodness="even"), lambda sub: None
    )
    # the odd cycle is excluded, leaving its five spanning paths
    assert count_odd == 5


def test_enumerate_refuses_large_graphs():
    with pytest.raises(GraphError):
        enumerate_spanning_even_cacti(
            prism(cycle_graph(15)),
            CactusConstraints(goodness="even"),
            lambda sub: None,
        )


def test_linear_forest_paths():
    g = cycle_graph(6)
    out = linear_forest(g, [("v0", "v2"), ("v3", "v5")])
    assert out.found
    paths = out.witness
    assert sorted(len(p) for p in paths) == [3, 3]
    assert linear_forest(g, [("v0", "v3"), ("v1", "v4")]).status == "NONE"
    with pytest.raises(GraphError):
        linear_forest(g, [])


def test_budget_timeout_reports_and_never_lies():
    out = hamilton_cycle(petersen_graph(), Budget(wall_s=None, max_nodes=3))
    assert out.status == "TIMEOUT"
    assert out.witness is None
    assert not out.exhaustive


def test_search_determinism():
    a = hamilton_cycle(prism(cycle_graph(7)))
    b = hamilton_cycle(prism(cycle_graph(7)))
    assert a.witness == b.witness
    assert a.nodes == b.nodes
    c1 = spanning_even_cactus(cycle_graph(6), CactusConstraints(goodness="good"))
    c2 = spanning_even_cactus(cycle_graph(6), CactusConstraints(goodness="good"))
    assert c1.witness == c2.witness and c1.nodes == c2.nodes


def test_verify_rejects_malformed_witnesses():
    g = cycle_graph(4)
    assert not verify_hamilton_cycle(g, ("v0", "v1", "v2", "v3"))  # not closed
    assert not verify_hamilton_cycle(g, ("v0", "v1", "v2", "v0"))  # misses v3
    assert not verify_hamilton_path(g, ("v0", "v2", "v1", "v3"))  # non-edges
    assert not verify_k_tree(g, tuple(g.edges), 2)  # contains a cycle
    assert not verify_k_tree(g, (("v0", "v1"), ("v2", "v3")), 2)  # disconnected
    assert not verify_k_walk(g, ("v0", "v1", "v0", "v1", "v0"), 1)
    assert verify_k_walk(g, ("v0", "v1", "v2", "v3", "v0"), 1)


def test_outcome_shape():
    out = hamilton_cycle(cycle_graph(4))
    assert isinstance(out, SearchOutcome)
    assert out.elapsed_s >= 0
    assert out.nodes >= 1
