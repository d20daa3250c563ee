"""Acceptance suite: ten gate criteria, one printed pass/fail line each.

Budgets follow the stated tolerances. The long-running entries are criterion 2
(exhaustive fragment search, up to ten minutes) and criterion 5 (a soak search
whose wall budget comes from CACTUSLAB_SOAK, default 1800 seconds); set
CACTUSLAB_SOAK to a smaller number of seconds for a quick development pass.
"""

import os
import random
import time

from cactuslab.cactus import analyze_cactus, classify_deletion
from cactuslab.certificates import (
    build_certificate,
    graph_reference,
    verify_certificate,
)
from cactuslab.families import (
    build_G,
    certificate_cactus,
    fragment_A,
    fragment_C,
    fragment_D,
    gadget_I,
    apex_embedding,
)
from cactuslab.generators import random_good_cactus, random_good_even_cactus
from cactuslab.graphs import Graph, check_embedding, is_k_connected
from cactuslab.prism import cactus_prism_hamilton, cycle_sequence, prism, pv, stitch_hamilton_GD
from cactuslab.search import (
    Budget,
    CactusConstraints,
    enumerate_spanning_even_cacti,
    hamilton_cycle,
    hamilton_path,
    k_tree,
    spanning_even_cactus,
    verify_hamilton_cycle,
)

from conftest import (
    oracle_good_even_cactus,
    oracle_hamilton_cycle,
    oracle_hamilton_path,
    oracle_k_tree,
    random_graph,
)


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_eye_endpoints_pinned():
    start = time.monotonic()
    cons = CactusConstraints(goodness="p_good",
                             required_edge_path_endpoints=("u1", "u2"),
                             interior_cap=None)
    violations = []
    seen = [0]

    def visitor(q: Graph) -> None:
        seen[0] += 1
        rep = analyze_cactus(q)
        if (rep.block_degrees["u1"], rep.block_degrees["u2"]) != (2, 2):
            violations.append(sorted(q.edges))

    count = enumerate_spanning_even_cacti(gadget_I(), cons, visitor)
    elapsed = time.monotonic() - start
    ok = count >= 1 and not violations and elapsed < 60
    _report(1, ok, f"{count} cacti enumerated, {len(violations)} violations, {elapsed:.1f}s")


def test_criterion_02_no_spanning_cactus_of_wide_fragment():
    start = time.monotonic()
    cons = CactusConstraints(goodness="p_good",
                             required_edge_path_endpoints=("u1", "u3"))
    out = spanning_even_cactus(fragment_A(), cons, Budget(wall_s=600.0))
    elapsed = time.monotonic() - start
    ok = out.status == "NONE" and out.exhaustive and elapsed < 600
    _report(2, ok, f"status={out.status} exhaustive={out.exhaustive} "
                   f"nodes={out.nodes} {elapsed:.0f}s")


def test_criterion_03_no_pinned_cactus_of_narrow_pieces():
    results = []
    ok = True
    cons = CactusConstraints(goodness="good",
                             required_block_degree_1=frozenset({"l", "r"}))
    for name, builder in (("C", fragment_C), ("D", fragment_D)):
        for n in (1, 2):
            start = time.monotonic()
            out = spanning_even_cactus(builder(n), cons, Budget(wall_s=30.0))
            elapsed = time.monotonic() - start
            results.append(f"{name}{n}:{out.status}/{elapsed:.2f}s")
            if out.status != "NONE" or not out.exhaustive or elapsed >= 5:
                ok = False
    _report(3, ok, " ".join(results))


def test_criterion_04_family_construction_sanity():
    details = []
    ok = True
    expected = {"C": (239, 5), "D": (267, 9)}
    for kind, (want, piece) in expected.items():
        g, chart = build_G(kind, 1)
        nv = g.num_vertices()
        identity = 8 * 27 + 7 * piece - 14 + 2
        emb = check_embedding(g, apex_embedding(chart))
        three = is_k_connected(g, 3)
        details.append(f"G{kind}1: v={nv} identity={identity} "
                       f"euler={emb.euler_ok} 3conn={three}")
        if nv != want or nv != identity or not emb.euler_ok or not three:
            ok = False
    _report(4, ok, "; ".join(details))


def test_criterion_05_cactus_certificate_and_degree_three_soak():
    g, chart, k, meta = certificate_cactus(1)
    doc = build_certificate(
        "spanning_good_even_cactus", graph_reference("GC", 1), list(k.edges),
        meta["provenance"], parameters={"n": 1})
    cert_ok, _ = verify_certificate(doc)
    max_deg = max(k.degree(v) for v in k.vertices)

    soak_s = float(os.environ.get("CACTUSLAB_SOAK", "1800"))
    cons = CactusConstraints(goodness="good", max_degree=3)
    soak = spanning_even_cactus(g, cons, Budget(wall_s=soak_s))

    sub_results = []
    subs_ok = True
    pins = CactusConstraints(goodness="good", max_degree=3,
                             required_block_degree_1=frozenset({"l", "r"}))
    for name, frag in (("C1", fragment_C(1)), ("D1", fragment_D(1))):
        out = spanning_even_cactus(frag, pins, Budget(wall_s=30.0))
        sub_results.append(f"{name}:{out.status}")
        if out.status != "NONE":
            subs_ok = False

    ok = cert_ok and max_deg >= 4 and soak.status != "FOUND" and subs_ok
    _report(5, ok, f"certificate={cert_ok} max_witness_degree={max_deg} "
                   f"soak={soak.status}@{soak.elapsed_s:.0f}s "
                   f"subinstances={' '.join(sub_results)}")


def test_criterion_06_prism_hamilton_certificates():
    start = time.monotonic()
    details = []
    ok = True
    for n in (1, 2):
        gp, seq, meta = stitch_hamilton_GD(n)
        base, _ = build_G("D", n)
        spanning = len(set(seq[:-1])) == 2 * base.num_vertices()
        closed = seq[0] == seq[-1]
        valid = verify_hamilton_cycle(gp, seq)
        doc = build_certificate(
            "prism_hamilton", graph_reference("GD", n), list(seq), "search",
            parameters={"n": n, "systems": meta["systems"]})
        cert_ok, _ = verify_certificate(doc)
        details.append(f"n={n}: spanning={spanning} closed={closed} "
                       f"cycle={valid} certificate={cert_ok}")
        if not (spanning and closed and valid and cert_ok):
            ok = False
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 300
    _report(6, ok, "; ".join(details) + f"; total {elapsed:.0f}s")


def test_criterion_07_prism_cycles_of_random_cacti():
    rng = random.Random(7)
    failures = 0
    for _ in range(100):
        size = rng.randint(2, 20)
        q = random_good_even_cactus(rng.randrange(2 ** 30), num_vertices=size)
        edges = cactus_prism_hamilton(q)
        seq = cycle_sequence(edges)
        rep = analyze_cactus(q)
        valid = verify_hamilton_cycle(prism(q), seq)
        verticals = all(
            (pv(v, "a"), pv(v, "b")) in edges
            for v in q.vertices if rep.block_degrees[v] == 1)
        if not (valid and verticals):
            failures += 1
    _report(7, failures == 0, f"100 random cacti, {failures} failures")


def test_criterion_08_deletion_case_split():
    rng = random.Random(8)
    failures = 0
    for trial in range(200):
        max3 = trial < 100
        size = rng.randint(3, 20)
        cap = 3 if max3 else None
        k = random_good_cactus(rng.randrange(2 ** 30), size, max_degree=cap)
        s, t = rng.sample(sorted(k.vertices), 2)
        report = classify_deletion(k, s, t, max_degree_3=max3)
        if not report.satisfies:
            failures += 1
    _report(8, failures == 0, f"200 random cacti (100 degree-capped), {failures} failures")


def test_criterion_09_bag_bounds_on_reference_certificates():
    slack = {"good": 1, "one_good": 2, "two_good": 3}
    checked = 0
    failures = []
    for g, chart, k, meta in (certificate_cactus(1), certificate_cactus(2),
                              certificate_cactus(1, num_a=2)):
        report = classify_deletion(k, "s", "t", chart=chart)
        for i, comp in enumerate(report.components):
            cls = comp.classification
            if cls not in slack:
                failures.append(f"{meta['family']}#{i}:{cls}")
                continue
            ival = report.intervals[i]
            need = ival.b - ival.a - slack[cls]
            checked += 1
            if not comp.is_even or report.bag_counts[i] < need:
                failures.append(f"{meta['family']}#{i}: bags={report.bag_counts[i]} "
                                f"needed={need}")
    ok = checked > 0 and not failures
    _report(9, ok, f"{checked} components checked, failures={failures or 'none'}")


def test_criterion_10_oracle_agreement_on_random_graphs():
    rng = random.Random(10)
    mismatches = []
    for trial in range(50):
        n = rng.randint(3, 12)
        max_m = min(n + 4, 13, n * (n - 1) // 2)
        m = rng.randint(max(0, n - 2), max_m)
        g = random_graph(rng, n, m)

        pairs = [
            ("hamilton_cycle", hamilton_cycle(g).found, oracle_hamilton_cycle(g)),
            ("hamilton_path", hamilton_path(g).found, oracle_hamilton_path(g)),
            ("k_tree3", k_tree(g, 3).found, oracle_k_tree(g, 3)),
            ("cactus", spanning_even_cactus(
                g, CactusConstraints(goodness="good")).found,
                oracle_good_even_cactus(g)),
        ]
        for name, got, want in pairs:
            if got != want:
                mismatches.append(f"trial {trial} {name}: search={got} oracle={want}")
    _report(10, not mismatches, f"50 graphs x 4 problems, "
                                f"mismatches={mismatches or 'none'}")
