"""Named verification suites: exhaustive fragment checks and property sweeps."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .cactus import analyze_cactus, classify_deletion
from .families import build_chain, certificate_cactus, fragment_A, fragment_C, fragment_D, gadget_I
from .generators import random_good_cactus
from .graphs import Graph, GraphError, block_path
from .search import Budget, CactusConstraints, enumerate_spanning_even_cacti, spanning_even_cactus


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named suite."""

    check_id: str
    status: str  # confirmed | counterexample | budget_exceeded
    details: dict
    elapsed_s: float

    @property
    def exit_code(self) -> int:
        return {"confirmed": 0, "counterexample": 1, "budget_exceeded": 3}[self.status]


def _check_eye(n, budget, samples, seed) -> tuple[str, dict]:
    g = gadget_I()
    cons = CactusConstraints(goodness="p_good",
                             required_edge_path_endpoints=("u1", "u2"),
                             interior_cap=None)
    bad: list[dict] = []
    seen = [0]

    def visitor(q: Graph) -> None:
        seen[0] += 1
        rep = analyze_cactus(q)
        pair = (rep.block_degrees["u1"], rep.block_degrees["u2"])
        if pair != (2, 2):
            bad.append({"block_degrees": pair, "edges": sorted(q.edges)})

    count = enumerate_spanning_even_cacti(g, cons, visitor)
    details = {"enumerated": count, "violations": len(bad)}
    if bad:
        details["first_violation"] = bad[0]
        return "counterexample", details
    if count == 0:
        details["note"] = "hypothesis class is empty"
        return "counterexample", details
    return "confirmed", details


def _check_fragment_a(n, budget, samples, seed) -> tuple[str, dict]:
    cons = CactusConstraints(goodness="p_good",
                             required_edge_path_endpoints=("u1", "u3"))
    out = spanning_even_cactus(fragment_A(), cons, budget)
    details = {"status": out.status, "nodes": out.nodes, "elapsed_s": round(out.elapsed_s, 1)}
    if out.status == "FOUND":
        details["witness"] = sorted(out.witness)
        return "counterexample", details
    if out.status == "TIMEOUT":
        return "budget_exceeded", details
    details["exhaustive"] = out.exhaustive
    return "confirmed", details


def _check_odd_pair(kind: str):
    def run(n, budget, samples, seed) -> tuple[str, dict]:
        n = n or 1
        frag = fragment_C(n) if kind == "C" else fragment_D(n)
        cons = CactusConstraints(goodness="good",
                                 required_block_degree_1=frozenset({"l", "r"}))
        out = spanning_even_cactus(frag, cons, budget)
        details = {"n": n, "status": out.status, "nodes": out.nodes}
        if out.status == "FOUND":
            details["witness"] = sorted(out.witness)
            return "counterexample", details
        if out.status == "TIMEOUT":
            return "budget_exceeded", details
        details["exhaustive"] = out.exhaustive
        return "confirmed", details

    return run


def _check_deletion(max3: bool):
    def run(n, budget, samples, seed) -> tuple[str, dict]:
        rng = random.Random(seed)
        cap = 3 if max3 else None
        cases = {"I": 0, "II": 0}
        for trial in range(samples):
            size = rng.randint(3, 20)
            k = random_good_cactus(rng.randrange(2 ** 30), size, max_degree=cap)
            verts = sorted(k.vertices)
            s, t = rng.sample(verts, 2)
            report = classify_deletion(k, s, t, max_degree_3=max3)
            if not report.satisfies:
                return "counterexample", {
                    "trial": trial,
                    "graph_edges": sorted(k.edges),
                    "deleted": [s, t],
                    "components": [r.classification for r in report.components],
                }
            cases[report.case] += 1
        return "confirmed", {"samples": samples, "case_counts": cases}

    return run


_BOUND_SLACK = {"good": 1, "one_good": 2, "two_good": 3}


def _reference_certificates():
    yield certificate_cactus(1)
    yield certificate_cactus(2)
    yield certificate_cactus(1, num_a=2)


def _check_bags(wanted: str):
    def run(n, budget, samples, seed) -> tuple[str, dict]:
        slack = _BOUND_SLACK[wanted]
        checked = 0
        moreover = 0
        instances = []
        for g, chart, k, meta in _reference_certificates():
            report = classify_deletion(k, "s", "t", chart=chart)
            chain, _ = build_chain(chart.kind, chart.n, chart.num_a)
            for i, comp in enumerate(report.components):
                if comp.classification != wanted:
                    continue
                if not comp.is_even:
                    return "counterexample", {"family": meta["family"],
                                              "component": i,
                                              "note": "component is not even"}
                ival = report.intervals[i]
                count = report.bag_counts[i]
                need = ival.b - ival.a - slack
                checked += 1
                instances.append({"family": meta["family"], "num_a": chart.num_a,
                                  "interval": [ival.a, ival.b], "bags": count})
                if count < need:
                    return "counterexample", instances[-1] | {"required": need}
                if wanted == "one_good" and count == 0 and ival.b == ival.a + 2:
                    left = _r_label(chart, ival.a)
                    right = _l_label(chart, ival.b)
                    allowed = set(block_path(chain, left, right).vertices)
                    path = comp.witness_paths[0]
                    if not set(path) <= allowed:
                        return "counterexample", instances[-1] | {
                            "note": "witness path leaves the inner window",
                            "path": list(path)}
                    moreover += 1
        details = {"components_checked": checked, "instances": instances}
        if wanted == "one_good":
            details["inner_window_checks"] = moreover
        if checked == 0:
            details["note"] = "no components of this class in the reference certificates"
        return "confirmed", details

    return run


def _r_label(chart, i: int) -> str:
    if i < 1:
        return chart.junctions[0]
    if i > chart.num_a - 1:
        return chart.junctions[chart.num_a]
    return chart.junctions[i]


def _l_label(chart, i: int) -> str:
    if i < 1:
        return chart.junctions[0]
    if i > chart.num_a - 1:
        return chart.junctions[chart.num_a]
    return chart.resolve(f"B{i}:l")


CHECKS = {
    "L3": ("eye gadget: every admissible spanning even cactus pins both "
           "endpoints to block degree two (exhaustive)", _check_eye),
    "L4": ("double-eye fragment: no capped-path spanning even cactus "
           "between its endpoints (exhaustive)", _check_fragment_a),
    "L5C": ("odd single-cycle piece: no spanning good even cactus with both "
            "junctions at block degree one (exhaustive)", _check_odd_pair("C")),
    "L5D": ("odd double-cycle piece: no spanning good even cactus with both "
            "junctions at block degree one (exhaustive)", _check_odd_pair("D")),
    "L6": ("random degree-3 good cacti: deleting two vertices leaves "
           "components within the stated case split", _check_deletion(True)),
    "L7": ("random good cacti: deleting two vertices leaves components "
           "within the stated case split", _check_deletion(False)),
    "L8": ("reference certificates: plain components meet the window bag "
           "bound", _check_bags("good")),
    "L9": ("reference certificates: one-path components meet the window bag "
           "bound and the inner-window condition", _check_bags("one_good")),
    "L10": ("reference certificates: two-path components meet the window bag "
            "bound", _check_bags("two_good")),
}


def run_check(check_id: str, n: int | None = None, budget: Budget | None = None,
              samples: int = 100, seed: int = 0) -> CheckResult:
    """Run one named suite and report confirmed, counterexample, or budget_exceeded."""
    if check_id not in CHECKS:
        raise GraphError(f"unknown check id {check_id!r}")
    budget = budget or Budget(wall_s=600.0)
    fn = CHECKS[check_id][1]
    start = time.monotonic()
    status, details = fn(n, budget, samples, seed)
    return CheckResult(check_id=check_id, status=status, details=details,
                       elapsed_s=time.monotonic() - start)
