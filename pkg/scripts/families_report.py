#!/usr/bin/env python3
"""Survey the graph families: sizes, embeddings, connectivity, and patterns.

Prints a table for the fragments and the two apex assemblies, then summarizes
the spanning-cactus pattern of the odd-cycle family and the stitched prism
cycle of the double-cycle family. Pass --n to change the fragment size.
"""

import argparse
import sys
import time

from cactuslab.cactus import analyze_cactus
from cactuslab.families import (
    apex_embedding,
    build_G,
    certificate_cactus,
    fragment_A,
    fragment_A_embedding,
    fragment_C,
    fragment_C_embedding,
    fragment_D,
    fragment_D_embedding,
    gadget_I,
    gadget_I_embedding,
)
from cactuslab.graphs import check_embedding, is_k_connected
from cactuslab.prism import stitch_hamilton_GD


def row(name, g, emb_report, extra=""):
    print(f"  {name:<6} {g.num_vertices():>5} {g.num_edges():>5} "
          f"{emb_report.face_count:>5} {str(emb_report.euler_ok):>6} {extra}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1, help="fragment size (default 1)")
    args = parser.parse_args()
    n = args.n

    print("family  verts edges faces  euler")
    row("I", gadget_I(), check_embedding(gadget_I(), gadget_I_embedding()))
    row("A", fragment_A(), check_embedding(fragment_A(), fragment_A_embedding()))
    row(f"C{n}", fragment_C(n), check_embedding(fragment_C(n), fragment_C_embedding(n)))
    row(f"D{n}", fragment_D(n), check_embedding(fragment_D(n), fragment_D_embedding(n)))
    for kind in ("C", "D"):
        g, chart = build_G(kind, n)
        rep = check_embedding(g, apex_embedding(chart))
        t0 = time.monotonic()
        three = is_k_connected(g, 3)
        row(f"G{kind}{n}", g, rep,
            f"3-connected={three} ({time.monotonic() - t0:.1f}s)")

    print()
    g, chart, k, meta = certificate_cactus(n)
    rep = analyze_cactus(k)
    print(f"spanning cactus of GC{n}: {k.num_edges()} edges, "
          f"good={rep.is_good} even={rep.is_even}")
    print(f"  printed pattern realizable: {meta['printed_pattern']['realizable']}")
    if "missing_edges" in meta["printed_pattern"]:
        print(f"  printed edges absent from the graph: "
              f"{meta['printed_pattern']['missing_edges']}")
    print(f"  apex degrees in the cactus: {meta['apex_degrees']}")
    for piece, info in sorted(meta["pattern"].items()):
        print(f"  {piece}: {info['role']}")

    print()
    t0 = time.monotonic()
    gp, seq, meta = stitch_hamilton_GD(n)
    print(f"prism Hamilton cycle of GD{n}: {gp.num_vertices()} prism vertices, "
          f"stitched in {time.monotonic() - t0:.1f}s")
    systems = meta["systems"]
    for piece in sorted(k for k in systems if k.startswith("B")):
        print(f"  {piece}: {systems[piece]}")
    print(f"  endpoint variants: xa={systems['tails_xa_variant']} "
          f"xb={systems['tails_xb_variant']}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
