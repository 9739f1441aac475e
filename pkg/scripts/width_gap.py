"""Compare the pipeline's cover width with exact clique cover widths on small planar graphs.

For every connected planar graph on up to N vertices (one per isomorphism
class) this prints how often the cover width W of G1 exceeds CCW(G1), and how
often W drops below CCW(G) itself, which is possible because G1 has more
edges than G.

    python scripts/width_gap.py --max-n 6
"""
import argparse
import sys
from collections import Counter

from planar_ccw.acceptance import embed_with_networkx, small_connected_graphs
from planar_ccw.represent import planar_representation
from planar_ccw.verify import brute_ccw


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--show", type=int, default=5, help="print this many graphs with W < CCW(G)")
    args = ap.parse_args(argv)

    gap_g1, gap_g, shown = Counter(), Counter(), 0
    for h in small_connected_graphs(args.max_n):
        eg = embed_with_networkx(h)
        if eg is None:
            continue
        pair = planar_representation(eg)
        w = pair.report["cover_width"]
        ccw_g, ccw_g1 = brute_ccw(eg.graph, limit=args.max_n), brute_ccw(pair.g1, limit=args.max_n)
        gap_g1[w - ccw_g1] += 1
        gap_g[w - ccw_g] += 1
        if w < ccw_g and shown < args.show:
            shown += 1
            print(f"W={w} < CCW(G)={ccw_g}: edges {eg.graph.edges()}")
    total = sum(gap_g1.values())
    print(f"{total} planar graphs")
    print("W - CCW(G1): " + "  ".join(f"{k}:{gap_g1[k]}" for k in sorted(gap_g1)))
    print("W - CCW(G):  " + "  ".join(f"{k}:{gap_g[k]}" for k in sorted(gap_g)))
    return 0 if min(gap_g1) >= 0 else 1


if __name__ == "__main__":
    sys.exit(main())
