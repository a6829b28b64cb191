"""Regenerate the bundled isomorph-free catalogs (orders 1..7).

Dev-time tool: pulls the graph atlas out of networkx, relabels to 0..n-1,
writes one graph6 line per isomorphism class into src/arrowhead/data/catalog/
sorted by (edge count, g6 string), and cross-checks every line through the
package's own parser. Run from the repo root:

    python tools/make_catalogs.py
"""
from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from arrowhead.graphs import parse_graph6  # noqa: E402

EXPECTED_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def main() -> None:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "arrowhead" / "data" / "catalog"
    out_dir.mkdir(parents=True, exist_ok=True)
    by_order: dict[int, list[tuple[int, str]]] = defaultdict(list)
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n < 1:
            continue
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        line = nx.to_graph6_bytes(g, header=False).decode().strip()
        parsed = parse_graph6(line)
        assert parsed.n == n, (line, parsed.n, n)
        assert parsed.edge_count() == g.number_of_edges(), line
        by_order[n].append((g.number_of_edges(), line))
    for order, expected in EXPECTED_COUNTS.items():
        rows = sorted(set(by_order[order]))
        if len(rows) != expected:
            raise SystemExit(f"order {order}: expected {expected} graphs, got {len(rows)}")
        path = out_dir / f"n{order}.g6"
        path.write_text("".join(line + "\n" for _, line in rows))
        print(f"{path}: {len(rows)} graphs")


if __name__ == "__main__":
    main()
