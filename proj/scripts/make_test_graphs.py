"""Writes the graph6 test assets under tests/data using networkx."""
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"


def g6(g):
    return nx.to_graph6_bytes(nx.convert_node_labels_to_integers(g), header=False).decode().strip()


def write(name, graphs, comment):
    lines = [f"# {comment}", f"# {len(graphs)} graphs"] + [g6(g) for g in graphs]
    (OUT / name).write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = [g for g in nx.graph_atlas_g() if len(g) >= 1 and nx.is_connected(g)]
    write("connected_upto6.g6", [g for g in atlas if len(g) <= 6], "connected graphs, 1 <= n <= 6, one per isomorphism class")
    write("connected_7.g6", [g for g in atlas if len(g) == 7], "connected graphs, n = 7, one per isomorphism class")
    write("all_1to6.g6", [g for g in nx.graph_atlas_g() if 1 <= len(g) <= 6], "all graphs, 1 <= n <= 6, one per isomorphism class")
    trees = [t for n in range(2, 9) for t in nx.nonisomorphic_trees(n)]
    write("trees_2to8.g6", trees, "trees, 2 <= n <= 8, one per isomorphism class")


if __name__ == "__main__":
    main()
