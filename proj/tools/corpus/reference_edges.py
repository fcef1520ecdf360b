"""Decode a graph6 file with networkx and write one edge-list record per line.

Output line format: "<graph6> <n> u-v u-v ..." with u < v, edges sorted.
Used to produce the reference fixture the C++ graph6 parser is checked against.
"""
import sys

import networkx as nx


def main(src, dst):
    with open(src, "rb") as fin, open(dst, "w") as fout:
        for raw in fin:
            line = raw.strip()
            if not line:
                continue
            g = nx.from_graph6_bytes(line)
            edges = sorted(tuple(sorted(e)) for e in g.edges())
            fout.write(" ".join([line.decode(), str(g.number_of_nodes())] +
                                [f"{u}-{v}" for u, v in edges]) + "\n")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
