#!/usr/bin/env python3
"""Builds the graph6 fixture files under data/ with networkx.

Every strongly regular graph written here is constructed directly, its
parameters are checked by brute force, and the members of each group are
checked pairwise non-isomorphic with networkx's VF2 matcher. The graph6
text comes from networkx's own encoder, so these files are independent of
the C++ codec they are used to test.
"""

import itertools
import pathlib
import random

import networkx as nx

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data"


def g6(g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    # to_graph6_bytes numbers vertices in insertion order; rebuild sorted.
    h = nx.Graph()
    h.add_nodes_from(sorted(g.nodes))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def srg_params(g):
    n = g.number_of_nodes()
    degs = {d for _, d in g.degree()}
    if len(degs) != 1:
        return None
    (d,) = degs
    alpha, beta = set(), set()
    for u, v in itertools.combinations(g.nodes, 2):
        c = len(set(g[u]) & set(g[v]))
        (alpha if g.has_edge(u, v) else beta).add(c)
    if len(alpha) != 1 or len(beta) != 1:
        return None
    return (n, d, alpha.pop(), beta.pop())


def rook(q):
    return nx.cartesian_product(nx.complete_graph(q), nx.complete_graph(q))


def shrikhande():
    g = nx.Graph()
    conn = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    pts = [(a, b) for a in range(4) for b in range(4)]
    g.add_nodes_from(pts)
    for (a, b), (c, d) in itertools.combinations(pts, 2):
        if ((a - c) % 4, (b - d) % 4) in conn:
            g.add_edge((a, b), (c, d))
    return g


def triangular(m):
    return nx.line_graph(nx.complete_graph(m))


def seidel_switch(g, subset):
    h = g.copy()
    subset = set(subset)
    for v in subset:
        for w in g.nodes:
            if w in subset:
                continue
            if h.has_edge(v, w):
                h.remove_edge(v, w)
            else:
                h.add_edge(v, w)
    return h


def chang_graphs():
    t8 = triangular(8)
    norm = lambda e: tuple(sorted(e))
    matching = [norm(e) for e in [(0, 1), (2, 3), (4, 5), (6, 7)]]
    c8 = [norm((i, (i + 1) % 8)) for i in range(8)]
    c3c5 = [norm(e) for e in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)]]
    return [seidel_switch(t8, s) for s in (matching, c8, c3c5)]


def paley(p):
    squares = {(x * x) % p for x in range(1, p)}
    g = nx.Graph()
    g.add_nodes_from(range(p))
    for a, b in itertools.combinations(range(p), 2):
        if (a - b) % p in squares:
            g.add_edge(a, b)
    return g


def clebsch():
    g = nx.hypercube_graph(4)
    for v in list(g.nodes):
        g.add_edge(v, tuple(1 - x for x in v))
    return g


def write_group(path, graphs, params):
    for g in graphs:
        assert srg_params(g) == params, (path, srg_params(g))
    for a, b in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b), path
    path.write_text("".join(g6(g) + "\n" for g in graphs))


def main():
    srg = ROOT / "srg"
    fixtures = ROOT / "fixtures"
    srg.mkdir(parents=True, exist_ok=True)
    fixtures.mkdir(parents=True, exist_ok=True)

    write_group(srg / "srg-16-6-2-2.g6", [rook(4), shrikhande()], (16, 6, 2, 2))
    write_group(srg / "srg-28-12-6-4.g6", [triangular(8)] + chang_graphs(), (28, 12, 6, 4))
    write_group(srg / "srg-36-10-4-2.g6", [rook(6)], (36, 10, 4, 2))

    misc = [
        (nx.petersen_graph(), (10, 3, 0, 1)),
        (nx.complement(nx.petersen_graph()), (10, 6, 3, 4)),
        (rook(3), (9, 4, 1, 2)),
        (nx.cycle_graph(5), (5, 2, 0, 1)),
        (paley(13), (13, 6, 2, 3)),
        (paley(29), (29, 14, 6, 7)),
        (paley(37), (37, 18, 8, 9)),
        (clebsch(), (16, 5, 0, 2)),
        (rook(5), (25, 8, 3, 2)),
        (triangular(10), (45, 16, 8, 4)),
    ]
    lines = []
    for g, p in misc:
        assert srg_params(g) == p, p
        lines.append(f"# SRG{p}\n{g6(g)}\n")
    (srg / "misc-srg.g6").write_text("".join(lines))

    pet = nx.petersen_graph()
    perm = list(range(10))
    random.Random(20061).shuffle(perm)
    relabeled = nx.relabel_nodes(pet, dict(enumerate(perm)))
    (fixtures / "petersen.g6").write_text(g6(pet) + "\n")
    (fixtures / "petersen-relabeled.g6").write_text(g6(relabeled) + "\n")
    (fixtures / "k3.g6").write_text(g6(nx.complete_graph(3)) + "\n")
    (fixtures / "p3.g6").write_text(g6(nx.path_graph(3)) + "\n")
    (fixtures / "edgeless2.g6").write_text(g6(nx.empty_graph(2)) + "\n")
    rk, sh = rook(4), shrikhande()
    (fixtures / "rook4.g6").write_text(g6(rk) + "\n")
    (fixtures / "shrikhande.g6").write_text(g6(sh) + "\n")

    # Reference encoder check for the frozen codec vectors.
    assert g6(nx.complete_graph(2)) == "A_"
    assert g6(nx.empty_graph(2)) == "A?"
    assert g6(nx.complete_graph(3)) == "Bw"


if __name__ == "__main__":
    main()
