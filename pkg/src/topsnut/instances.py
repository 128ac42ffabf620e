"""Small labelled graphs and strings used as fixtures and in reports."""

from __future__ import annotations

from .graph import Graph, cycle_graph
from .labelling import Labelling
from .matrix import TopsnutMatrix


def caterpillar_h() -> tuple[Graph, Labelling, list[int]]:
    """A graceful caterpillar on 0..47 with spine 0, 37, 10, 25, 12.

    Vertex ids equal labels and edge labels are differences.
    """
    spine = [0, 37, 10, 25, 12]
    leaves = {0: [39, 41, 43, 45, 47], 37: [2, 4, 6, 8], 10: [27, 29, 31, 33, 35],
              25: [], 12: list(range(13, 24, 2))}
    g = Graph()
    for v in spine:
        g.add_vertex(v)
    for a, b in zip(spine, spine[1:]):
        g.add_edge(a, b)
    for u, ls in leaves.items():
        for leaf in ls:
            g.add_vertex(leaf)
            g.add_edge(u, leaf)
    lab = Labelling({v: v for v in g}, {e: abs(u - v) for e, u, v in g.edges})
    return g, lab, spine


D_VV_Q = "037102512"
D_VEV_Q = "03737271015251312"
# Reference strings for the whole caterpillar (mini-principle).  Their
# blocks do not follow one convention, so no traversal reproduces them.
D_VV_H_PRINTED = ("0373941434547037246810371025272"
                  "9313335102510122512131517192123")
D_VEV_H_PRINTED = ("037373939414143434545474703"
                   "73523343162982710371015251727"
                   "19292131233325351025151013122"
                   "5121133155177199211123")

_S07, _S68 = frozenset({0, 7}), frozenset({6, 8})
A_A1 = TopsnutMatrix((5, 5, _S07, 2, 2, 1, _S68, _S07), tuple(range(1, 9)),
                     (_S68, 3, 3, _S68, _S07, _S07, 1, _S68))
# route number -> string read along that route
A_A1_STRINGS = {
    1: "55072216807876543216833680707168",
    3: "51683250733684225070761687168807",
    5: "36815236835074070752261687168078",
}


def c8() -> tuple[Graph, Labelling]:
    g = cycle_graph(8)
    vl = [0, 3, 5, 6, 2, 7, 1, 8]
    el = [3, 2, 1, 4, 5, 6, 7, 8]
    lab = Labelling({i: vl[i] for i in range(8)},
                    {g.edge_between(i, (i + 1) % 8): el[i] for i in range(8)})
    return g, lab


D_VEV_C8 = "03325164257617880"

LOBSTER_NAMES = dict(a=0, c=1, d=2, w=3, u=4, y=5, r=6, s=7, e=8, x=9, v=10, t=11)
LOBSTER_EDGES = ["ay", "cy", "dy", "de", "dr", "ds", "dt", "ew", "xw", "ut", "uv"]


def multiple_meaning_lobster() -> tuple[Graph, Labelling]:
    """Vertex ids equal labels; start the emission at ``d`` (label 2)."""
    n = LOBSTER_NAMES
    g = Graph(range(12), [(n[a], n[b]) for a, b in LOBSTER_EDGES])
    return g, Labelling({i: i for i in range(12)})


D1_LOBSTER = "295110101286772685349231114210"
D5_LOBSTER = "2175210191215613721189379251114310"

NOISE_TOKENS = (11, 1, 2, 3, 1, 34, 1, 34, 1, 4, 5, 1, 4, 5, 1, 56, 1, 56, 1, 6, 7, 11, 1,
                34, 1, 2, 3, 11, 11, 2, 22, 1, 0, 1, 33)
NOISE_TABLE = {"x": "11", "y": "22", "z": "33", "a": "34", "b": "56"}
NOISE_ENCODED = "x1231a1a1451451b1b167x1a123xx2y101z"

_H1 = "1311291111037705513"
_H5 = "3116911031174594133"
_H9 = "71110951431785138137"
# (name, string, printed length); H5 and H9 recur, and the second H1 block differs.
NETWORK_COMPONENTS = [
    ("H1", _H1, 19), ("a1a7", "088", 4),
    ("H7", "53893121113765116135", 20), ("a7a6", "1367", 4),
    ("H6", "41179211312755105134", 20), ("a6a5", "734", 3),
    ("H5", _H5, 19), ("a5a13", "11011", 5),
    ("H13", "1111099183571253121311", 22), ("a13a1", "1910", 4),
    ("H1", "1311291111037705501313", 22), ("a1a9", "1147", 4),
    ("H9", _H9, 20), ("a9a11", "413", 3),
    ("H11", "9111297163371051139", 19), ("a11a5", "413", 3),
    ("H5", _H5, 19), ("a5a3", "31013", 5),
    ("H3", "11149131123972572131", 20), ("a3a12", "178", 3),
    ("H12", "10111398173471152111310", 23), ("a12a9", "325", 3),
    ("H9", _H9, 20), ("a9a4", "325", 3),
    ("H4", "21159011331073583132", 20),
]
NETWORK_PRINTED_TOTAL = 307


def six_c_tree() -> tuple[Graph, Labelling]:
    """A 6C-labelled tree on 13..25: labels are ids, edge labels ``13 - |u - v|``."""
    pairs = [(13, 23), (13, 24), (13, 25), (23, 14), (23, 15), (23, 16), (16, 22),
             (22, 17), (22, 18), (22, 19), (22, 20), (20, 21)]
    g = Graph(range(13, 26), pairs)
    return g, Labelling({v: v for v in g}, {e: 13 - abs(u - v) for e, u, v in g.edges})


def complement_of_two_c4() -> Graph:
    """Complement of two disjoint 4-cycles; split quintuple (2, 4, 4, 5, 5)."""
    base = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    return Graph(range(8), [(u, v) for u in range(8) for v in range(u + 1, 8)
                            if not base.has_edge(u, v)])


def image_caterpillar() -> Graph:
    """A caterpillar with 16 edges: image constants 17 (graceful) and 32 (odd)."""
    spine = [0, 1, 2, 3]
    g = Graph(range(4), [(0, 1), (1, 2), (2, 3)])
    counts = [4, 3, 4, 2]
    for u, c in zip(spine, counts):
        for _ in range(c):
            g.add_edge(u, g.new_vertex())
    return g


def normalised(g: Graph, lab: Labelling) -> tuple[Graph, Labelling]:
    """Renumber vertices ``0..p-1`` in insertion order, carrying the labels along."""
    index = {v: i for i, v in enumerate(g.vertices)}
    h = g.relabelled()
    old_edges = [e for e, _, _ in g.edges]
    return h, Labelling({index[v]: x for v, x in lab.vertex_labels.items()},
                        {new: lab.edge_labels[old] for new, old in zip(h.edge_ids, old_edges)
                         if old in lab.edge_labels}, lab.scheme)
