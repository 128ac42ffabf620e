"""Tree classification, the leaf-count identity and random tree helpers."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import NotATree
from .graph import Graph
from .lcg import Lcg

KINDS = ("path", "caterpillar", "lobster", "spider", "general-tree", "non-tree")


@dataclass(frozen=True)
class TreeClass:
    """Result of :func:`classify_tree`.

    ``witness`` is the leaf-deletion chain: the vertex sets remaining after
    each round of deleting all leaves, starting from the full vertex set.
    ``spider`` is reported separately because spiders overlap the
    caterpillar/lobster hierarchy (``K_{1,3}`` is both).
    """

    kind: str
    witness: tuple[tuple[int, ...], ...] = field(default=())
    spider: bool = False


def strip_leaves(g: Graph) -> Graph:
    """Delete every leaf of ``g`` at once.  ``K_2`` strips to ``K_1``."""
    if g.p <= 2:
        return g.subgraph(list(g.vertices)[:1])
    leaves = set(g.leaves())
    return g.subgraph(v for v in g if v not in leaves)


def is_path(g: Graph) -> bool:
    return g.is_tree() and all(g.degree(v) <= 2 for v in g)


def path_order(g: Graph) -> list[int]:
    """Vertices of a path graph from one end to the other (smallest end first)."""
    if g.p == 1:
        return list(g.vertices)
    ends = sorted(v for v in g if g.degree(v) == 1)
    order = [ends[0]]
    prev = None
    while len(order) < g.p:
        cur = order[-1]
        nxt = [w for w in g.neighbors(cur) if w != prev]
        prev = cur
        order.append(nxt[0])
    return order


def spider_body(g: Graph) -> int | None:
    """The unique vertex of degree >= 3 if ``g`` is a spider, else ``None``."""
    if not g.is_tree():
        return None
    big = [v for v in g if g.degree(v) >= 3]
    return big[0] if len(big) == 1 else None


def classify_tree(g: Graph) -> TreeClass:
    if not g.is_tree():
        return TreeClass("non-tree")
    chain = [tuple(g.vertices)]
    spider = spider_body(g) is not None
    if is_path(g):
        return TreeClass("path", tuple(chain), spider)
    h = strip_leaves(g)
    chain.append(tuple(h.vertices))
    if is_path(h):
        return TreeClass("caterpillar", tuple(chain), spider)
    h2 = strip_leaves(h)
    chain.append(tuple(h2.vertices))
    if is_path(h2):
        return TreeClass("lobster", tuple(chain), spider)
    return TreeClass("spider" if spider else "general-tree", tuple(chain), spider)


def is_caterpillar(g: Graph) -> bool:
    return classify_tree(g).kind in ("path", "caterpillar")


def is_lobster(g: Graph) -> bool:
    return classify_tree(g).kind in ("path", "caterpillar", "lobster")


def caterpillar_spine(g: Graph) -> list[int]:
    """Spine of a caterpillar, ordered from one end.

    The spine is the path left after deleting leaves.  For a path with at
    least three vertices that is the interior; ``K_1``/``K_2`` use one vertex.
    """
    if not is_caterpillar(g):
        raise NotATree("not a caterpillar")
    if g.p <= 2:
        return [min(g.vertices)]
    return path_order(strip_leaves(g))


def leaf_identity_check(t: Graph) -> bool:
    """``n_1 = 2 + sum_{d>=3} (d-2) n_d`` for a tree with at least two vertices."""
    if not t.is_tree() or t.p < 2:
        raise NotATree("leaf identity needs a tree with >= 2 vertices")
    census = Counter(t.degree(v) for v in t)
    return census[1] == 2 + sum((d - 2) * n for d, n in census.items() if d >= 3)


def prufer_tree(seq: list[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length ``n-2`` into a labelled tree."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: Lcg) -> Graph:
    if n == 1:
        return Graph([0])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return prufer_tree([rng.below(n) for _ in range(n - 2)], n)


def random_caterpillar(spine: int, leaves: list[int]) -> Graph:
    """Caterpillar with ``spine`` spine vertices; ``leaves[i]`` leaves on spine vertex ``i``."""
    g = Graph(range(spine))
    for i in range(spine - 1):
        g.add_edge(i, i + 1)
    for i, k in enumerate(leaves):
        for _ in range(k):
            g.add_edge(i, g.new_vertex())
    return g
