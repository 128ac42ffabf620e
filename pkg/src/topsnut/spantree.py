"""Three greedy spanning-tree algorithms for connected dominating sets.

* ``spanning_tree_max_leaf``: grow from a maximum-degree vertex, always
  expanding the tree leaf of largest degree.
* ``spanning_tree_predefined``: force chosen vertices into the dominating
  set by hanging a pendant vertex on each.
* ``spanning_tree_degree_preserve``: absorb the closed neighbourhoods of all
  high-degree vertices first, then finish with a degree-greedy BFS.

All ties break by smallest vertex id.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import Disconnected, ThresholdOutOfRange, UnknownVertex
from .graph import Graph


def _check_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected("graph must be connected")


def _tree_graph(g: Graph, tree_edges: list[tuple[int, int]]) -> Graph:
    t = Graph(g.vertices)
    for u, v in tree_edges:
        t.add_edge(u, v, eid=g.edge_between(u, v))
    return t


def is_spanning_tree(g: Graph, t: Graph) -> bool:
    return (set(t.vertices) == set(g.vertices) and t.is_tree()
            and all(g.has_edge(u, v) for _, u, v in t.edges))


def is_connected_dominating(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    if not s or not s <= set(g.vertices):
        return False
    if any(v not in s and not any(w in s for w in g.neighbors(v)) for v in g):
        return False
    return g.subgraph(s).is_connected()


def _internal(t: Graph) -> set[int]:
    if t.p <= 2:
        return {min(t.vertices)}
    return {v for v in t if t.degree(v) > 1}


def spanning_tree_max_leaf(g: Graph) -> tuple[Graph, set[int]]:
    """Return ``(T*, S)`` with ``S = V(T*) - L(T*)`` a connected dominating set."""
    _check_connected(g)
    deg = {v: g.degree(v) for v in g}
    u1 = min(g, key=lambda v: (-deg[v], v))
    s = {u1, *g.neighbors(u1)}
    edges = [(u1, w) for w in g.neighbors(u1)]
    tdeg = {v: 0 for v in g}
    tdeg[u1] = len(edges)
    for w in g.neighbors(u1):
        tdeg[w] = 1

    def uncovered():
        near = set(s)
        for v in s:
            near.update(g.neighbors(v))
        return set(g.vertices) - near

    while uncovered():
        # a leaf with nothing new to add cannot make progress, so it is skipped
        leaves = [v for v in s if tdeg[v] == 1 and any(w not in s for w in g.neighbors(v))]
        if not leaves:
            break
        u = min(leaves, key=lambda v: (-deg[v], v))
        new = [w for w in g.neighbors(u) if w not in s]
        for w in new:
            edges.append((u, w))
            tdeg[u] += 1
            tdeg[w] = 1
        s.update(new)
    # attach stragglers to the adjacent tree vertex of largest tree degree
    for y in sorted(set(g.vertices) - s):
        anchors = [v for v in g.neighbors(y) if v in s]
        v = min(anchors, key=lambda x: (-tdeg[x], x))
        edges.append((v, y))
        tdeg[v] += 1
        tdeg[y] = 1
        s.add(y)
    t = _tree_graph(g, edges)
    return t, _internal(t)


def spanning_tree_predefined(g: Graph, required: Iterable[int]) -> tuple[set[int], Graph]:
    """Connected dominating set containing ``required``, via pendant vertices.

    Returns the set and the spanning tree of the augmented graph it came from.
    """
    required = list(dict.fromkeys(required))
    for u in required:
        if u not in g:
            raise UnknownVertex(u)
    _check_connected(g)
    star = g.copy()
    for u in required:
        star.add_edge(u, star.new_vertex())
    t, dom = spanning_tree_max_leaf(star)
    if g.p == 1:
        dom = set(g.vertices)
    return dom & set(g.vertices), t


def spanning_tree_degree_preserve(g: Graph, k: int) -> Graph:
    """Spanning tree that first absorbs the closed neighbourhood of every vertex of degree ``>= k``.

    Phase one builds a forest: ``v_1`` takes its whole closed neighbourhood;
    each later high-degree ``v`` is tied to the tree through its
    highest-degree neighbour already absorbed, then takes its remaining
    neighbours.  A high-degree vertex whose closed neighbourhood misses
    everything absorbed so far starts a new forest component.  Phase two is
    a BFS from the absorbed vertices in entry order; each dequeued vertex
    takes its unvisited neighbours in nonincreasing degree order, and also
    merges any forest component it touches.
    """
    _check_connected(g)
    if g.is_tree():
        return g.copy()
    deg = {v: g.degree(v) for v in g}
    if not g.min_degree() < k < g.max_degree():
        raise ThresholdOutOfRange(f"need {g.min_degree()} < k < {g.max_degree()}, got {k}")
    order = sorted(g, key=lambda v: (-deg[v], v))
    heavy = [v for v in order if deg[v] >= k]

    parent = {v: v for v in g}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges: list[tuple[int, int]] = []

    def join(a, b):
        edges.append((a, b))
        parent[find(a)] = find(b)

    absorbed: list[int] = []
    seen: set[int] = set()

    def absorb(v):
        if v not in seen:
            seen.add(v)
            absorbed.append(v)

    v1 = heavy[0]
    absorb(v1)
    for w in g.neighbors(v1):
        absorb(w)
        join(v1, w)
    for v in heavy[1:]:
        closed = [v, *g.neighbors(v)]
        common = [x for x in closed if x in seen]
        if common:
            linked = [x for x in g.neighbors(v) if x in seen]
            if v not in seen:
                x = min(linked, key=lambda y: (-deg[y], y))
                absorb(v)
                join(v, x)
        else:
            absorb(v)
        for w in g.neighbors(v):
            if w not in seen:
                absorb(w)
                join(v, w)

    queue = deque(absorbed)
    visited = set(absorbed)
    while queue:
        v = queue.popleft()
        for y in sorted(g.neighbors(v), key=lambda x: (-deg[x], x)):
            if y not in visited:
                visited.add(y)
                join(v, y)
                queue.append(y)
            elif find(y) != find(v):
                join(v, y)
    return _tree_graph(g, edges)
