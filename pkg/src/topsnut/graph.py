"""Simple undirected graphs with stable integer vertex and edge identities.

Vertices and edges keep their insertion order, which is what every
"deterministic" claim elsewhere in the package is relative to.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import GraphError, UnknownEdge, UnknownVertex


class Graph:
    """A finite simple graph.

    Edge ids default to ``0, 1, ...`` in the order edges are added; vertex
    ids are whatever integers the caller supplies.
    """

    __slots__ = ("_adj", "_edges", "_next_edge")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        self._adj: dict[int, dict[int, int]] = {}
        self._edges: dict[int, tuple[int, int]] = {}
        self._next_edge = 0
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(range(n), pairs)

    # construction -----------------------------------------------------

    def add_vertex(self, v: int) -> int:
        self._adj.setdefault(int(v), {})
        return int(v)

    def new_vertex(self) -> int:
        v = max(self._adj, default=-1) + 1
        self._adj[v] = {}
        return v

    def add_edge(self, u: int, v: int, eid: int | None = None) -> int:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        for w in (u, v):
            if w not in self._adj:
                raise UnknownVertex(w)
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge {u}-{v}")
        if eid is None:
            eid = self._next_edge
        elif eid in self._edges:
            raise GraphError(f"edge id {eid} already used")
        self._edges[eid] = (u, v)
        self._adj[u][v] = eid
        self._adj[v][u] = eid
        self._next_edge = max(self._next_edge, eid + 1)
        return eid

    def remove_edge(self, eid: int) -> None:
        u, v = self.endpoints(eid)
        del self._edges[eid]
        del self._adj[u][v]
        del self._adj[v][u]

    def remove_vertex(self, v: int) -> None:
        for w in list(self.neighbors(v)):
            self.remove_edge(self._adj[v][w])
        del self._adj[v]

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = {v: dict(nb) for v, nb in self._adj.items()}
        g._edges = dict(self._edges)
        g._next_edge = self._next_edge
        return g

    # queries ----------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """``(eid, u, v)`` triples in edge order."""
        return tuple((e, u, v) for e, (u, v) in self._edges.items())

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges)

    @property
    def p(self) -> int:
        return len(self._adj)

    @property
    def q(self) -> int:
        return len(self._edges)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q}, edges={[(u, v) for _, u, v in self.edges]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self.edge_set() == other.edge_set()

    def edge_set(self) -> set[frozenset[int]]:
        return {frozenset(uv) for uv in self._edges.values()}

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._edges[eid]
        except KeyError:
            raise UnknownEdge(eid) from None

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.endpoints(eid)
        return b if v == a else a

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return tuple(self._adj[v])
        except KeyError:
            raise UnknownVertex(v) from None

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at ``v`` in neighbour insertion order."""
        try:
            return tuple(self._adj[v].values())
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edge_between(self, u: int, v: int) -> int | None:
        return self._adj.get(u, {}).get(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_between(u, v) is not None

    def leaves(self) -> list[int]:
        return [v for v, nb in self._adj.items() if len(nb) == 1]

    def min_degree(self) -> int:
        return min(len(nb) for nb in self._adj.values())

    def max_degree(self) -> int:
        return max(len(nb) for nb in self._adj.values())

    # structure --------------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of ``G - removed``, each in discovery order."""
        gone = set(removed)
        seen = set(gone)
        out = []
        for s in self._adj:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return self.p > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.p > 0 and self.q == self.p - 1 and self.is_connected()

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        g = Graph(v for v in self._adj if v in keep)
        for e, (u, v) in self._edges.items():
            if u in keep and v in keep:
                g.add_edge(u, v, eid=e)
        return g

    def relabelled(self) -> "Graph":
        """Copy with vertices renumbered ``0..p-1`` and edges ``0..q-1`` in order."""
        index = {v: i for i, v in enumerate(self._adj)}
        return Graph(range(self.p), [(index[u], index[v]) for u, v in self._edges.values()])

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self._adj)
        g.add_edges_from(self._edges.values())
        return g


# text format -------------------------------------------------------------

def _content_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_graph(text: str) -> Graph:
    """Parse ``p q`` followed by ``q`` lines of ``u v`` (0-based)."""
    lines = list(_content_lines(text))
    if not lines:
        raise GraphError("empty graph file")
    try:
        p, q = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphError(f"bad header: {lines[0]!r}") from None
    body = lines[1:]
    if len(body) != q:
        raise GraphError(f"header says {q} edges, found {len(body)}")
    g = Graph(range(p))
    for line in body:
        u, v = (int(t) for t in line.split())
        g.add_edge(u, v)
    return g


def format_graph(g: Graph) -> str:
    h = g.relabelled()
    rows = [f"{h.p} {h.q}"] + [f"{u} {v}" for _, u, v in h.edges]
    return "\n".join(rows) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# small families used throughout tests and examples ------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """Left part ``0..m-1``, right part ``m..m+n-1``."""
    return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to the cycle ``1..n``."""
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + rim)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring of a connected bipartite graph, or ``None``."""
    if g.p == 0:
        return [], []
    side = {}
    for comp in g.components():
        side[comp[0]] = 0
        queue = deque([comp[0]])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return [v for v in g if side[v] == 0], [v for v in g if side[v] == 1]


def preferential_attachment(n: int, m: int, rng) -> Graph:
    """Barabási–Albert style growth: each new vertex links to ``m`` distinct
    earlier vertices chosen with probability proportional to degree.

    Starts from a star on ``m + 1`` vertices; ``rng`` is a :class:`topsnut.lcg.Lcg`.
    """
    if m < 1 or n < m + 1:
        raise GraphError("need m >= 1 and n >= m + 1")
    g = star_graph(m)
    pool = [v for _, a, b in g.edges for v in (a, b)]
    for v in range(m + 1, n):
        g.add_vertex(v)
        targets: list[int] = []
        while len(targets) < m:
            t = pool[rng.below(len(pool))]
            if t not in targets:
                targets.append(t)
        for t in targets:
            g.add_edge(v, t)
            pool += [v, t]
    return g
