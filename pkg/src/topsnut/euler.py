"""Edge-disjoint cycle and trail decompositions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlreadyEulerian, Disconnected, OddDegreeVertex
from .graph import Graph


@dataclass(frozen=True)
class Cycle:
    """``vertices[i]`` and ``vertices[i+1]`` (cyclically) are joined by ``edges[i]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Trail:
    """An open trail; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def _peel_cycles(vertices, edge_list):
    """Hierholzer-style peeling on a multigraph given as ``(eid, u, v)`` triples.

    Walks from the lowest unused edge, always leaving along the lowest-id
    unused edge, and cuts a cycle off whenever the walk revisits a vertex.
    """
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
    for e, u, v in edge_list:
        inc[u].append((e, v))
        inc[v].append((e, u))
    for v in inc:
        inc[v].sort()
    used: set[int] = set()
    ptr = {v: 0 for v in inc}

    def next_edge(v):
        lst = inc[v]
        i = ptr[v]
        while i < len(lst) and lst[i][0] in used:
            i += 1
        ptr[v] = i
        return lst[i] if i < len(lst) else None

    cycles = []
    for e0, u0, _ in sorted(edge_list):
        if e0 in used:
            continue
        path_v = [u0]
        path_e: list[int] = []
        pos = {u0: 0}
        while True:
            cur = path_v[-1]
            step = next_edge(cur)
            if step is None:
                break
            e, w = step
            used.add(e)
            if w in pos:
                j = pos[w]
                cyc_v = path_v[j:]
                cyc_e = path_e[j:] + [e]
                cycles.append(Cycle(tuple(cyc_v), tuple(cyc_e)))
                for x in path_v[j + 1:]:
                    del pos[x]
                del path_v[j + 1:]
                del path_e[j:]
            else:
                pos[w] = len(path_v)
                path_v.append(w)
                path_e.append(e)
        assert len(path_v) == 1, "walk stuck away from its start: odd degree"
    return cycles


def euler_cycle_decomposition(g: Graph) -> list[Cycle]:
    """Edge-disjoint cycles covering every edge of an even graph."""
    for v in g:
        if g.degree(v) % 2:
            raise OddDegreeVertex(v)
    return _peel_cycles(g.vertices, g.edges)


def _circuit(vertices, edge_list, start):
    """Closed Euler trail from ``start`` as ``(vertex list, edge list)``."""
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
    for e, u, v in edge_list:
        inc[u].append((e, v))
        inc[v].append((e, u))
    for v in inc:
        inc[v].sort(reverse=True)
    used: set[int] = set()
    stack = [(start, None)]
    out_v, out_e = [], []
    while stack:
        v, via = stack[-1]
        while inc[v] and inc[v][-1][0] in used:
            inc[v].pop()
        if inc[v]:
            e, w = inc[v].pop()
            used.add(e)
            stack.append((w, e))
        else:
            stack.pop()
            out_v.append(v)
            if via is not None:
                out_e.append(via)
    out_v.reverse()
    out_e.reverse()
    return out_v, out_e


def non_euler_path_decomposition(g: Graph) -> list[Trail]:
    """Split ``E(g)`` into ``(#odd vertices)/2`` edge-disjoint open trails.

    Odd vertices are paired in id order by virtual edges, the augmented
    multigraph is traversed by one closed Euler trail, and the trail is cut
    at the virtual edges.  The pieces are trails rather than paths in
    general: a triangle with a pendant edge has two odd vertices but no
    decomposition into one path.
    """
    if not g.is_connected():
        raise Disconnected("graph must be connected")
    odd = [v for v in g if g.degree(v) % 2]
    if not odd:
        raise AlreadyEulerian("no odd-degree vertex; use euler_cycle_decomposition")
    top = max(g.edge_ids, default=-1) + 1
    virtual = {top + i: (odd[2 * i], odd[2 * i + 1]) for i in range(len(odd) // 2)}
    edge_list = list(g.edges) + [(e, u, v) for e, (u, v) in virtual.items()]
    first_virtual = min(virtual)
    vs, es = _circuit(g.vertices, edge_list, virtual[first_virtual][0])
    # rotate so the circuit begins just after a virtual edge
    k = next(i for i, e in enumerate(es) if e in virtual)
    es = es[k + 1:] + es[:k + 1]
    vs = vs[k + 1:-1] + vs[:k + 1] + [vs[k + 1]]
    trails, cur_v, cur_e = [], [vs[0]], []
    for i, e in enumerate(es):
        if e in virtual:
            trails.append(Trail(tuple(cur_v), tuple(cur_e)))
            cur_v, cur_e = [vs[i + 1]], []
        else:
            cur_e.append(e)
            cur_v.append(vs[i + 1])
    return trails
