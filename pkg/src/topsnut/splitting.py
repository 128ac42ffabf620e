"""Vertex/edge split and coincidence, and the split connectivities.

A vertex split replaces ``v`` by ``v'`` and ``v''`` whose neighbourhoods
partition ``N(v)``.  An edge split replaces ``uv`` by two disjoint copies
``u'v'`` and ``u''v''``; the other neighbours of ``u`` (resp. ``v``) are
shared out between the two copies.  Coincidence undoes either operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (
    ConditionViolation,
    Disconnected,
    EmptyPartitionSide,
    GraphError,
    OverlappingNeighborhoods,
    SizeLimitExceeded,
    UnknownVertex,
)
from .graph import Graph


@dataclass(frozen=True)
class SplitResult:
    graph: Graph
    provenance: dict[int, int]  # vertex of ``graph`` -> vertex of the original
    created: tuple[int, ...]  # ids of the copies introduced by this split


def _identity_provenance(g: Graph, base: dict[int, int] | None) -> dict[int, int]:
    if base is None:
        return {v: v for v in g}
    return dict(base)


def vertex_split(g: Graph, v: int, partition: tuple[Iterable[int], Iterable[int]],
                 provenance: dict[int, int] | None = None) -> SplitResult:
    """Split ``v``: ``v`` keeps the first part, a new vertex takes the second."""
    if v not in g:
        raise UnknownVertex(v)
    first, second = (set(part) for part in partition)
    if not first or not second:
        raise EmptyPartitionSide(f"both sides of the split of {v} must be nonempty")
    nbrs = set(g.neighbors(v))
    if first & second or first | second != nbrs:
        raise GraphError(f"partition of N({v}) must cover it exactly and be disjoint")
    h = g.copy()
    twin = h.new_vertex()
    for w in g.neighbors(v):
        if w in second:
            eid = h.edge_between(v, w)
            h.remove_edge(eid)
            h.add_edge(twin, w, eid=eid)
    prov = _identity_provenance(g, provenance)
    prov[twin] = prov[v]
    return SplitResult(h, prov, (v, twin))


def vertex_coincide(g: Graph, x: int, y: int) -> Graph:
    """Merge ``y`` into ``x``; needs ``N(x) ∩ N(y) = ∅`` and ``x``, ``y`` non-adjacent."""
    for w in (x, y):
        if w not in g:
            raise UnknownVertex(w)
    if x == y:
        raise GraphError("cannot coincide a vertex with itself")
    if g.has_edge(x, y):
        raise OverlappingNeighborhoods(f"{x} and {y} are adjacent")
    common = set(g.neighbors(x)) & set(g.neighbors(y))
    if common:
        raise OverlappingNeighborhoods(f"common neighbours {sorted(common)}")
    h = g.copy()
    for w in g.neighbors(y):
        eid = h.edge_between(y, w)
        h.remove_edge(eid)
        h.add_edge(x, w, eid=eid)
    h.remove_vertex(y)
    return h


def edge_split(g: Graph, eid: int,
               u_parts: tuple[Iterable[int], Iterable[int]] | None = None,
               v_parts: tuple[Iterable[int], Iterable[int]] | None = None,
               provenance: dict[int, int] | None = None) -> SplitResult:
    """Split edge ``eid = uv`` into ``u'v'`` (old id) and ``u''v''`` (new id).

    ``u_parts`` shares ``N(u) - v`` between ``u'`` and ``u''``; either part may
    be empty since each copy already keeps the duplicated edge.  By default
    ``u'`` keeps all of ``u``'s other neighbours and ``v''`` keeps all of
    ``v``'s, so splitting a bridge separates its two sides.
    """
    u, v = g.endpoints(eid)
    rest_u = [w for w in g.neighbors(u) if w != v]
    rest_v = [w for w in g.neighbors(v) if w != u]
    if u_parts is None:
        u_parts = (rest_u, ())
    if v_parts is None:
        v_parts = ((), rest_v)
    ua, ub = (set(p) for p in u_parts)
    va, vb = (set(p) for p in v_parts)
    if ua & ub or ua | ub != set(rest_u):
        raise GraphError(f"u-partition must cover N({u})-{v} exactly")
    if va & vb or va | vb != set(rest_v):
        raise GraphError(f"v-partition must cover N({v})-{u} exactly")
    h = g.copy()
    u2 = h.new_vertex()
    v2 = h.new_vertex()
    for end, twin, moved in ((u, u2, ub), (v, v2, vb)):
        for w in g.neighbors(end):
            if w in moved:
                e = h.edge_between(end, w)
                h.remove_edge(e)
                h.add_edge(twin, w, eid=e)
    h.add_edge(u2, v2)
    prov = _identity_provenance(g, provenance)
    prov[u2] = prov[u]
    prov[v2] = prov[v]
    return SplitResult(h, prov, (u, v, u2, v2))


def edge_coincide(g: Graph, xy: int, uv: int) -> Graph:
    """Coincide edge ``xy`` with ``uv`` into the single edge ``(x,u)(y,v)``.

    The four checks ``N(x)∩N(u)``, ``N(x)∩N(v)``, ``N(y)∩N(u)``, ``N(y)∩N(v)``
    must all be empty; every failing check is named in the error.
    """
    x, y = g.endpoints(xy)
    u, v = g.endpoints(uv)
    if {x, y} & {u, v}:
        raise GraphError("edges to coincide must not share an endpoint")
    nb = {w: set(g.neighbors(w)) for w in (x, y, u, v)}
    failed = [f"N({a})∩N({b})" for a, b in ((x, u), (x, v), (y, u), (y, v)) if nb[a] & nb[b]]
    if failed:
        raise ConditionViolation(failed)
    h = g.copy()
    h.remove_edge(uv)
    h = vertex_coincide(h, x, u)
    return vertex_coincide(h, y, v)


# split connectivities ------------------------------------------------------

def _valid_split(h: Graph, prov: dict[int, int], special: set[int]) -> bool:
    """Disconnected, and every component has a vertex whose origin is not special."""
    comps = h.components()
    if len(comps) < 2:
        return False
    return all(any(prov[w] not in special for w in comp) for comp in comps)


def _two_way_partitions(items: Sequence[int], allow_empty: bool):
    """Ordered pairs (A, B) covering ``items``; each unordered split once."""
    n = len(items)
    if n == 0:
        if allow_empty:
            yield (), ()
        return
    first, rest = items[0], items[1:]
    for mask in range(1 << (n - 1)):
        a = [first] + [rest[i] for i in range(n - 1) if mask >> i & 1]
        b = [rest[i] for i in range(n - 1) if not mask >> i & 1]
        if b or allow_empty:
            yield tuple(a), tuple(b)
    if allow_empty:
        # the split with the first item on the second side is distinct here
        for mask in range(1 << (n - 1)):
            a = [rest[i] for i in range(n - 1) if mask >> i & 1]
            b = [first] + [rest[i] for i in range(n - 1) if not mask >> i & 1]
            yield tuple(a), tuple(b)


def _split_vertices(g: Graph, vs: Sequence[int], parts: Sequence[tuple]) -> SplitResult:
    """Split ``vs`` in turn; ``parts`` name neighbours in ``g``.

    Earlier splits may have replaced a neighbour by one of its copies, so
    each part is carried through the (preserved) edge ids.
    """
    res = SplitResult(g, {v: v for v in g}, ())
    for v, (a, b) in zip(vs, parts):
        h = res.graph
        cur = [[h.other_end(g.edge_between(v, w), v) for w in side] for side in (a, b)]
        res = vertex_split(h, v, cur, res.provenance)
    return res


def _vertex_witness(g: Graph, vs: Sequence[int]) -> SplitResult | None:
    """Split each ``x`` in ``vs`` into (neighbours in one component of G - vs, rest)."""
    special = set(vs)
    for comp in g.components(removed=vs):
        side = set(comp)
        parts = []
        for x in vs:
            a = [w for w in g.neighbors(x) if w in side]
            b = [w for w in g.neighbors(x) if w not in side]
            if not a or not b:
                break
            parts.append((a, b))
        else:
            res = _split_vertices(g, vs, parts)
            if _valid_split(res.graph, res.provenance, special):
                return res
    return None


def _vertex_raw(g: Graph, vs: Sequence[int], cap: int) -> SplitResult | None:
    """Try every combination of neighbourhood partitions of ``vs``."""
    choices = [list(_two_way_partitions(list(g.neighbors(x)), allow_empty=False)) for x in vs]
    total = 1
    for c in choices:
        total *= len(c)
    if total > cap:
        raise SizeLimitExceeded(f"{total} vertex-split combinations exceed cap {cap}")
    special = set(vs)
    for parts in product(*choices):
        res = _split_vertices(g, vs, parts)
        if _valid_split(res.graph, res.provenance, special):
            return res
    return None


def _check_input(g: Graph) -> None:
    if g.p < 2:
        raise GraphError("split connectivity needs at least two vertices")
    if not g.is_connected():
        raise Disconnected("input graph is disconnected")


def v_split_witness(g: Graph, max_vertices: int = 12, prune: bool = True,
                    raw_cap: int = 200_000) -> tuple[int, SplitResult | None]:
    """Smallest ``k`` with a valid ``k``-vertex split, plus the split itself.

    With ``prune`` a subset ``V*`` is only examined when ``G - V*`` is
    disconnected.  That is sound: the non-split vertices keep all their
    mutual edges, so if they are connected in ``G - V*`` they all land in
    one component of the split graph.  Without ``prune`` every partition
    of every subset is tried (small graphs only).

    Complete graphs admit no valid split; by convention they report
    ``p - 1`` with no witness, matching the usual ``κ(K_p) = p - 1``.
    """
    _check_input(g)
    if g.p > max_vertices:
        raise SizeLimitExceeded(f"{g.p} vertices exceed cap {max_vertices}")
    verts = list(g.vertices)
    for k in range(1, g.p - 1):
        for vs in combinations(verts, k):
            if prune:
                if len(g.components(removed=vs)) < 2:
                    continue
                res = _vertex_witness(g, vs) or _vertex_raw(g, vs, raw_cap)
            else:
                res = _vertex_raw(g, vs, raw_cap)
            if res is not None:
                return k, res
    return g.p - 1, None


def vertex_connectivity(g: Graph) -> int:
    """Standard vertex connectivity κ (networkx's flow-based routine)."""
    import networkx as nx

    return nx.node_connectivity(g.to_networkx())


def edge_connectivity(g: Graph) -> int:
    import networkx as nx

    return nx.edge_connectivity(g.to_networkx())


def v_split_connectivity(g: Graph, max_vertices: int = 12) -> tuple[int, int]:
    """Return ``(γ_vs, κ)`` and assert they agree."""
    gamma, _ = v_split_witness(g, max_vertices=max_vertices)
    kappa = vertex_connectivity(g)
    assert gamma == kappa, f"split connectivity {gamma} != vertex connectivity {kappa}"
    return gamma, kappa


# edge splits

def _split_edges(g: Graph, es: Sequence[int], parts: Sequence[tuple]) -> SplitResult:
    res = SplitResult(g, {v: v for v in g}, ())
    for e, (up, vp) in zip(es, parts):
        res = edge_split(res.graph, e, up, vp, res.provenance)
    return res


def _edge_side_witness(g: Graph, es: Sequence[int], ends: set[int]) -> SplitResult | None:
    """Split each edge so primed copies serve one side and double-primed the other.

    The side of a vertex is that of its component in ``G - ends`` for
    untouched vertices, the side of the copy for split copies, and the
    first side for end vertices not yet split.  Each bipartition of the
    components is tried; the result is checked, never assumed.
    """
    comps = g.components(removed=ends)
    if len(comps) < 2:
        return None
    for mask in range(1, 1 << (len(comps) - 1)):
        side = {}
        for i, comp in enumerate(comps):
            for w in comp:
                side[w] = mask >> i & 1
        res = SplitResult(g, {v: v for v in g}, ())
        copy_side: dict[int, int] = {}
        for e in es:
            h = res.graph
            u, v = h.endpoints(e)
            parts = []
            for end, partner in ((u, v), (v, u)):
                a, b = [], []
                for w in h.neighbors(end):
                    if w == partner:
                        continue
                    if w in copy_side:
                        s = copy_side[w]
                    elif res.provenance[w] in ends:
                        s = 1
                    else:
                        s = side[w]
                    (a if s == 1 else b).append(w)
                parts.append((a, b))
            res = edge_split(h, e, parts[0], parts[1], res.provenance)
            u, v, u2, v2 = res.created
            copy_side.update({u: 1, v: 1, u2: 0, v2: 0})
        if _valid_split(res.graph, res.provenance, ends):
            return res
    return None


def _edge_raw(g: Graph, es: Sequence[int], ends: set[int], cap: int) -> SplitResult | None:
    """Depth-first search over the partitions chosen at each successive split."""
    budget = [cap]

    def rec(res: SplitResult, i: int):
        if i == len(es):
            budget[0] -= 1
            if budget[0] < 0:
                raise SizeLimitExceeded(f"edge-split search exceeded cap {cap}")
            return res if _valid_split(res.graph, res.provenance, ends) else None
        h = res.graph
        u, v = h.endpoints(es[i])
        ru = [w for w in h.neighbors(u) if w != v]
        rv = [w for w in h.neighbors(v) if w != u]
        for up in _two_way_partitions(ru, allow_empty=True):
            for vp in _two_way_partitions(rv, allow_empty=True):
                found = rec(edge_split(h, es[i], up, vp, res.provenance), i + 1)
                if found is not None:
                    return found
        return None

    return rec(SplitResult(g, {v: v for v in g}, ()), 0)


def e_split_witness(g: Graph, max_edges: int = 12, raw_cap: int = 100_000
                    ) -> tuple[int | None, SplitResult | None]:
    """Smallest ``k`` with a valid ``k``-edge split, or ``(None, None)``.

    Only edge sets whose end set ``W`` disconnects ``G - W`` are examined;
    the argument is the same as for vertex splits.  Some graphs (``P_3``,
    complete graphs) admit no valid edge split at all.
    """
    _check_input(g)
    if g.q > max_edges:
        raise SizeLimitExceeded(f"{g.q} edges exceed cap {max_edges}")
    eids = list(g.edge_ids)
    for k in range(1, g.q + 1):
        for es in combinations(eids, k):
            ends = {w for e in es for w in g.endpoints(e)}
            if len(g.components(removed=ends)) < 2:
                continue
            res = _edge_side_witness(g, es, ends) or _edge_raw(g, es, ends, raw_cap)
            if res is not None:
                return k, res
    return None, None


def e_split_connectivity(g: Graph, max_edges: int = 12) -> int | None:
    return e_split_witness(g, max_edges=max_edges)[0]
