"""Encrypted networks: replace every host vertex and edge by a group element.

A host graph ``G`` with a group-colouring ``F`` over ``F_n(H, h)`` becomes
one flat graph.  Each vertex ``u`` and edge ``uv`` of ``G`` is a copy of
``H`` labelled by its element (a *block*), and each host edge ``uv`` adds
two join edges, ``F(u)``–``F(uv)`` and ``F(uv)``–``F(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

from .errors import BadSteps, GraphError, InvalidColoring, NotAWalk
from .graph import Graph, format_graph, parse_graph
from .groups import EveryZeroGraphicGroup, GroupLabelling, tree_group_coloring, wrap
from .labelling import Labelling
from .lcg import Lcg
from .matrix import extract, from_graph, met
from .paw import TbPaw, uplus_all
from .spantree import (
    spanning_tree_degree_preserve,
    spanning_tree_max_leaf,
    spanning_tree_predefined,
)


@dataclass
class Block:
    kind: str  # "v" or "e"
    host: int  # host vertex or host edge id
    index: int
    vertices: dict[int, int]  # base vertex -> expanded vertex
    parent: int | None = None  # self-similar growth: position of the block it came from

    @property
    def name(self) -> str:
        return f"H{self.index}"


@dataclass(frozen=True)
class JoinEdge:
    a: int
    b: int
    eid: int
    host_edge: int
    label: int | None = None


JoinPolicy = Callable[[Block, Block], tuple[int, int]]


def smallest_id_policy(x: Block, y: Block) -> tuple[int, int]:
    return min(x.vertices), min(y.vertices)


smallest_id_policy.policy_name = "smallest-id"


def seeded_policy(seed: int) -> JoinPolicy:
    """Uniform random endpoints, drawn in join order from one seeded stream."""
    rng = Lcg(seed)

    def pick(x: Block, y: Block) -> tuple[int, int]:
        return rng.choice(sorted(x.vertices)), rng.choice(sorted(y.vertices))

    pick.policy_name = f"seeded:{seed}"
    return pick


def _policy_name(policy) -> str:
    return getattr(policy, "policy_name", getattr(policy, "__name__", "custom"))


@dataclass
class EncryptedNetwork:
    host: Graph
    group: EveryZeroGraphicGroup
    assignment: GroupLabelling
    blocks: dict[tuple[str, int], Block]
    join_edges: list[JoinEdge]
    expanded: Graph
    labels: Labelling
    provenance: dict = field(default_factory=dict)

    def vertex_block(self, u: int) -> Block:
        return self.blocks["v", u]

    def edge_block(self, e: int) -> Block:
        return self.blocks["e", e]

    def reindexed(self, gl: GroupLabelling) -> "EncryptedNetwork":
        """Same host, joins and layout; block labels follow a new assignment."""
        blocks = {}
        for key, b in self.blocks.items():
            i = gl.vertex_index[b.host] if b.kind == "v" else gl.edge_index[b.host]
            blocks[key] = replace(b, index=i)
        vl = {}
        for b in blocks.values():
            el = self.group.element(b.index).vertex_labels
            vl.update({x: el[v] for v, x in b.vertices.items()})
        labels = Labelling(vl, dict(self.labels.edge_labels))
        return replace(self, assignment=gl, blocks=blocks, labels=labels)


def encrypt_network(g: Graph, grp: EveryZeroGraphicGroup, coloring: GroupLabelling,
                    join_policy: JoinPolicy | None = None,
                    join_labels: str = "none") -> EncryptedNetwork:
    """Flatten ``g`` into blocks joined along host incidences.

    ``join_labels="consecutive"`` numbers the join edges ``1 .. 2|E(g)|``
    in creation order; ``"none"`` leaves them unlabelled.
    """
    if coloring.host is not g and (set(coloring.host.vertices) != set(g.vertices)
                                   or coloring.host.edge_set() != g.edge_set()):
        raise InvalidColoring("colouring belongs to another graph")
    if coloring.n != grp.n:
        raise InvalidColoring(f"colouring uses order {coloring.n}, group has {grp.n}")
    bad = coloring.violations()
    if bad:
        raise InvalidColoring("; ".join(bad[:3]))
    if join_labels not in ("none", "consecutive"):
        raise ValueError(f"unknown join labelling {join_labels!r}")
    policy = join_policy or smallest_id_policy
    base = grp.base
    out = Graph()
    vl: dict[int, int] = {}
    el: dict[int, int] = {}
    blocks: dict[tuple[str, int], Block] = {}

    def place(kind: str, host: int, index: int) -> None:
        elem = grp.element(index)
        vmap = {}
        for v in base:
            x = out.new_vertex()
            vmap[v] = x
            vl[x] = elem.vertex_labels[v]
        for e, u, v in base.edges:
            eid = out.add_edge(vmap[u], vmap[v])
            if e in elem.edge_labels:
                el[eid] = elem.edge_labels[e]
        blocks[kind, host] = Block(kind, host, index, vmap)

    for u in g:
        place("v", u, coloring.vertex_index[u])
    for e, _, _ in g.edges:
        place("e", e, coloring.edge_index[e])
    joins = []
    for e, u, v in g.edges:
        for x, y in ((blocks["v", u], blocks["e", e]), (blocks["e", e], blocks["v", v])):
            a, b = policy(x, y)
            eid = out.add_edge(x.vertices[a], y.vertices[b])
            label = len(joins) + 1 if join_labels == "consecutive" else None
            if label is not None:
                el[eid] = label
            joins.append(JoinEdge(x.vertices[a], y.vertices[b], eid, e, label))
    return EncryptedNetwork(g, grp, coloring, blocks, joins, out, Labelling(vl, el),
                            {"join_policy": _policy_name(policy), "join_labels": join_labels})


def network_violations(net: EncryptedNetwork) -> list[str]:
    """Structural checks: block count, one join per incidence, colouring rule."""
    bad = list(net.assignment.violations())
    host, p = net.host, net.group.base.p
    if len(net.blocks) != host.p + host.q:
        bad.append(f"{len(net.blocks)} blocks for {host.p + host.q} host elements")
    owner = {}
    for key, b in net.blocks.items():
        if len(b.vertices) != p:
            bad.append(f"block {key} has {len(b.vertices)} vertices")
        want = net.assignment.vertex_index if b.kind == "v" else net.assignment.edge_index
        if want.get(b.host) != b.index:
            bad.append(f"block {key} carries H{b.index}")
        owner.update({x: key for x in b.vertices.values()})
    for e, u, v in host.edges:
        for x, y in ((("v", u), ("e", e)), (("e", e), ("v", v))):
            hits = [j for j in net.join_edges
                    if {owner.get(j.a), owner.get(j.b)} == {x, y} and j.host_edge == e]
            if len(hits) != 1:
                bad.append(f"host edge {e}: {len(hits)} joins between {x} and {y}")
    internal = (host.p + host.q) * net.group.base.q
    if net.expanded.q != internal + len(net.join_edges):
        bad.append("expanded edge count differs from blocks plus joins")
    if net.expanded.p != (host.p + host.q) * p:
        bad.append("expanded vertex count differs from blocks times block size")
    return bad


# TB-paws of networks ---------------------------------------------------------

@dataclass(frozen=True)
class Accounting:
    parts: tuple[tuple[str, int], ...]

    @property
    def total(self) -> int:
        return sum(n for _, n in self.parts)

    def by_kind(self) -> dict[str, int]:
        out = {"blocks": 0, "joins": 0}
        for name, n in self.parts:
            out["blocks" if name.startswith("H") else "joins"] += n
        return out


def account(components: Sequence[tuple[str, str]]) -> Accounting:
    """Byte count per component; a byte is one rendered decimal character."""
    return Accounting(tuple((name, len(s)) for name, s in components))


@dataclass(frozen=True)
class Emission:
    tbpaw: TbPaw
    components: tuple[tuple[str, str], ...]
    accounting: Accounting


def default_block_route(base: Graph, lab: Labelling) -> TbPaw:
    """The block's matrix read along the first snake route."""
    m = from_graph(base, lab)
    return extract(m, met(1, m.q))


def emit_tbpaw(net: EncryptedNetwork, traversal: Sequence[int] | None = None,
               block_route: Callable[[Graph, Labelling], TbPaw] | None = None) -> Emission:
    """Concatenate block and join strings.

    With a host walk ``w_0 w_1 ..`` the output is ``D(F(w_0))`` followed,
    per step, by the join into the edge block, the edge block, the join out
    and the next vertex block.  Without one every host edge contributes
    ``D(F(u)) D(join) D(F(uv)) D(join) D(F(v))`` in edge-id order.
    """
    route = block_route or default_block_route
    base = net.group.base
    cache: dict[int, TbPaw] = {}

    def block(b: Block) -> tuple[str, TbPaw]:
        if b.index not in cache:
            cache[b.index] = route(base, net.group.element(b.index))
        return b.name, cache[b.index]

    joins = {(j.host_edge, frozenset((j.a, j.b))): j for j in net.join_edges}
    owner = {x: key for key, b in net.blocks.items() for x in b.vertices.values()}

    def join(x: Block, y: Block, e: int) -> tuple[str, TbPaw]:
        for (he, ends), j in joins.items():
            if he == e and {owner[a] for a in ends} == {(x.kind, x.host), (y.kind, y.host)}:
                a, b = (j.a, j.b) if owner[j.a] == (x.kind, x.host) else (j.b, j.a)
                toks = [net.labels.vertex_labels[a]]
                if j.label is not None:
                    toks.append(j.label)
                toks.append(net.labels.vertex_labels[b])
                return f"a{x.index}a{y.index}", TbPaw.of(toks)
        raise GraphError(f"no join between {x.name} and {y.name}")

    host = net.host
    parts: list[tuple[str, TbPaw]] = []

    def step(u: int, e: int, v: int) -> None:
        bu, be, bv = net.vertex_block(u), net.edge_block(e), net.vertex_block(v)
        parts.extend([join(bu, be, e), block(be), join(be, bv, e), block(bv)])

    if traversal is None:
        if host.q == 0:
            parts.append(block(net.vertex_block(min(host.vertices))))
        for e, u, v in host.edges:
            parts.append(block(net.vertex_block(u)))
            step(u, e, v)
    else:
        walk = list(traversal)
        if not walk or any(w not in host for w in walk):
            raise NotAWalk("traversal must list host vertices")
        parts.append(block(net.vertex_block(walk[0])))
        for u, v in zip(walk, walk[1:]):
            e = host.edge_between(u, v)
            if e is None:
                raise NotAWalk(f"{u} and {v} are not adjacent in the host")
            step(u, e, v)
    comps = tuple((name, p.rendered) for name, p in parts)
    paw = uplus_all(p for _, p in parts)
    return Emission(TbPaw(paw.tokens, {"network": True, "parts": [n for n, _ in comps]}),
                    comps, account(comps))


# dynamic networks --------------------------------------------------------------

@dataclass(frozen=True)
class Snapshot:
    t: int
    graph: Graph


def parse_snapshot(text: str) -> Snapshot:
    """A graph file preceded by a ``t <timestep>`` line."""
    lines = text.splitlines()
    for i, raw in enumerate(lines):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if line[0] != "t" or len(line) != 2:
            raise GraphError(f"snapshot must start with 't <timestep>', got {raw!r}")
        return Snapshot(int(line[1]), parse_graph("\n".join(lines[i + 1:])))
    raise GraphError("empty snapshot")


def format_snapshot(s: Snapshot) -> str:
    return f"t {s.t}\n" + format_graph(s.graph)


def pick_spanning_tree(g: Graph, algo: str, rng: Lcg, required=None, k=None) -> Graph:
    if algo == "A":
        return spanning_tree_max_leaf(g)[0]
    if algo == "B":
        if required is None:
            required = rng.sample(sorted(g.vertices), min(2, g.p))
        _, aug = spanning_tree_predefined(g, required)
        return aug.subgraph(g.vertices)
    if algo == "C":
        if g.is_tree():
            return g.copy()
        if k is None:
            k = (g.min_degree() + g.max_degree()) // 2
        return spanning_tree_degree_preserve(g, k)
    raise ValueError(f"unknown spanning tree algorithm {algo!r}")


def pipeline_encrypt(snapshot, grp: EveryZeroGraphicGroup, tree_algo: str = "A", seed: int = 0,
                     required=None, k: int | None = None,
                     join_policy: JoinPolicy | None = None) -> EncryptedNetwork:
    """Spanning tree, then a seeded tree group-colouring, then the flat network.

    The edge-index sequence is ``1 .. |E(T)|`` reduced into ``1..n`` and
    shuffled; zero and start vertex are drawn from the same stream.  The
    emitted TB-paw (one block-join-block run per tree edge) is stored in
    ``provenance["emission"]``.
    """
    g = snapshot.graph if isinstance(snapshot, Snapshot) else snapshot
    if not g.is_connected():
        raise GraphError("snapshot must be connected")
    rng = Lcg(seed)
    t = pick_spanning_tree(g, tree_algo, rng, required, k)
    seq = [wrap(i, grp.n) for i in range(1, t.q + 1)]
    rng.shuffle(seq)
    zero = 1 + rng.below(grp.n)
    start = rng.choice(sorted(t.vertices))
    gl = tree_group_coloring(t, grp, seq, zero, start)
    net = encrypt_network(t, grp, gl, join_policy)
    em = emit_tbpaw(net)
    net.provenance.update(tree_algo=tree_algo, seed=seed, zero=zero, start=start,
                          sequence=tuple(seq), emission=em,
                          t=getattr(snapshot, "t", None))
    return net


def format_network(net: EncryptedNetwork) -> str:
    """Host edges, block assignments and join edges, one item per line."""
    rows = [f"host {net.host.p} {net.host.q} order {net.group.n} zero {net.assignment.zero}"]
    rows += [f"edge {e} {u} {v}" for e, u, v in net.host.edges]
    rows += [f"block {b.kind} {b.host} H{b.index}" for b in net.blocks.values()]
    rows += [f"join {j.host_edge} {j.a} {j.b}" + ("" if j.label is None else f" {j.label}")
             for j in net.join_edges]
    return "\n".join(rows) + "\n"


# self-similar networks ---------------------------------------------------------

@dataclass
class SelfSimilarSeries:
    generations: list[Graph]
    unlabelled: list[frozenset[int]]  # join-edge ids, stable across generations
    labelled: list[int]  # number of block-internal edges per generation
    blocks: list[list[Block]]
    labels: list[Labelling]

    def block_rule_violations(self, grp: EveryZeroGraphicGroup) -> list[str]:
        """Every block must carry its element's labels, and the children of a
        block ``H_i`` must form a group-colouring of ``H`` under the zero ``H_i``."""
        bad = []
        n, f = grp.n, grp.f.vertex_labels
        for gen, bl in enumerate(self.blocks):
            have = self.labels[gen].vertex_labels
            for b in bl:
                if any(have[x] != (f[v] + b.index - 1) % n for v, x in b.vertices.items()):
                    bad.append(f"generation {gen + 1}: block {b.name} mislabelled")
            parents = self.blocks[gen - 1] if gen else [Block("v", 0, 1, {})]
            kids: dict[int, dict] = {}
            for b in bl:
                kids.setdefault(b.parent, {})[b.kind, b.host] = b.index
            for pos, par in enumerate(parents):
                got = kids.get(pos, {})
                vi = {v: got.get(("v", v)) for v in grp.base}
                gl = GroupLabelling(grp.base, n, par.index, vi,
                                    {e: got.get(("e", e)) for e in grp.base.edge_ids})
                if any(x is None for x in vi.values()) or gl.violations():
                    bad.append(f"generation {gen + 1}: children of block {pos} break the rule")
        return bad


def self_similar_generate(h: Graph, f: Labelling, grp: EveryZeroGraphicGroup, steps: int,
                          join_policy: JoinPolicy | None = None) -> SelfSimilarSeries:
    """Grow ``G_1 .. G_steps``.

    Start from ``H`` itself as one block ``H_1``.  Each step colours every
    block ``H_i`` under its own zero ``H_i`` (vertex ``x`` gets
    ``H_{h_i(x)}``, edges follow the group rule), expands it into an
    encrypted network, and reattaches the old join edges between the
    policy-chosen vertices of the blocks that replaced their endpoints.
    """
    if steps < 1:
        raise BadSteps(f"steps must be at least 1, got {steps}")
    policy = join_policy or smallest_id_policy
    n = grp.n
    fv = f.vertex_labels
    # current state: graph, blocks, join edges keyed by stable id
    g = Graph()
    vmap = {v: g.new_vertex() for v in h}
    for _, u, v in h.edges:
        g.add_edge(vmap[u], vmap[v])
    blocks = [Block("v", 0, 1, vmap)]
    joins: dict[int, tuple[int, int]] = {}
    series = SelfSimilarSeries([], [], [], [], [])
    next_join = 0
    for _ in range(steps):
        new = Graph()
        vl: dict[int, int] = {}
        el: dict[int, int] = {}
        new_blocks: list[Block] = []
        replaced: dict[int, Block] = {}  # old vertex -> new block that replaced it
        new_joins: dict[int, tuple[int, int]] = {}

        def place(index: int, kind: str, host: int, parent: int) -> Block:
            elem = grp.element(index)
            m = {}
            for v in h:
                m[v] = new.new_vertex()
                vl[m[v]] = elem.vertex_labels[v]
            for e, u, v in h.edges:
                eid = new.add_edge(m[u], m[v])
                if e in elem.edge_labels:
                    el[eid] = elem.edge_labels[e]
            b = Block(kind, host, index, m, parent)
            new_blocks.append(b)
            return b

        for pos, b in enumerate(blocks):
            cv = {v: wrap(fv[v] + b.index - 1, n) for v in h}
            vb = {v: place(cv[v], "v", v, pos) for v in h}
            for v in h:
                replaced[b.vertices[v]] = vb[v]
            for e, u, v in h.edges:
                eb = place(wrap(cv[u] + cv[v] - b.index, n), "e", e, pos)
                for x, y in ((vb[u], eb), (eb, vb[v])):
                    a, c = policy(x, y)
                    new.add_edge(x.vertices[a], y.vertices[c])
                    new_joins[next_join] = (x.vertices[a], y.vertices[c])
                    next_join += 1
        for jid, (a, c) in joins.items():
            x, y = replaced[a], replaced[c]
            pa, pc = policy(x, y)
            new.add_edge(x.vertices[pa], y.vertices[pc])
            new_joins[jid] = (x.vertices[pa], y.vertices[pc])
        g, blocks, joins = new, new_blocks, new_joins
        series.generations.append(g)
        series.unlabelled.append(frozenset(joins))
        series.labelled.append(len(blocks) * h.q)
        series.blocks.append(blocks)
        series.labels.append(Labelling(vl, el))
    return series
