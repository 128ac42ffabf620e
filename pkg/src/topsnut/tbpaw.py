"""TB-paw generators: walk a labelled graph and write labels down in order.

Every generator returns a :class:`TbPaw` whose tokens are the labels in
visit order.  ``kind="vv"`` writes vertex labels only; ``kind="vev"``
interleaves edge labels.

Block structure shared by the neighbour methods: a vertex ``u`` with body
``v_1 .. v_m`` gives ``f(u) f(v_1) .. f(v_m) f(u)`` (vv) or
``f(u) f(uv_1) f(v_1) .. f(uv_m) f(v_m) f(u)`` (vev).  Bodies hold the
non-spine neighbours only; in vev output the spine edge between two
consecutive blocks is written once, between them.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    MissingLabel,
    NonDecodable,
    NotACycle,
    NotALobster,
    NotAPath,
    NotASpider,
    NotATree,
    NotAWalk,
    SchemeViolation,
    TbPawError,
)
from .euler import euler_cycle_decomposition, non_euler_path_decomposition
from .graph import Graph
from .lcg import Lcg
from .paw import TbPaw, render_token, uplus_all
from .trees import caterpillar_spine, is_caterpillar, spider_body

KINDS = ("vv", "vev")


@dataclass(frozen=True)
class NeighborPolicy:
    """How a block orders its body.

    ``mini``: ascending labels; ``maxi``: descending; ``explicit``: the
    vertex lists in ``orders`` (vertices not listed fall back to mini).
    Equal labels break by vertex id.
    """

    mode: str = "mini"
    orders: Mapping[int, Sequence[int]] = field(default_factory=dict)

    def arrange(self, u: int, body, label) -> list[int]:
        body = list(body)
        if self.mode == "explicit" and u in self.orders:
            order = list(self.orders[u])
            if sorted(order) != sorted(body):
                raise TbPawError(f"explicit order for {u} is not a permutation of {sorted(body)}")
            return order
        if self.mode == "maxi":
            return sorted(body, key=lambda v: (_neg(_key(label(v))), v))
        if self.mode in ("mini", "explicit"):
            return sorted(body, key=lambda v: (_key(label(v)), v))
        raise TbPawError(f"unknown policy {self.mode!r}")


MINI = NeighborPolicy("mini")
MAXI = NeighborPolicy("maxi")


def _key(tok):
    return tuple(sorted(tok)) if isinstance(tok, frozenset) else (tok,)


def _neg(key):
    return tuple(-x for x in key)


class _Labels:
    def __init__(self, g: Graph, lab):
        self.g = g
        self.f = lab.vertex_labels
        self.h = getattr(lab, "edge_labels", {})

    def v(self, x):
        try:
            return self.f[x]
        except KeyError:
            raise MissingLabel(f"vertex {x} has no label") from None

    def e(self, a, b):
        eid = self.g.edge_between(a, b)
        if eid is None:
            raise NotAWalk(f"{a} and {b} are not adjacent")
        try:
            return self.h[eid]
        except KeyError:
            raise MissingLabel(f"edge {a}-{b} has no label") from None


def _check_kind(kind):
    if kind not in KINDS:
        raise TbPawError(f"kind must be one of {KINDS}")


def _block(lb: _Labels, u, body, kind) -> list:
    toks = [lb.v(u)]
    for v in body:
        if kind == "vev":
            toks.append(lb.e(u, v))
        toks.append(lb.v(v))
    toks.append(lb.v(u))
    return toks


# path and path-neighbour methods ------------------------------------------------

def path_method(g: Graph, lab, path: Sequence[int], kind: str = "vv") -> TbPaw:
    """``f(u_1) f(u_2) ..`` along a walk; vev puts ``f(u_i u_{i+1})`` between."""
    _check_kind(kind)
    path = list(path)
    if not path:
        raise NotAWalk("empty walk")
    for x in path:
        if x not in g:
            raise NotAWalk(f"{x} is not a vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise NotAWalk(f"{a} and {b} are not adjacent")
    lb = _Labels(g, lab)
    toks = [lb.v(path[0])]
    for a, b in zip(path, path[1:]):
        if kind == "vev":
            toks.append(lb.e(a, b))
        toks.append(lb.v(b))
    return TbPaw.of(toks, method="path", kind=kind)


def _check_path(g: Graph, spine: Sequence[int]) -> None:
    if not spine or len(set(spine)) != len(spine) or any(x not in g for x in spine):
        raise NotAPath(f"{list(spine)} is not a path of the graph")
    for a, b in zip(spine, spine[1:]):
        if not g.has_edge(a, b):
            raise NotAPath(f"{a} and {b} are not adjacent")


def neighbor_bodies(g: Graph, spine: Sequence[int]) -> dict[int, list[int]]:
    """Body of each spine vertex: its neighbours off the spine."""
    on = set(spine)
    return {u: [v for v in g.neighbors(u) if v not in on] for u in spine}


def _default_spine(g: Graph) -> list[int]:
    if not is_caterpillar(g):
        raise NotAPath("no spine given and the graph is not a caterpillar")
    return caterpillar_spine(g)


def path_neighbor_method(g: Graph, lab, spine: Sequence[int] | None = None,
                         policy: NeighborPolicy = MINI, kind: str = "vv") -> TbPaw:
    """Blocks ``f(u_i) <body> f(u_i)`` concatenated along the spine."""
    _check_kind(kind)
    spine = _default_spine(g) if spine is None else list(spine)
    _check_path(g, spine)
    lb = _Labels(g, lab)
    bodies = neighbor_bodies(g, spine)
    toks: list = []
    for i, u in enumerate(spine):
        if i and kind == "vev":
            toks.append(lb.e(spine[i - 1], u))
        toks += _block(lb, u, policy.arrange(u, bodies[u], lb.v), kind)
    return TbPaw.of(toks, method="path-neighbor", kind=kind, policy=policy.mode)


def path_neighbor_count(g: Graph, spine: Sequence[int]) -> int:
    """``prod (m_i)!`` body orderings."""
    return math.prod(math.factorial(len(b)) for b in neighbor_bodies(g, spine).values())


# cycle-neighbour method ----------------------------------------------------------

def _cycle_bodies(g: Graph, cycle: Sequence[int]) -> dict[int, list[int]]:
    """Neighbours of ``u_i`` other than ``u_{i-1}, u_{i+1}`` along ``u_1 .. u_n``.

    The closing edge ``u_n u_1`` therefore lands in the bodies of both ends.
    """
    n = len(cycle)
    out = {}
    for i, u in enumerate(cycle):
        skip = {cycle[j] for j in (i - 1, i + 1) if 0 <= j < n}
        out[u] = [v for v in g.neighbors(u) if v not in skip]
    return out


def _check_cycle(g: Graph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle needs at least 3 distinct vertices")
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if a not in g or b not in g or not g.has_edge(a, b):
            raise NotACycle(f"{a} and {b} are not adjacent")


def cycle_neighbor_method(g: Graph, lab, cycle: Sequence[int], start: int = 0,
                          policy: NeighborPolicy = MINI, kind: str = "vv") -> tuple[TbPaw, int]:
    """Blocks around ``u_1 .. u_n u_1`` from ``cycle[start]``, start block repeated last.

    Returns the TB-paw and ``n (m_1+1)! (m_n+1)! prod m_i!``, the number of
    (start, body order) variants.
    """
    _check_kind(kind)
    cycle = list(cycle)
    _check_cycle(g, cycle)
    n = len(cycle)
    if not 0 <= start < n:
        raise NotACycle(f"start index {start} outside 0..{n - 1}")
    lb = _Labels(g, lab)
    bodies = _cycle_bodies(g, cycle)
    arranged = {u: policy.arrange(u, bodies[u], lb.v) for u in cycle}
    walk = [cycle[(start + i) % n] for i in range(n + 1)]
    chord = frozenset((cycle[0], cycle[-1]))
    toks: list = []
    for i, u in enumerate(walk):
        if i and kind == "vev" and frozenset((walk[i - 1], u)) != chord:
            toks.append(lb.e(walk[i - 1], u))
        toks += _block(lb, u, arranged[u], kind)
    return TbPaw.of(toks, method="cycle-neighbor", kind=kind, start=start), cycle_variant_count(g, cycle)


def cycle_variant_count(g: Graph, cycle: Sequence[int]) -> int:
    _check_cycle(g, cycle)
    bodies = _cycle_bodies(g, cycle)
    return len(cycle) * math.prod(math.factorial(len(b)) for b in bodies.values())


# lobster-neighbour method --------------------------------------------------------

def lobster_neighbor_method(t: Graph, lab, new_leaves=None, spine: Sequence[int] | None = None,
                            policy: NeighborPolicy = MINI, kind: str = "vv") -> TbPaw:
    """Caterpillar blocks with each vertex's added leaves written right after it.

    ``new_leaves`` are the leaves whose removal leaves the caterpillar ``H``
    (default: every leaf of ``t``).  A vertex ``x`` with added leaves
    ``a_1 .. a_c`` contributes ``f(a_1) .. f(a_c) f(x)`` (vv) or
    ``f(x a_1) f(a_1) .. f(x a_c) f(a_c) f(x)`` (vev) after ``f(x)``.
    """
    _check_kind(kind)
    if not t.is_tree():
        raise NotALobster("not a tree")
    extra = set(t.leaves()) if new_leaves is None else set(new_leaves)
    if any(x not in t or t.degree(x) != 1 for x in extra):
        raise NotALobster("every added vertex must be a leaf of the lobster")
    h = t.subgraph(v for v in t if v not in extra)
    if h.p == 0 or not is_caterpillar(h):
        raise NotALobster("removing the added leaves does not leave a caterpillar")
    spine = caterpillar_spine(h) if spine is None else list(spine)
    _check_path(h, spine)
    lb = _Labels(t, lab)
    added = {x: [a for a in t.neighbors(x) if a in extra] for x in h}
    bodies = neighbor_bodies(h, spine)

    def hair(x):
        leaves = policy.arrange(x, added[x], lb.v)
        if not leaves:
            return []
        out = []
        for a in leaves:
            if kind == "vev":
                out.append(lb.e(x, a))
            out.append(lb.v(a))
        return out + [lb.v(x)]

    toks: list = []
    for i, u in enumerate(spine):
        if i and kind == "vev":
            toks.append(lb.e(spine[i - 1], u))
        toks.append(lb.v(u))
        toks += hair(u)
        for v in policy.arrange(u, bodies[u], lb.v):
            if kind == "vev":
                toks.append(lb.e(u, v))
            toks.append(lb.v(v))
            toks += hair(v)
        toks.append(lb.v(u))
    return TbPaw.of(toks, method="lobster-neighbor", kind=kind, policy=policy.mode)


# spider-neighbour method ---------------------------------------------------------

def spider_parts(s: Graph) -> tuple[int, list[int], list[list[int]]]:
    """``(body, direct leaves, legs)``; each leg is listed from the body outwards."""
    if not s.is_tree():
        raise NotASpider("not a tree")
    u0 = spider_body(s)
    if u0 is None:
        raise NotASpider("no unique vertex of degree at least 3")
    leaves, legs = [], []
    for v in s.neighbors(u0):
        if s.degree(v) == 1:
            leaves.append(v)
            continue
        leg, prev = [v], u0
        while s.degree(leg[-1]) == 2:
            nxt = next(w for w in s.neighbors(leg[-1]) if w != prev)
            prev = leg[-1]
            leg.append(nxt)
        if s.degree(leg[-1]) != 1:
            raise NotASpider("a leg branches")
        legs.append(leg)
    return u0, leaves, legs


def spider_neighbor_method(s: Graph, lab, order: Sequence[int] | None = None,
                           kind: str = "vv") -> tuple[TbPaw, int]:
    """Start at the body; leaves are written directly, each leg re-anchored at the body.

    ``order`` permutes the ``k + n`` items, each named by the body's
    neighbour that starts it (a leaf or a leg's first vertex); by default
    leaves come first, then legs, both by ascending label.  Returns the
    TB-paw and ``(k + n)!``.
    """
    _check_kind(kind)
    u0, leaves, legs = spider_parts(s)
    lb = _Labels(s, lab)
    by_start = {leg[0]: leg for leg in legs}
    if order is None:
        asc = lambda xs: sorted(xs, key=lambda v: (_key(lb.v(v)), v))  # noqa: E731
        order = asc(leaves) + asc(by_start)
    order = list(order)
    if sorted(order) != sorted(leaves + list(by_start)):
        raise TbPawError("order must permute the body's neighbours")
    toks = [lb.v(u0)]
    for x in order:
        if x in by_start:
            toks.append(lb.v(u0))
            leg = by_start[x]
            if kind == "vev":
                toks.append(lb.e(u0, leg[0]))
            toks.append(lb.v(leg[0]))
            for a, b in zip(leg, leg[1:]):
                if kind == "vev":
                    toks.append(lb.e(a, b))
                toks.append(lb.v(b))
        else:
            if kind == "vev":
                toks.append(lb.e(u0, x))
            toks.append(lb.v(x))
    if kind == "vv" and not legs:
        toks.append(lb.v(u0))
    count = math.factorial(len(leaves) + len(legs))
    return TbPaw.of(toks, method="spider-neighbor", kind=kind, order=tuple(order)), count


# Euler-Hamilton method ------------------------------------------------------------

def _trail_tokens(lb: _Labels, vertices, closed: bool) -> list:
    toks = [lb.v(vertices[0])]
    seq = list(vertices) + ([vertices[0]] if closed else [])
    for a, b in zip(seq, seq[1:]):
        toks += [lb.e(a, b), lb.v(b)]
    return toks


def euler_hamilton_method(g: Graph, lab, permutation: Sequence[int] | None = None,
                          prefix: int | None = None) -> TbPaw:
    """vev blocks of edge-disjoint cycles (or open trails for non-Euler graphs).

    Each cycle ``v_0 .. v_{l-1}`` is written ``f(v_0) f(v_0v_1) f(v_1) .. f(v_0)``.
    ``permutation`` orders the pieces; ``prefix = j`` keeps only the first
    ``j`` of them.
    """
    lb = _Labels(g, lab)
    if all(g.degree(v) % 2 == 0 for v in g):
        pieces = [_trail_tokens(lb, c.vertices, True) for c in euler_cycle_decomposition(g)]
    else:
        pieces = [_trail_tokens(lb, tr.vertices, False) for tr in non_euler_path_decomposition(g)]
    m = len(pieces)
    perm = list(range(m)) if permutation is None else list(permutation)
    if sorted(perm) != list(range(m)):
        raise TbPawError(f"permutation must reorder the {m} pieces")
    if prefix is not None:
        if not 1 <= prefix <= m:
            raise TbPawError(f"prefix must be in 1..{m}")
        perm = perm[:prefix]
    return uplus_all(TbPaw.of(pieces[i], method="euler-hamilton", piece=i) for i in perm)


def euler_piece_count(g: Graph) -> int:
    if all(g.degree(v) % 2 == 0 for v in g):
        return len(euler_cycle_decomposition(g))
    return len(non_euler_path_decomposition(g))


# multiple edge-meaning ------------------------------------------------------------

def _segments(t: Graph, root: int, f) -> list[list[int]]:
    """Children of the root in ascending label order, leaf runs grouped."""
    kids = sorted(t.neighbors(root), key=lambda v: (_key(f[v]), v))
    out: list[list[int]] = []
    for c in kids:
        if t.degree(c) == 1 and out and t.degree(out[-1][-1]) == 1:
            out[-1].append(c)
        else:
            out.append([c])
    return out


def multiple_meaning_emit(t: Graph, lab, start: int | None = None,
                          check: bool = True) -> list[TbPaw]:
    """One vev TB-paw per edge rule of a multiple edge-meaning labelling.

    Traversal is a preorder from ``start`` (default: largest degree,
    smallest id) with children in ascending label order.  The root's
    children are grouped into segments, a run of leaves sharing one, and
    each segment restarts at the root label.
    """
    from .labelling import multiple_meaning_edges, verify

    if not t.is_tree():
        raise NotATree("multiple-meaning emission walks a tree")
    f = lab.vertex_labels
    if check:
        rep = verify(t, lab, "multiple-meaning")
        if not rep.passed:
            raise SchemeViolation(f"not a multiple edge-meaning labelling: {rep.violated_clauses}")
    if start is None:
        start = min(t, key=lambda v: (-t.degree(v), v))
    if start not in t:
        raise TbPawError(f"unknown start vertex {start}")
    rules = multiple_meaning_edges(t, f)
    out = []
    for r in range(1, 6):
        e = rules[r]

        def below(parent, v, toks):
            toks += [e[t.edge_between(parent, v)], f[v]]
            for c in sorted((w for w in t.neighbors(v) if w != parent), key=lambda w: (_key(f[w]), w)):
                below(v, c, toks)

        toks: list = []
        if t.q == 0:
            toks.append(f[start])
        for seg in _segments(t, start, f):
            toks.append(f[start])
            for c in seg:
                below(start, c, toks)
        out.append(TbPaw.of(toks, method="multiple-meaning", rule=r, start=start))
    return out


# noise ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Substitute:
    """Replace every token that renders to a table value by its letter."""

    table: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "table", {str(k): str(v) for k, v in self.table.items()})

    def validate(self) -> None:
        for k, v in self.table.items():
            if len(k) != 1 or k.isdigit():
                raise NonDecodable(f"key {k!r} must be one non-digit character")
            if not v or not v.isdigit():
                raise NonDecodable(f"value {v!r} must be a nonempty digit string")
        vals = list(self.table.values())
        for i, a in enumerate(vals):
            for j, b in enumerate(vals):
                if i != j and b.startswith(a):
                    raise NonDecodable(f"{a!r} is a prefix of {b!r}")


@dataclass(frozen=True)
class InsertLetters:
    """Insert ``count`` seeded random lowercase letters at seeded positions."""

    seed: int
    count: int | None = None


def noise_encode(d: TbPaw, scheme_: Substitute | InsertLetters) -> str:
    if isinstance(scheme_, Substitute):
        scheme_.validate()
        inverse = {v: k for k, v in scheme_.table.items()}
        return "".join(inverse.get(render_token(t), render_token(t)) for t in d.tokens)
    text = list(d.rendered)
    rng = Lcg(scheme_.seed)
    count = max(1, len(text) // 4) if scheme_.count is None else scheme_.count
    for _ in range(count):
        pos = rng.below(len(text) + 1)
        text.insert(pos, string.ascii_lowercase[rng.below(26)])
    return "".join(text)


def noise_decode(s: str, scheme_: Substitute | InsertLetters) -> TbPaw:
    """Undo the noise.

    Token boundaries do not survive rendering, so the result has one token
    per digit; it equals the original at the rendered level.
    """
    if isinstance(scheme_, Substitute):
        scheme_.validate()
        toks = []
        for ch in s:
            if ch in scheme_.table:
                toks += [int(c) for c in scheme_.table[ch]]
            elif ch.isdigit():
                toks.append(int(ch))
            else:
                raise NonDecodable(f"unexpected character {ch!r}")
        return TbPaw.of(toks, noise="substitute")
    return TbPaw.of((int(ch) for ch in s if ch.isdigit()), noise="insert-letters")
