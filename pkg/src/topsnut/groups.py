"""Every-zero graphic groups and labellings of graphs by their elements.

An element ``H_i`` (``i`` in ``1..n``) of ``F_n(H, f)`` is the base graph
with vertex labels ``f(x) + i - 1 (mod n)``; edge labels stay those of
``f``.  Elements are handled by index.  Under the zero ``H_k``,
``H_i + H_j = H_{i+j-k (mod n)}`` with residue 0 read as ``n``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .errors import (
    BadOrder,
    DegenerateParameters,
    GroupError,
    IndexOutOfRange,
    NoCycleColoring,
    NotATree,
    NotGroupLabelled,
    SequenceLengthMismatch,
)
from .graph import Graph, complete_bipartite
from .labelling import Labelling
from .matrix import Route, TopsnutMatrix, extract
from .paw import TbPaw


def wrap(x: int, n: int) -> int:
    """``x mod n`` in ``1..n``."""
    r = x % n
    return n if r == 0 else r


def add(n: int, i: int, j: int, k: int) -> int:
    """``H_i + H_j`` under the zero ``H_k`` in a group of order ``n``."""
    for x in (i, j, k):
        if not 1 <= x <= n:
            raise IndexOutOfRange(f"index {x} outside 1..{n}")
    return wrap(i + j - k, n)


def inverse(n: int, i: int, k: int) -> int:
    """The ``j`` with ``H_i + H_j = H_k``."""
    return wrap(2 * k - i, n)


def _shift(tok, s: int, n: int):
    if isinstance(tok, frozenset):
        return frozenset((x + s) % n for x in tok)
    return (tok + s) % n


@dataclass(frozen=True)
class EveryZeroGraphicGroup:
    base: Graph
    f: Labelling
    n: int

    def element(self, i: int) -> Labelling:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"element {i} outside 1..{self.n}")
        return Labelling({x: _shift(v, i - 1, self.n) for x, v in self.f.vertex_labels.items()},
                         dict(self.f.edge_labels), self.f.scheme)

    def add(self, i: int, j: int, k: int) -> int:
        return add(self.n, i, j, k)

    def axiom_violations(self, zeros: Sequence[int] | None = None) -> list[str]:
        """Check the defining identity ``h_i + h_j - h_k = h_{i+j-k}`` on every
        vertex, plus the zero, inverse, commutative and associative laws."""
        n = self.n
        zeros = range(1, n + 1) if zeros is None else zeros
        labels = {i: self.element(i).vertex_labels for i in range(1, n + 1)}
        bad = []
        for k in zeros:
            for i in range(1, n + 1):
                if add(n, i, k, k) != i:
                    bad.append(f"zero {k}: H_{i} + H_{k} != H_{i}")
                if add(n, i, inverse(n, i, k), k) != k:
                    bad.append(f"zero {k}: no inverse for H_{i}")
                for j in range(1, n + 1):
                    s = add(n, i, j, k)
                    if s != add(n, j, i, k):
                        bad.append(f"zero {k}: H_{i}, H_{j} do not commute")
                    for x in self.base:
                        a, b, c, d = labels[i][x], labels[j][x], labels[k][x], labels[s][x]
                        if isinstance(a, int) and (a + b - c - d) % n:
                            bad.append(f"zero {k}: identity fails at vertex {x} for ({i},{j})")
                            break
        k = next(iter(zeros), 1)
        for i, j, m in product(range(1, n + 1), repeat=3):
            if add(n, add(n, i, j, k), m, k) != add(n, i, add(n, j, m, k), k):
                bad.append(f"zero {k}: ({i},{j},{m}) not associative")
                break
        return bad


def build_group(h: Graph, f: Labelling, n: int, check: bool = True) -> EveryZeroGraphicGroup:
    """``F_n(h, f)``; the axioms are checked on construction (all zeros when
    ``n <= 32``, the zero ``H_1`` otherwise)."""
    if n < 2:
        raise BadOrder(f"group order must be at least 2, got {n}")
    missing = [v for v in h if v not in f.vertex_labels]
    if missing:
        raise GroupError(f"base labelling misses vertices {missing}")
    grp = EveryZeroGraphicGroup(h, f, n)
    if check:
        bad = grp.axiom_violations(None if n <= 32 else [1])
        if bad:
            raise GroupError("; ".join(bad[:5]))
    return grp


def _order(grp) -> int:
    return grp if isinstance(grp, int) else grp.n


# group labellings --------------------------------------------------------------

@dataclass
class GroupLabelling:
    host: Graph
    n: int
    zero: int
    vertex_index: dict[int, int]
    edge_index: dict[int, int]
    sequence: tuple[int, ...] = ()

    @property
    def kind(self) -> str:
        vals = list(self.vertex_index.values())
        return "group-labelling" if len(set(vals)) == len(vals) else "group-coloring"

    def violations(self) -> list[str]:
        bad = []
        for v in self.host:
            if v not in self.vertex_index:
                bad.append(f"vertex {v} unassigned")
        for e, u, v in self.host.edges:
            if e not in self.edge_index:
                bad.append(f"edge {e} unassigned")
                continue
            if u in self.vertex_index and v in self.vertex_index:
                want = wrap(self.vertex_index[u] + self.vertex_index[v] - self.zero, self.n)
                if self.edge_index[e] != want:
                    bad.append(f"edge {e}: index {self.edge_index[e]}, rule gives {want}")
        for x in list(self.vertex_index.values()) + list(self.edge_index.values()):
            if not 1 <= x <= self.n:
                bad.append(f"index {x} outside 1..{self.n}")
        if self.sequence and Counter(self.edge_index.values()) != Counter(self.sequence):
            bad.append("edge indices differ from the prescribed sequence")
        return bad

    @property
    def valid(self) -> bool:
        return not self.violations()

    def shifted(self, s: int) -> "GroupLabelling":
        """Every vertex and edge index moved up by ``s`` (mod ``n``).

        The zero moves too: ``(u+s) + (v+s) - (k+s) = uv + s``.
        """
        n = self.n
        return GroupLabelling(self.host, n, wrap(self.zero + s, n),
                              {v: wrap(i + s, n) for v, i in self.vertex_index.items()},
                              {e: wrap(i + s, n) for e, i in self.edge_index.items()},
                              tuple(wrap(i + s, n) for i in self.sequence))


def tree_group_coloring(t: Graph, grp, sequence, zero: int = 1,
                        start: int | None = None) -> GroupLabelling:
    """Label a tree so the edge indices are exactly ``sequence``.

    The start vertex gets the zero; a breadth-first sweep then hands the
    sequence to edges in discovery order (or uses ``sequence`` directly if
    it maps edge ids to indices) and solves ``index(v) = index(uv) + k -
    index(u) (mod n)`` for each newly reached vertex.
    """
    n = _order(grp)
    if not t.is_tree():
        raise NotATree("tree group-colouring needs a tree")
    if not 1 <= zero <= n:
        raise IndexOutOfRange(f"zero {zero} outside 1..{n}")
    if isinstance(sequence, Mapping):
        if set(sequence) != set(t.edge_ids):
            raise SequenceLengthMismatch("edge map must cover every edge exactly")
        given = dict(sequence)
        seq = tuple(given[e] for e in t.edge_ids)
    else:
        seq = tuple(sequence)
        if len(seq) != t.q:
            raise SequenceLengthMismatch(f"sequence has {len(seq)} entries, tree has {t.q} edges")
        given = None
    for s in seq:
        if not 1 <= s <= n:
            raise IndexOutOfRange(f"sequence entry {s} outside 1..{n}")
    start = min(t.vertices) if start is None else start
    if start not in t:
        raise GroupError(f"unknown start vertex {start}")
    vidx = {start: zero}
    eidx: dict[int, int] = {}
    feed = iter(seq)
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in t.neighbors(u):
            if v in vidx:
                continue
            e = t.edge_between(u, v)
            eidx[e] = given[e] if given is not None else next(feed)
            vidx[v] = wrap(eidx[e] + zero - vidx[u], n)
            queue.append(v)
    return GroupLabelling(t, n, zero, vidx, eidx, seq)


def zero_choices(t: Graph, grp, sequence, start: int | None = None) -> list[GroupLabelling]:
    """One tree group-colouring per choice of zero."""
    return [tree_group_coloring(t, grp, sequence, k, start) for k in range(1, _order(grp) + 1)]


def complete_bipartite_group_labelling(m: int, n_cols: int, grp, a: int, b: int
                                       ) -> tuple[Graph, GroupLabelling]:
    """``K_{m,n}`` with edge indices ``a, a+b, .., a+(mn-1)b`` under the zero ``H_a``.

    ``u_1 -> H_a``, ``v_j -> H_{a+(j-1)b}``, ``u_{k+1} -> H_{a+knb}``.  The
    graph uses vertices ``0..m-1`` for the ``u`` side.
    """
    order = _order(grp)
    if m < 1 or n_cols < 1:
        raise DegenerateParameters("both sides need a vertex")
    if b % order == 0:
        raise DegenerateParameters("step b is 0 modulo the group order")
    a = wrap(a, order)
    g = complete_bipartite(m, n_cols)
    vidx = {k: wrap(a + k * n_cols * b, order) for k in range(m)}
    vidx.update({m + j: wrap(a + j * b, order) for j in range(n_cols)})
    eidx = {e: wrap(vidx[u] + vidx[v] - a, order) for e, u, v in g.edges}
    seq = tuple(wrap(a + i * b, order) for i in range(m * n_cols))
    return g, GroupLabelling(g, order, a, vidx, eidx, seq)


def _core_vertices(g: Graph) -> list[int]:
    """What is left after repeatedly deleting leaves: the cycle of a ring."""
    deg = {v: g.degree(v) for v in g}
    gone = set()
    queue = deque(v for v in g if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v in gone:
            continue
        gone.add(v)
        for w in g.neighbors(v):
            if w not in gone:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return [v for v in g if v not in gone]


def _label_core(g: Graph, core: Sequence[int], n: int, zero: int, pool: Sequence[int],
                distinct: bool) -> dict[int, int] | None:
    order: list[int] = []
    seen = set()
    for s in core:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.neighbors(x):
                if y in core and y not in seen:
                    seen.add(y)
                    queue.append(y)
    core_set = set(core)
    need = Counter(pool)
    assign: dict[int, int] = {}

    def back(i: int) -> bool:
        if i == len(order):
            return not +need
        x = order[i]
        for val in range(1, n + 1):
            if distinct and val in assign.values():
                continue
            used = []
            ok = True
            for y in g.neighbors(x):
                if y in assign and y in core_set:
                    e = wrap(val + assign[y] - zero, n)
                    if need[e] <= 0:
                        ok = False
                        break
                    need[e] -= 1
                    used.append(e)
            if ok:
                assign[x] = val
                if back(i + 1):
                    return True
                del assign[x]
            for e in used:
                need[e] += 1
        return False

    return dict(assign) if back(0) else None


def ring_like_group_labelling(g: Graph, grp, sequence: Sequence[int], core_sequence=None,
                              zero: int = 1, core: Sequence[int] | None = None,
                              max_core: int = 8) -> GroupLabelling:
    """Group-label a ring-like network: its core first, then the hanging trees.

    ``core`` defaults to the unique cycle (what survives repeated leaf
    deletion); a generalized ring-like network passes its core explicitly.
    The core takes ``core_sequence`` (default: the first ``|E(core)|``
    entries) by exhaustive search, preferring distinct vertex indices; the
    rest of ``sequence`` goes to the tree edges outward from the core.
    """
    n = _order(grp)
    seq = list(sequence)
    if len(seq) != g.q:
        raise SequenceLengthMismatch(f"sequence has {len(seq)} entries, network has {g.q} edges")
    core = _core_vertices(g) if core is None else list(core)
    core_set = set(core)
    core_edges = [e for e, u, v in g.edges if u in core_set and v in core_set]
    if not core:
        raise NoCycleColoring("network has no core")
    if len(core) > max_core:
        raise NoCycleColoring(f"core of {len(core)} vertices exceeds the search bound {max_core}")
    star = list(core_sequence) if core_sequence is not None else seq[:len(core_edges)]
    if len(star) != len(core_edges):
        raise SequenceLengthMismatch("core sequence must match the core edge count")
    rest = Counter(seq)
    rest.subtract(star)
    if any(c < 0 for c in rest.values()):
        raise SequenceLengthMismatch("core sequence is not a subsequence of the sequence")
    assign = (_label_core(g, core, n, zero, star, True)
              or _label_core(g, core, n, zero, star, False))
    if assign is None:
        raise NoCycleColoring("no core colouring realises the core sequence")
    vidx = dict(assign)
    eidx = {e: wrap(vidx[u] + vidx[v] - zero, n) for e, u, v in g.edges if e in core_edges}
    tail = []
    for s in seq:
        if rest[s] > 0:
            rest[s] -= 1
            tail.append(s)
    feed = iter(tail)
    queue = deque(v for v in g if v in core_set)
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            e = g.edge_between(u, v)
            if e in eidx:
                continue
            if v in vidx:
                raise NotATree("the part outside the core is not a forest")
            eidx[e] = next(feed)
            vidx[v] = wrap(eidx[e] + zero - vidx[u], n)
            queue.append(v)
    return GroupLabelling(g, n, zero, vidx, eidx, tuple(seq))


# matrix and TB-paw groups --------------------------------------------------------

@dataclass(frozen=True)
class MatrixGroup:
    base: TopsnutMatrix
    n: int

    def element(self, i: int) -> TopsnutMatrix:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"element {i} outside 1..{self.n}")
        s = i - 1
        return TopsnutMatrix(tuple(_shift(x, s, self.n) for x in self.base.X), self.base.W,
                             tuple(_shift(y, s, self.n) for y in self.base.Y))

    def add(self, i: int, j: int, k: int) -> int:
        return add(self.n, i, j, k)

    def elements(self) -> list[TopsnutMatrix]:
        return [self.element(i) for i in range(1, self.n + 1)]

    def violations(self) -> list[str]:
        """Entrywise ``A_i + A_j - A_k = A_{i+j-k}`` on X and Y, W shared."""
        n = self.n
        els = {i: self.element(i) for i in range(1, n + 1)}
        bad = []
        for i, j, k in product(range(1, n + 1), repeat=3):
            s = add(n, i, j, k)
            for row in ("X", "Y"):
                for a, b, c, d in zip(*(getattr(els[x], row) for x in (i, j, k, s))):
                    if isinstance(a, int) and (a + b - c - d) % n:
                        bad.append(f"{row} row breaks for ({i},{j},{k})")
                        break
        if any(els[i].W != self.base.W for i in els):
            bad.append("W row not shared")
        return bad


def matrix_group(a: TopsnutMatrix, n: int) -> MatrixGroup:
    if n < 2:
        raise BadOrder(f"group order must be at least 2, got {n}")
    return MatrixGroup(a, n)


def tbpaw_group(mg: MatrixGroup, route: Route) -> list[TbPaw]:
    """One fixed route applied to every element: ``D(A_1) .. D(A_n)``."""
    return [extract(m, route) for m in mg.elements()]


# groups over encrypted networks ------------------------------------------------

@dataclass
class NetworkGroup:
    """``F_n(N, g)``: the element ``N_s`` moves every index of the base
    group labelling up by ``s - 1``."""

    labelling: GroupLabelling
    n: int
    networks: list = field(default_factory=list)

    def element(self, s: int) -> GroupLabelling:
        if not 1 <= s <= self.n:
            raise IndexOutOfRange(f"element {s} outside 1..{self.n}")
        return self.labelling.shifted(s - 1)

    def add(self, i: int, j: int, k: int) -> int:
        return add(self.n, i, j, k)

    def violations(self) -> list[str]:
        n = self.n
        els = {s: self.element(s) for s in range(1, n + 1)}
        bad = []
        for i, j, k in product(range(1, n + 1), repeat=3):
            s = add(n, i, j, k)
            for part in ("vertex_index", "edge_index"):
                A, B, C, D = (getattr(els[x], part) for x in (i, j, k, s))
                if any(add(n, A[w], B[w], C[w]) != D[w] for w in A):
                    bad.append(f"{part} breaks for ({i},{j},{k})")
        return bad


def derived_group_from_network(net) -> NetworkGroup:
    """Shift every block index of an encrypted network; the shifted copies form a group."""
    gl = net.assignment
    bad = gl.violations()
    if bad:
        raise NotGroupLabelled("; ".join(bad[:3]))
    out = NetworkGroup(gl, gl.n)
    out.networks = [net.reindexed(out.element(s)) for s in range(1, gl.n + 1)]
    return out
