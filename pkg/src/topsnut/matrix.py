"""Topsnut-matrices: the 3 x q array (X; W; Y) of a labelled graph.

Column ``i`` lists one end label ``x_i``, the edge label ``e_i`` and the
other end label ``y_i``.  A *route* is an ordering of the ``3q`` cells; a
TB-paw is what you read off a matrix along a route.

Cells are addressed as ``(row, col)`` with rows ``0 = X``, ``1 = W``,
``2 = Y`` and columns ``0 .. q-1``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import (
    BadPermutation,
    IndexOutOfRange,
    InconsistentSharedLabels,
    MatrixError,
    MissingLabel,
    NegativeArgument,
    RouteSizeMismatch,
)
from .graph import Graph
from .paw import TbPaw, Token, render_token

X, W, Y = 0, 1, 2
Cell = tuple[int, int]


@dataclass(frozen=True)
class TopsnutMatrix:
    X: tuple[Token, ...]
    W: tuple[Token, ...]
    Y: tuple[Token, ...]

    def __post_init__(self):
        if not len(self.X) == len(self.W) == len(self.Y):
            raise MatrixError(f"row lengths differ: {len(self.X)}, {len(self.W)}, {len(self.Y)}")

    @classmethod
    def from_columns(cls, cols: Iterable[tuple[Token, Token, Token]]) -> "TopsnutMatrix":
        cols = list(cols)
        return cls(tuple(c[0] for c in cols), tuple(c[1] for c in cols), tuple(c[2] for c in cols))

    @property
    def q(self) -> int:
        return len(self.W)

    @property
    def rows(self) -> tuple[tuple[Token, ...], ...]:
        return (self.X, self.W, self.Y)

    def columns(self) -> list[tuple[Token, Token, Token]]:
        return list(zip(self.X, self.W, self.Y))

    def cell(self, c: Cell) -> Token:
        return self.rows[c[0]][c[1]]

    def __str__(self) -> str:
        return format_matrix(self).rstrip("\n")


def _labels(g: Graph, lab) -> tuple[dict, dict]:
    f = lab.vertex_labels if hasattr(lab, "vertex_labels") else lab.vertex_sets
    h = lab.edge_labels if hasattr(lab, "edge_labels") else lab.edge_sets
    missing = [f"v{v}" for v in g if v not in f] + [f"e{e}" for e in g.edge_ids if e not in h]
    if missing:
        raise MissingLabel(f"unlabelled: {missing}")
    return f, h


def from_graph(g: Graph, lab, edge_order: Sequence[int] | None = None,
               orientation: Sequence[int] | None = None) -> TopsnutMatrix:
    """Matrix of ``(g, lab)``.

    ``edge_order`` lists edge ids column by column (default: insertion
    order).  Orientation bit 0 puts the first stored endpoint in X, bit 1
    puts it in Y.
    """
    f, h = _labels(g, lab)
    order = list(g.edge_ids) if edge_order is None else list(edge_order)
    if sorted(order) != sorted(g.edge_ids) or len(set(order)) != len(order):
        raise BadPermutation(f"{order} is not a permutation of the edge ids")
    bits = [0] * len(order) if orientation is None else list(orientation)
    if len(bits) != len(order) or any(b not in (0, 1) for b in bits):
        raise BadPermutation(f"orientation must be {len(order)} bits")
    cols = []
    for e, b in zip(order, bits):
        u, v = g.endpoints(e)
        if b:
            u, v = v, u
        cols.append((_freeze(f[u]), _freeze(h[e]), _freeze(f[v])))
    return TopsnutMatrix.from_columns(cols)


def _freeze(x):
    return frozenset(x) if isinstance(x, (set, frozenset)) else x


def to_graph(m: TopsnutMatrix):
    """Rebuild ``(graph, labelling)`` with one vertex per distinct end label.

    Faithful whenever the source vertex labelling is injective.
    """
    from .labelling import Labelling

    index: dict = {}
    for t in m.X + m.Y:
        index.setdefault(t, len(index))
    g = Graph(range(len(index)))
    edge_labels = {}
    for x, e, y in m.columns():
        eid = g.add_edge(index[x], index[y])
        edge_labels[eid] = e
    return g, Labelling({i: t for t, i in index.items()}, edge_labels)


def enumerate_matrices(g: Graph, lab) -> Iterator[TopsnutMatrix]:
    """Every (edge order, orientation) matrix; ``q! * 2^q`` of them."""
    for order in permutations(g.edge_ids):
        for bits in product((0, 1), repeat=g.q):
            yield from_graph(g, lab, order, bits)


# routes ---------------------------------------------------------------------

@dataclass(frozen=True)
class Route:
    kind: str
    cells: tuple[Cell, ...]
    q: int
    lines: tuple[tuple[Cell, ...], ...] = field(default=(), compare=False)

    def reciprocal(self) -> "Route":
        """The same cells read backwards, giving the reversed token string."""
        lines = tuple(tuple(reversed(line)) for line in reversed(self.lines))
        return Route(f"{self.kind}^-1", self.cells[::-1], self.q, lines)

    def mirrored(self) -> "Route":
        """The route applied to the column-reversed matrix."""
        flip = lambda c: (c[0], self.q - 1 - c[1])  # noqa: E731
        lines = tuple(tuple(flip(c) for c in line) for line in self.lines)
        return Route(self.kind + "'", tuple(flip(c) for c in self.cells), self.q, lines)


def _met1(q):
    # x_1..x_q, then back along W, then forward along Y: one continuous fold-line
    return [(X, i) for i in range(q)] + [(W, i) for i in reversed(range(q))] + [(Y, i) for i in range(q)]


def _met3(q):
    out = []
    for i in range(q):
        col = [(X, i), (W, i), (Y, i)]
        out += col if i % 2 == 0 else col[::-1]
    return out


def _met5(q):
    def x_group(k):
        return [1] if k == 1 else [2 * k - 2, 2 * k - 1]

    def y_group(k):
        return [2, 1] if k == 1 else [2 * k - 1, 2 * k]

    def fits(group):
        return all(1 <= i <= q for i in group)

    out, used = [], set()

    def take(row, idx):
        for i in idx:
            out.append((row, i - 1))
            used.add((row, i - 1))

    if fits(y_group(1)):
        take(Y, y_group(1))
        j, kx, ky, use_x = 1, 1, 2, True
        while j <= q:
            group = x_group(kx) if use_x else y_group(ky)
            if not fits(group):
                break
            take(W, [j])
            take(X if use_x else Y, group)
            if use_x:
                kx += 1
            else:
                ky += 1
            use_x = not use_x
            j += 1
    for row in (X, Y, W):
        out += [(row, i) for i in range(q) if (row, i) not in used]
    return out


def met(n: int, q: int) -> Route:
    """Met-1 ... Met-6 on a matrix with ``q`` columns.

    Met-1/3/5 are the I-, II- and III-routes; Met-2/4/6 are the same routes
    run on the column-reversed matrix.
    """
    if q < 1:
        raise RouteSizeMismatch("q must be positive")
    base = {1: _met1, 3: _met3, 5: _met5}
    if n in base:
        return Route(f"Met{n}", tuple(base[n](q)), q)
    if n in (2, 4, 6):
        r = met(n - 1, q).mirrored()
        return Route(f"Met{n}", r.cells, q)
    raise RouteSizeMismatch(f"no Met-{n}")


def permutation_route(sigma: Sequence, q: int) -> Route:
    """Route from a bijection on the cells.

    ``sigma`` lists either cells or flat indices ``row * q + col``.
    """
    cells = [divmod(s, q) if isinstance(s, int) else tuple(s) for s in sigma]
    universe = {(r, c) for r in range(3) for c in range(q)}
    if len(cells) != 3 * q or set(cells) != universe:
        raise BadPermutation("not a bijection on the 3q cells")
    return Route("permutation", tuple(cells), q)


def _adjacent(a: Cell, b: Cell) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def fold_line_route(lines: Sequence[Sequence[Cell]], q: int) -> Route:
    """Route made of fold-lines read one after another.

    Each line is a chain of axis-parallel unit steps; lines are disjoint and
    together cover every cell.
    """
    lines = tuple(tuple(tuple(c) for c in line) for line in lines)
    flat = [c for line in lines for c in line]
    universe = {(r, c) for r in range(3) for c in range(q)}
    if len(flat) != 3 * q or set(flat) != universe:
        raise BadPermutation("fold-lines must be disjoint and cover the 3q cells")
    for line in lines:
        if not line:
            raise BadPermutation("empty fold-line")
        for a, b in zip(line, line[1:]):
            if not _adjacent(a, b):
                raise BadPermutation(f"{a} -> {b} is not a unit step")
    return Route("fold-lines", tuple(flat), q, lines)


def is_fold_line(route: Route) -> bool:
    """Whether the whole route is one continuous fold-line."""
    return all(_adjacent(a, b) for a, b in zip(route.cells, route.cells[1:]))


def extract(m: TopsnutMatrix, route: Route, vv: bool = False) -> TbPaw:
    """Read ``m`` along ``route``; ``vv`` drops the edge row."""
    if route.q != m.q or len(route.cells) != 3 * m.q:
        raise RouteSizeMismatch(f"route for q={route.q}, matrix has q={m.q}")
    cells = [c for c in route.cells if not (vv and c[0] == W)]
    return TbPaw.of((m.cell(c) for c in cells), route=route.kind, vv=vv)


# matrix operations ------------------------------------------------------------

def _check_index(m: TopsnutMatrix, *idx: int) -> None:
    for i in idx:
        if not 1 <= i <= m.q:
            raise IndexOutOfRange(f"column {i} outside 1..{m.q}")


def column_exchange(m: TopsnutMatrix, i: int, j: int) -> TopsnutMatrix:
    """``c_(i,j)``: swap columns ``i`` and ``j`` (1-based)."""
    _check_index(m, i, j)
    cols = m.columns()
    cols[i - 1], cols[j - 1] = cols[j - 1], cols[i - 1]
    return TopsnutMatrix.from_columns(cols)


def xy_exchange(m: TopsnutMatrix, i: int) -> TopsnutMatrix:
    """``l_(i)``: swap ``x_i`` and ``y_i`` (1-based)."""
    _check_index(m, i)
    cols = m.columns()
    x, e, y = cols[i - 1]
    cols[i - 1] = (y, e, x)
    return TopsnutMatrix.from_columns(cols)


def reciprocal(m: TopsnutMatrix) -> TopsnutMatrix:
    return TopsnutMatrix(m.X[::-1], m.W[::-1], m.Y[::-1])


def exchange_sequence(a: TopsnutMatrix, b: TopsnutMatrix, max_states: int = 200_000):
    """Shortest list of ``("c", i, j)`` / ``("l", i)`` steps turning ``a`` into ``b``.

    Breadth-first over the operation graph; ``None`` if ``b`` is unreachable.
    """
    if a.q != b.q:
        return None
    q = a.q
    moves = [("c", i, j) for i in range(1, q + 1) for j in range(i + 1, q + 1)]
    moves += [("l", i) for i in range(1, q + 1)]
    prev = {a: None}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            steps = []
            while prev[cur] is not None:
                cur, mv = prev[cur]
                steps.append(mv)
            return steps[::-1]
        for mv in moves:
            nxt = column_exchange(cur, mv[1], mv[2]) if mv[0] == "c" else xy_exchange(cur, mv[1])
            if nxt not in prev:
                prev[nxt] = (cur, mv)
                if len(prev) > max_states:
                    raise MatrixError("exchange search exceeded its state budget")
                queue.append(nxt)
    return None


def apply_exchanges(m: TopsnutMatrix, steps) -> TopsnutMatrix:
    for mv in steps:
        m = column_exchange(m, mv[1], mv[2]) if mv[0] == "c" else xy_exchange(m, mv[1])
    return m


# composition ------------------------------------------------------------------

def _ends(col) -> frozenset:
    return frozenset((col[0], col[2]))


def _norm(col):
    x, e, y = col
    return (e, _ends(col))


def _shared_conflicts(ms: Sequence[TopsnutMatrix]) -> list:
    """Edge labels carried by two components with different end pairs."""
    seen: dict = {}
    bad = []
    for k, m in enumerate(ms):
        for col in m.columns():
            e = col[1]
            if e in seen and seen[e][0] != k and seen[e][1] != _ends(col):
                bad.append(e)
            seen.setdefault(e, (k, _ends(col)))
    return bad


def compose(ms: Sequence[TopsnutMatrix], op: str = "odot") -> TopsnutMatrix:
    """Combine component matrices column-wise.

    ``odot`` reverses vertex splits: components share end labels but no
    edges, so a repeated edge label across components is an error.
    ``ominus`` reverses edge splits: a column present in several components
    is kept once; an edge label reappearing with other ends is an error.
    """
    if op not in ("odot", "ominus"):
        raise MatrixError(f"unknown composition {op!r}")
    ms = list(ms)
    if not ms:
        raise MatrixError("nothing to compose")
    if op == "odot":
        owners: dict = {}
        for k, m in enumerate(ms):
            for e in m.W:
                owners.setdefault(e, set()).add(k)
        bad = [e for e, ks in owners.items() if len(ks) > 1]
        if bad:
            raise InconsistentSharedLabels(f"edge labels in several components: {sorted(map(str, bad))}")
        return TopsnutMatrix.from_columns(c for m in ms for c in m.columns())
    bad = _shared_conflicts(ms)
    if bad:
        raise InconsistentSharedLabels(f"shared edge labels disagree on their ends: {bad}")
    cols, kept = [], set()
    for m in ms:
        for col in m.columns():
            key = _norm(col)
            if key not in kept:
                kept.add(key)
                cols.append(col)
    return TopsnutMatrix.from_columns(cols)


def decompose(combined: TopsnutMatrix, part: TopsnutMatrix, op: str = "odot",
              shared: Iterable[Token] = ()) -> TopsnutMatrix:
    """Inverse composition: the columns of ``combined`` not owned by ``part``.

    For ``ominus`` the columns whose edge label is in ``shared`` belong to
    both sides and are kept.
    """
    if op not in ("odot", "ominus"):
        raise MatrixError(f"unknown composition {op!r}")
    keep_shared = set(shared) if op == "ominus" else set()
    remaining = {}
    for col in combined.columns():
        remaining.setdefault(_norm(col), []).append(col)
    for col in part.columns():
        key = _norm(col)
        if not remaining.get(key):
            raise InconsistentSharedLabels(f"column {col} of the part is not in the combined matrix")
        if col[1] not in keep_shared:
            remaining[key].pop()
    out = []
    for col in combined.columns():
        key = _norm(col)
        if remaining.get(key):
            out.append(col)
            remaining[key].pop(0)
    return TopsnutMatrix.from_columns(out)


def edge_matrix(g: Graph, lab, e: int, flip: bool = False) -> TopsnutMatrix:
    """The 3 x 1 matrix ``A(e) = (x e y)^T``."""
    return from_graph(g.subgraph(g.endpoints(e)), lab, [e], [int(flip)])


def per_edge_compose(g: Graph, lab, order: Sequence[int] | None = None) -> tuple[TopsnutMatrix, TbPaw]:
    """Stack the per-edge matrices in ``order``; also return ``x e y x e y ...``."""
    order = list(g.edge_ids) if order is None else list(order)
    if sorted(order) != sorted(g.edge_ids):
        raise BadPermutation(f"{order} is not a permutation of the edge ids")
    m = compose([edge_matrix(g, lab, e) for e in order], "odot")
    paw = TbPaw.of((t for col in m.columns() for t in col), route="per-edge", order=tuple(order))
    return m, paw


# structural predicates --------------------------------------------------------

def structural_predicates(m: TopsnutMatrix) -> dict[str, bool]:
    """Column-level criteria read straight off the matrix.

    * simple: no column repeats (either orientation);
    * connected: columns chain together through shared end labels;
    * touching: every column shares an end label with another column;
    * graceful / odd-graceful: ``e_i = |x_i - y_i|`` with edge set
      ``[1,q]`` / ``[1,2q-1]^o``, end labels in ``[0,q]`` / ``[0,2q-1]`` with 0 used;
    * elegant: ``e_i = x_i + y_i (mod q)`` with edge set ``[0,q-1]``;
    * odd-elegant: ``e_i = x_i + y_i (mod 2q)`` with edge set ``[1,2q-1]^o``.
    """
    cols = m.columns()
    q = m.q
    keys = [_norm(c) for c in cols]
    simple = len(set(keys)) == len(keys)

    parent = list(range(q))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict = {}
    for i, c in enumerate(cols):
        for t in (c[0], c[2]):
            if t in owner:
                parent[find(i)] = find(owner[t])
            else:
                owner[t] = i
    connected = q > 0 and len({find(i) for i in range(q)}) == 1
    touching = q == 1 or all(
        any(_ends(c) & _ends(d) for j, d in enumerate(cols) if j != i) for i, c in enumerate(cols))

    ints = all(isinstance(t, int) for c in cols for t in c)
    es = [c[1] for c in cols]
    odd_range = set(range(1, 2 * q, 2))
    diff = ints and all(e == abs(x - y) for x, e, y in cols)
    xs = {t for c in cols for t in (c[0], c[2])} if ints else set()
    # vertex labels must sit in [0, top] with 0 used
    in_range = lambda top: bool(xs) and min(xs) == 0 and max(xs) <= top  # noqa: E731
    graceful = diff and set(es) == set(range(1, q + 1)) and in_range(q)
    odd_graceful = diff and set(es) == odd_range and in_range(2 * q - 1)
    elegant = ints and q > 0 and all(e == (x + y) % q for x, e, y in cols) and set(es) == set(range(q))
    odd_elegant = ints and all(e == (x + y) % (2 * q) for x, e, y in cols) and set(es) == odd_range
    return {
        "simple": simple,
        "connected": connected,
        "touching": touching,
        "graceful": graceful,
        "odd-graceful": odd_graceful,
        "elegant": elegant,
        "odd-elegant": odd_elegant,
    }


# fold-line census -------------------------------------------------------------

def _grid(q: int) -> dict[Cell, list[Cell]]:
    cells = [(r, c) for r in range(3) for c in range(q)]
    return {a: [b for b in cells if _adjacent(a, b)] for a in cells}


def simple_paths(q: int, min_cells: int = 2) -> list[tuple[Cell, ...]]:
    """Every directed simple path of the 3 x q grid with at least ``min_cells`` cells."""
    adj = _grid(q)
    out = []

    def grow(path, seen):
        if len(path) >= min_cells:
            out.append(tuple(path))
        for b in adj[path[-1]]:
            if b not in seen:
                seen.add(b)
                path.append(b)
                grow(path, seen)
                path.pop()
                seen.discard(b)

    for a in sorted(adj):
        grow([a], {a})
    return out


def fold_line_census(q: int, min_cells: int = 2) -> dict[int, int]:
    """``N_fL(m)``: sets of ``m`` directed fold-lines partitioning the grid.

    Exact cover over the simple paths; the undirected cover count is
    multiplied by ``2^m`` for the directions.
    """
    if q < 1:
        raise NegativeArgument("q must be positive")
    cells = sorted(_grid(q))
    # paths as cell sets; several different paths can share a cell set
    by_first: dict[Cell, list[frozenset]] = {}
    seen_paths = set()
    for path in simple_paths(q, min_cells):
        key = min(path, path[::-1])
        if key in seen_paths:
            continue
        seen_paths.add(key)
        by_first.setdefault(min(key), []).append(frozenset(key))
    counts: dict[int, int] = {}

    def cover(free: frozenset, m: int):
        if not free:
            counts[m] = counts.get(m, 0) + 2 ** m
            return
        first = min(free)
        for s in by_first.get(first, []):
            if s <= free:
                cover(free - s, m + 1)

    cover(frozenset(cells), 0)
    return dict(sorted(counts.items()))


def hamiltonian_routes(q: int) -> set[tuple[Cell, ...]]:
    """Single fold-lines through all ``3q`` cells."""
    return {p for p in simple_paths(q, 3 * q)}


# counting ---------------------------------------------------------------------

@dataclass(frozen=True)
class Factored:
    """``prod(f!) * 2^pow2`` kept in factored form."""

    factorials: tuple[int, ...]
    pow2: int

    @classmethod
    def of(cls, factorials: Iterable[int], pow2: int) -> "Factored":
        return cls(tuple(sorted((f for f in factorials if f > 1), reverse=True)), pow2)

    def value(self) -> int:
        out = 1 << self.pow2
        for f in self.factorials:
            out *= math.factorial(f)
        return out

    def __str__(self) -> str:
        return "".join(f"({f}!)" for f in self.factorials) + f"*2^{self.pow2}"


def matrix_count(q: int) -> Factored:
    return Factored.of([q], q)


def halved_pair_count(q: int) -> Factored:
    """``(3q)! q! 2^(q-1)``: the pair count with the orientation factor halved."""
    return Factored.of([3 * q, q], q - 1)


def raw_pair_count(q: int) -> Factored:
    """``(3q)! q! 2^q``: (matrix, cell permutation) pairs."""
    return Factored.of([3 * q, q], q)


SYMBOLIC_THRESHOLD = 10_000


def count_formulas(q: int) -> dict[str, object]:
    """Big-integer report for a graph of size ``q``.

    Values whose factorials exceed ``SYMBOLIC_THRESHOLD`` are given only in
    factored form.  For ``q <= 3`` the fold-line census and
    ``N* = q! 2^q sum_m N_fL(m) m!`` are included.
    """
    if q < 1:
        raise NegativeArgument("q must be positive")
    report: dict[str, object] = {"q": q}
    for name, fac in (("matrices", matrix_count(q)), ("tbpaw_halved", halved_pair_count(q)),
                      ("raw_pairs", raw_pair_count(q))):
        report[name + "_factored"] = str(fac)
        if max(fac.factorials, default=0) <= SYMBOLIC_THRESHOLD:
            report[name] = fac.value()
    if q <= 3:
        census = fold_line_census(q)
        report["fold_line_census"] = census
        report["M"] = 3 * q // 2
        report["n_star"] = math.factorial(q) * 2 ** q * sum(
            n * math.factorial(m) for m, n in census.items())
    return report


def tbpaw_census(g: Graph, lab) -> dict[str, int]:
    """Enumerate every (matrix, cell permutation) pair of a small graph.

    Reports the raw pair count and how many distinct token sequences and
    rendered strings they produce.
    """
    q = g.q
    cells = [(r, c) for r in range(3) for c in range(q)]
    pairs = 0
    seqs, strings = set(), set()
    for m in enumerate_matrices(g, lab):
        for perm in permutations(cells):
            pairs += 1
            toks = tuple(m.cell(c) for c in perm)
            seqs.add(toks)
            strings.add("".join(render_token(t) for t in toks))
    return {"q": q, "pairs": pairs, "distinct_sequences": len(seqs), "distinct_strings": len(strings),
            "halved_formula": halved_pair_count(q).value(), "raw_formula": raw_pair_count(q).value()}


# integer partitions -------------------------------------------------------------

@lru_cache(maxsize=None)
def _a(m: int, k: int) -> int:
    if m == 0:
        return 1
    if k == 0:
        return 0
    return _a(m, k - 1) + (_a(m - k, k) if m >= k else 0)


def partitions_at_most(m: int, k: int) -> int:
    """``A(m,k)``: solutions of ``m = sum i x_i`` over ``i <= k``, i.e. partitions
    of ``m`` into parts of size at most ``k``."""
    if m < 0 or k < 0:
        raise NegativeArgument(f"A({m},{k})")
    return _a(m, k)


def partitions_exact(m: int, k: int) -> int:
    """``P(m,k)``: partitions of ``m`` into exactly ``k`` positive parts."""
    if m < 0 or k < 0:
        raise NegativeArgument(f"P({m},{k})")
    if k == 0:
        return int(m == 0)
    return _a(m - k, k) if m >= k else 0


def lobster_leaf_count(p: int, m: int, simplified: bool = True) -> int:
    """Ways to hang ``m`` new leaves on a ``p``-vertex caterpillar.

    ``simplified`` uses ``sum_k P(m,k) p!`` as printed; otherwise the
    unsimplified ``sum_k A_p^k P(m,k) k!`` with ``A_p^k = p!/(p-k)!``.
    """
    if p < 0 or m < 0:
        raise NegativeArgument(f"p={p}, m={m}")
    total = 0
    for k in range(1, m + 1):
        pk = partitions_exact(m, k)
        if simplified:
            total += pk * math.factorial(p)
        elif k <= p:
            total += math.perm(p, k) * pk * math.factorial(k)
    return total


def partition_counts(m: int, k: int) -> dict[str, int]:
    return {"A": partitions_at_most(m, k), "P": partitions_exact(m, k)}


# file format ------------------------------------------------------------------

def _parse_token(s: str) -> Token:
    s = s.strip()
    if s.startswith("{"):
        inner = s.strip("{}")
        return frozenset(int(t) for t in inner.split(",") if t)
    return int(s)


def _format_token(t: Token) -> str:
    if isinstance(t, frozenset):
        return "{" + ",".join(str(x) for x in sorted(t)) + "}"
    return str(t)


def parse_matrix(text: str) -> TopsnutMatrix:
    """Three non-empty lines: the X, W and Y rows, space separated."""
    rows = [line.split("#", 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if len(rows) != 3:
        raise MatrixError(f"expected 3 rows, found {len(rows)}")
    try:
        x, w, y = (tuple(_parse_token(t) for t in r) for r in rows)
    except ValueError as exc:
        raise MatrixError(f"bad entry: {exc}") from None
    return TopsnutMatrix(x, w, y)


def format_matrix(m: TopsnutMatrix) -> str:
    return "\n".join(" ".join(_format_token(t) for t in row) for row in m.rows) + "\n"
