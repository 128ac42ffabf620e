"""Vertex, total and set labellings: value types, verifiers and constructors.

Verifiers never call constructors.  Every verifier works clause by clause
and reports each failed clause together with a witness, so a caller can
see exactly which part of a definition broke.

Edge labels are keyed by edge id.  For the vertex-only schemes (graceful,
felicitous, ...) edge labels are induced from the vertex labels; if the
labelling also carries explicit edge labels they must agree with the
induced ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Mapping

from .errors import (
    BadSequenceParams,
    ComplementarityViolation,
    EdgeSetMismatch,
    EmptyLabelling,
    LabellingError,
    MissingLabel,
    NotACaterpillar,
    NotATree,
    NotSetOrdered,
    PlanTargetsUnknownVertex,
    SchemeViolation,
    SizeMismatch,
    UnknownScheme,
)
from .graph import Graph, bipartition
from .trees import caterpillar_spine, is_caterpillar


# value types ---------------------------------------------------------------

@dataclass(frozen=True)
class SchemeTag:
    """A labelling family plus its parameters (``k``, ``d``, ``M``, ...)."""

    name: str
    params: Mapping[str, object] = field(default_factory=dict)

    def get(self, key, default=None):
        return self.params.get(key, default)

    def __str__(self) -> str:
        extra = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name} {extra}".strip()


def scheme(name: str, **params) -> SchemeTag:
    return SchemeTag(name, dict(params))


@dataclass
class Labelling:
    vertex_labels: dict[int, int]
    edge_labels: dict[int, int] = field(default_factory=dict)
    scheme: SchemeTag | None = None

    def vertex_values(self) -> set[int]:
        return set(self.vertex_labels.values())

    def edge_values(self) -> set[int]:
        return set(self.edge_labels.values())

    def with_induced_edges(self, g: Graph, rule: Callable[[int, int], int]) -> "Labelling":
        f = self.vertex_labels
        return Labelling(dict(f), {e: rule(f[u], f[v]) for e, u, v in g.edges}, self.scheme)


@dataclass
class SetLabelling:
    """Sets on vertices and/or edges.

    ``vertex_values``/``edge_values`` hold the ordinary integer half of the
    mixed schemes (v-set e-proper, e-set v-proper).
    """

    vertex_sets: dict[int, frozenset[int]] = field(default_factory=dict)
    edge_sets: dict[int, frozenset[int]] = field(default_factory=dict)
    representatives: dict[int, int] = field(default_factory=dict)
    vertex_values: dict[int, int] = field(default_factory=dict)
    edge_values: dict[int, int] = field(default_factory=dict)
    scheme: SchemeTag | None = None


@dataclass
class VerificationReport:
    passed: bool
    violated_clauses: list[tuple[str, object]]
    constants: dict[str, object] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed


class _Check:
    def __init__(self):
        self.violations: list[tuple[str, object]] = []
        self.constants: dict[str, object] = {}

    def fail(self, clause: str, witness=None) -> None:
        self.violations.append((clause, witness))

    def require(self, ok: bool, clause: str, witness=None) -> bool:
        if not ok:
            self.fail(clause, witness)
        return ok

    def report(self) -> VerificationReport:
        return VerificationReport(not self.violations, self.violations, self.constants)


def interval(a: int, b: int) -> set[int]:
    return set(range(a, b + 1))


def odd_interval(a: int, b: int) -> set[int]:
    """``[a,b]^o``: the odd integers of ``[a, b]``."""
    return {x for x in range(a, b + 1) if x % 2}


def even_interval(a: int, b: int) -> set[int]:
    return {x for x in range(a, b + 1) if x % 2 == 0}


def dual_labelling(lab: Labelling) -> Labelling:
    """``h'(z) = max h(S) + min h(S) - h(z)`` over the whole labelled domain."""
    values = list(lab.vertex_labels.values()) + list(lab.edge_labels.values())
    if not values:
        raise EmptyLabelling("nothing to dualise")
    top = max(values) + min(values)
    return Labelling({v: top - x for v, x in lab.vertex_labels.items()},
                     {e: top - x for e, x in lab.edge_labels.items()}, lab.scheme)


# shared verifier helpers ---------------------------------------------------

def _vertex_labels(g: Graph, lab) -> dict[int, int]:
    f = lab.vertex_labels if isinstance(lab, Labelling) else lab.vertex_values
    missing = [v for v in g if v not in f]
    if missing:
        raise MissingLabel(f"vertices without labels: {missing}")
    return f


def _edge_labels(g: Graph, lab: Labelling) -> dict[int, int]:
    missing = [e for e in g.edge_ids if e not in lab.edge_labels]
    if missing:
        raise MissingLabel(f"edges without labels: {missing}")
    return lab.edge_labels


def _induce(g: Graph, lab: Labelling, rule, chk: _Check) -> dict[int, int]:
    f = _vertex_labels(g, lab)
    induced = {e: rule(f[u], f[v]) for e, u, v in g.edges}
    for e, x in lab.edge_labels.items():
        if e in induced and induced[e] != x:
            chk.fail("edge-rule", e)
    return induced


def _injective(values: Mapping, chk: _Check, clause: str) -> bool:
    seen: dict[int, object] = {}
    for key, x in values.items():
        if x in seen:
            chk.fail(clause, (seen[x], key))
            return False
        seen[x] = key
    return True


def _equals(actual: Iterable[int], target: set[int], chk: _Check, clause: str) -> bool:
    actual = list(actual)
    got = set(actual)
    if got == target and len(actual) == len(target):
        return True
    extra = sorted(got - target)
    missing = sorted(target - got)
    chk.fail(clause, {"extra": extra, "missing": missing} if extra or missing else "repeated value")
    return False


def _subset(values: Mapping, target: set[int], chk: _Check, clause: str) -> bool:
    bad = [key for key, x in values.items() if x not in target]
    return chk.require(not bad, clause, bad[:1] or None)


def _sides(g: Graph, f: Mapping) -> tuple[list[int], list[int]] | None:
    """Bipartition oriented so the side holding the smallest label comes first."""
    parts = bipartition(g)
    if parts is None:
        return None
    x, y = parts
    if y and (not x or min(f[v] for v in y) < min(f[v] for v in x)):
        x, y = y, x
    return x, y


def _set_ordered(g: Graph, f: Mapping, chk: _Check, clause: str = "set-ordered") -> bool:
    sides = _sides(g, f)
    if sides is None:
        chk.fail(clause, "not bipartite")
        return False
    x, y = sides
    if not x or not y:
        return True
    ok = max(f[v] for v in x) < min(f[v] for v in y)
    return chk.require(ok, clause, (max(x, key=f.get), min(y, key=f.get)))


def _matching(g: Graph, f: Mapping, total: int, chk: _Check, clause: str) -> bool:
    # f is injective, so edges with f(x)+f(y)=total already form a matching
    covered = set()
    for _, u, v in g.edges:
        if f[u] + f[v] == total:
            covered.update((u, v))
    uncovered = [v for v in g if v not in covered]
    return chk.require(g.is_tree() and not uncovered, clause, uncovered[:1] or "not a tree")


# graceful family -----------------------------------------------------------

_GRACEFUL = {
    "graceful": (False, False, False),
    "set-ordered-graceful": (False, True, False),
    "strongly-graceful": (False, False, True),
    "strongly-set-ordered-graceful": (False, True, True),
    "odd-graceful": (True, False, False),
    "set-ordered-odd-graceful": (True, True, False),
    "strongly-odd-graceful": (True, False, True),
    "strongly-set-ordered-odd-graceful": (True, True, True),
}


def _graceful(g, lab, tag, chk):
    odd, ordered, strong = _GRACEFUL[tag.name]
    q = g.q
    f = _vertex_labels(g, lab)
    edges = _induce(g, lab, lambda a, b: abs(a - b), chk)
    _injective(f, chk, "a")
    top = 2 * q - 1 if odd else q
    clause = "d" if odd else "c"
    _subset(f, interval(0, top), chk, clause)
    chk.require(min(f.values()) == 0, clause, "min label is not 0")
    if odd:
        _equals(edges.values(), odd_interval(1, 2 * q - 1), chk, "f")
    else:
        _equals(edges.values(), interval(1, q), chk, "e")
    if ordered:
        _set_ordered(g, f, chk, "g")
    if strong:
        _matching(g, f, 2 * q - 1 if odd else q, chk, "i" if odd else "h")


def _perfect_odd_graceful(g, lab, tag, chk):
    _graceful(g, lab, scheme("odd-graceful"), chk)
    f = _vertex_labels(g, lab)
    diffs = {abs(a - b) for a, b in combinations(set(f.values()), 2)}
    target = interval(1, 2 * g.q - 1)
    chk.require(diffs == target, "perfect", sorted(target - diffs)[:3])


# sum-based family (felicitous, harmonious, elegant, ...) --------------------

def _c_vertex(g, f, chk, number, top=None, allowed=None):
    if allowed is not None:
        return _subset(f, set(allowed), chk, f"c-{number}")
    return _subset(f, interval(0, top), chk, f"c-{number}")


def _sum_family(g, lab, tag, chk):
    q = g.q
    name = tag.name
    f = _vertex_labels(g, lab)
    plain = lambda a, b: a + b
    even_up = lambda a, b: a + b + (a + b) % 2
    mod_q = lambda a, b: (a + b) % q
    mod_2q = lambda a, b: (a + b) % (2 * q)
    rules = {
        "felicitous": (3, mod_q, 10),
        "set-ordered-felicitous": (3, mod_q, 10),
        "odd-elegant": (4, mod_2q, 13),
        "harmonious": (2, mod_q, 10),
        "properly-even-harmonious": (5, mod_2q, 11),
        "c-harmonious": (2, plain, 15),
        "even-sequential-harmonious": (5, even_up, 12),
        "H-harmonious": (1, plain, 14),
        "strongly-harmonious": (3, mod_q, 10),
        "set-ordered-harmonious": (3, mod_q, 10),
        "set-ordered-odd-elegant": (4, mod_2q, 13),
    }
    vclause, rule, eclause = rules[name]
    edges = _induce(g, lab, rule, chk)
    tops = {2: q - 1, 3: q, 4: 2 * q - 1, 5: 2 * q}
    if vclause == 1:
        _c_vertex(g, f, chk, 1, allowed=tag.get("H", ()))
    else:
        _c_vertex(g, f, chk, vclause, top=tops[vclause])
    if name == "harmonious" and g.is_tree():
        # a tree has one vertex more than the q available labels, so exactly
        # one value may sit on two vertices
        counts: dict[int, int] = {}
        for x in f.values():
            counts[x] = counts.get(x, 0) + 1
        repeats = [x for x, c in counts.items() if c > 1]
        chk.require(len(repeats) <= 1 and all(counts[x] == 2 for x in repeats),
                    "injective", repeats)
    else:
        _injective(f, chk, "injective")
    values = list(edges.values())
    if eclause == 10:
        _equals(values, interval(0, q - 1), chk, "c-10")
    elif eclause == 11:
        _equals(values, even_interval(0, 2 * q - 2), chk, "c-11")
    elif eclause == 12:
        _equals(values, even_interval(2, 2 * q), chk, "c-12")
    elif eclause == 13:
        _equals(values, odd_interval(1, 2 * q - 1), chk, "c-13")
    elif eclause == 14:
        chk.require(len(set(values)) == q, "c-14", "repeated edge label")
    elif eclause == 15:
        c = min(values) if values else 0
        chk.constants["c"] = c
        _equals(values, interval(c, c + q - 1), chk, "c-15")
    if name == "strongly-harmonious":
        lo = max((min(f[u], f[v]) for _, u, v in g.edges), default=0)
        hi = min((max(f[u], f[v]) for _, u, v in g.edges), default=1)
        if chk.require(lo < hi, "c-16", (lo, hi)):
            chk.constants["k"] = lo
    if name in ("set-ordered-harmonious", "set-ordered-odd-elegant", "set-ordered-felicitous"):
        _set_ordered(g, f, chk, "c-17")


# total labellings ----------------------------------------------------------

def _edge_odd_graceful_total(g, lab, tag, chk):
    q = g.q
    f = _vertex_labels(g, lab)
    e = _edge_labels(g, lab)
    # no vertex injectivity: a tree has q+1 vertices but only q values
    _subset(f, interval(0, q - 1), chk, "vertex-range")
    _equals(e.values(), odd_interval(1, 2 * q - 1), chk, "edge-set")
    totals = [f[u] + e[eid] + f[v] for eid, u, v in g.edges]
    if totals:
        a = min(totals)
        chk.constants["range"] = (a, a + q - 1)
        _equals(totals, interval(a, a + q - 1), chk, "totals")


def multiple_meaning_edges(g: Graph, f: Mapping[int, int]) -> dict[int, dict[int, int]]:
    """The five edge labellings forced by a multiple edge-meaning vertex labelling.

    With ``s(uv) = f(u) + f(v)`` the rules are, in order: ``k - s`` with
    ``k = max s + 1``; ``k' - s`` with ``k' = max s + p``; ``s mod q``;
    ``s - k''`` with ``k'' = min s - 1``; ``2 (max s - s) + 1``.
    """
    sums = {e: f[u] + f[v] for e, u, v in g.edges}
    if not sums:
        return {i: {} for i in range(1, 6)}
    hi, lo = max(sums.values()), min(sums.values())
    p, q = g.p, g.q
    return {
        1: {e: hi + 1 - s for e, s in sums.items()},
        2: {e: hi + p - s for e, s in sums.items()},
        3: {e: s % q for e, s in sums.items()},
        4: {e: s - (lo - 1) for e, s in sums.items()},
        5: {e: 2 * (hi - s) + 1 for e, s in sums.items()},
    }


def _multiple_meaning(g, lab, tag, chk):
    p, q = g.p, g.q
    f = _vertex_labels(g, lab)
    _injective(f, chk, "injective")
    _subset(f, interval(0, p - 1), chk, "vertex-range")
    forced = multiple_meaning_edges(g, f)
    clauses = tag.get("clauses", (1, 2, 3, 4, 5))
    for c in clauses:
        e = forced[c]
        totals = [f[u] + e[eid] + f[v] for eid, u, v in g.edges]
        if c == 1:
            if _equals(e.values(), interval(1, q), chk, "1") and len(set(totals)) == 1:
                chk.constants["k"] = totals[0]
        elif c == 2:
            if _equals(e.values(), interval(p, p + q - 1), chk, "2") and len(set(totals)) == 1:
                chk.constants["k'"] = totals[0]
        elif c == 3:
            if _equals(e.values(), interval(0, q - 1), chk, "3"):
                chk.constants["M"] = q
        elif c == 4:
            if _equals(e.values(), interval(1, q), chk, "4"):
                chk.constants["k''"] = abs(totals[0] - 2 * e[g.edge_ids[0]]) if totals else 0
        elif c == 5:
            ok = _equals(e.values(), odd_interval(1, 2 * q - 1), chk, "5")
            a = min(totals, default=0)
            if _equals(totals, interval(a, a + q - 1), chk, "5") and ok:
                chk.constants["range"] = (a, a + q - 1)


def _edge_magic_total(g, lab, tag, chk):
    p, q = g.p, g.q
    f = _vertex_labels(g, lab)
    e = _edge_labels(g, lab)
    _equals(list(f.values()) + list(e.values()), interval(1, p + q), chk, "bijection")
    sums = {f[u] + e[eid] + f[v] for eid, u, v in g.edges}
    if chk.require(len(sums) <= 1, "magic", sorted(sums)[:2]) and sums:
        chk.constants["k"] = sums.pop()
    if tag.get("super", False):
        _equals(f.values(), interval(1, p), chk, "super")
    if tag.get("set_ordered", False):
        _set_ordered(g, f, chk)


def _edge_magic_graceful(g, lab, tag, chk):
    f = _vertex_labels(g, lab)
    e = _edge_labels(g, lab)
    _injective(f, chk, "injective")
    _equals(e.values(), interval(1, g.q), chk, "edge-set")
    vals = {abs(f[u] + f[v] - e[eid]) for eid, u, v in g.edges}
    if chk.require(len(vals) <= 1, "constant", sorted(vals)[:2]) and vals:
        chk.constants["k"] = vals.pop()


# 6C and odd-6C ---------------------------------------------------------------

def _pair_constant(values: list[int]):
    """Constant ``c`` with ``sorted[i] + sorted[-1-i] = c`` for every ``i``, or None."""
    s = sorted(values)
    sums = {s[i] + s[-1 - i] for i in range(len(s))}
    return sums.pop() if len(sums) == 1 else None


def _six_c_common(g, f, e, chk, prefix=""):
    """Clauses (iii) and (vi), shared by the plain and odd variants."""
    p, q = g.p, g.q
    s = {eid: abs(f[u] - f[v]) - e[eid] for eid, u, v in g.edges}
    c = _pair_constant(list(s.values()))
    if chk.require(c is not None, prefix + "iii", "s-values do not pair to a constant"):
        # both forms of the clause describe the same pairing; report both constants
        chk.constants[prefix + "k'"] = c
        chk.constants[prefix + "k'_alt"] = p + q + 1 + c
    sides = _sides(g, f)
    if sides is None:
        chk.fail(prefix + "vi", "not bipartite")
    else:
        x, y = sides
        if x and y:
            chk.require(max(f[v] for v in x) < min(f[v] for v in y), prefix + "vi")


def _six_c(g, lab, tag, chk):
    p, q = g.p, g.q
    f = _vertex_labels(g, lab)
    e = _edge_labels(g, lab)
    _equals(list(f.values()) + list(e.values()), interval(1, p + q), chk, "bijection")
    diff = {eid: abs(f[u] - f[v]) for eid, u, v in g.edges}
    ks = {e[eid] + diff[eid] for eid in diff}
    if chk.require(len(ks) <= 1, "i", sorted(ks)[:2]) and ks:
        chk.constants["k"] = next(iter(ks))
    # (ii): each edge label equals some edge's difference, or p+q+1 minus it
    by_diff: dict[int, list[int]] = {}
    for eid, d in diff.items():
        by_diff.setdefault(d, []).append(eid)
    matching, variant = {}, {}
    for kind, target in (("diff", lambda x: x), ("complement", lambda x: p + q + 1 - x)):
        m = {}
        for eid in diff:
            partners = by_diff.get(target(e[eid]), [])
            if partners:
                m[eid] = partners[0]
        if len(m) == len(diff) and len(set(m.values())) == len(m):
            matching = m
            variant = kind
            break
    if chk.require(bool(matching) or not diff, "ii", "no edge-difference matching"):
        chk.constants["ii"] = variant
        chk.constants["matching"] = matching
        chk.constants["involution"] = all(matching[matching[x]] == x for x in matching)
    _six_c_common(g, f, e, chk)
    fv, fe = set(f.values()), set(e.values())
    options = [
        ("min V > max E", bool(fe) and min(fv) > max(fe)),
        ("max V < min E", bool(fe) and max(fv) < min(fe)),
        ("V in E", fv <= fe),
        ("E in V", fe <= fv),
        ("V odd, E even", all(x % 2 for x in fv) and all(x % 2 == 0 for x in fe)),
    ]
    held = [name for name, ok in options if ok]
    if chk.require(bool(held), "iv"):
        chk.constants["iv"] = held
    z0 = (p + q + 1) // 2
    chk.constants["singularity"] = z0
    rest = fv - {z0}
    if fe and rest:
        k2 = min(fe) + max(rest)
        edge_ok = all(k2 - x in fv for x in fe)
        vertex_ok = all(k2 - x in fe for x in rest)
        if chk.require(edge_ok and vertex_ok, "v", k2):
            chk.constants["k''"] = k2


def _odd_six_c(g, lab, tag, chk):
    _p, q = g.p, g.q
    f = _vertex_labels(g, lab)
    e = _edge_labels(g, lab)
    labels = {("v", v): x for v, x in f.items()} | {("e", k): x for k, x in e.items()}
    _injective(labels, chk, "injective")
    _subset(labels, interval(1, 4 * q - 1), chk, "range")
    diff = {eid: abs(f[u] - f[v]) for eid, u, v in g.edges}
    ks = {e[eid] + diff[eid] for eid in diff}
    if chk.require(len(ks) <= 1, "i", sorted(ks)[:2]) and ks:
        chk.constants["k"] = next(iter(ks))
    even = [eid for eid in e if e[eid] % 2 == 0]
    chk.require(not even, "i", even[:1] or None)
    dset = set(diff.values())
    bad = [eid for eid in diff if e[eid] - 2 * q not in dset]
    chk.require(not bad, "ii", bad[:1] or None)
    _six_c_common(g, f, e, chk)
    fv, fe = set(f.values()), set(e.values())
    chk.require(not fe or max(fv) < min(fe), "iv", "max V >= min E")
    spread = {abs(a - b) for a, b in combinations(fv, 2)}
    chk.require(spread == interval(1, 2 * q - 1), "iv", "vertex differences")
    # (v): two constants cover every edge; try each pair from the first edge's options
    options = [{x + w for w in fv} for x in fe]
    found = None
    if options:
        for k1 in sorted(options[0]):
            rest = [o for o in options if k1 not in o]
            if not rest:
                found = (k1, k1)
                break
            common = set.intersection(*rest)
            if common:
                found = (k1, min(common))
                break
    if chk.require(found is not None or not options, "v"):
        chk.constants["k1,k2"] = found


# (k,d) family -----------------------------------------------------------------

def _kd_params(tag, chk):
    k, d = tag.get("k"), tag.get("d")
    if not isinstance(k, int) or not isinstance(d, int) or k < 1 or d < 1:
        chk.fail("params", (k, d))
        return None
    return k, d


def _kd_family(g, lab, tag, chk):
    params = _kd_params(tag, chk)
    if params is None:
        return
    k, d = params
    p, q = g.p, g.q
    target = {k + i * d for i in range(q)}
    name = tag.name
    f = _vertex_labels(g, lab)
    if name == "kd-graceful":
        _injective(f, chk, "injective")
        _subset(f, interval(0, k + (q - 1) * d), chk, "vertex-range")
        edges = _induce(g, lab, lambda a, b: abs(a - b), chk)
        _equals(edges.values(), target, chk, "edge-set")
        if tag.get("set_ordered", False):
            _set_ordered(g, f, chk)
    elif name == "kd-arithmetic":
        _injective(f, chk, "injective")
        _subset(f, interval(0, k + (q - 1) * d), chk, "vertex-range")
        sums = [f[u] + f[v] for _, u, v in g.edges]
        _equals(sums, target, chk, "sum-set")
    elif name == "kd-edge-antimagic-total":
        e = _edge_labels(g, lab)
        _equals(list(f.values()) + list(e.values()), interval(1, p + q), chk, "bijection")
        sums = [f[u] + e[eid] + f[v] for eid, u, v in g.edges]
        _equals(sums, target, chk, "sum-set")
        if tag.get("super", False):
            _equals(f.values(), interval(1, p), chk, "super")
    elif name == "kd-harmonious":
        _injective(f, chk, "injective")
        _subset(f, interval(0, k + (q - 1) * d), chk, "vertex-range")
        edges = _induce(g, lab, lambda a, b: k + (a + b - k) % (q * d), chk)
        _equals(edges.values(), target, chk, "edge-set")


# set labellings -----------------------------------------------------------------

def _distinct_representatives(g: Graph, sets: Mapping[int, frozenset[int]], target: set[int]):
    """Assign each edge a distinct representative from ``target`` (bipartite matching)."""
    owner: dict[int, int] = {}

    def augment(eid, seen):
        for a in sorted(sets[eid] & target):
            if a in seen:
                continue
            seen.add(a)
            if a not in owner or augment(owner[a], seen):
                owner[a] = eid
                return True
        return False

    for eid in g.edge_ids:
        if not augment(eid, set()):
            return None
    return {eid: a for a, eid in owner.items()}


def _intersection(g, lab, tag, chk):
    if not isinstance(lab, SetLabelling):
        raise MissingLabel("set labelling required")
    q = g.q
    odd = tag.name == "odd-graceful-intersection"
    universe = interval(1, 2 * q - 1) if odd else interval(1, q)
    target = odd_interval(1, 2 * q - 1) if odd else interval(1, q)
    missing = [v for v in g if v not in lab.vertex_sets]
    if missing:
        raise MissingLabel(f"vertices without sets: {missing}")
    h = lab.vertex_sets
    for v in g:
        chk.require(bool(h[v]) and h[v] <= universe, "vertex-sets", v)
    inter = {eid: frozenset(h[u] & h[v]) for eid, u, v in g.edges}
    for eid, s in lab.edge_sets.items():
        chk.require(inter.get(eid) == s, "edge-sets", eid)
    if lab.representatives:
        reps = lab.representatives
        for eid in g.edge_ids:
            chk.require(reps.get(eid) in inter[eid], "representative", eid)
        _equals([reps.get(eid) for eid in g.edge_ids], target, chk, "representative-set")
    else:
        reps = _distinct_representatives(g, inter, target)
        if chk.require(reps is not None and set(reps.values()) == target,
                       "representative-set", "no system of representatives"):
            chk.constants["representatives"] = reps


def rainbow_sequence(kind: str, n: int, tau: int | None = None,
                     seeds: Iterable[int] | None = None) -> list[frozenset[int]]:
    """First ``n`` sets ``R_1..R_n`` of a rainbow set-sequence.

    ``regular``: ``[1, k]``.  ``odd``: ``[1, 2k-1]``.  ``fibonacci``:
    ``[1, F_{k+1}]`` (1, 2, 3, 5, ...): the union rule on nested intervals
    keeps the larger one, so the right ends follow the Fibonacci numbers,
    and the repeated leading ``[1, 1]`` is dropped so all sets differ.
    ``tau-term``: ``R_i = [1, a_i]`` for the ``tau`` seeds, then
    ``a_k = a_{k-tau} + ... + a_{k-1}``.
    """
    if kind == "regular":
        ends = list(range(1, n + 1))
    elif kind == "odd":
        ends = [2 * k - 1 for k in range(1, n + 1)]
    elif kind == "fibonacci":
        ends, a, b = [], 1, 2
        while len(ends) < n:
            ends.append(a)
            a, b = b, a + b
    elif kind == "tau-term":
        seeds = list(seeds or ())
        if tau is None or tau < 2 or len(seeds) != tau:
            raise BadSequenceParams("tau-term needs tau >= 2 and exactly tau seeds")
        if any(a <= 1 for a in seeds) or len(set(seeds)) != tau:
            raise BadSequenceParams("seeds must be distinct integers > 1")
        ends = list(seeds)
        while len(ends) < n:
            ends.append(sum(ends[-tau:]))
        ends = ends[:n]
    else:
        raise BadSequenceParams(f"unknown sequence {kind!r}")
    return [frozenset(range(1, a + 1)) for a in ends]


def _rainbow(g, lab, tag, chk):
    if not isinstance(lab, SetLabelling):
        raise MissingLabel("set labelling required")
    missing = [v for v in g if v not in lab.vertex_sets]
    if missing:
        raise MissingLabel(f"vertices without sets: {missing}")
    h = lab.vertex_sets
    seq = set(rainbow_sequence(tag.get("sequence", "regular"), g.p,
                               tag.get("tau"), tag.get("seeds")))
    for v in g:
        chk.require(h[v] in seq, "member", v)
    _injective(h, chk, "distinct")
    for eid, u, v in g.edges:
        if eid in lab.edge_sets:
            chk.require(lab.edge_sets[eid] == h[u] & h[v], "intersection", eid)


def _v_set_e_proper(g, lab, tag, chk):
    h = lab.vertex_sets
    for a, b in combinations(list(g), 2):
        if h.get(a, frozenset()) & h.get(b, frozenset()):
            chk.fail("disjoint", (a, b))
            break
    _injective({e: lab.edge_values.get(e) for e in g.edge_ids}, chk, "edge-proper")


def _e_set_v_proper(g, lab, tag, chk):
    _injective({e: lab.edge_sets.get(e) for e in g.edge_ids}, chk, "edge-sets-distinct")
    _injective(_vertex_labels(g, lab), chk, "vertex-proper")


def _total_set(g, lab, tag, chk):
    items = {("v", v): lab.vertex_sets.get(v) for v in g}
    items.update({("e", e): lab.edge_sets.get(e) for e in g.edge_ids})
    chk.require(all(items.values()), "nonempty")
    _injective(items, chk, "distinct")


def _twin_odd_type(g, lab, tag, chk):
    """Vertex labels are ``(k, d)`` pairs; ``M`` is the modulus."""
    f = _vertex_labels(g, lab)
    q = g.q
    m = tag.get("M")
    if not isinstance(m, int) or m < 1:
        chk.fail("params", m)
        return
    ks = {abs(f[u][0] - f[v][0]) for _, u, v in g.edges}
    ds = {(f[u][1] + f[v][1]) % m for _, u, v in g.edges}
    if tag.name == "twin-odd-type":
        chk.require(ks == odd_interval(1, 2 * q - 1), "k-part")
    else:
        chk.require(ks == interval(1, q), "k-part")
    chk.require(ds == odd_interval(0, 2 * q - 3), "d-part")


_SCHEMES: dict[str, Callable] = {
    **{name: _graceful for name in _GRACEFUL},
    "perfect-odd-graceful": _perfect_odd_graceful,
    **{name: _sum_family for name in (
        "felicitous", "set-ordered-felicitous", "odd-elegant", "harmonious",
        "properly-even-harmonious", "c-harmonious", "even-sequential-harmonious",
        "H-harmonious", "strongly-harmonious", "set-ordered-harmonious",
        "set-ordered-odd-elegant")},
    "edge-odd-graceful-total": _edge_odd_graceful_total,
    "multiple-meaning": _multiple_meaning,
    "edge-magic-total": _edge_magic_total,
    "edge-magic-graceful": _edge_magic_graceful,
    "6c": _six_c,
    "odd-6c": _odd_six_c,
    **{name: _kd_family for name in (
        "kd-graceful", "kd-arithmetic", "kd-edge-antimagic-total", "kd-harmonious")},
    "graceful-intersection": _intersection,
    "odd-graceful-intersection": _intersection,
    "rainbow": _rainbow,
    "v-set-e-proper": _v_set_e_proper,
    "e-set-v-proper": _e_set_v_proper,
    "total-set": _total_set,
    "twin-odd-type": _twin_odd_type,
    "graceful-odd-elegant-type": _twin_odd_type,
}

SCHEMES = tuple(_SCHEMES)


def verify(g: Graph, lab, tag: SchemeTag | str) -> VerificationReport:
    """Check every clause of the named scheme; see :data:`SCHEMES`."""
    if isinstance(tag, str):
        tag = scheme(tag)
    try:
        check = _SCHEMES[tag.name]
    except KeyError:
        raise UnknownScheme(tag.name) from None
    chk = _Check()
    if g.q == 0 and tag.name not in ("rainbow", "total-set"):
        chk.fail("edges", "graph has no edges")
        return chk.report()
    check(g, lab, tag, chk)
    return chk.report()


def verify_image_pair(g: Graph, f1: Labelling, f2: Labelling) -> VerificationReport:
    """``f1(uv) + f2(uv)`` constant over all edges, with ``f(uv) = |f(u) - f(v)|``."""
    chk = _Check()
    a, b = _vertex_labels(g, f1), _vertex_labels(g, f2)
    sums = {abs(a[u] - a[v]) + abs(b[u] - b[v]) for _, u, v in g.edges}
    if chk.require(len(sums) == 1, "constant", sorted(sums)[:2]):
        chk.constants["k"] = sums.pop()
    return chk.report()


# constructors ----------------------------------------------------------------

def _edges_by(g: Graph, f: Mapping, rule) -> dict[int, int]:
    return {e: rule(f[u], f[v]) for e, u, v in g.edges}


def _diff(a, b):
    return abs(a - b)


def _require_set_ordered(t: Graph, f: Labelling, odd: bool = False):
    name = "set-ordered-odd-graceful" if odd else "set-ordered-graceful"
    rep = verify(t, f, name)
    if not rep.passed:
        raise NotSetOrdered(f"input is not {name}: {rep.violated_clauses}")
    return _sides(t, f.vertex_labels)


def construct_set_ordered_graceful_caterpillar(t: Graph) -> Labelling:
    """Two-row zig-zag layout of a caterpillar, numbered so edge labels fall by one per step.

    Row A holds ``u1``, the leaves of ``u2``, ``u3``, the leaves of ``u4``, ...;
    row B holds the leaves of ``u1``, ``u2``, the leaves of ``u3``, ...
    Reading the edges left to right advances exactly one row at a time, so
    numbering row A ``0, 1, ...`` and row B ``q, q-1, ...`` makes the edge
    labels ``q, q-1, ..., 1``.
    """
    if not t.is_tree() or not is_caterpillar(t):
        raise NotACaterpillar("input is not a caterpillar")
    if t.p == 1:
        v = t.vertices[0]
        return Labelling({v: 0}, {}, scheme("set-ordered-graceful"))
    spine = caterpillar_spine(t)
    on_spine = set(spine)
    rows: tuple[list[int], list[int]] = ([], [])
    for i, u in enumerate(spine):
        here, other = rows[i % 2], rows[1 - i % 2]
        if u not in here:
            here.append(u)
        other.extend(sorted(w for w in t.neighbors(u) if w not in on_spine))
        if i + 1 < len(spine):
            other.append(spine[i + 1])
    q = t.q
    f = {v: i for i, v in enumerate(rows[0])}
    f.update({v: q - j for j, v in enumerate(rows[1])})
    return Labelling(f, _edges_by(t, f, _diff), scheme("set-ordered-graceful"))


def graceful_to_odd_graceful(t: Graph, f: Labelling) -> Labelling:
    """Double the small side, send each large label ``y`` to ``2y - 1``, recompute edges."""
    x_side, _ = _require_set_ordered(t, f)
    small = set(x_side)
    fv = f.vertex_labels
    f2 = {v: 2 * fv[v] if v in small else 2 * fv[v] - 1 for v in t}
    return Labelling(f2, _edges_by(t, f2, _diff), scheme("set-ordered-odd-graceful"))


def extend_caterpillar_to_lobster(t: Graph, g: Labelling,
                                  leaf_plan: Mapping[int, int]) -> tuple[Graph, Labelling, set[int]]:
    """Hang ``leaf_plan[v]`` new leaves on each ``v`` and relabel to an odd-graceful labelling.

    New edges get consecutive odd labels: first the leaves of the small side
    in increasing label order of their anchor, then the large side in
    decreasing order.  Old large-side vertices shift up by ``2M`` (``M`` new
    edges), which shifts every old edge label by ``2M`` as well.  A new leaf
    ``u`` on a small-side ``x`` gets ``f(x) + f(xu)``; a new leaf ``w`` on a
    large-side ``y`` gets ``f(y) - f(yw)``.

    Returns the lobster, its labelling and the set of new leaves.
    """
    for v in leaf_plan:
        if v not in t:
            raise PlanTargetsUnknownVertex(v)
    x_side, y_side = _require_set_ordered(t, g, odd=True)
    gv = g.vertex_labels
    xs = sorted(x_side, key=gv.get)
    ys = sorted(y_side, key=gv.get)
    m = sum(leaf_plan.values())
    lob = t.copy()
    f = {x: gv[x] for x in xs}
    f.update({y: gv[y] + 2 * m for y in ys})
    edge = {}
    label = -1
    new_leaves: set[int] = set()
    for x in xs:
        for _ in range(leaf_plan.get(x, 0)):
            label += 2
            u = lob.new_vertex()
            edge[lob.add_edge(x, u)] = label
            f[u] = f[x] + label
            new_leaves.add(u)
    for y in reversed(ys):
        for _ in range(leaf_plan.get(y, 0)):
            label += 2
            w = lob.new_vertex()
            edge[lob.add_edge(y, w)] = label
            f[w] = f[y] - label
            new_leaves.add(w)
    for e, u, v in t.edges:
        edge[e] = abs(f[u] - f[v])
    return lob, Labelling(f, edge, scheme("odd-graceful")), new_leaves


def image_labelling(t: Graph, f: Labelling, odd: bool = False) -> Labelling:
    """Mirror image ``g`` with ``f(uv) + g(uv)`` constant.

    ``g(x) = max f(X) + min f(X) - f(x)`` on the small side and
    ``g(y) = K + max f(X) - f(y)`` on the large side, where ``K = q + 1``
    (graceful) or ``2q`` (odd-graceful) is the resulting edge-sum constant.
    For a set-ordered graceful ``f`` this is ``g(x) = s-1-f(x)``,
    ``g(y) = t+2s-1-f(y)``.
    """
    x_side, y_side = _require_set_ordered(t, f, odd=odd)
    fv = f.vertex_labels
    hi = max(fv[v] for v in x_side)
    lo = min(fv[v] for v in x_side)
    k = 2 * t.q if odd else t.q + 1
    g = {x: hi + lo - fv[x] for x in x_side}
    g.update({y: k + hi - fv[y] for y in y_side})
    name = "set-ordered-odd-graceful" if odd else "set-ordered-graceful"
    return Labelling(g, _edges_by(t, g, _diff), scheme(name, image_constant=k))


def six_c_from_set_ordered_graceful(t: Graph, f: Labelling) -> Labelling:
    """``F(v) = f(v) + p`` and ``F(uv) = p - f(uv)``.

    Vertices land on ``[p, 2p-1]`` and edges on ``[1, p-1]``, so ``F`` is a
    bijection onto ``[1, p+q]`` with ``F(uv) + |F(u) - F(v)| = p``.
    """
    _require_set_ordered(t, f)
    p = t.p
    fv = f.vertex_labels
    big = {v: fv[v] + p for v in t}
    edges = {e: p - abs(fv[u] - fv[v]) for e, u, v in t.edges}
    return Labelling(big, edges, scheme("6c"))


def six_c_mate(t: Graph, f: Labelling) -> Labelling:
    """The complementary 6C labelling: ``F(v) = f(v) + 1``, ``F(uv) = 2p - f(uv)``.

    Vertices take ``[1, p]`` and edges ``[p+1, 2p-1]``; each edge matches
    itself under the ``p+q+1`` form of the edge-difference clause.  Paired
    with :func:`six_c_from_set_ordered_graceful` of any tree on ``p``
    vertices it meets the complementary-matching conditions.
    """
    _require_set_ordered(t, f)
    p = t.p
    fv = f.vertex_labels
    return Labelling({v: fv[v] + 1 for v in t},
                     {e: 2 * p - abs(fv[u] - fv[v]) for e, u, v in t.edges}, scheme("6c"))


def _edge_magic_shift(t: Graph, f: Labelling) -> Labelling:
    x_side, y_side = _require_set_ordered(t, f)
    fv = f.vertex_labels
    p, s = t.p, len(x_side)
    g = {x: fv[x] + 1 for x in x_side}
    # reversing Y: f(y_j) + f(y_{t-j+1}) = s + p - 1
    g.update({y: s + p - fv[y] for y in y_side})
    edges = {e: abs(fv[u] - fv[v]) + p for e, u, v in t.edges}
    return Labelling(g, edges, scheme("edge-magic-total", super=True))


def reciprocal_inverse_pair(t1: Graph, f1: Labelling, t2: Graph,
                            f2: Labelling) -> tuple[Labelling, Labelling]:
    """Edge-magic total ``g1`` on ``t1`` and the reflected ``h2 = 2p - g2`` on ``t2``.

    ``g1(V) = [1, p]``, ``g1(E) = [p+1, 2p-1]``, ``h2(V) = [p, 2p-1]`` and
    ``h2(E) = [1, p-1]``; the two share only the value ``p``.
    """
    if t1.p != t2.p:
        raise SizeMismatch(f"trees have {t1.p} and {t2.p} vertices")
    g1 = _edge_magic_shift(t1, f1)
    g2 = _edge_magic_shift(t2, f2)
    p = t2.p
    h2 = Labelling({v: 2 * p - x for v, x in g2.vertex_labels.items()},
                   {e: 2 * p - x for e, x in g2.edge_labels.items()}, None)
    return g1, h2


@dataclass
class CoincidedGraph:
    """Union of two labelled graphs with equal-valued vertices merged.

    Vertices are keyed by their label; ``edges`` may contain parallel edges
    (same end labels, one from each side).  ``origin`` records which input
    each edge came from (0 or 1).
    """

    vertex_labels: set[int]
    edges: list[tuple[int, int, int]]
    origin: list[int]
    merged: set[int]

    def edge_label_multiset(self) -> list[int]:
        return sorted(lab for _, _, lab in self.edges)

    def to_graph(self) -> tuple[Graph, dict[int, int]]:
        """Simple graph on vertex ids ``0..`` plus the id -> label map.

        Parallel edges cannot be represented and raise an error.
        """
        order = sorted(self.vertex_labels)
        index = {lab: i for i, lab in enumerate(order)}
        g = Graph(range(len(order)))
        for a, b, _ in self.edges:
            g.add_edge(index[a], index[b])
        return g, {i: lab for lab, i in index.items()}


def _coincide(g: Graph, f: Mapping, ge: Mapping, h: Graph, fp: Mapping, he: Mapping) -> CoincidedGraph:
    edges, origin = [], []
    for side, (graph, fv, fe) in enumerate(((g, f, ge), (h, fp, he))):
        for eid, u, v in graph.edges:
            edges.append((fv[u], fv[v], fe[eid]))
            origin.append(side)
    shared = set(f[v] for v in g) & set(fp[v] for v in h)
    return CoincidedGraph(set(f[v] for v in g) | set(fp[v] for v in h), edges, origin, shared)


def six_c_complementary_matching(g: Graph, f: Labelling, h: Graph, fp: Labelling) -> CoincidedGraph:
    """Merge the two vertices labelled ``z0 = floor((p+q+1)/2)``.

    Checks ``f(V) - {z0} = f'(E(H))``, ``f(E) = f'(V(H)) - {z0}`` and
    ``f(V) & f'(V(H)) = {z0}``; offending labels are listed in the error.
    """
    z0 = (g.p + g.q + 1) // 2
    fv, fe = set(f.vertex_labels.values()), set(f.edge_labels.values())
    hv, he = set(fp.vertex_labels.values()), set(fp.edge_labels.values())
    bad = ((fv - {z0}) ^ he) | (fe ^ (hv - {z0})) | ((fv & hv) ^ {z0})
    if bad:
        raise ComplementarityViolation(bad)
    return _coincide(g, f.vertex_labels, f.edge_labels, h, fp.vertex_labels, fp.edge_labels)


def twin_odd_graceful(g: Graph, f: Labelling, h: Graph, fp: Labelling) -> CoincidedGraph:
    """Validate a twin odd-graceful pair and coincide equal-valued vertices.

    ``f`` must be odd-graceful on ``g``.  ``f'`` lives in ``[0, 2q]``
    (``0`` allowed so a set-ordered odd-graceful tree can be its own twin)
    and must induce exactly the edge labels ``[1, 2q-1]^o``.
    """
    q = g.q
    if not verify(g, f, "odd-graceful").passed:
        raise EdgeSetMismatch("first labelling is not odd-graceful")
    hv = fp.vertex_labels
    diffs = [abs(hv[u] - hv[v]) for _, u, v in h.edges]
    if sorted(diffs) != sorted(odd_interval(1, 2 * q - 1)) or any(
            not 0 <= x <= 2 * q for x in hv.values()):
        raise EdgeSetMismatch("second labelling does not induce [1, 2q-1]^o")
    fe = _edges_by(g, f.vertex_labels, _diff)
    he = _edges_by(h, hv, _diff)
    return _coincide(g, f.vertex_labels, fe, h, hv, he)


# set-labelling constructors ------------------------------------------------------

def _peel_order(t: Graph, first: int | None = None) -> tuple[tuple[int, int], list[tuple[int, int]]]:
    """Leaf-peeling order: ``(base edge, [(leaf, neighbour), ...] in build-up order)``.

    Peels the smallest-id leaf each round (``first`` overrides the first
    round) until a single edge remains.
    """
    if not t.is_tree():
        raise NotATree("input is not a tree")
    if t.p < 2:
        raise NotATree("need at least one edge")
    h = t.copy()
    peeled = []
    choice = first
    while h.p > 2:
        leaves = h.leaves()
        x = choice if choice is not None and choice in leaves else min(leaves)
        choice = None
        y = h.neighbors(x)[0]
        peeled.append((x, y))
        h.remove_vertex(x)
    u, v = sorted(h.vertices)
    return (u, v), peeled[::-1]


def intersection_set_labelling(t: Graph, mode: str = "graceful") -> SetLabelling:
    """Build the labelling leaf by leaf: the ``k``-th edge's value goes to both ends.

    The base edge gets value 1 on both ends; the ``k``-th added leaf ``x``
    on ``y`` gets ``{a_k}`` and ``y`` gains ``a_k``, where ``a_k = k`` or
    ``2k - 1`` for the odd mode.
    """
    if mode not in ("graceful", "odd-graceful"):
        raise LabellingError(f"unknown mode {mode!r}")
    value = (lambda k: 2 * k - 1) if mode == "odd-graceful" else (lambda k: k)
    (u, v), steps = _peel_order(t)
    h = {u: {value(1)}, v: {value(1)}}
    reps = {t.edge_between(u, v): value(1)}
    for k, (x, y) in enumerate(steps, start=2):
        h[y].add(value(k))
        h[x] = {value(k)}
        reps[t.edge_between(x, y)] = value(k)
    sets = {w: frozenset(s) for w, s in h.items()}
    edges = {e: sets[a] & sets[b] for e, a, b in t.edges}
    return SetLabelling(sets, edges, reps, scheme=scheme(f"{mode}-intersection"))


def rainbow_set_labelling(t: Graph, sequence: str = "regular", tau: int | None = None,
                          seeds: Iterable[int] | None = None,
                          first_leaf: int | None = None) -> SetLabelling:
    """Leaf-by-leaf rainbow labelling over ``R_1, ..., R_{q+1}``.

    Base edge: smaller id gets ``R_1``, the other ``R_2``.  Each added leaf
    ``x`` on ``y`` takes ``y``'s current set while ``y`` moves up to the next
    unused ``R``; so the vertex sets are always exactly the first ``p``
    members of the sequence.  ``first_leaf`` changes which leaf is peeled
    first, giving different labellings of the same tree.
    """
    (u, v), steps = _peel_order(t, first_leaf)
    seq = rainbow_sequence(sequence, t.p, tau, seeds)
    g = {u: seq[0], v: seq[1]}
    for k, (x, y) in enumerate(steps, start=2):
        g[x] = g[y]
        g[y] = seq[k]
    edges = {e: g[a] & g[b] for e, a, b in t.edges}
    params = {"sequence": sequence}
    if sequence == "tau-term":
        params.update(tau=tau, seeds=tuple(seeds))
    return SetLabelling(g, edges, scheme=SchemeTag("rainbow", params))


# equivalent labellings of a set-ordered graceful tree ------------------------------

def equivalence_suite(t: Graph, f: Labelling, k: int = 1, d: int = 1) -> dict[str, Labelling]:
    """Derive the labellings equivalent to a set-ordered graceful ``f``.

    With ``s = |X|`` (so ``f(X) = [0, s-1]``, ``f(Y) = [s, q]``):

    * super felicitous ``a(x) = s-1-f(x)``, ``a(y) = f(y)``;
    * ``(k,d)``-graceful ``b = d f`` on X, ``d f + k - d`` on Y;
    * super edge-magic total: ``f + 1`` on X, Y reversed, edges ``f + p``;
    * super ``(s+p+3, 2)``-edge antimagic total: same vertices, edges ``2p - f``;
    * odd-elegant ``2(s-1-f(x))`` and ``2f(y) - 2s + 1``;
    * ``(k,d)``-arithmetic ``a + d(s-1-f(x))`` and ``k - a + d(f(y)-s)``
      with the first offset ``a`` that keeps labels distinct and in range;
    * harmonious: the felicitous labels mod ``q``.

    Each result is checked by :func:`verify`; a failure raises
    :class:`SchemeViolation` naming the scheme instead of being patched.
    """
    x_side, y_side = _require_set_ordered(t, f)
    fv = f.vertex_labels
    p, q, s = t.p, t.q, len(x_side)
    out: dict[str, Labelling] = {}

    alpha = {x: s - 1 - fv[x] for x in x_side} | {y: fv[y] for y in y_side}
    out["set-ordered-felicitous"] = Labelling(alpha, _edges_by(t, alpha, lambda a, b: (a + b) % q),
                                              scheme("set-ordered-felicitous"))

    beta = {x: d * fv[x] for x in x_side} | {y: d * fv[y] + k - d for y in y_side}
    out["kd-graceful"] = Labelling(beta, _edges_by(t, beta, _diff),
                                   scheme("kd-graceful", k=k, d=d, set_ordered=True))

    gamma = _edge_magic_shift(t, f)
    gamma.scheme = scheme("edge-magic-total", super=True, set_ordered=True)
    out["edge-magic-total"] = gamma

    theta_e = {e: 2 * p - abs(fv[u] - fv[v]) for e, u, v in t.edges}
    out["kd-edge-antimagic-total"] = Labelling(
        dict(gamma.vertex_labels), theta_e,
        scheme("kd-edge-antimagic-total", k=s + p + 3, d=2, super=True))

    eta = {x: 2 * (s - 1 - fv[x]) for x in x_side} | {y: 2 * fv[y] - 2 * s + 1 for y in y_side}
    out["odd-elegant"] = Labelling(eta, _edges_by(t, eta, lambda a, b: (a + b) % (2 * q)),
                                   scheme("odd-elegant"))

    tag = scheme("kd-arithmetic", k=k, d=d)
    for a in range(k + 1):
        psi = ({x: a + d * (s - 1 - fv[x]) for x in x_side}
               | {y: k - a + d * (fv[y] - s) for y in y_side})
        cand = Labelling(psi, _edges_by(t, psi, lambda u, v: u + v), tag)
        if verify(t, cand, tag).passed:
            out["kd-arithmetic"] = cand
            break
    else:
        raise SchemeViolation(f"no offset gives a ({k},{d})-arithmetic labelling")

    phi = {v: x % q for v, x in alpha.items()}
    out["harmonious"] = Labelling(phi, _edges_by(t, phi, lambda a, b: (a + b) % q),
                                  scheme("harmonious"))

    for name, lab in out.items():
        rep = verify(t, lab, lab.scheme)
        if not rep.passed:
            raise SchemeViolation(f"{name}: {rep.violated_clauses}")
    return out


# file format ---------------------------------------------------------------------

def _parse_value(text: str):
    for cast in (int,):
        try:
            return cast(text)
        except ValueError:
            pass
    if text in ("true", "false"):
        return text == "true"
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return text


def parse_labelling(text: str, g: Graph) -> Labelling:
    """Read ``scheme <name> [k=v ...]``, ``v <id> <int>`` and ``e <u> <v> <int>`` lines."""
    tag = None
    f: dict[int, int] = {}
    edges: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head = line[0]
        if head == "scheme":
            params = dict(item.split("=", 1) for item in line[2:])
            tag = SchemeTag(line[1], {k: _parse_value(v) for k, v in params.items()})
        elif head == "v":
            f[int(line[1])] = int(line[2])
        elif head == "e":
            u, v, x = (int(tok) for tok in line[1:4])
            eid = g.edge_between(u, v)
            if eid is None:
                raise LabellingError(f"no edge {u}-{v}")
            edges[eid] = x
        else:
            raise LabellingError(f"bad line: {raw!r}")
    return Labelling(f, edges, tag)


def format_labelling(g: Graph, lab: Labelling) -> str:
    rows = []
    if lab.scheme is not None:
        params = []
        for key, val in lab.scheme.params.items():
            if isinstance(val, bool):
                val = str(val).lower()
            elif isinstance(val, tuple):
                val = ",".join(map(str, val))
            params.append(f"{key}={val}")
        rows.append(" ".join(["scheme", lab.scheme.name, *params]))
    rows += [f"v {v} {lab.vertex_labels[v]}" for v in g if v in lab.vertex_labels]
    rows += [f"e {u} {v} {lab.edge_labels[e]}" for e, u, v in g.edges if e in lab.edge_labels]
    return "\n".join(rows) + "\n"
