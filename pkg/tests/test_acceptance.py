"""One test per acceptance criterion; each prints a PASS/FAIL line with its timing."""

import math
from contextlib import contextmanager
from itertools import product
from time import perf_counter

import networkx as nx
import pynauty
import pytest

from conftest import (
    ACCEPTANCE_LINES, enumerate_cycle_variants, enumerated_partition_table, from_nx, hairy,
)
from topsnut.graph import Graph, cycle_graph, path_graph, preferential_attachment
from topsnut.groups import (
    add, build_group, complete_bipartite_group_labelling, matrix_group, tree_group_coloring,
)
from topsnut.instances import (
    A_A1, A_A1_STRINGS, D1_LOBSTER, D5_LOBSTER, D_VEV_C8, D_VEV_Q, D_VV_Q, NETWORK_COMPONENTS,
    NETWORK_PRINTED_TOTAL, NOISE_ENCODED, NOISE_TABLE, NOISE_TOKENS, c8, caterpillar_h,
    complement_of_two_c4, image_caterpillar, multiple_meaning_lobster, six_c_tree,
)
from topsnut.labelling import (
    Labelling, construct_set_ordered_graceful_caterpillar, extend_caterpillar_to_lobster,
    graceful_to_odd_graceful, image_labelling, intersection_set_labelling, rainbow_set_labelling,
    six_c_from_set_ordered_graceful, six_c_mate, verify, verify_image_pair,
)
from topsnut.lcg import Lcg
from topsnut.matrix import (
    Factored, enumerate_matrices, halved_pair_count, extract, from_graph, met, partitions_at_most,
    raw_pair_count, tbpaw_census,
)
from topsnut.netcrypt import Snapshot, account, network_violations, pipeline_encrypt
from topsnut.paw import TbPaw
from topsnut.splitting import (
    e_split_connectivity, edge_connectivity, v_split_connectivity, v_split_witness,
    vertex_connectivity,
)
from topsnut.tbpaw import (
    Substitute, cycle_variant_count, euler_hamilton_method, multiple_meaning_emit, noise_encode,
    path_method,
)
from topsnut.trees import random_caterpillar, random_tree


@contextmanager
def criterion(label, budget, expect_failure=False):
    notes = []
    t0 = perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        dt = perf_counter() - t0
        passed = ok and dt < budget
        line = f"{'PASS' if passed else 'FAIL'} {label}: {dt:.2f}s (budget {budget}s)"
        if notes:
            line += "; " + "; ".join(notes)
        if expect_failure and not passed:
            line += " [known shortfall, marked xfail]"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert dt < budget, f"{label} took {dt:.2f}s, budget {budget}s"


# 1. string reproduction

def _path_vv():
    g, lab, spine = caterpillar_h()
    return path_method(g, lab, spine).rendered


def _path_vev():
    g, lab, spine = caterpillar_h()
    return path_method(g, lab, spine, "vev").rendered


def _route(k):
    return lambda: extract(A_A1, met(k, A_A1.q)).rendered


def _c8():
    return euler_hamilton_method(*c8()).rendered


def _mm(i):
    return lambda: multiple_meaning_emit(*multiple_meaning_lobster(), start=2)[i].rendered


def _noise():
    return noise_encode(TbPaw.of(NOISE_TOKENS), Substitute(NOISE_TABLE))


STRINGS = [
    ("D_vv(Q)", _path_vv, D_VV_Q),
    ("D_vev(Q)", _path_vev, D_VEV_Q),
    ("A(a-1) route 1", _route(1), A_A1_STRINGS[1]),
    ("A(a-1) route 3", _route(3), A_A1_STRINGS[3]),
    ("A(a-1) route 5", _route(5), A_A1_STRINGS[5]),
    ("D_vev(C8)", _c8, D_VEV_C8),
    ("lobster D1", _mm(0), D1_LOBSTER),
    ("lobster D5", _mm(4), D5_LOBSTER),
    ("substitution noise", _noise, NOISE_ENCODED),
]


@pytest.mark.parametrize("name,make,expected", STRINGS, ids=[s[0] for s in STRINGS])
def test_1_string_reproduction(name, make, expected):
    with criterion(f"1 strings [{name}]", 1):
        assert make() == expected


# 2. counting oracles

def _graceful_path(q):
    g = path_graph(q + 1)
    f = construct_set_ordered_graceful_caterpillar(g)
    return g, Labelling(f.vertex_labels, {e: abs(f.vertex_labels[u] - f.vertex_labels[v])
                                          for e, u, v in g.edges})


def test_2_counting_oracles():
    with criterion("2 counting oracles", 10) as notes:
        for q in range(1, 5):
            ms = set(enumerate_matrices(*_graceful_path(q)))
            assert len(ms) == math.factorial(q) * 2 ** q
        for q in (1, 2):
            rep = tbpaw_census(*_graceful_path(q))
            assert rep["pairs"] == math.factorial(3 * q) * math.factorial(q) * 2 ** q
            notes.append(f"q={q}: {rep['pairs']} pairs, {rep['distinct_strings']} distinct strings, "
                         f"halved formula {rep['halved_formula']}")
        for m in range(41):
            assert [partitions_at_most(m, k) for k in range(m + 1)] == enumerated_partition_table(m)
        cases = 0
        for n in (3, 4):
            for hairs in product(range(3), repeat=n):
                cyc = list(range(n))
                g = hairy(cycle_graph(n), cyc, hairs)
                assert enumerate_cycle_variants(g, cyc) == cycle_variant_count(g, cyc)
                cases += 1
        notes.append(f"{cases} cycle cases")
        headline = Factored.of([570, 190], 190)
        assert headline == raw_pair_count(190) and str(halved_pair_count(190))
        notes.append(f"q=190 raw count kept symbolic: {headline}")


# 3. labelling suite

def _random_plan(rng):
    spine = 1 + rng.below(4)
    leaves = [rng.below(3) for _ in range(spine)]
    leaves[0] = max(leaves[0], 1)
    t = random_caterpillar(spine, leaves)
    plan = {v: rng.below(3) for v in t}
    return t, plan


def test_3_labelling_suite(trees8, caterpillars8):
    with criterion("3 labelling suite", 30) as notes:
        for t in caterpillars8:
            f = construct_set_ordered_graceful_caterpillar(t)
            assert verify(t, f, "set-ordered-graceful").passed
            odd = graceful_to_odd_graceful(t, f)
            assert verify(t, odd, "set-ordered-odd-graceful").passed
            assert verify(t, image_labelling(t, f), "set-ordered-graceful").passed
            assert verify(t, image_labelling(t, odd, odd=True), "set-ordered-odd-graceful").passed
            for lab in (six_c_from_set_ordered_graceful(t, f), six_c_mate(t, f)):
                assert verify(t, lab, "6c").passed
            lob, lab, _ = extend_caterpillar_to_lobster(t, odd, {v: 1 for v in t})
            assert verify(lob, lab, "odd-graceful").passed
        notes.append(f"{len(caterpillars8)} caterpillars")
        rng = Lcg(77)
        for _ in range(200):
            t, plan = _random_plan(rng)
            odd = graceful_to_odd_graceful(t, construct_set_ordered_graceful_caterpillar(t))
            lob, lab, new = extend_caterpillar_to_lobster(t, odd, plan)
            assert len(new) == sum(plan.values()) and verify(lob, lab, "odd-graceful").passed
        for t in trees8:
            for mode in ("graceful", "odd-graceful"):
                assert verify(t, intersection_set_labelling(t, mode), f"{mode}-intersection").passed
            for seq in ("regular", "odd", "fibonacci"):
                lab = rainbow_set_labelling(t, seq)
                assert verify(t, lab, lab.scheme).passed
        notes.append(f"200 lobster plans, set-labellings on {len(trees8)} trees")
        rep = verify(*six_c_tree(), "6c")
        c = rep.constants
        assert rep.passed and (c["k"], c["k''"], c["singularity"]) == (13, 26, 13)
        t = image_caterpillar()
        f = construct_set_ordered_graceful_caterpillar(t)
        odd = graceful_to_odd_graceful(t, f)
        assert verify_image_pair(t, f, image_labelling(t, f)).constants["k"] == 17
        assert verify_image_pair(t, odd, image_labelling(t, odd, odd=True)).constants["k"] == 32


# 4. group axioms

def test_4_group_axioms():
    with criterion("4 group axioms", 10):
        h = path_graph(4)
        f = Labelling({0: 0, 1: 5, 2: 1, 3: 3}, {0: 5, 1: 4, 2: 2})
        for n in range(2, 17):
            assert build_group(h, f, n).axiom_violations() == []
            mg = matrix_group(from_graph(h, f), n)
            assert mg.violations() == []
            assert all(m.W == mg.base.W for m in mg.elements())
        grp = build_group(h, f, 14)
        assert add(14, 2, 5, 1) == 6
        h2, h5, h1, h6 = (grp.element(i).vertex_labels for i in (2, 5, 1, 6))
        assert all((h2[x] + h5[x] - h1[x]) % 14 == h6[x] for x in h)


# 5. tree group-colouring

def test_5_tree_group_coloring():
    with criterion("5 tree group-colouring", 30) as notes:
        rng = Lcg(2024)
        for _ in range(500):
            t = random_tree(2 + rng.below(14), rng)
            n = 2 + rng.below(24)
            seq = [1 + rng.below(n) for _ in range(t.q)]
            gl = tree_group_coloring(t, n, seq, 1 + rng.below(n), rng.choice(sorted(t.vertices)))
            assert gl.violations() == []
        count = 0
        for m in range(1, 13):
            for k in range(1, 12 // m + 1):
                _, gl = complete_bipartite_group_labelling(m, k, m * k + 1, 1, 1)
                assert gl.violations() == []
                assert sorted(gl.edge_index.values()) == list(range(1, m * k + 1))
                count += 1
        notes.append(f"500 random trees, {count} complete bipartite graphs")


# 6. connectivity

def _cert(n, edges):
    adj = {i: [] for i in range(n)}
    for u, v in edges:
        adj[u].append(v)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def connected_graphs_upto_8():
    """Every connected graph on 2..8 vertices up to isomorphism.

    The atlas covers up to 7 vertices; 8-vertex graphs come from joining a
    new vertex to every subset of each 7-vertex graph, deduplicated by
    canonical certificate.
    """
    out, seven = [], []
    for a in nx.graph_atlas_g()[1:]:
        if a.number_of_nodes() >= 2 and nx.is_connected(a):
            out.append(from_nx(a))
        if a.number_of_nodes() == 7:
            seven.append(list(a.edges()))
    seen = set()
    for edges in seven:
        for mask in range(1, 128):
            e2 = edges + [(i, 7) for i in range(7) if mask >> i & 1]
            c = _cert(8, e2)
            if c in seen:
                continue
            seen.add(c)
            g = Graph(range(8), e2)
            if g.is_connected():
                out.append(g)
    return out


def test_6_connectivity():
    with criterion("6 split connectivity", 60) as notes:
        graphs = connected_graphs_upto_8()
        eight = sum(g.p == 8 for g in graphs)
        assert eight == 11117
        for g in graphs:
            gamma, _ = v_split_witness(g)
            assert gamma == vertex_connectivity(g)
        notes.append(f"{len(graphs)} graphs ({eight} on 8 vertices)")
        k = complement_of_two_c4()
        quint = (e_split_connectivity(k, max_edges=20), v_split_connectivity(k)[0],
                 vertex_connectivity(k), edge_connectivity(k), k.min_degree())
        assert quint == (2, 4, 4, 5, 5)


# 7. pipeline

def test_7a_pipeline():
    with criterion("7a pipeline", 10):
        h = path_graph(4)
        grp = build_group(h, Labelling({0: 0, 1: 5, 2: 1, 3: 3}, {0: 5, 1: 4, 2: 2}), 14)
        snap = Snapshot(0, preferential_attachment(50, 2, Lcg(7)))
        a = pipeline_encrypt(snap, grp, "A", seed=7)
        b = pipeline_encrypt(snap, grp, "A", seed=7)
        c = pipeline_encrypt(snap, grp, "C", seed=7)
        assert network_violations(a) == [] and network_violations(c) == []
        assert a.provenance["emission"].tbpaw.rendered == b.provenance["emission"].tbpaw.rendered
        assert a.host.edge_set() != c.host.edge_set()


@pytest.mark.xfail(strict=True, reason="transcribed components measure 306 bytes; one join "
                                       "string is listed one byte longer than it is")
def test_7b_network_accounting():
    with criterion("7b network accounting", 10, expect_failure=True) as notes:
        acc = account([(n, s) for n, s, _ in NETWORK_COMPONENTS])
        kinds = acc.by_kind()
        notes.append(f"blocks {kinds['blocks']}, joins {kinds['joins']}, total {acc.total}")
        assert acc.total == NETWORK_PRINTED_TOTAL
