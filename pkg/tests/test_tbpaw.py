import math
from collections import Counter
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import enumerate_cycle_variants, hairy

from topsnut.errors import NonDecodable, NotACycle, NotALobster, NotASpider, NotAWalk
from topsnut.graph import Graph, cycle_graph, path_graph, star_graph
from topsnut.instances import (
    D1_LOBSTER, D5_LOBSTER, D_VEV_C8, D_VEV_H_PRINTED, D_VEV_Q, D_VV_H_PRINTED, D_VV_Q,
    NOISE_ENCODED, NOISE_TABLE, NOISE_TOKENS, c8, caterpillar_h, multiple_meaning_lobster,
)
from topsnut.labelling import (
    Labelling, construct_set_ordered_graceful_caterpillar, extend_caterpillar_to_lobster,
    graceful_to_odd_graceful,
)
from topsnut.lcg import Lcg
from topsnut.paw import TbPaw
from topsnut.tbpaw import (
    MAXI, MINI, InsertLetters, NeighborPolicy, Substitute, cycle_neighbor_method,
    cycle_variant_count, euler_hamilton_method, lobster_neighbor_method, multiple_meaning_emit,
    noise_decode, noise_encode, path_method, path_neighbor_count, path_neighbor_method,
    spider_neighbor_method,
)
from topsnut.trees import caterpillar_spine, random_caterpillar


def ids_as_labels(g):
    return Labelling({v: v for v in g}, {e: abs(u - v) for e, u, v in g.edges})


# path method

def test_path_strings():
    g, lab, spine = caterpillar_h()
    assert path_method(g, lab, spine).rendered == D_VV_Q
    assert path_method(g, lab, spine, "vev").rendered == D_VEV_Q


def test_single_vertex_path():
    g = Graph([4])
    assert path_method(g, Labelling({4: 9}), [4]).rendered == "9"


def test_path_must_be_walk():
    g, lab, _ = caterpillar_h()
    with pytest.raises(NotAWalk):
        path_method(g, lab, [0, 10])


# path-neighbour method

@pytest.mark.xfail(strict=True, reason="printed whole-caterpillar strings mix block conventions")
@pytest.mark.parametrize("kind,printed", [("vv", D_VV_H_PRINTED), ("vev", D_VEV_H_PRINTED)])
def test_caterpillar_printed_strings(kind, printed):
    g, lab, spine = caterpillar_h()
    assert path_neighbor_method(g, lab, spine, MINI, kind).rendered == printed


def test_caterpillar_blocks():
    g, lab, spine = caterpillar_h()
    d = path_neighbor_method(g, lab, spine)
    assert d.rendered.startswith("0394143454703")
    assert path_neighbor_method(g, lab, spine, MAXI).rendered.startswith("0474543413903")


def test_k11_policies_coincide():
    g = path_graph(2)
    lab = ids_as_labels(g)
    assert path_neighbor_method(g, lab, [0], MINI) == path_neighbor_method(g, lab, [0], MAXI)


@pytest.mark.parametrize("hairs", [h for n in range(1, 5) for h in product(range(4), repeat=n)
                                   if sum(h) <= 6][::3])
def test_explicit_orders_give_product_of_factorials(hairs):
    spine = list(range(len(hairs)))
    g = hairy(path_graph(len(hairs)), spine, hairs)
    lab = ids_as_labels(g)
    bodies = {u: [v for v in g.neighbors(u) if v not in spine] for u in spine}
    seen = set()
    for choice in product(*(permutations(bodies[u]) for u in spine)):
        pol = NeighborPolicy("explicit", dict(zip(spine, choice)))
        seen.add(path_neighbor_method(g, lab, spine, pol).tokens)
    assert len(seen) == path_neighbor_count(g, spine) == math.prod(math.factorial(h) for h in hairs)


@given(st.integers(1, 6), st.integers(0, 8), st.integers(0, 1000))
def test_path_neighbor_vev_writes_each_edge_once(spine_len, leaves, seed):
    rng = Lcg(seed)
    t = random_caterpillar(spine_len, [rng.below(leaves + 1) for _ in range(spine_len)])
    lab = ids_as_labels(t)
    d = path_neighbor_method(t, lab, kind="vev")
    vv = path_neighbor_method(t, lab)
    spine = caterpillar_spine(t)
    # vv: p vertices plus one closing label per block; vev adds the q edges
    assert len(vv) == t.p + len(spine)
    assert len(d) == len(vv) + t.q


# cycle-neighbour method

def test_triangle_count():
    g = cycle_graph(3)
    assert cycle_variant_count(g, [0, 1, 2]) == 3


def test_short_cycle_rejected():
    with pytest.raises(NotACycle):
        cycle_neighbor_method(path_graph(2), ids_as_labels(path_graph(2)), [0, 1])


CYCLE_CASES = [h for n in (3, 4) for h in product(range(3), repeat=n)]


@pytest.mark.parametrize("hairs", CYCLE_CASES)
def test_cycle_variant_count_matches_enumeration(hairs):
    cyc = list(range(len(hairs)))
    g = hairy(cycle_graph(len(hairs)), cyc, hairs)
    assert enumerate_cycle_variants(g, cyc) == cycle_variant_count(g, cyc)


def test_cycle_start_block_repeated():
    g = cycle_graph(4)
    d, _ = cycle_neighbor_method(g, ids_as_labels(g), [0, 1, 2, 3], start=1)
    # vertex 1 has an empty body, so its block is "1 1"
    assert d.tokens[:2] == d.tokens[-2:] == (1, 1)


# lobster-neighbour method

def test_lobster_without_added_leaves_is_path_neighbor():
    t = random_caterpillar(4, [2, 0, 3, 1])
    lab = ids_as_labels(t)
    spine = caterpillar_spine(t)
    for kind in ("vv", "vev"):
        assert lobster_neighbor_method(t, lab, new_leaves=[], spine=spine, kind=kind).tokens == \
            path_neighbor_method(t, lab, spine, kind=kind).tokens


def _random_lobster(seed):
    rng = Lcg(seed)
    n = 1 + rng.below(4)
    h = random_caterpillar(n, [1 + rng.below(3)] + [rng.below(3) for _ in range(n - 1)])
    g = graceful_to_odd_graceful(h, construct_set_ordered_graceful_caterpillar(h))
    budget, plan = 14 - h.p, {}
    for v in h:
        plan[v] = min(rng.below(3), budget)
        budget -= plan[v]
    lob, lab, new = extend_caterpillar_to_lobster(h, g, plan)
    return h, lob, lab, new


@pytest.mark.parametrize("seed", range(100))
def test_lobster_emission_counts(seed):
    h, lob, lab, new = _random_lobster(seed)
    assert lob.p <= 14
    spine = caterpillar_spine(h)
    vv = lobster_neighbor_method(lob, lab, new, spine)
    vev = lobster_neighbor_method(lob, lab, new, spine, kind="vev")
    hair_blocks = sum(1 for x in h if any(a in new for a in lob.neighbors(x)))
    assert len(vv) == lob.p + len(spine) + hair_blocks
    assert len(vev) == len(vv) + lob.q


@pytest.mark.parametrize("seed", range(20))
def test_lobster_vev_edge_labels_each_once(seed):
    h, lob, lab, new = _random_lobster(seed)
    # relabel edges with values no vertex uses, then count their occurrences
    tags = {e: 1000 + e for e in lob.edge_ids}
    tagged = Labelling(lab.vertex_labels, tags)
    d = lobster_neighbor_method(lob, tagged, new, caterpillar_spine(h), kind="vev")
    counts = Counter(t for t in d.tokens if t >= 1000)
    assert counts == Counter(tags.values())
    assert set(lab.vertex_labels.values()) <= set(d.tokens)


def test_not_a_lobster():
    g = cycle_graph(4)
    with pytest.raises(NotALobster):
        lobster_neighbor_method(g, ids_as_labels(g))


# spider-neighbour method

def test_star_spider_count():
    s = star_graph(3)
    _, count = spider_neighbor_method(s, ids_as_labels(s))
    assert count == 6


def _spider(legs, leaves=0):
    g = Graph([0])
    for length in legs:
        prev = 0
        for _ in range(length):
            v = g.new_vertex()
            g.add_edge(prev, v)
            prev = v
    for _ in range(leaves):
        g.add_edge(0, g.new_vertex())
    return g


def test_spider_legs_222():
    s = _spider([2, 2, 2])
    _, count = spider_neighbor_method(s, ids_as_labels(s))
    assert count == 6


@pytest.mark.parametrize("legs,leaves", [([2, 2, 2], 0), ([3, 2], 1), ([2], 2), ([], 3), ([4, 2, 3], 1)])
def test_spider_orders_distinct(legs, leaves):
    s = _spider(legs, leaves)
    lab = ids_as_labels(s)
    firsts = list(s.neighbors(0))
    strings = {spider_neighbor_method(s, lab, order, "vev")[0].tokens for order in permutations(firsts)}
    assert len(strings) == math.factorial(len(firsts))


def test_spider_vev_covers_edges():
    s = _spider([3, 2, 2], 2)
    tags = {e: 100 + e for e in s.edge_ids}
    d, _ = spider_neighbor_method(s, Labelling({v: v for v in s}, tags), kind="vev")
    assert Counter(t for t in d.tokens if t >= 100) == Counter(tags.values())


def test_not_a_spider():
    with pytest.raises(NotASpider):
        spider_neighbor_method(path_graph(4), ids_as_labels(path_graph(4)))


# Euler-Hamilton method

def test_c8_string():
    g, lab = c8()
    assert euler_hamilton_method(g, lab).rendered == D_VEV_C8


def test_one_cycle_permutation_irrelevant():
    g, lab = c8()
    assert euler_hamilton_method(g, lab, [0]) == euler_hamilton_method(g, lab)


def test_two_triangles_orders_differ():
    g = Graph(range(5), [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    lab = Labelling({v: v for v in g}, {e: 10 + e for e in g.edge_ids})
    a = euler_hamilton_method(g, lab, [0, 1])
    b = euler_hamilton_method(g, lab, [1, 0])
    assert a.rendered != b.rendered
    assert euler_hamilton_method(g, lab, [1, 0], prefix=1).tokens == b.tokens[: len(b) // 2]


# multiple edge-meaning

def test_lobster_multiple_meaning_strings():
    t, lab = multiple_meaning_lobster()
    ds = multiple_meaning_emit(t, lab, start=2)
    assert len(ds) == 5
    assert ds[0].rendered == D1_LOBSTER
    assert ds[4].rendered == D5_LOBSTER


def test_single_edge_five_rules():
    # sum 1, p = 2, q = 1: edge labels 1, 2, 0, 1, 1
    g = path_graph(2)
    out = [d.rendered for d in multiple_meaning_emit(g, Labelling({0: 0, 1: 1}))]
    assert out == ["011", "021", "001", "011", "011"]


# the concatenation algebra and noise

tokens = st.lists(st.integers(0, 120), max_size=20)


@given(tokens, tokens, tokens)
def test_uplus_associative(a, b, c):
    x, y, z = TbPaw.of(a), TbPaw.of(b), TbPaw.of(c)
    assert ((x + y) + z).tokens == (x + (y + z)).tokens


def test_noise_string():
    assert noise_encode(TbPaw.of(NOISE_TOKENS), Substitute(NOISE_TABLE)) == NOISE_ENCODED


def test_noise_decode_recovers_digits():
    d = noise_decode(NOISE_ENCODED, Substitute(NOISE_TABLE))
    assert d.rendered == TbPaw.of(NOISE_TOKENS).rendered


def test_empty_noise_is_identity():
    d = TbPaw.of([3, 12, 0])
    assert noise_encode(d, Substitute({})) == d.rendered
    assert noise_encode(d, InsertLetters(seed=1, count=0)) == d.rendered


def test_prefix_table_rejected():
    with pytest.raises(NonDecodable):
        noise_encode(TbPaw.of([1]), Substitute({"x": "1", "y": "12"}))
    with pytest.raises(NonDecodable):
        noise_decode("q", Substitute({"x": "1"}))


@settings(max_examples=1000)
@given(tokens, st.integers(0, 2**32))
def test_noise_round_trip(toks, seed):
    d = TbPaw.of(toks)
    for sch in (Substitute(NOISE_TABLE), InsertLetters(seed)):
        assert noise_decode(noise_encode(d, sch), sch).rendered == d.rendered


def test_insert_letters_deterministic():
    d = TbPaw.of(NOISE_TOKENS)
    assert noise_encode(d, InsertLetters(7)) == noise_encode(d, InsertLetters(7))
    assert noise_encode(d, InsertLetters(7)) != noise_encode(d, InsertLetters(8))
