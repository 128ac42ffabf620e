import networkx as nx
import pytest
from hypothesis import settings

from topsnut.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def from_nx(h) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(range(len(idx)), [(idx[u], idx[v]) for u, v in h.edges()])


def trees_upto(n_max):
    """Every tree on 2..n_max vertices, one per isomorphism class."""
    for n in range(2, n_max + 1):
        for t in nx.nonisomorphic_trees(n):
            yield from_nx(t)


@pytest.fixture(scope="session")
def trees8():
    return list(trees_upto(8))


@pytest.fixture(scope="session")
def caterpillars8(trees8):
    from topsnut.trees import is_caterpillar

    return [t for t in trees8 if is_caterpillar(t)]


def hairy(core: Graph, anchors, hairs) -> Graph:
    """Copy of ``core`` with ``hairs[i]`` pendant leaves on ``anchors[i]``."""
    g = Graph(core.vertices, [(u, v) for _, u, v in core.edges])
    for u, c in zip(anchors, hairs):
        for _ in range(c):
            g.add_edge(u, g.new_vertex())
    return g


def enumerate_cycle_variants(g: Graph, cyc) -> int:
    """Distinct vv token sequences over every start and every explicit body order.

    Vertex ids serve as labels, so distinct orders can only collide if the
    method itself loses information.
    """
    from itertools import permutations, product

    from topsnut.labelling import Labelling
    from topsnut.tbpaw import NeighborPolicy, cycle_neighbor_method

    n = len(cyc)
    lab = Labelling({v: v for v in g}, {e: abs(u - v) for e, u, v in g.edges})
    bodies = {}
    for i, u in enumerate(cyc):
        skip = {cyc[j] for j in (i - 1, i + 1) if 0 <= j < n}
        bodies[u] = [v for v in g.neighbors(u) if v not in skip]
    seen = set()
    for start in range(n):
        for choice in product(*(permutations(bodies[u]) for u in cyc)):
            pol = NeighborPolicy("explicit", dict(zip(cyc, choice)))
            seen.add(cycle_neighbor_method(g, lab, cyc, start, pol)[0].tokens)
    return len(seen)


def enumerated_partition_table(m: int) -> list[int]:
    """``[A(m, 0), .., A(m, m)]`` by listing every partition of ``m`` with sympy."""
    from sympy.utilities.iterables import partitions

    if m == 0:
        return [1]
    by_max = [0] * (m + 1)
    for p in partitions(m):
        by_max[max(p)] += 1
    out, run = [], 0
    for c in by_max:
        run += c
        out.append(run)
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
