"""Shared fixtures: showcase graphs and small brute-force oracles."""

from itertools import permutations

import pytest

from edgeideals.closed import IntervalFacets, build_graph
from edgeideals.graphs import Graph, from_edge_list


# The four showcase facet sequences exercised throughout the suite.
SEVEN_NOT_SCM = IntervalFacets(7, ((1, 3), (2, 5), (3, 6), (5, 7)))
NINE_SCM = IntervalFacets(9, ((1, 3), (2, 6), (3, 7), (4, 8), (5, 9)))
SEVEN_NOT_ALMOST = IntervalFacets(7, ((1, 4), (3, 6), (5, 7)))
SEVEN_ALMOST = IntervalFacets(7, ((1, 4), (3, 5), (4, 7)))


@pytest.fixture
def seven_graph() -> Graph:
    return build_graph(SEVEN_NOT_SCM)


@pytest.fixture
def nine_graph() -> Graph:
    return build_graph(NINE_SCM)


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def claw() -> Graph:
    return from_edge_list(4, [(1, 2), (1, 3), (1, 4)])


def relabel(G: Graph, perm: dict[int, int]) -> Graph:
    return from_edge_list(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def is_closed_labeling_ref(G: Graph) -> bool:
    """Reference check: every closed neighbourhood is a consecutive run."""
    for v in range(1, G.n + 1):
        m = G.adj[v] | (1 << (v - 1))
        lo = (m & -m).bit_length() - 1
        hi = m.bit_length() - 1
        if m != (((1 << (hi + 1)) - 1) >> lo) << lo:
            return False
    return True


def brute_force_is_closed(G: Graph) -> bool:
    """Exhaustive oracle over all n! labelings; usable up to n = 8."""
    verts = list(range(1, G.n + 1))
    for p in permutations(verts):
        perm = {v: p[v - 1] for v in verts}
        if is_closed_labeling_ref(relabel(G, perm)):
            return True
    return False


def all_graphs(n: int):
    """Every labeled simple graph on [n] (2^C(n,2) of them)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for code in range(1 << len(pairs)):
        yield from_edge_list(n, [pairs[k] for k in range(len(pairs)) if (code >> k) & 1])
