import pytest

from edgeideals.closed import IntervalFacets, build_graph
from edgeideals.cutsets import (
    CutSetRecord,
    cutsets_bruteforce,
    cutsets_closed,
    cutsets_structural,
    filtration_components,
    is_unmixed,
    krull_dimension,
)
from edgeideals.enumerators import enumerate_closed_connected, random_closed
from edgeideals.errors import ResourceCapError
from edgeideals.graphs import from_edge_list

from conftest import SEVEN_NOT_SCM, complete_graph, path_graph


def as_map(records):
    return {r.W: (r.c, r.dim) for r in records}


def test_bruteforce_path4():
    recs = cutsets_bruteforce(path_graph(4))
    assert set(as_map(recs)) == {(), (2,), (3,)}  # {2,3} fails minimality
    assert as_map(recs)[(2,)] == (2, 4 - 1 + 2)


def test_bruteforce_two_clique():
    # facets [1,b],[a,n]: cut sets are {} and [a,b]
    F = IntervalFacets(5, ((1, 4), (2, 5)))
    recs = cutsets_bruteforce(build_graph(F))
    assert set(as_map(recs)) == {(), (2, 3, 4)}


def test_bruteforce_complete():
    assert set(as_map(cutsets_bruteforce(complete_graph(5)))) == {()}


def test_bruteforce_cap():
    with pytest.raises(ResourceCapError):
        cutsets_bruteforce(from_edge_list(21, [(1, 2)]))


def test_bruteforce_parts_are_components(seven_graph):
    recs = cutsets_bruteforce(seven_graph)
    for r in recs:
        assert len(r.parts) == r.c
        assert r.dim == 7 - len(r.W) + r.c
        covered = sorted(v for p in r.parts for v in p)
        assert covered == sorted(set(range(1, 8)) - set(r.W))


def test_structural_seven_example():
    recs = cutsets_structural(SEVEN_NOT_SCM)
    assert set(as_map(recs)) == {(), (2, 3), (3, 4, 5), (5, 6), (2, 3, 5, 6)}
    assert as_map(recs)[(2, 3, 5, 6)] == (3, 7 - 4 + 3)


def test_structural_path4():
    recs = cutsets_structural(IntervalFacets(4, ((1, 2), (2, 3), (3, 4))))
    assert set(as_map(recs)) == {(), (2,), (3,)}  # union {2},{3} rejected: 2+1 !< 3


def test_structural_two_cliques():
    F = IntervalFacets(6, ((1, 4), (3, 6)))
    recs = cutsets_structural(F)
    assert set(as_map(recs)) == {(), (3, 4)}


def test_structural_matches_bruteforce_exhaustive():
    for n in range(1, 7):
        for F in enumerate_closed_connected(n):
            got = as_map(cutsets_structural(F))
            ref = as_map(cutsets_bruteforce(build_graph(F)))
            assert got == ref, F.facets


def test_structural_matches_bruteforce_sampled_large():
    for n in (8, 10, 12):
        for seed in range(12):
            F = random_closed(n, seed, density_bias=0.4)
            got = as_map(cutsets_structural(F))
            ref = as_map(cutsets_bruteforce(build_graph(F)))
            assert got == ref, F.facets


def test_structural_parts_match_bruteforce():
    for F in enumerate_closed_connected(6):
        sp = {r.W: r.parts for r in cutsets_structural(F)}
        bp = {r.W: r.parts for r in cutsets_bruteforce(build_graph(F))}
        assert sp == bp


def test_singleton_dim_dichotomy():
    # dim = n + 1 exactly when every picked connected cut set is a singleton
    for F in enumerate_closed_connected(6):
        for r in cutsets_structural(F):
            if not r.W:
                continue
            assert r.dim <= F.n + 1
            picked_all_singletons = r.c - 1 == len(r.W)
            assert (r.dim == F.n + 1) == picked_all_singletons


def test_krull_dimension_examples(seven_graph):
    assert krull_dimension(cutsets_bruteforce(seven_graph), 7) == 8
    assert krull_dimension(cutsets_bruteforce(complete_graph(4)), 4) == 5
    two_edges = from_edge_list(4, [(1, 2), (3, 4)])
    assert krull_dimension(cutsets_bruteforce(two_edges), 4) == 6


def test_is_unmixed_examples(seven_graph):
    assert is_unmixed(cutsets_bruteforce(path_graph(4)))
    assert not is_unmixed(cutsets_bruteforce(seven_graph))
    assert is_unmixed(cutsets_bruteforce(complete_graph(6)))


def test_filtration_components():
    F = IntervalFacets(4, ((1, 3), (2, 4)))
    recs = cutsets_structural(F)
    dims = sorted(r.dim for r in recs)
    assert dims == [4, 5]  # n+a-b+1 = 4 and n+1 = 5
    assert [r.W for r in filtration_components(recs, 4)] == [()]
    assert len(filtration_components(recs, -1)) == len(recs)
    top = krull_dimension(recs, 4)
    assert all(r.dim == top for r in filtration_components(recs, top - 1))
    with pytest.raises(ValueError):
        filtration_components(recs, 5)


def test_cutsets_closed_disconnected():
    # K3 plus an edge: cut sets are products of per-component cut sets
    G = from_edge_list(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    got = as_map(cutsets_closed(G))
    ref = as_map(cutsets_bruteforce(G))
    assert got == ref


def test_record_sorting_is_canonical(seven_graph):
    recs = cutsets_bruteforce(seven_graph)
    assert list(recs) == sorted(recs, key=CutSetRecord.sort_key)
