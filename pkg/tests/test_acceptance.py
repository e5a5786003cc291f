"""Acceptance criteria, one test per criterion.

Each test prints a single PASS line with its elapsed time (visible under
pytest -s or in the failure report) and enforces the stated runtime bound.
The oracle sweep over every connected closed graph on up to 6 vertices is
shared between criteria through a session fixture.
"""

import random
import time
from itertools import combinations

import pytest

from edgeideals.classify import classify_facets, is_scm_indecomposable, wsize_chain_check
from edgeideals.closed import IntervalFacets, build_graph
from edgeideals.complexes import (
    SimplicialComplex,
    boundary_matrices,
    depth_hochster,
    reduced_homology,
)
from edgeideals.cutsets import cutsets_bruteforce, cutsets_structural, is_unmixed
from edgeideals.enumerators import (
    enumerate_closed_connected,
    enumerate_closed_indecomposable,
)
from edgeideals.oracle import oracle_classify_facets, oracle_complex

from conftest import NINE_SCM, SEVEN_ALMOST, SEVEN_NOT_ALMOST, SEVEN_NOT_SCM

SHOWCASE = [SEVEN_NOT_SCM, NINE_SCM, SEVEN_NOT_ALMOST, SEVEN_ALMOST]


def _report(k, name, t0):
    print(f"[criterion {k}] PASS: {name} ({time.time() - t0:.1f}s)")


@pytest.fixture(scope="session")
def oracle_sweep_n6():
    """(facets, classification, oracle report) for all connected closed n <= 6."""
    out = []
    for n in range(1, 7):
        for F in enumerate_closed_connected(n):
            out.append((F, classify_facets(F), oracle_classify_facets(F)))
    return out


def test_criterion_1_golden_showcase_examples():
    t0 = time.time()
    c = classify_facets(SEVEN_NOT_SCM)
    assert c.scm is False
    c = classify_facets(NINE_SCM)
    assert c.scm is True
    c = classify_facets(SEVEN_NOT_ALMOST)
    assert c.almost_cm is False
    c = classify_facets(SEVEN_ALMOST)
    assert c.almost_cm is True and c.scm is True
    elapsed = time.time() - t0
    assert elapsed < 1.0
    _report(1, "classify reproduces all four showcase verdicts", t0)


def test_criterion_2_cutset_structure_theorem():
    t0 = time.time()
    checked = 0
    for n in range(1, 8):
        for F in enumerate_closed_connected(n):
            structural = {r.W: (r.c, r.dim) for r in cutsets_structural(F)}
            brute = {r.W: (r.c, r.dim) for r in cutsets_bruteforce(build_graph(F))}
            assert structural == brute, F.facets
            checked += 1
    assert checked == 1 + 1 + 2 + 5 + 14 + 42 + 132
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report(2, f"structural = brute-force cut sets on {checked} graphs (n <= 7)", t0)


def test_criterion_3_two_clique_depth_formula():
    t0 = time.time()
    checked = 0
    for n in range(4, 8):
        for a in range(2, n):
            for b in range(a + 1, n):
                F = IntervalFacets(n, ((1, b), (a, n)))
                C = oracle_complex(F)
                assert C.dim + 1 == n + 1, (n, a, b)
                depth = depth_hochster(C, 2 * n)
                assert depth == n + a - b + 1, (n, a, b, depth)
                checked += 1
    assert checked == 1 + 3 + 6 + 10
    elapsed = time.time() - t0
    assert elapsed < 300.0
    _report(3, f"oracle depth = n + a - b + 1 on all {checked} two-clique graphs", t0)


def test_criterion_4_main_theorem_cross_validation(oracle_sweep_n6):
    t0 = time.time()
    runs = list(oracle_sweep_n6)
    for F in SHOWCASE:  # caps permit both n = 7 and n = 9 (2n <= 18)
        runs.append((F, classify_facets(F), oracle_classify_facets(F)))
    for F, c, rep in runs:
        assert rep.dim_quotient == c.krull_dim, F.facets
        assert rep.cm == c.cm, F.facets
        assert rep.scm == c.scm, F.facets
        assert rep.almost_cm == c.almost_cm, F.facets
        assert rep.approx_cm == c.approx_cm, F.facets
    elapsed = time.time() - t0
    assert elapsed < 1800.0
    _report(4, f"classifier = oracle on {len(runs)} graphs (n <= 6 exhaustive + showcase)", t0)


def test_criterion_5_criterion_equivalences(oracle_sweep_n6):
    t0 = time.time()
    # Duval <=> Goodarzi on every oracle run of this suite
    for F, _, rep in oracle_sweep_n6:
        assert rep.scm == rep.scm_goodarzi, F.facets
    for F in SHOWCASE:
        rep = oracle_classify_facets(F)
        assert rep.scm == rep.scm_goodarzi, F.facets
    # endpoint condition <=> unimodal-chain condition, indecomposable n <= 9
    t1 = time.time()
    checked = 0
    for n in range(2, 10):
        for F in enumerate_closed_indecomposable(n):
            assert wsize_chain_check(F) == is_scm_indecomposable(F)[0], F.facets
            checked += 1
    assert time.time() - t1 < 60.0
    _report(5, f"Duval=Goodarzi on all runs; chain=endpoint on {checked} blocks", t0)


def test_criterion_6_structural_identities(oracle_sweep_n6):
    t0 = time.time()
    # CM <=> unmixed, classifier vs cut-set module, all connected closed n <= 9
    for n in range(1, 10):
        for F in enumerate_closed_connected(n):
            cm = classify_facets(F).cm
            assert cm == is_unmixed(cutsets_structural(F)), F.facets
    # approx <=> almost and almost => scm on every classified graph, n <= 8
    for n in range(1, 9):
        for F in enumerate_closed_connected(n):
            c = classify_facets(F)
            assert c.approx_cm == c.almost_cm, F.facets
            if c.almost_cm:
                assert c.scm, F.facets
    # oracle confirmation where caps permit: the shared n <= 6 sweep, plus
    # every almost-CM graph on 7 vertices
    for F, c, rep in oracle_sweep_n6:
        assert rep.approx_cm == rep.almost_cm, F.facets
        if rep.almost_cm:
            assert rep.scm, F.facets
    confirmed = 0
    for F in enumerate_closed_connected(7):
        if classify_facets(F).almost_cm:
            rep = oracle_classify_facets(F)
            assert rep.almost_cm and rep.scm, F.facets
            confirmed += 1
    elapsed = time.time() - t0
    assert elapsed < 1800.0
    _report(6, f"identity lattice holds (oracle-confirmed almost-CM at n=7: {confirmed})", t0)


def test_criterion_7_homology_engine_unit_properties():
    t0 = time.time()
    # boundary-squared-zero on randomized complexes, 100 seeds
    for seed in range(100):
        rng = random.Random(seed)
        n = rng.randint(1, 7)
        gens = [
            tuple(rng.sample(range(1, n + 1), rng.randint(1, n)))
            for _ in range(rng.randint(1, 6))
        ]
        C = SimplicialComplex.from_faces(n, gens)
        mats = boundary_matrices(C)
        for d in sorted(mats):
            if d + 1 in mats and mats[d] and mats[d + 1] and mats[d][0]:
                A, B = mats[d], mats[d + 1]
                for i in range(len(A)):
                    for j in range(len(B[0])):
                        assert sum(A[i][k] * B[k][j] for k in range(len(B))) == 0
        # Euler consistency on every homology call (also asserted internally)
        prof = reduced_homology(C)
        fvec = C.f_vector()
        chi = sum(c if d % 2 == 0 else -c for d, c in fvec.items())
        assert prof.euler() == chi
    # hollow spheres: boundary of the (k+1)-simplex is S^k for k <= 3 (dim 4 complex bound)
    for k in range(0, 4):
        verts = range(1, k + 3)
        sphere = SimplicialComplex.from_faces(k + 2, combinations(verts, k + 2 - 1))
        assert reduced_homology(sphere).nonzero() == {k: 1}, k
    # dimension-4 sphere as well: boundary of the 5-simplex
    sphere4 = SimplicialComplex.from_faces(6, combinations(range(1, 7), 5))
    assert reduced_homology(sphere4).nonzero() == {4: 1}
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report(7, "boundary^2 = 0, Euler identity, sphere Betti numbers", t0)
