import random
from itertools import combinations

import pytest

from edgeideals.complexes import (
    SimplicialComplex,
    _betti_from_faces,
    _faces_of,
    boundary_matrices,
    depth_hochster,
    induced_subcomplex,
    is_cm_reisner,
    is_scm_duval,
    link,
    pure_skeleton,
    reduced_homology,
)
from edgeideals.errors import ResourceCapError


def cx(n, *facets):
    return SimplicialComplex(n, frozenset(frozenset(f) for f in facets))


def simplex_boundary(k):
    """Boundary of the k-simplex: homotopy sphere S^{k-1} on k+1 vertices."""
    verts = range(1, k + 2)
    return SimplicialComplex.from_faces(k + 1, combinations(verts, k))


def random_complex(rng, n_max=7):
    n = rng.randint(1, n_max)
    n_gens = rng.randint(1, 6)
    gens = []
    for _ in range(n_gens):
        size = rng.randint(1, n)
        gens.append(tuple(rng.sample(range(1, n + 1), size)))
    return SimplicialComplex.from_faces(n, gens)


def test_homology_basic_examples():
    hollow = cx(3, (1, 2), (1, 3), (2, 3))
    assert reduced_homology(hollow).nonzero() == {1: 1}
    full = cx(4, (1, 2, 3, 4))
    assert reduced_homology(full).nonzero() == {}
    two_points = cx(2, (1,), (2,))
    assert reduced_homology(two_points).nonzero() == {0: 1}
    empty_cx = cx(3, ())
    assert reduced_homology(empty_cx).nonzero() == {-1: 1}
    void = SimplicialComplex(3, frozenset())
    assert reduced_homology(void).reduced_betti == ()


def test_hollow_sphere_bettis_up_to_dim_4():
    for k in range(1, 5):
        prof = reduced_homology(simplex_boundary(k))
        assert prof.nonzero() == {k - 1: 1}, k


def test_boundary_squared_is_zero_random():
    rng = random.Random(0)
    for _ in range(100):
        C = random_complex(rng)
        mats = boundary_matrices(C)
        dims = sorted(mats)
        for d in dims:
            if d + 1 not in mats:
                continue
            A, B = mats[d], mats[d + 1]
            if not A or not B or not A[0]:
                continue
            # A @ B must vanish
            for i in range(len(A)):
                for j in range(len(B[0])):
                    s = sum(A[i][k] * B[k][j] for k in range(len(B)))
                    assert s == 0


def test_euler_consistency_explicit():
    rng = random.Random(1)
    for _ in range(100):
        C = random_complex(rng)
        prof = reduced_homology(C)  # internal Euler assert also runs
        fvec = C.f_vector()
        chi = sum(c if d % 2 == 0 else -c for d, c in fvec.items())
        assert prof.euler() == chi


def test_reductions_match_plain_matrices():
    # the component/cone/collapse pipeline against raw boundary ranks
    rng = random.Random(2)
    for _ in range(60):
        C = random_complex(rng, n_max=6)
        plain = _betti_from_faces(_faces_of(C.mask_key, 1 << 20))
        got = reduced_homology(C).nonzero()
        assert got == plain


def test_link_examples():
    hollow = cx(3, (1, 2), (1, 3), (2, 3))
    lk = link(hollow, {1})
    assert lk.facets == frozenset({frozenset({2}), frozenset({3})})
    assert link(hollow, ()).facets == hollow.facets
    two_skel = SimplicialComplex.from_faces(4, combinations(range(1, 5), 3))
    lk2 = link(two_skel, {1, 2})
    assert lk2.facets == frozenset({frozenset({3}), frozenset({4})})
    with pytest.raises(ValueError):
        link(cx(3, (1, 2)), {3, 1})


def test_induced_subcomplex_and_ghosts():
    hollow = cx(3, (1, 2), (1, 3), (2, 3))
    sub = induced_subcomplex(hollow, {1, 2})
    assert sub.facets == frozenset({frozenset({1, 2})})
    assert cx(3, (1, 2)).ghost_vertices() == (3,)


def test_pure_skeleton_examples():
    C = cx(4, (1, 2, 3), (3, 4))
    sk1 = pure_skeleton(C, 1)
    assert sk1.facets == frozenset(
        frozenset(e) for e in [(1, 2), (1, 3), (2, 3), (3, 4)]
    )
    assert pure_skeleton(C, C.dim).facets == frozenset({frozenset({1, 2, 3})})
    assert pure_skeleton(C, -1).facets == frozenset({frozenset()})
    with pytest.raises(ValueError):
        pure_skeleton(C, 3)


def test_reisner_examples():
    assert is_cm_reisner(cx(3, (1, 2), (1, 3), (2, 3)))
    assert not is_cm_reisner(cx(4, (1, 2), (3, 4)))
    assert is_cm_reisner(cx(1, (1,)))
    assert is_cm_reisner(cx(2, ()))  # the complex {emptyset}


def test_duval_examples():
    assert is_scm_duval(cx(4, (1, 2, 3), (3, 4)))
    assert not is_scm_duval(cx(4, (1, 2), (3, 4)))
    assert is_scm_duval(cx(5, (1, 2, 3, 4, 5)))


def test_depth_simple_cases():
    # principal squarefree quadric: hypersurface, depth = numvars - 1
    C = cx(4, (1, 2, 3), (2, 3, 4))
    assert depth_hochster(C, 4) == 3
    # full simplex: zero ideal, depth = numvars
    assert depth_hochster(cx(5, (1, 2, 3, 4, 5)), 5) == 5
    # {emptyset}: quotient is the ground field, depth 0
    assert depth_hochster(cx(3, ()), 3) == 0
    # two disjoint edges: connected in codim 0 fails, depth 1 < dim 2
    # (sigma = all four vertices has degree-0 homology, so pd = 3)
    assert depth_hochster(cx(4, (1, 2), (3, 4)), 4) == 1


def test_depth_respects_caps():
    with pytest.raises(ResourceCapError):
        depth_hochster(cx(19, tuple(range(1, 20))), 19)
    with pytest.raises(ValueError):
        depth_hochster(cx(4, (1, 2)), 5)


def test_depth_cm_consistency_random():
    # Reisner CM <=> depth == dim + 1 (Auslander-Buchsbaum), on random complexes
    rng = random.Random(3)
    for _ in range(40):
        C = random_complex(rng, n_max=6)
        if C.is_void:
            continue
        d = depth_hochster(C, C.n_vertices)
        # depth measures the supported part; ghosts only shift pd
        assert (d == C.dim + 1) == is_cm_reisner(C)


def test_face_cap_enforced():
    # a sphere is not a cone, so its faces really are enumerated
    with pytest.raises(ResourceCapError):
        reduced_homology(simplex_boundary(10), max_faces=100)


def test_depth_with_ghost_vertices():
    # a ghost vertex puts its variable in the ideal: quotient unchanged,
    # projective dimension up by one
    assert depth_hochster(cx(4, (1, 2)), 4) == 2   # K[x1,x2] after killing x3,x4
    assert depth_hochster(cx(3, (1,), (2,)), 3) == 1  # K[x1,x2]/(x1x2) plus ghost


def test_projective_plane_has_no_rational_homology():
    # minimal 6-vertex triangulation; torsion only, so everything dies over Q.
    # this drives the non-unit residual path of the integer elimination.
    faces = [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 4, 6), (3, 5, 6), (4, 5, 6),
    ]
    from collections import Counter
    edge_use = Counter()
    for f in faces:
        for e in combinations(f, 2):
            edge_use[e] += 1
    assert len(edge_use) == 15 and set(edge_use.values()) == {2}  # closed surface
    C = SimplicialComplex.from_faces(6, faces)
    assert reduced_homology(C).nonzero() == {}
    # over Q this surface is Cohen-Macaulay (the rational homology vanishes
    # below the top degree and all vertex links are circles); only in
    # characteristic 2 would it fail, and this engine is rational-only
    assert is_cm_reisner(C)
    assert depth_hochster(C, 6) == 3
