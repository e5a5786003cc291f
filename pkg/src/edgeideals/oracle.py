"""Stanley-Reisner verification oracle for closed-graph edge ideals.

Under a closed labeling the quadratic generators x_i y_j - x_j y_i (i < j
an edge) are a Groebner basis for the lexicographic order with
x_1 > ... > x_n > y_1 > ... > y_n, so the initial ideal is the squarefree
quadratic monomial ideal (x_i y_j : {i,j} an edge, i < j).  This module
builds its Stanley-Reisner complex on 2n vertices and computes dimension,
depth, Cohen-Macaulayness (Reisner), sequential CM-ness (Duval, with
Goodarzi's filtration criterion recorded independently), and the derived
almost/approximately-CM verdicts, all by exact rational homology.

The oracle certifies invariants of the initial ideal.  Carrying them back
to the binomial ideal itself uses the standard transfer theorem for
squarefree initial degenerations (Conca-Varbaro): extremal Betti numbers,
hence depth, dimension, CM-ness and sequential CM-ness, are preserved.
Reports are therefore tagged "squarefree-degeneration", and everything is
characteristic 0 only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed import IntervalFacets, build_graph, recognize_closed
from .complexes import (
    DEFAULT_FACE_CAP,
    DEFAULT_VAR_CAP,
    SimplicialComplex,
    depth_hochster,
    is_cm_reisner,
    is_scm_duval,
)
from .errors import NotClosedError
from .graphs import Graph, bits


@dataclass(frozen=True)
class OracleReport:
    """Homological verdicts for S/in(J_G) in 2n variables.

    scm is Duval's skeleton criterion; scm_goodarzi is the filtration
    criterion, recorded separately (their agreement is a checked invariant,
    not an assumption).  almost_cm is depth >= dim - 1 and approx_cm is
    almost_cm together with scm.
    """

    dim_quotient: int
    depth: int
    cm: bool
    scm: bool
    scm_goodarzi: bool
    almost_cm: bool
    approx_cm: bool

    def __post_init__(self):
        assert self.depth <= self.dim_quotient
        assert self.cm == (self.depth == self.dim_quotient)
        assert self.almost_cm == (self.depth >= self.dim_quotient - 1)
        assert self.approx_cm == (self.almost_cm and self.scm)


def initial_ideal_generators(F: IntervalFacets) -> frozenset[tuple[int, int]]:
    """Pairs (i, j), i < j, one per edge; (i, j) encodes the monomial x_i y_j."""
    return frozenset(build_graph(F).edges())


def stanley_reisner_complex(gens, n: int) -> SimplicialComplex:
    """Complex on 2n vertices whose non-faces are generated by the pairs.

    Vertex i is x_i and vertex n + j is y_j; faces are the subsets
    containing no pair {i, n+j} with (i, j) a generator, i.e. independent
    sets of the graph H with those edges.  Facets are the maximal
    independent sets.  Quadratic generators guarantee every vertex is a
    face, which is asserted.
    """
    m = 2 * n
    adj = [0] * (m + 1)  # H adjacency, 1-based
    for i, j in gens:
        if not (1 <= i < j <= n):
            raise ValueError(f"generator ({i},{j}) must satisfy 1 <= i < j <= n")
        adj[i] |= 1 << (n + j - 1)
        adj[n + j] |= 1 << (i - 1)
    full = (1 << m) - 1
    comp = [0] * (m + 1)
    for v in range(1, m + 1):
        comp[v] = full & ~adj[v] & ~(1 << (v - 1))
    out: list[int] = []

    def bk(R: int, P: int, X: int):
        if P == 0 and X == 0:
            out.append(R)
            return
        pivot, best = -1, -1
        for b in bits(P | X):
            d = (P & comp[b + 1]).bit_count()
            if d > best:
                best, pivot = d, b
        for b in bits(P & ~comp[pivot + 1]):
            v = 1 << b
            bk(R | v, P & comp[b + 1], X & comp[b + 1])
            P &= ~v
            X |= v

    bk(0, full, 0)
    support = 0
    for f in out:
        support |= f
    assert support == full, "quadratic generators must leave every vertex a face"
    return SimplicialComplex.from_faces(m, [tuple(b + 1 for b in bits(f)) for f in out])


def goodarzi_check(
    C: SimplicialComplex,
    numvars: int,
    max_vars: int = DEFAULT_VAR_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> bool:
    """Filtration criterion for sequential CM-ness on the monomial side.

    The i-th filtration ideal of the face ideal keeps the primary (= prime)
    components of quotient dimension > i, which is the face ideal of the
    subcomplex generated by the facets with more than i vertices.  The ring
    is sequentially CM iff that quotient has depth >= i + 1 for every
    0 <= i <= dim - 1, dimensions taken in the ambient numvars variables.
    """
    dim_quotient = C.dim + 1
    depth_by_key: dict[frozenset[int], int] = {}
    for i in range(0, dim_quotient):
        kept = frozenset(m for m in C.mask_key if m.bit_count() > i)
        d = depth_by_key.get(kept)
        if d is None:
            sub = SimplicialComplex(
                C.n_vertices,
                frozenset(f for f in C.facets if len(f) > i),
            )
            d = depth_hochster(sub, numvars, max_vars=max_vars, max_faces=max_faces)
            depth_by_key[kept] = d
        if d < i + 1:
            return False
    return True


def oracle_complex(F: IntervalFacets) -> SimplicialComplex:
    return stanley_reisner_complex(initial_ideal_generators(F), F.n)


def oracle_classify_facets(
    F: IntervalFacets,
    max_vars: int = DEFAULT_VAR_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> OracleReport:
    C = oracle_complex(F)
    numvars = 2 * F.n
    dim_quotient = C.dim + 1
    depth = depth_hochster(C, numvars, max_vars=max_vars, max_faces=max_faces)
    cm = is_cm_reisner(C, max_faces=max_faces)
    if cm != (depth == dim_quotient):
        raise AssertionError("Reisner and Auslander-Buchsbaum disagree; engine bug")
    scm = is_scm_duval(C, max_faces=max_faces)
    goo = goodarzi_check(C, numvars, max_vars=max_vars, max_faces=max_faces)
    almost = depth >= dim_quotient - 1
    return OracleReport(
        dim_quotient=dim_quotient,
        depth=depth,
        cm=cm,
        scm=scm,
        scm_goodarzi=goo,
        almost_cm=almost,
        approx_cm=almost and scm,
    )


def oracle_classify(
    G: Graph,
    max_vars: int = DEFAULT_VAR_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> OracleReport:
    """Full oracle pipeline: closed labeling, initial ideal, SR homology."""
    rec = recognize_closed(G)
    if rec is None:
        raise NotClosedError("graph is not closed; the initial ideal is not squarefree")
    return oracle_classify_facets(rec[1], max_vars=max_vars, max_faces=max_faces)
