"""Closed (proper interval) graphs: recognition, interval facets, blocks.

A labeling of G is *closed* when the maximal cliques are integer intervals
F_1 = [a_1,b_1], ..., F_r = [a_r,b_r] with 1 = a_1 < ... < a_r and
b_1 < ... < b_r = n.  Equivalently, every closed neighbourhood N[v] is a
set of consecutive labels; equivalently, i < j < k and {i,k} an edge force
{i,j} and {j,k} to be edges.  A graph is closed when some labeling is.

Recognition runs a three-sweep lexicographic BFS per component (the
standard linear-time proper-interval scheme) and then *verifies* the
candidate ordering with the consecutive-neighbourhood test, so a positive
answer is always certified; an exhaustive all-labelings oracle lives in
the test suite only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .errors import GraphInputError, NotClosedError
from .graphs import Graph, bits, component_masks, delete_vertices, from_edge_list


@dataclass(frozen=True)
class IntervalFacets:
    """Maximal cliques of a closed-labeled graph, as intervals (a_i, b_i).

    Invariants (checked on construction):
      * 1 = a_1 < a_2 < ... < a_r and b_1 < b_2 < ... < b_r = n,
      * a_i <= b_i, and a_{i+1} <= b_i + 1 so the intervals cover [n],
    which together make the facets pairwise incomparable.  The represented
    graph is connected iff a_{i+1} <= b_i for every i < r; the gaps with
    a_{i+1} = b_i + 1 are the component boundaries.
    """

    n: int
    facets: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple((int(a), int(b)) for a, b in self.facets))
        f = self.facets
        if self.n < 1 or not f:
            raise ValueError("need n >= 1 and at least one facet")
        if f[0][0] != 1 or f[-1][1] != self.n:
            raise ValueError(f"facets {f} must start at 1 and end at n={self.n}")
        for a, b in f:
            if a > b:
                raise ValueError(f"empty interval ({a},{b})")
        for (a1, b1), (a2, b2) in zip(f, f[1:]):
            if not a1 < a2:
                raise ValueError(f"lower endpoints not strictly increasing: {f}")
            if not b1 < b2:
                raise ValueError(f"upper endpoints not strictly increasing: {f}")
            if a2 > b1 + 1:
                raise ValueError(f"vertex {b1 + 1} not covered by any facet: {f}")

    @property
    def r(self) -> int:
        return len(self.facets)

    @property
    def is_connected(self) -> bool:
        return all(a2 <= b1 for (_, b1), (a2, _) in zip(self.facets, self.facets[1:]))

    def flattened(self) -> tuple[int, ...]:
        return tuple(x for ab in self.facets for x in ab)

    def component_ranges(self) -> tuple[tuple[int, int, int, int], ...]:
        """Per-component boundaries: (first facet idx, last facet idx, lo, hi).

        Facet indices are 0-based, vertex bounds 1-based inclusive.
        """
        out = []
        start = 0
        for i in range(self.r - 1):
            if self.facets[i + 1][0] == self.facets[i][1] + 1:
                out.append((start, i, self.facets[start][0], self.facets[i][1]))
                start = i + 1
        out.append((start, self.r - 1, self.facets[start][0], self.facets[-1][1]))
        return tuple(out)


@dataclass(frozen=True)
class ClosedLabeling:
    """Bijection old label -> new label making the maximal cliques intervals."""

    perm: tuple[int, ...]  # length n+1, perm[0] unused

    @property
    def n(self) -> int:
        return len(self.perm) - 1

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for old in range(1, len(self.perm)):
            inv[self.perm[old]] = old
        return tuple(inv)

    def apply(self, G: Graph) -> Graph:
        """Relabel G; the result's labels map is the identity."""
        return from_edge_list(G.n, [(self.perm[u], self.perm[v]) for u, v in G.edges()])


@dataclass(frozen=True)
class Block:
    """A re-indexed piece of a facet sequence, with its label map.

    Pieces are contiguous vertex ranges of the parent, so the label map is
    a translation: parent vertex = start + local - 1.
    """

    start: int
    facets: IntervalFacets

    @property
    def n(self) -> int:
        return self.facets.n


def closed_labeling_witness(G: Graph):
    """None if the identity labeling of G is closed, else a witness.

    The witness is ((i, k), (u, v)) with {i,k} an edge, i < v < k, and
    {u,v} a missing pair forced by the interval condition.
    """
    for v in range(1, G.n + 1):
        m = G.adj[v] | (1 << (v - 1))
        lo = (m & -m).bit_length() - 1
        hi = m.bit_length() - 1
        if m != (((1 << (hi + 1)) - 1) >> lo) << lo:
            # N[v] is not consecutive; dig out an explicit triple
            for j in range(lo + 1, hi + 1):
                if not (m >> j) & 1:
                    i, k, mid = lo + 1, hi + 1, j + 1
                    far = k if mid > v else i
                    return ((min(v, far), max(v, far)), (min(v, mid), max(v, mid)))
    return None


def interval_facets(G: Graph) -> IntervalFacets:
    """Maximal cliques of an identity-closed-labeled graph, as intervals."""
    witness = closed_labeling_witness(G)
    if witness is not None:
        present, missing = witness
        raise NotClosedError(
            f"labeling is not closed: edge {present} forces pair {missing}",
            witness=witness,
        )
    n = G.n
    reach = [0] * (n + 2)
    for a in range(1, n + 1):
        b = a
        common = G.adj[a]
        while b < n and (common >> b) & 1:  # bit b is vertex b+1
            b += 1
            common &= G.adj[b]
        reach[a] = b
    facets = [(a, reach[a]) for a in range(1, n + 1) if a == 1 or reach[a] > reach[a - 1]]
    return IntervalFacets(n, tuple(facets))


def build_graph(F: IntervalFacets) -> Graph:
    """The closed graph whose maximal cliques are the facet intervals."""
    edges = []
    for a, b in F.facets:
        for u in range(a, b + 1):
            for v in range(u + 1, b + 1):
                edges.append((u, v))
    return from_edge_list(F.n, edges)


def reverse_facets(F: IntervalFacets) -> IntervalFacets:
    """Facets of the same graph under the labeling v -> n + 1 - v."""
    n = F.n
    rev = tuple((n + 1 - b, n + 1 - a) for a, b in reversed(F.facets))
    return IntervalFacets(n, rev)


# -- recognition --------------------------------------------------------------


def _lbfs(adj: dict[int, int], verts: list[int], prev: list[int] | None) -> list[int]:
    """One lexicographic BFS sweep.

    Labels are lists of decreasing time stamps; the next vertex is the
    unvisited one with the lexicographically largest label.  Ties go to the
    smallest vertex on the first sweep and to the vertex latest in `prev`
    afterwards (the LBFS+ rule), which also makes prev[-1] the start.
    """
    if prev is None:
        rank = {v: -v for v in verts}
    else:
        rank = {v: i for i, v in enumerate(prev)}
    labels: dict[int, list[int]] = {v: [] for v in verts}
    unvisited = set(verts)
    order = []
    stamp = len(verts)
    while unvisited:
        v = max(unvisited, key=lambda w: (labels[w], rank[w]))
        order.append(v)
        unvisited.discard(v)
        for b in bits(adj[v]):
            u = b + 1
            if u in unvisited:
                labels[u].append(stamp)
        stamp -= 1
    return order


def _recognize_component(G: Graph) -> tuple[tuple[int, ...], IntervalFacets] | None:
    """Closed labeling of a connected graph, canonicalized, or None.

    Returns (perm, facets) with perm[v] the new label of v.  Among the two
    straight orderings of a connected proper interval graph we keep the one
    whose flattened facet tuple is lexicographically smaller.
    """
    verts = list(range(1, G.n + 1))
    adj = {v: G.adj[v] for v in verts}
    pi1 = _lbfs(adj, verts, None)
    pi2 = _lbfs(adj, verts, pi1)
    pi3 = _lbfs(adj, verts, pi2)
    perm = [0] * (G.n + 1)
    for pos, v in enumerate(pi3, start=1):
        perm[v] = pos
    relabeled = ClosedLabeling(tuple(perm)).apply(G)
    if closed_labeling_witness(relabeled) is not None:
        return None
    fwd = interval_facets(relabeled)
    rev = reverse_facets(fwd)
    if rev.flattened() < fwd.flattened():
        perm = [0] + [G.n + 1 - perm[v] for v in verts]
        fwd = rev
    return tuple(perm), fwd


def _component_order(pieces: list[tuple[tuple[int, ...], IntervalFacets, int]]):
    """Order component pieces to make the flattened global facet tuple small.

    Greedy pairwise rule: A goes before B when flatten(A,B) <= flatten(B,A).
    Exact for connected input (single piece) and for two components; a
    deterministic, locally optimal order otherwise.
    """

    def flat(seq):
        out = []
        off = 0
        for _, fac, n_c in seq:
            out.extend(x + off for x in fac.flattened())
            off += n_c
        return tuple(out)

    def cmp(a, b):
        ab, ba = flat([a, b]), flat([b, a])
        return -1 if ab < ba else (1 if ab > ba else 0)

    return sorted(pieces, key=cmp_to_key(cmp))


def recognize_closed(G: Graph) -> tuple[ClosedLabeling, IntervalFacets] | None:
    """Decide closedness; on success return a canonical labeling and facets.

    Components are recognized separately and laid out consecutively.  The
    returned facets are reproduced exactly by rebuilding the graph from them
    and applying the inverse labeling (verified before returning).
    """
    if G.n < 1:
        raise GraphInputError("recognition needs at least one vertex")
    pieces = []
    for cmask in component_masks(G):
        sub = delete_vertices(G, G.full_mask & ~cmask)
        rec = _recognize_component(sub)
        if rec is None:
            return None
        perm_local, fac = rec
        # map: original vertex -> local new label
        orig_to_local = {sub.labels[v]: perm_local[v] for v in range(1, sub.n + 1)}
        pieces.append((orig_to_local, fac, sub.n))
    pieces = _component_order(pieces)
    perm = [0] * (G.n + 1)
    facets = []
    offset = 0
    for orig_to_local, fac, n_c in pieces:
        for orig, local in orig_to_local.items():
            perm[orig] = offset + local
        facets.extend((a + offset, b + offset) for a, b in fac.facets)
        offset += n_c
    labeling = ClosedLabeling(tuple(perm))
    result = IntervalFacets(G.n, tuple(facets))
    _verify_roundtrip(G, labeling, result)
    return labeling, result


def _verify_roundtrip(G: Graph, labeling: ClosedLabeling, F: IntervalFacets):
    rebuilt = build_graph(F)
    inv = labeling.inverse()
    relabeled_adj = [0] * (G.n + 1)
    for u, v in rebuilt.edges():
        a, b = inv[u], inv[v]
        relabeled_adj[a] |= 1 << (b - 1)
        relabeled_adj[b] |= 1 << (a - 1)
    if tuple(relabeled_adj) != tuple(G.adj):
        raise AssertionError("recognition round-trip failed to reproduce the input graph")


# -- connected cut sets and blocks --------------------------------------------


def connected_cutsets(F: IntervalFacets) -> tuple[tuple[int, int], ...]:
    """W_i = F_i intersect F_{i+1} = [a_{i+1}, b_i], for i = 1..r-1."""
    if not F.is_connected:
        raise ValueError("facets describe a disconnected graph; split components first")
    if F.r < 2:
        raise ValueError("need at least two facets")
    return tuple((a2, b1) for (_, b1), (a2, _) in zip(F.facets, F.facets[1:]))


def split_components(F: IntervalFacets) -> tuple[Block, ...]:
    """Connected components of a facet sequence, re-indexed to 1..n_c."""
    out = []
    for i0, i1, lo, hi in F.component_ranges():
        fac = tuple((a - lo + 1, b - lo + 1) for a, b in F.facets[i0 : i1 + 1])
        out.append(Block(lo, IntervalFacets(hi - lo + 1, fac)))
    return tuple(out)


def decompose_blocks(F: IntervalFacets) -> tuple[Block, ...]:
    """Split a connected facet sequence at its free vertices.

    A cut at i with |W_i| = 1 (a_{i+1} = b_i) glues two subgraphs at the
    shared vertex, which is free on both sides; splitting at every such i
    yields the indecomposable blocks.  Blocks overlap in single vertices;
    concatenating them (merging the shared endpoints) reconstructs F.
    """
    if not F.is_connected:
        raise ValueError("facets describe a disconnected graph; split components first")
    groups: list[list[tuple[int, int]]] = [[F.facets[0]]]
    for i in range(1, F.r):
        if F.facets[i][0] == F.facets[i - 1][1]:  # |W_{i-1}| == 1
            groups.append([F.facets[i]])
        else:
            groups[-1].append(F.facets[i])
    out = []
    for g in groups:
        lo, hi = g[0][0], g[-1][1]
        fac = tuple((a - lo + 1, b - lo + 1) for a, b in g)
        out.append(Block(lo, IntervalFacets(hi - lo + 1, fac)))
    return tuple(out)


def is_indecomposable(F: IntervalFacets) -> bool:
    """Connected with every consecutive intersection of size >= 2 (or r = 1)."""
    if not F.is_connected:
        return False
    return all(b1 - a2 + 1 >= 2 for (_, b1), (a2, _) in zip(F.facets, F.facets[1:]))


# -- facet text format ---------------------------------------------------------
#
#   header "closed n r", then r lines "a_i b_i"


def parse_facet_text(text: str) -> IntervalFacets:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())
    if not rows or rows[0][0] != "closed" or len(rows[0]) != 3:
        raise GraphInputError("facet text must start with a 'closed n r' header")
    try:
        n, r = int(rows[0][1]), int(rows[0][2])
        facets = tuple((int(a), int(b)) for a, b in rows[1:])
    except ValueError:
        raise GraphInputError("facet text: non-integer field")
    if len(facets) != r:
        raise GraphInputError(f"facet text: header promises {r} facets, got {len(facets)}")
    try:
        return IntervalFacets(n, facets)
    except ValueError as exc:
        raise GraphInputError(f"invalid facet sequence: {exc}")


def format_facet_text(F: IntervalFacets) -> str:
    lines = [f"closed {F.n} {F.r}"]
    lines += [f"{a} {b}" for a, b in F.facets]
    return "\n".join(lines) + "\n"
