"""Simple undirected graphs on the vertex set {1..n}, stored as bit sets.

Vertex v occupies bit v-1 of every mask, so a vertex subset is a plain int
and set algebra is word arithmetic.  n is capped at 64: the subset sweeps
downstream assume a vertex set fits in one machine word, and everything in
this package lives at n <= 10 anyway.

All public interfaces speak 1-based vertex labels.  Operations that carve a
subgraph out of a parent keep the parent's names in the `labels` map of the
result, so component and cut-set data can always be reported in the labels
of the graph the caller started from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInputError

MAX_VERTICES = 64


def bits(mask: int):
    """Yield the set bit positions of mask, ascending (0-based)."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    """Bit mask of an iterable of 1-based vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex labels of a mask."""
    return tuple(b + 1 for b in bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on {1..n}.

    adj has length n+1 (entry 0 unused); adj[v] holds bit u-1 for every
    neighbour u of v.  No loops, adjacency symmetric.  labels[v] is the
    name of v in the parent graph this one was induced from (identity for
    graphs built directly).
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] = None

    def __post_init__(self):
        # n = 0 is the empty graph, reachable by deleting every vertex
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphInputError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n + 1)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> (v - 1)) & 1)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for v in range(1, self.n + 1):
            for b in bits(self.adj[v]):
                if b + 1 > v:
                    out.append((v, b + 1))
        return tuple(out)

    def num_edges(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(1, self.n + 1)) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from unordered vertex pairs; duplicates are merged."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphInputError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * (n + 1)
    for e in edges:
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphInputError(f"edge {{{u},{v}}} has an endpoint outside 1..{n}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        adj[u] |= 1 << (v - 1)
        adj[v] |= 1 << (u - 1)
    return Graph(n, tuple(adj))


def delete_vertices(G: Graph, W) -> Graph:
    """Induced subgraph on [n] \\ W, with original names kept in `labels`.

    W may be any iterable of vertices of G, or a bit mask.  W may be empty
    (returns a copy of G) or all of [n] (returns the empty graph, which has
    zero connected components).
    """
    wmask = W if isinstance(W, int) else mask_of(W)
    keep = [v for v in range(1, G.n + 1) if not (wmask >> (v - 1)) & 1]
    pos = {v: i + 1 for i, v in enumerate(keep)}  # old vertex -> new label
    adj = [0] * (len(keep) + 1)
    for v in keep:
        m = G.adj[v] & ~wmask
        acc = 0
        for b in bits(m):
            acc |= 1 << (pos[b + 1] - 1)
        adj[pos[v]] = acc
    labels = (0,) + tuple(G.labels[v] for v in keep)
    return Graph(len(keep), tuple(adj), labels)


def component_masks(G: Graph) -> list[int]:
    """Connected components as masks in G's own vertex space, sorted by min."""
    seen = 0
    comps = []
    for v in range(1, G.n + 1):
        b = 1 << (v - 1)
        if seen & b:
            continue
        comp = b
        frontier = b
        while frontier:
            nxt = 0
            for i in bits(frontier):
                nxt |= G.adj[i + 1]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def connected_components(G: Graph) -> tuple[tuple[int, ...], ...]:
    """Partition of the vertex set into components, sorted by minimum element.

    Vertices are reported under G's `labels` map, so components of an
    induced subgraph come back in the labels of the original graph.
    """
    out = []
    for m in component_masks(G):
        out.append(tuple(G.labels[b + 1] for b in bits(m)))
    return tuple(out)


def _bron_kerbosch(adj: tuple[int, ...], R: int, P: int, X: int, out: list[int]):
    # pivoting branch and bound; fine for n <= 64
    if P == 0 and X == 0:
        out.append(R)
        return
    pivot = -1
    best = -1
    for b in bits(P | X):
        d = (P & adj[b + 1]).bit_count()
        if d > best:
            best, pivot = d, b
    for b in bits(P & ~adj[pivot + 1]):
        v = 1 << b
        _bron_kerbosch(adj, R | v, P & adj[b + 1], X & adj[b + 1], out)
        P &= ~v
        X |= v


def maximal_cliques(G: Graph) -> tuple[tuple[int, ...], ...]:
    """All maximal cliques of G (own labels), deterministically sorted."""
    out: list[int] = []
    _bron_kerbosch(G.adj, 0, G.full_mask, 0, out)
    return tuple(sorted(vertices_of(m) for m in out))


def clique_degree(G: Graph, v: int) -> int:
    """Number of maximal cliques containing v; v is a free vertex iff 1."""
    if not 1 <= v <= G.n:
        raise GraphInputError(f"vertex {v} outside 1..{G.n}")
    b = 1 << (v - 1)
    out: list[int] = []
    _bron_kerbosch(G.adj, 0, G.full_mask, 0, out)
    return sum(1 for m in out if m & b)


# -- edge-list text format ---------------------------------------------------
#
#   first non-comment line: "n"
#   following lines:        "u v"   (whitespace separated, 1-based)
#   lines starting with '#' are comments; blank lines are skipped


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected integers, got {line!r}")
        if n is None:
            if len(nums) != 1:
                raise GraphInputError(f"line {lineno}: expected a single vertex count")
            n = nums[0]
        else:
            if len(nums) != 2:
                raise GraphInputError(f"line {lineno}: expected 'u v'")
            edges.append((nums[0], nums[1]))
    if n is None:
        raise GraphInputError("empty edge-list input")
    return from_edge_list(n, edges)


def format_edge_list(G: Graph) -> str:
    lines = [str(G.n)]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"
