"""Exact algorithms on small simple graphs, backed by bitset adjacency rows.

Vertices are the integers 1..n.  Internally every vertex set is an int whose
bit v-1 stands for vertex v, which keeps the chordality check, the induced
matching search and the cycle enumeration allocation-free in the inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CycleLimitExceeded, VertexOutOfRange


def _bit(v: int) -> int:
    return 1 << (v - 1)


def _iter_bits(mask: int):
    """Yield the 1-based vertices of a bitmask in ascending order."""
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length()


class SimpleGraph:
    """Immutable simple graph on the vertex set {1, ..., n}.

    ``edges`` is a frozenset of ordered pairs (u, v) with u < v.  ``adj`` is a
    tuple of adjacency bitmasks indexed by vertex (entry 0 is unused).  When
    the graph was cut out of a larger one, ``labels`` maps each vertex back to
    its original name; equality ignores labels.
    """

    __slots__ = ("n", "edges", "adj", "labels")

    def __init__(self, n: int, edges=(), labels=None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexOutOfRange(f"edge ({u}, {v}) leaves the vertex set [1, {n}]")
            norm.add((u, v) if u < v else (v, u))
        adj = [0] * (n + 1)
        for u, v in norm:
            adj[u] |= _bit(v)
            adj[v] |= _bit(u)
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(adj)
        self.labels = None if labels is None else tuple(labels)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> (v - 1)) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class AnticycleWitness:
    """Ordered vertex list claimed to induce a complement-of-cycle."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 4:
            raise ValueError("an anticycle needs at least 4 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("anticycle vertices must be distinct")

    @property
    def m(self) -> int:
        return len(self.vertices)


def complement(G: SimpleGraph) -> SimpleGraph:
    """Graph with exactly the non-edges of G between distinct vertices."""
    edges = [
        (u, v)
        for u in range(1, G.n + 1)
        for v in range(u + 1, G.n + 1)
        if not G.has_edge(u, v)
    ]
    return SimpleGraph(G.n, edges, labels=G.labels)


def induced_subgraph(G: SimpleGraph, W) -> SimpleGraph:
    """Subgraph induced on W, relabeled to 1..|W| with original names kept.

    The i-th smallest vertex of W becomes vertex i; ``labels`` of the result
    maps it back (composing with G's own labels when G was already cut out).
    """
    keep = sorted(set(W))
    for w in keep:
        if not (1 <= w <= G.n):
            raise VertexOutOfRange(f"vertex {w} is not in [1, {G.n}]")
    pos = {w: i + 1 for i, w in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos]
    base = G.labels if G.labels is not None else tuple(range(1, G.n + 1))
    return SimpleGraph(len(keep), edges, labels=tuple(base[w - 1] for w in keep))


def is_chordal(G: SimpleGraph) -> bool:
    """Chordality via maximum cardinality search plus elimination-order check.

    The search numbers vertices n..1, always taking an unnumbered vertex with
    the most numbered neighbours.  The graph has no induced cycle of length
    four or more exactly when the reverse numbering is a perfect elimination
    order, which the second pass verifies directly.
    """
    n = G.n
    if n <= 2:
        return True
    adj = G.adj
    weight = [0] * (n + 1)
    alpha = [0] * (n + 1)
    order = [0] * (n + 1)
    unnumbered = (1 << n) - 1
    for k in range(n, 0, -1):
        best_v, best_w = 0, -1
        for v in _iter_bits(unnumbered):
            if weight[v] > best_w:
                best_w, best_v = weight[v], v
        v = best_v
        alpha[v] = k
        order[k] = v
        unnumbered ^= _bit(v)
        for u in _iter_bits(adj[v] & unnumbered):
            weight[u] += 1

    remaining = (1 << n) - 1
    for k in range(1, n + 1):
        v = order[k]
        remaining ^= _bit(v)
        later = adj[v] & remaining
        if later:
            w, a_best = 0, n + 1
            for u in _iter_bits(later):
                if alpha[u] < a_best:
                    a_best, w = alpha[u], u
            if later & ~(adj[w] | _bit(w)):
                return False
    return True


def is_cochordal(G: SimpleGraph) -> bool:
    return is_chordal(complement(G))


def _matching_search(G: SimpleGraph, stop_at: int | None = None):
    """Branch and bound for the largest set of pairwise far-apart edges.

    Edges are explored in sorted order; an edge is compatible with the chosen
    set when neither endpoint touches the closed neighbourhood of any chosen
    endpoint.  Returns (best size, witness edges); with ``stop_at`` the search
    stops as soon as that size is reached, so the witness is the
    lexicographically first one of that size.
    """
    edges = sorted(G.edges)
    if not edges:
        return 0, []
    adj = G.adj
    masks = [_bit(u) | _bit(v) for u, v in edges]
    closed = [adj[u] | adj[v] | masks[k] for k, (u, v) in enumerate(edges)]

    best = 0
    best_w: list[tuple[int, int]] = []

    def go(cand: list[int], forbid: int, chosen: list[tuple[int, int]]) -> bool:
        nonlocal best, best_w
        if len(chosen) > best:
            best = len(chosen)
            best_w = list(chosen)
            if stop_at is not None and best >= stop_at:
                return True
        feas = [k for k in cand if masks[k] & forbid == 0]
        if len(chosen) + len(feas) <= best:
            return False
        for pos, k in enumerate(feas):
            chosen.append(edges[k])
            if go(feas[pos + 1 :], forbid | closed[k], chosen):
                return True
            chosen.pop()
        return False

    go(list(range(len(edges))), 0, [])
    return best, best_w


def find_induced_kK2(G: SimpleGraph, k: int):
    """A witness list of k pairwise disjoint edges with no cross edges, or None."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    best, witness = _matching_search(G, stop_at=k)
    return witness if best >= k else None


def induced_matching_number(G: SimpleGraph) -> int:
    """Exact induced matching number.

    A cochordal graph with an edge has value 1, which skips the search; the
    general case runs the branch and bound to completion.
    """
    if not G.edges:
        return 0
    if is_cochordal(G):
        return 1
    return _matching_search(G)[0]


def enumerate_induced_cycles(G: SimpleGraph, lmin: int, lmax: int, limit: int = 10**6):
    """All induced cycles with length in [lmin, lmax], one canonical tuple each.

    A cycle is reported starting at its smallest vertex and oriented toward
    the smaller of that vertex's two cycle neighbours, so every cycle appears
    exactly once.  Raises CycleLimitExceeded past ``limit`` cycles.
    """
    if not (3 <= lmin <= lmax):
        raise ValueError(f"need 3 <= lmin <= lmax, got ({lmin}, {lmax})")
    n = G.n
    adj = G.adj
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []

    def grow(path: list[int], path_bits: int, interior_adj: int, v1: int, above: int):
        last = path[-1]
        if len(path) + 1 >= lmin:
            close = adj[last] & adj[v1] & above & ~(path_bits | interior_adj)
            for w in _iter_bits(close):
                if path[1] < w:
                    out.append(tuple(path) + (w,))
                    if len(out) > limit:
                        raise CycleLimitExceeded(f"more than {limit} induced cycles")
        if len(path) <= lmax - 2:
            ext = adj[last] & above & ~(path_bits | interior_adj | adj[v1])
            for w in _iter_bits(ext):
                path.append(w)
                grow(path, path_bits | _bit(w), interior_adj | adj[last], v1, above)
                path.pop()

    for v1 in range(1, n + 1):
        above = full & ~((1 << v1) - 1)
        for x in _iter_bits(adj[v1] & above):
            grow([v1, x], _bit(v1) | _bit(x), 0, v1, above)
    return out


def verify_anticycle(G: SimpleGraph, witness) -> bool:
    """Check that the vertex sequence induces a complement-of-cycle in G.

    Consecutive vertices (cyclically) must be non-adjacent and all other pairs
    adjacent.  Sequences shorter than 4 or with repeats are rejected.
    """
    verts = tuple(witness.vertices) if isinstance(witness, AnticycleWitness) else tuple(witness)
    for a in verts:
        if not (1 <= a <= G.n):
            raise VertexOutOfRange(f"vertex {a} is not in [1, {G.n}]")
    m = len(verts)
    if m < 4 or len(set(verts)) != m:
        return False
    for p in range(m):
        if G.has_edge(verts[p], verts[(p + 1) % m]):
            return False
    for p in range(m):
        for z in range(p + 2, m):
            if (p, z) == (0, m - 1):
                continue
            if not G.has_edge(verts[p], verts[z]):
                return False
    return True
