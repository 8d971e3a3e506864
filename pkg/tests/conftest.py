"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: expansion is
checked against explicit enumeration of increasing maps, cycles and matchings
against raw subset search, monomial counts against direct enumeration.
"""

from __future__ import annotations

import random
from itertools import combinations, combinations_with_replacement

import pytest

from chainreg import ChainSpec, SimpleGraph, normalize_spec


@pytest.fixture
def ex58_spec() -> ChainSpec:
    return normalize_spec(9, [(1, 5), (1, 8), (2, 9), (3, 6), (4, 7), (5, 9)])


@pytest.fixture
def table_spec() -> ChainSpec:
    return normalize_spec(10, [(1, 10), (2, 4), (3, 5), (7, 9)])


@pytest.fixture
def reg3_spec() -> ChainSpec:
    return normalize_spec(4, [(1, 3), (2, 4)])


def brute_expand(spec: ChainSpec, n: int) -> set[tuple[int, int]]:
    """Edges of G_n by applying every strictly increasing map [r] -> [n]."""
    out = set()
    for image in combinations(range(1, n + 1), spec.r):
        for i, j in spec.edges:
            out.add((image[i - 1], image[j - 1]))
    return out


def brute_induced_cycles(G: SimpleGraph, lmin: int, lmax: int) -> set[tuple[int, ...]]:
    """Canonical induced cycles by checking every vertex subset (small n only)."""
    found = set()
    verts = range(1, G.n + 1)
    for size in range(max(3, lmin), min(G.n, lmax) + 1):
        for W in combinations(verts, size):
            inside = [(u, v) for u, v in combinations(W, 2) if G.has_edge(u, v)]
            if len(inside) != size:
                continue
            deg = {w: 0 for w in W}
            for u, v in inside:
                deg[u] += 1
                deg[v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            adj = {w: [] for w in W}
            for u, v in inside:
                adj[u].append(v)
                adj[v].append(u)
            start = min(W)
            prev, cur = start, min(adj[start])
            cycle = [start]
            while cur != start:
                cycle.append(cur)
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
            if len(cycle) == size:
                found.add(tuple(cycle))
    return found


def brute_indmatch(G: SimpleGraph) -> int:
    """Largest induced union of disjoint edges, by raw subset search."""
    edges = sorted(G.edges)
    best = 0
    for k in range(1, len(edges) + 1):
        hit = False
        for combo in combinations(edges, k):
            verts = [v for e in combo for v in e]
            if len(set(verts)) != 2 * k:
                continue
            inside = sum(
                1 for u, v in combinations(sorted(set(verts)), 2) if G.has_edge(u, v)
            )
            if inside == k:
                hit = True
                break
        if hit:
            best = k
        else:
            break
    return best


def brute_low_degree_survivors(p: int, edges) -> int:
    """Monomials of degree <= 2 in p variables not divisible by any generator."""
    gens = {tuple(sorted(e)) for e in edges}
    count = 1 + p  # the constant and the p variables
    for a, b in combinations_with_replacement(range(1, p + 1), 2):
        if a != b and (a, b) in gens:
            continue
        count += 1
    return count


def random_graph(rng: random.Random, n: int, prob: float) -> SimpleGraph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < prob
    ]
    return SimpleGraph(n, edges)


def random_specs(count: int, r_values, seed: int):
    """Deterministic spec pool mirroring the verification suites."""
    from chainreg import generate_random_spec

    specs = []
    for k in range(count):
        r = r_values[k % len(r_values)]
        rng = random.Random(seed + 7919 * k)
        specs.append(generate_random_spec(r, rng.uniform(0.15, 0.95), seed + k))
    return specs
