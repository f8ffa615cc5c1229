"""Small connected graphs, one per isomorphism class."""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .graph import Graph, graph_from_edge_list

ATLAS_MAX_ORDER = 7


@lru_cache(maxsize=None)
def _atlas_by_order():
    by_order = {}
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0:
            continue
        by_order.setdefault(n, []).append(graph_from_edge_list(n, H.edges()))
    return by_order


def connected_graphs(n: int, min_degree: int = 0) -> list[Graph]:
    """All connected graphs of order n (up to isomorphism) with the given
    minimum degree, for n <= 7."""
    if n > ATLAS_MAX_ORDER:
        raise ValueError(f"enumeration is available up to order {ATLAS_MAX_ORDER}")
    return [G for G in _atlas_by_order().get(n, [])
            if G.is_connected() and G.min_degree >= min_degree]


def canonical_form(G: Graph) -> tuple:
    """Lexicographically least sorted edge list over all relabellings."""
    best = None
    for perm in itertools.permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return best


def labeled_enumeration(n: int, min_degree: int = 0) -> list[Graph]:
    """Brute-force alternative to :func:`connected_graphs`: every labelled
    edge set on n vertices, deduplicated by canonical form.  Only practical
    for n <= 5."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = {}
    for bits in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
        G = graph_from_edge_list(n, edges)
        if G.min_degree < min_degree or not G.is_connected():
            continue
        key = canonical_form(G)
        seen.setdefault(key, G)
    return [seen[key] for key in sorted(seen)]
