"""Base graphs: representation, family generators, matchings and cut structure.

Vertices are ``0..n-1``.  Edges are stored as sorted pairs ``(u, v)`` with
``u < v``; the edge tuple itself is sorted, so equal graphs compare equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapacityError, InputError

MATCHING_CAP = 16


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "adjacency", tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self.adjacency[v])

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_reach(self, 0, blocked=None)) == self.n

    def induced(self, keep) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``keep``, relabelled in sorted order.

        Returns the subgraph and the map from new ids back to old ids.
        """
        old = tuple(sorted(keep))
        new_id = {v: i for i, v in enumerate(old)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return graph_from_edge_list(len(old), edges), old


def graph_from_edge_list(n: int, edges) -> Graph:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"edge {(u, v)} is a loop")
        seen.add(_pair(u, v))
    return Graph(n, tuple(sorted(seen)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return graph_from_edge_list(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return graph_from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    if len(sizes) < 2:
        raise InputError("complete multipartite graph needs at least 2 parts")
    if any(s < 1 for s in sizes):
        raise InputError(f"part sizes must be >= 1, got {sizes}")
    part = []
    for p, s in enumerate(sizes):
        part.extend([p] * s)
    n = len(part)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if part[u] != part[v]]
    return graph_from_edge_list(n, edges)


def circulant_edges(n: int, offsets) -> set[tuple[int, int]]:
    return {_pair(i, (i + d) % n) for d in offsets for i in range(n) if (i + d) % n != i}


def harary_graph(m: int, n: int) -> Graph:
    """Harary graph H_{m,n} on vertices arranged around a circle.

    When m and n are both odd the result has one vertex of degree m+1.
    """
    if not 2 <= m < n:
        raise InputError(f"Harary graph needs 2 <= m < n, got m={m}, n={n}")
    if m % 2 == 0:
        edges = circulant_edges(n, range(1, m // 2 + 1))
    elif n % 2 == 0:
        edges = circulant_edges(n, list(range(1, (m - 1) // 2 + 1)) + [n // 2])
    else:
        edges = circulant_edges(n, range(1, (m - 1) // 2 + 1))
        half = (n - 1) // 2
        edges |= {_pair(i, (i + half) % n) for i in range(half + 1)}
    return graph_from_edge_list(n, edges)


def petersen_graph(n: int, m: int) -> Graph:
    """Generalized Petersen graph P(n, m).

    Outer vertex a_i is ``i`` and inner vertex b_i is ``n + i``.  The offset
    is normalised to ``min(m, n - m)`` since P(n, m) and P(n, n - m) coincide.
    """
    if n < 3:
        raise InputError(f"generalized Petersen graph needs n >= 3, got {n}")
    if m % n == 0:
        raise InputError(f"offset m={m} is 0 mod n={n}")
    m %= n
    m = min(m, n - m)
    edges = set()
    for i in range(n):
        edges.add(_pair(i, (i + 1) % n))
        edges.add((i, n + i))
        edges.add(_pair(n + i, n + (i + m) % n))
    return graph_from_edge_list(2 * n, edges)


# --------------------------------------------------------------------------
# matchings


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]
    host: Graph = field(repr=False)

    def __post_init__(self):
        covered = set()
        for u, v in self.edges:
            if not self.host.has_edge(u, v):
                raise InputError(f"matching edge {(u, v)} is not an edge of the host graph")
            if u in covered or v in covered:
                raise InputError(f"matching edges share vertex at {(u, v)}")
            covered.update((u, v))

    @property
    def size(self) -> int:
        return len(self.edges)

    def saturated(self) -> set[int]:
        return {x for e in self.edges for x in e}

    @property
    def is_perfect(self) -> bool:
        return 2 * self.size == self.host.n

    @property
    def is_near_perfect(self) -> bool:
        return self.host.n % 2 == 1 and 2 * self.size == self.host.n - 1


def maximum_matching(G: Graph, cap: int = MATCHING_CAP) -> Matching:
    """Exact maximum matching by backtracking (small graphs only)."""
    if G.n > cap:
        raise CapacityError(
            f"maximum_matching is exact backtracking limited to {cap} vertices (got {G.n}); "
            "use a family-specific matching construction instead"
        )
    best: list = [[]]
    target = G.n // 2
    used = [False] * G.n
    current = []

    def search(v):
        while v < G.n and used[v]:
            v += 1
        if len(current) > len(best[0]):
            best[0] = list(current)
        if v == G.n or len(best[0]) == target:
            return
        unused = sum(1 for x in range(v, G.n) if not used[x])
        if len(current) + unused // 2 <= len(best[0]):
            return
        used[v] = True
        for w in G.sorted_neighbors(v):
            if not used[w]:
                used[w] = True
                current.append((v, w))
                search(v + 1)
                current.pop()
                used[w] = False
                if len(best[0]) == target:
                    break
        # v stays marked: it is left unmatched in this branch
        search(v + 1)
        used[v] = False

    search(0)
    return Matching(frozenset(_pair(u, v) for u, v in best[0]), G)


def perfect_matching_in(n: int, edges, skip=None):
    """Return a matching saturating every vertex except ``skip`` using only
    ``edges``, or None.  Exhaustive; intended for n <= ~16."""
    adj = [[] for _ in range(n)]
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    used = [False] * n
    if skip is not None:
        used[skip] = True
    chosen = []

    def search(v):
        while v < n and used[v]:
            v += 1
        if v == n:
            return True
        used[v] = True
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                chosen.append(_pair(v, w))
                if search(v + 1):
                    return True
                chosen.pop()
                used[w] = False
        used[v] = False
        return False

    expected = n - (1 if skip is not None else 0)
    if expected % 2:
        return None
    return frozenset(chosen) if search(0) else None


# --------------------------------------------------------------------------
# cut vertices / cut edges


def _reach(G: Graph, start: int, blocked) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in G.adjacency[v]:
            if w != blocked and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def cut_elements(G: Graph) -> tuple[list[int], list[tuple[int, int]]]:
    """Articulation points and bridges via DFS low-points."""
    if not G.is_connected():
        raise InputError("cut_elements needs a connected graph")
    if G.n == 0:
        return [], []
    disc = [-1] * G.n
    low = [0] * G.n
    cut_vertices = set()
    bridges = []
    counter = 0
    # iterative DFS; frames are (vertex, parent, neighbor iterator)
    disc[0] = low[0] = counter
    counter += 1
    root_children = 0
    stack = [(0, -1, iter(G.sorted_neighbors(0)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(G.sorted_neighbors(w))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.append(_pair(parent, v))
            if parent != 0 and low[v] >= disc[parent]:
                cut_vertices.add(parent)
    if root_children > 1:
        cut_vertices.add(0)
    return sorted(cut_vertices), sorted(bridges)


@dataclass(frozen=True)
class VComponentSplit:
    cut: int
    parts: tuple[Graph, ...]
    maps: tuple[tuple[int, ...], ...]  # maps[i][new_id] = original id


def v_components(G: Graph, v: int) -> VComponentSplit:
    if not 0 <= v < G.n:
        raise InputError(f"vertex {v} is not in the graph")
    remaining = set(range(G.n)) - {v}
    comps = []
    while remaining:
        start = min(remaining)
        comp = _reach(G, start, blocked=v) - {v}
        comps.append(comp)
        remaining -= comp
    if len(comps) < 2 or not G.is_connected():
        raise InputError(f"vertex {v} is not a cut-vertex")
    parts, maps = [], []
    for comp in comps:
        sub, back = G.induced(comp | {v})
        parts.append(sub)
        maps.append(back)
    return VComponentSplit(v, tuple(parts), tuple(maps))


def glue_at_vertex(*graphs: Graph) -> Graph:
    """Identify vertex 0 of every graph into a single shared vertex 0."""
    edges = []
    offset = 1
    for H in graphs:
        relabel = {0: 0}
        for x in range(1, H.n):
            relabel[x] = offset + x - 1
        edges.extend((relabel[u], relabel[w]) for u, w in H.edges)
        offset += H.n - 1
    return graph_from_edge_list(offset, edges)


def join_by_edge(G: Graph, H: Graph, u: int = None, w: int = None) -> Graph:
    """Disjoint union of G and H plus one edge from ``u`` in G to ``w`` in H.

    Defaults to the last vertex of each graph.
    """
    u = G.n - 1 if u is None else u
    w = H.n - 1 if w is None else w
    edges = list(G.edges) + [(a + G.n, b + G.n) for a, b in H.edges] + [(u, G.n + w)]
    return graph_from_edge_list(G.n + H.n, edges)

