"""Inflated graphs.

Every base vertex ``i`` becomes a red clique whose members are named by
ordered pairs ``(i, j)`` over the neighbours ``j`` of ``i``; the base edge
``{i, j}`` becomes the blue edge ``(i, j) -- (j, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .graph import Graph

InflatedVertex = tuple[int, int]


@dataclass(frozen=True)
class InflatedGraph:
    base: Graph
    vertices: tuple[InflatedVertex, ...] = field(init=False)
    index: dict = field(init=False, repr=False, compare=False)
    adjacency: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        G = self.base
        verts = tuple((i, j) for i in range(G.n) for j in G.sorted_neighbors(i))
        adjacency = {}
        for i, j in verts:
            red = {(i, x) for x in G.adjacency[i] if x != j}
            red.add((j, i))
            adjacency[(i, j)] = frozenset(red)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "index", {v: idx for idx, v in enumerate(verts)})
        object.__setattr__(self, "adjacency", adjacency)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: InflatedVertex) -> frozenset[InflatedVertex]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise InputError(f"{v} is not a vertex of the inflated graph") from None

    def degree(self, v: InflatedVertex) -> int:
        return len(self.neighbors(v))

    @property
    def min_degree(self) -> int:
        return self.base.min_degree

    @property
    def max_degree(self) -> int:
        return self.base.max_degree

    def clique_of(self, v: InflatedVertex) -> int:
        if v not in self.index:
            raise InputError(f"{v} is not a vertex of the inflated graph")
        return v[0]

    def red_edges(self) -> list[tuple[InflatedVertex, InflatedVertex]]:
        out = []
        for i in range(self.base.n):
            members = red_clique(self, i)
            out.extend((a, b) for a in members for b in members if a < b)
        return out

    def blue_edges(self) -> list[tuple[InflatedVertex, InflatedVertex]]:
        return [((i, j), (j, i)) for i, j in self.base.edges]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted index pairs into ``vertices``."""
        idx = self.index
        pairs = {tuple(sorted((idx[a], idx[b]))) for a, b in self.red_edges() + self.blue_edges()}
        return sorted(pairs)


def inflate(G: Graph) -> InflatedGraph:
    isolated = [v for v in G.vertices if G.degree(v) == 0]
    if isolated:
        raise InputError(f"cannot inflate a graph with isolated vertices {isolated}")
    return InflatedGraph(G)


def red_clique(GI: InflatedGraph, i: int) -> frozenset[InflatedVertex]:
    if not 0 <= i < GI.base.n:
        raise InputError(f"base vertex {i} does not exist")
    return frozenset((i, j) for j in GI.base.adjacency[i])


def blue_partner(GI: InflatedGraph, v: InflatedVertex) -> InflatedVertex:
    if v not in GI.index:
        raise InputError(f"{v} is not a vertex of the inflated graph")
    return (v[1], v[0])
