"""k-tuple total domination: verification, bounds, brute force and the exact
clique-structured branch and bound for inflated graphs.

A set S of inflated vertices is described per red clique: ``T_i`` is the set
of partners ``j`` with ``(i, j)`` in S.  For k >= 2 the whole kTDS condition
reduces to two local rules:

* ``|T_i| >= k`` for every clique;
* when ``|T_i| == k`` every ``j`` in ``T_i`` has ``i`` in ``T_j`` (a member
  with only k-1 red neighbours in S needs its blue partner).

The solver searches the ``T_i`` directly.  ``is_ktds`` and
``brute_force_min_ktds`` never use these rules and serve as the oracle.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, InfeasibleError, InputError
from .graph import Graph
from .inflation import InflatedGraph, inflate

BRUTE_FORCE_CAP = 20
DEFAULT_BUDGET_NODES = 10**7


@dataclass(frozen=True)
class BoundsReport:
    lower: tuple[tuple[int, str], ...]
    upper: tuple[tuple[int, str], ...]

    @property
    def best_lower(self) -> int:
        return max(v for v, _ in self.lower)

    @property
    def best_upper(self) -> int:
        return min(v for v, _ in self.upper)

    def to_dict(self) -> dict:
        return {
            "lower": [{"value": v, "source": s} for v, s in self.lower],
            "upper": [{"value": v, "source": s} for v, s in self.upper],
        }


@dataclass
class SolveResult:
    gamma: int
    witness: frozenset
    method: str
    nodes_explored: int = 0
    elapsed: float = field(default=0.0, compare=False)


def _host_vertices(host):
    return list(host.vertices)


def is_ktds(host, S, k: int) -> bool:
    """True iff every vertex of ``host`` has at least k neighbours in S."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    S = set(S)
    verts = set(_host_vertices(host))
    if not S <= verts:
        raise InputError(f"set contains non-vertices {sorted(S - verts)[:5]}")
    return all(len(host.neighbors(v) & S) >= k for v in verts)


def _check_k(G: Graph, k: int):
    if k < 2:
        raise InputError(f"k must be >= 2 for inflated-graph results, got {k}")
    if k > G.min_degree:
        raise InfeasibleError(
            f"no kTDS exists: k={k} exceeds the minimum degree {G.min_degree}"
        )


def bounds(G: Graph, k: int) -> BoundsReport:
    _check_k(G, k)
    n, m = G.n, G.m
    delta, Delta = G.min_degree, G.max_degree
    lower = [(n * k, "nk"), (math.ceil(2 * k * m / Delta), "kn_over_delta")]
    upper = [(n * (k + 1) - 1, "n(k+1)-1")]
    if k == delta:
        ell = sum(1 for d in G.degrees() if d == delta)
        upper.append((n * (delta + 1) - ell, "delta_refinement"))
    return BoundsReport(tuple(lower), tuple(upper))


def generic_upper_set(GI: InflatedGraph, k: int) -> frozenset:
    """The constructive set behind the n(k+1)-1 upper bound.

    The anchor clique (largest degree, smallest id) keeps k members, every
    other clique k+1 members including the contact back to the anchor.  A
    clique of size exactly k can only be taken whole, and then each of its
    members needs its blue partner; those demands are propagated until stable,
    so on graphs with degree-k vertices the size can differ from n(k+1)-1.
    """
    G = GI.base
    _check_k(G, k)
    anchor = min(G.vertices, key=lambda v: (-G.degree(v), v))
    nbrs = [G.sorted_neighbors(v) for v in G.vertices]
    T = [set() for _ in G.vertices]
    T[anchor] = set(nbrs[anchor][:k])
    for j in T[anchor]:
        T[j].add(anchor)
    for v in G.vertices:
        if v == anchor:
            continue
        if G.degree(v) == k:
            T[v] = set(nbrs[v])
    changed = True
    while changed:
        changed = False
        for v in G.vertices:
            if v != anchor and len(T[v]) < k + 1 and G.degree(v) > k:
                for j in nbrs[v]:
                    if len(T[v]) >= k + 1:
                        break
                    T[v].add(j)
                changed = True
            if len(T[v]) == k:
                for j in T[v]:
                    if v not in T[j]:
                        T[j].add(v)
                        changed = True
    S = frozenset((i, j) for i in G.vertices for j in T[i])
    assert is_ktds(GI, S, k), "generic upper construction failed verification"
    return S


def brute_force_min_ktds(host, k: int, cap: int = BRUTE_FORCE_CAP) -> SolveResult:
    """Exact minimum kTDS by exhaustive subset enumeration, smallest sizes first.

    Works on any host exposing ``vertices`` and ``neighbors``; used as the
    independent oracle for the clique solver.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    verts = _host_vertices(host)
    N = len(verts)
    if N > cap:
        raise CapacityError(f"brute force is limited to {cap} vertices (got {N})")
    if min((len(host.neighbors(v)) for v in verts), default=0) < k:
        raise InfeasibleError(f"no kTDS exists: some vertex has fewer than {k} neighbours")
    t0 = time.perf_counter()
    pos = {v: i for i, v in enumerate(verts)}
    nbr_masks = [sum(1 << pos[w] for w in host.neighbors(v)) for v in verts]
    masks = np.arange(1 << N, dtype=np.uint32)
    sizes = np.bitwise_count(masks)
    for s in range(k, N + 1):
        cand = masks[sizes == s]
        ok = np.ones(cand.shape, dtype=bool)
        for nm in nbr_masks:
            ok &= np.bitwise_count(cand & np.uint32(nm)) >= k
            if not ok.any():
                break
        if ok.any():
            hits = cand[ok]
            best = min(tuple(i for i in range(N) if (int(h) >> i) & 1) for h in hits)
            witness = frozenset(verts[i] for i in best)
            return SolveResult(s, witness, "brute_force", int(len(hits)),
                               time.perf_counter() - t0)
    raise AssertionError("the full vertex set must be a kTDS once min degree >= k")


class _CliqueSearch:
    """Depth-first search over per-clique intersections ``T_i``.

    Options for each clique are partner bitmasks in the order given by
    ``option_key``.  Lower bound for the undecided cliques: each costs at
    least ``max(k, |forced members|)``.
    """

    def __init__(self, G: Graph, k: int, clique_order, option_key, budget_nodes, time_limit):
        self.G, self.k = G, k
        self.order = list(clique_order)
        self.budget_nodes = budget_nodes
        self.deadline = None if time_limit is None else time.perf_counter() + time_limit
        self.nodes = 0
        self.exhausted = False
        self.options = []
        self.size_sorted = True
        for i in range(G.n):
            nb = G.sorted_neighbors(i)
            opts = []
            for size in range(k, len(nb) + 1):
                opts.extend(itertools.combinations(nb, size))
            opts.sort(key=option_key)
            if any(len(a) > len(b) for a, b in zip(opts, opts[1:])):
                self.size_sorted = False
            self.options.append([(sum(1 << j for j in o), len(o)) for o in opts])

    def run(self, bound: int, stop_at: int):
        """Find solutions of total size <= ``bound``, tightening the bound after
        each hit, and stop once a solution of size <= ``stop_at`` appears.
        Returns ``(size, masks)`` for the last solution found, or None.
        """
        G, k = self.G, self.k
        n = G.n
        chosen = [None] * n
        required = [0] * n
        state = {"bound": bound, "best": None}

        def term(j):
            r = required[j].bit_count()
            return r if r > k else k

        def dfs(depth, cost, rest):
            self.nodes += 1
            if self.nodes > self.budget_nodes or (
                self.deadline is not None and self.nodes % 1024 == 0
                and time.perf_counter() > self.deadline
            ):
                self.exhausted = True
                return True
            if depth == n:
                state["best"] = (cost, list(chosen))
                state["bound"] = cost - 1
                return cost <= stop_at
            i = self.order[depth]
            bit_i = 1 << i
            req = required[i]
            rest_i = rest - term(i)
            for mask, size in self.options[i]:
                if mask & req != req:
                    continue
                if cost + size + rest_i > state["bound"]:
                    if self.size_sorted:
                        break
                    continue
                touched = []
                new_rest = rest_i
                ok = True
                if size == k:
                    m = mask
                    while m:
                        low = m & -m
                        j = low.bit_length() - 1
                        m ^= low
                        if chosen[j] is not None:
                            if not chosen[j] & bit_i:
                                ok = False
                                break
                        elif not required[j] & bit_i:
                            before = term(j)
                            required[j] |= bit_i
                            touched.append(j)
                            new_rest += term(j) - before
                stop = False
                if ok and cost + size + new_rest <= state["bound"]:
                    chosen[i] = mask
                    stop = dfs(depth + 1, cost + size, new_rest)
                    chosen[i] = None
                for j in touched:
                    required[j] &= ~bit_i
                if stop:
                    return True
            return False

        dfs(0, 0, k * n)
        return state["best"]


def _witness_from_masks(G: Graph, masks) -> frozenset:
    return frozenset((i, j) for i in range(G.n) for j in range(G.n) if masks[i] >> j & 1)


def solve_inflated(G: Graph, k: int, budget_nodes: int | None = None,
                   time_limit: float | None = None) -> SolveResult:
    """Exact k-tuple total domination number of the inflation of ``G``.

    Cliques are decided largest first; within a clique, intersections are
    tried smallest first.  A second pass in owner order recovers the
    lexicographically least optimal witness.
    """
    _check_k(G, k)
    if budget_nodes is None:
        budget_nodes = int(os.environ.get("INFLATA_BUDGET_NODES", DEFAULT_BUDGET_NODES))
    t0 = time.perf_counter()
    GI = inflate(G)
    lower = max(G.n * k, math.ceil(2 * k * G.m / G.max_degree))
    start = generic_upper_set(GI, k)

    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    search = _CliqueSearch(G, k, order, lambda o: (len(o), o), budget_nodes, time_limit)
    found = search.run(len(start) - 1, stop_at=lower)
    nodes = search.nodes
    if search.exhausted:
        best_size = found[0] if found else len(start)
        witness = _witness_from_masks(G, found[1]) if found else start
        raise CapacityError(
            f"search budget exhausted after {nodes} nodes; gamma in [{lower}, {best_size}]",
            interval=(lower, best_size), witness=witness, nodes=nodes,
        )
    gamma = found[0] if found else len(start)

    # lexicographically least witness: owner order, and within a clique a
    # longer tuple sorts before any tuple it extends
    big = G.n + 1
    lex = _CliqueSearch(G, k, range(G.n), lambda o: tuple(o) + (big,),
                        budget_nodes - nodes if budget_nodes > nodes else 1, time_limit)
    again = lex.run(gamma, stop_at=gamma)
    nodes += lex.nodes
    if again is None or lex.exhausted:
        witness = _witness_from_masks(G, found[1]) if found else start
    else:
        witness = _witness_from_masks(G, again[1])
    assert len(witness) == gamma and is_ktds(GI, witness, k)
    return SolveResult(gamma, witness, "clique_bnb", nodes, time.perf_counter() - t0)
