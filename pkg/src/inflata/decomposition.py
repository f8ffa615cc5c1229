"""Edge-disjoint 2-factors, compatible matchings, and the kTDS they induce.

A certificate for k = 2r holds r pairwise edge-disjoint 2-factors (kind
``HLD``).  For odd k = 2r+1 it additionally holds a matching that avoids every
factor edge: perfect (``HLPM``) or, on odd order, of size (n-1)/2 (``HLMM``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .domination import bounds, generic_upper_set, is_ktds
from .errors import CapacityError, InputError
from .graph import Graph, Matching, _pair, perfect_matching_in
from .inflation import InflatedGraph, inflate, red_clique

DECOMPOSITION_CAP = 12


@dataclass(frozen=True)
class TwoFactor:
    cycles: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        out = set()
        for cyc in self.cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                out.add(_pair(a, b))
        return frozenset(out)

    def validate(self, host: Graph):
        seen = [v for cyc in self.cycles for v in cyc]
        if sorted(seen) != list(range(host.n)):
            raise InputError("2-factor cycles must cover every vertex exactly once")
        for cyc in self.cycles:
            if len(cyc) < 3:
                raise InputError(f"cycle {cyc} is shorter than 3")
        for u, v in self.edges:
            if not host.has_edge(u, v):
                raise InputError(f"2-factor edge {(u, v)} is not in the host graph")

    @classmethod
    def from_edges(cls, n: int, edges) -> "TwoFactor":
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        if any(len(a) != 2 for a in adj):
            raise InputError("edge set is not 2-regular")
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            prev, cur = start, min(adj[start])
            while cur != start:
                cyc.append(cur)
                seen[cur] = True
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            cycles.append(tuple(cyc))
        return cls(tuple(cycles))


@dataclass(frozen=True)
class HLCertificate:
    factors: tuple[TwoFactor, ...]
    matching: frozenset | None
    kind: str
    host: Graph
    unsaturated: int | None = None

    def __post_init__(self):
        if self.kind not in ("HLD", "HLPM", "HLMM"):
            raise InputError(f"unknown certificate kind {self.kind!r}")
        used = set()
        for f in self.factors:
            f.validate(self.host)
            if used & f.edges:
                raise InputError("certificate factors are not edge-disjoint")
            used |= f.edges
        if self.kind == "HLD":
            if self.matching is not None:
                raise InputError("HLD certificates carry no matching")
            return
        if self.matching is None:
            raise InputError(f"{self.kind} certificate needs a matching")
        M = Matching(frozenset(self.matching), self.host)
        if used & M.edges:
            raise InputError("matching shares an edge with a factor cycle")
        if self.kind == "HLPM" and not M.is_perfect:
            raise InputError("HLPM matching is not perfect")
        if self.kind == "HLMM":
            if not M.is_near_perfect:
                raise InputError("HLMM needs odd order and a matching of size (n-1)/2")
            missing = set(range(self.host.n)) - M.saturated()
            if self.unsaturated is None:
                object.__setattr__(self, "unsaturated", missing.pop())
            elif missing != {self.unsaturated}:
                raise InputError("unsaturated vertex does not match the matching")

    @property
    def r(self) -> int:
        return len(self.factors)

    @property
    def k(self) -> int:
        return 2 * self.r + (0 if self.kind == "HLD" else 1)


@dataclass(frozen=True)
class GammaPrediction:
    basis: str
    value: int | None = None
    interval: tuple[int, int] | None = None
    certificate: HLCertificate | None = None

    def to_dict(self) -> dict:
        out = {"basis": self.basis}
        if self.value is not None:
            out["value"] = self.value
        else:
            out["interval"] = list(self.interval)
        return out


def _two_factor_edge_sets(n: int, allowed):
    """Yield every 2-regular spanning edge set drawn from ``allowed``.

    Branches on the lowest-index edge at the most constrained vertex:
    include it or exclude it.
    """
    allowed = sorted(allowed)
    avail = [set() for _ in range(n)]
    for idx, (u, v) in enumerate(allowed):
        avail[u].add(idx)
        avail[v].add(idx)
    need = [2] * n
    chosen = []

    def rec(avail, need):
        v, best = -1, None
        for x in range(n):
            if need[x]:
                slack = len(avail[x]) - need[x]
                if slack < 0:
                    return
                if best is None or slack < best:
                    v, best = x, slack
        if v < 0:
            yield frozenset(allowed[i] for i in chosen)
            return
        e = min(avail[v])
        a, b = allowed[e]
        # include e
        inc_avail = [set(s) for s in avail]
        inc_need = list(need)
        for x in (a, b):
            inc_avail[x].discard(e)
            inc_need[x] -= 1
        for x in (a, b):
            if inc_need[x] == 0:
                for f in list(inc_avail[x]):
                    c, d = allowed[f]
                    inc_avail[c].discard(f)
                    inc_avail[d].discard(f)
        chosen.append(e)
        yield from rec(inc_avail, inc_need)
        chosen.pop()
        # exclude e
        exc_avail = [set(s) for s in avail]
        exc_avail[a].discard(e)
        exc_avail[b].discard(e)
        yield from rec(exc_avail, need)

    yield from rec(avail, need)


def _check_cap(G: Graph, cap: int):
    if G.n > cap:
        raise CapacityError(f"decomposition search is limited to {cap} vertices (got {G.n})")


def find_two_factor(G: Graph, forbidden=frozenset(), cap: int = DECOMPOSITION_CAP):
    _check_cap(G, cap)
    forbidden = {_pair(u, v) for u, v in forbidden}
    allowed = [e for e in G.edges if e not in forbidden]
    for edges in _two_factor_edge_sets(G.n, allowed):
        return TwoFactor.from_edges(G.n, edges)
    return None


def find_certificate(G: Graph, k: int, cap: int = DECOMPOSITION_CAP):
    """Exhaustive search for a k-certificate; None proves none exists.

    Factors are generated with strictly increasing smallest edge, so each
    unordered family of factors is visited once.
    """
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    if k > G.min_degree:
        raise InputError(f"k={k} exceeds the minimum degree {G.min_degree}")
    _check_cap(G, cap)
    n = G.n
    r = k // 2
    odd = k % 2 == 1
    if odd and n % 2 == 1:
        kind = "HLMM"
    else:
        kind = "HLPM" if odd else "HLD"
    rank = {e: i for i, e in enumerate(G.edges)}
    # HLMM: prefer an unsaturated vertex with a spare clique member
    skip_order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))

    def finish(factors, used):
        tf = tuple(TwoFactor.from_edges(n, f) for f in factors)
        if not odd:
            return HLCertificate(tf, None, "HLD", G)
        rest = [e for e in G.edges if e not in used]
        if kind == "HLPM":
            pm = perfect_matching_in(n, rest)
            return None if pm is None else HLCertificate(tf, pm, "HLPM", G)
        for u in skip_order:
            pm = perfect_matching_in(n, rest, skip=u)
            if pm is not None:
                return HLCertificate(tf, pm, "HLMM", G, unsaturated=u)
        return None

    def rec(factors, used, floor):
        if len(factors) == r:
            return finish(factors, used)
        left = r - len(factors)
        deg_left = [G.degree(v) for v in G.vertices]
        for u, v in used:
            deg_left[u] -= 1
            deg_left[v] -= 1
        extra = 1 if kind == "HLPM" else 0
        if any(d < 2 * left + extra for d in deg_left):
            return None
        allowed = [e for e in G.edges if e not in used and rank[e] > floor]
        for edges in _two_factor_edge_sets(n, allowed):
            cert = rec(factors + [edges], used | edges, min(rank[e] for e in edges))
            if cert is not None:
                return cert
        return None

    return rec([], frozenset(), -1)


def ktds_from_certificate(GI: InflatedGraph, cert: HLCertificate, k: int) -> frozenset:
    """kTDS of size nk (HLD/HLPM) or nk+1 (HLMM) built from a certificate.

    Each factor edge {u, v} contributes both ends of its blue edge, i.e. the
    two cycle-neighbour vertices of every clique; matching edges contribute
    their blue ends.  For HLMM two further members of the unsaturated
    vertex's clique are added.  If that clique has only one member left
    outside the set (degree exactly k), the free member and its blue partner
    are added instead, which keeps the size at nk+1.
    """
    G = GI.base
    if cert.host != G:
        raise InputError("certificate host is not the base graph of the inflation")
    fits = cert.kind == "HLD" if k % 2 == 0 else cert.kind in ("HLPM", "HLMM")
    if not fits or cert.r != k // 2:
        raise InputError(f"{cert.kind} certificate with {cert.r} factors does not fit k={k}")
    S = set()
    for f in cert.factors:
        for u, v in f.edges:
            S.update(((u, v), (v, u)))
    if cert.matching is not None:
        for u, v in cert.matching:
            S.update(((u, v), (v, u)))
    if cert.kind == "HLMM":
        u = cert.unsaturated
        free = sorted(red_clique(GI, u) - S)
        if len(free) >= 2:
            S.update(free[:2])
        else:
            (a,) = free
            S.update((a, (a[1], a[0])))
    S = frozenset(S)
    size = G.n * k + (1 if cert.kind == "HLMM" else 0)
    if len(S) != size or not is_ktds(GI, S, k):
        raise AssertionError(f"certificate construction produced an invalid set (|S|={len(S)})")
    return S


def predict_gamma(G: Graph, k: int, cap: int = DECOMPOSITION_CAP) -> GammaPrediction:
    """Exact value when a certificate settles it, otherwise an interval whose
    upper end is the size of a verified constructive set (the refined degree
    bound is not used here: it can undercut the true value)."""
    rep = bounds(G, k)
    n = G.n
    hi = len(generic_upper_set(inflate(G), k))
    if n > cap:
        return GammaPrediction("T1", interval=(rep.best_lower, max(rep.best_lower, hi)))
    cert = find_certificate(G, k, cap)
    if cert is not None:
        if cert.kind == "HLD":
            return GammaPrediction("T4", value=n * k, certificate=cert)
        if cert.kind == "HLPM":
            return GammaPrediction("T5", value=n * k, certificate=cert)
        return GammaPrediction("T8", value=n * k + 1, certificate=cert)
    lo = max(n * k + 1, rep.best_lower)
    return GammaPrediction("T7", interval=(lo, max(lo, hi)))


def union_of_matchings(n: int, m1, m2) -> TwoFactor:
    """Two edge-disjoint perfect matchings combine into a 2-factor."""
    m1, m2 = {_pair(*e) for e in m1}, {_pair(*e) for e in m2}
    if m1 & m2:
        raise InputError("matchings share an edge")
    return TwoFactor.from_edges(n, m1 | m2)


def circulant_factor(n: int, offset: int) -> TwoFactor:
    if not 1 <= offset < n / 2:
        raise InputError(f"offset {offset} does not give a 2-factor on {n} vertices")
    g = math.gcd(n, offset)
    cycles = []
    for s in range(g):
        cyc = [s]
        x = (s + offset) % n
        while x != s:
            cyc.append(x)
            x = (x + offset) % n
        cycles.append(tuple(cyc))
    return TwoFactor(tuple(cycles))
