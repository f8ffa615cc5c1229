"""Closed-form values, family witnesses and composition bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .decomposition import (
    HLCertificate, TwoFactor, circulant_factor, ktds_from_certificate,
)
from .domination import is_ktds
from .errors import InputError, UnsupportedError
from .graph import (
    Graph, _pair, complete_graph, complete_multipartite, cycle_graph, harary_graph,
    petersen_graph,
)
from .inflation import inflate

FAMILY_TAGS = ("complete", "bipartite", "multipartite", "harary", "gpg", "cycle")
_SHORTHAND = {"kn": "complete", "kpq": "bipartite", "multi": "multipartite",
              "harary": "harary", "gpg": "gpg", "cycle": "cycle"}


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise InputError(f"unknown family {self.tag!r}")
        p = self.params
        arity = {"complete": 1, "bipartite": 2, "harary": 2, "gpg": 2, "cycle": 1}
        if self.tag in arity and len(p) != arity[self.tag]:
            raise InputError(f"{self.tag} takes {arity[self.tag]} parameter(s), got {len(p)}")
        if self.tag == "bipartite" and not 1 <= p[0] <= p[1]:
            raise InputError("bipartite family needs 1 <= p <= q")
        if self.tag == "gpg" and not (p[0] >= 3 and 1 <= p[1] <= p[0] / 2):
            raise InputError("gpg family needs n >= 3 and 1 <= m <= n/2")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse shorthand such as ``kn:5``, ``kpq:2,3`` or ``gpg:6,3``."""
        name, sep, rest = text.partition(":")
        if not sep or name not in _SHORTHAND:
            raise InputError(f"bad family spec {text!r}; expected one of "
                             + ", ".join(f"{k}:..." for k in _SHORTHAND))
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise InputError(f"bad family parameters in {text!r}") from None
        return cls(_SHORTHAND[name], params)

    def shorthand(self) -> str:
        name = {v: k for k, v in _SHORTHAND.items()}[self.tag]
        return f"{name}:{','.join(map(str, self.params))}"

    def graph(self) -> Graph:
        p = self.params
        if self.tag == "complete":
            return complete_graph(p[0])
        if self.tag in ("bipartite", "multipartite"):
            return complete_multipartite(p)
        if self.tag == "harary":
            return harary_graph(*p)
        if self.tag == "gpg":
            return petersen_graph(*p)
        return cycle_graph(p[0])


def _odd(x):
    return x % 2 == 1


def gamma_complete(n: int, k: int) -> int:
    if not 2 <= k < n:
        raise InputError(f"complete-graph formula needs 2 <= k < n, got n={n}, k={k}")
    return n * k + 1 if _odd(k) and _odd(n) else n * k


def gamma_complete_cutedge(n: int, m: int, k: int) -> int:
    """K_n and K_m joined by one cut edge."""
    if not 2 <= k < n <= m:
        raise InputError(f"cut-edge formula needs 2 <= k < n <= m, got n={n}, m={m}, k={k}")
    if _odd(k) and (n - m) % 2 == 1:
        return k * (n + m) + 1
    return k * (n + m)


def gamma_gpg_k2(n: int, m: int) -> int:
    if not (n >= 3 and 1 <= m <= n / 2):
        raise InputError(f"generalized Petersen formula needs n >= 3, 1 <= m <= n/2; got {n}, {m}")
    return 4 * n + 2 if 2 * m == n and _odd(m) else 4 * n


def gamma_harary(m: int, n: int, k: int) -> int:
    if not 2 <= k <= m < n:
        raise InputError(f"Harary formula needs 2 <= k <= m < n, got m={m}, n={n}, k={k}")
    return n * k + 1 if _odd(k) and _odd(n) else n * k


def gamma_complete_bipartite(p: int, q: int, k: int) -> int:
    ok = (2 <= k < p <= q) or (p == q and p >= k >= 2)
    if not ok:
        raise InputError(
            f"bipartite formula needs 2 <= k < p <= q or p = q >= k >= 2; got p={p}, q={q}, k={k}"
        )
    return 2 * p * k + (q - p) * (k + 1)


def _half_split(sizes) -> int:
    n = sum(sizes)
    best = 0
    for r in range(1, len(sizes) + 1):
        for J in itertools.combinations(sizes, r):
            s = sum(J)
            if 2 * s <= n and s > best:
                best = s
    return best


def upper_multipartite(sizes, k: int) -> int:
    sizes = list(sizes)
    n = sum(sizes)
    n_prime = _half_split(sizes)
    if not 2 <= k < n_prime:
        raise InputError(f"multipartite bound needs 2 <= k < n'={n_prime}, got k={k}")
    return n * (k + 1) - 2 * n_prime


def formula(spec: FamilySpec, k: int) -> tuple[int, str, bool]:
    """Closed form for a family: (value, basis, exact).  ``exact`` is False for
    the multipartite upper bound and for odd-odd Harary graphs, which are not
    regular, so their value is only an expectation to test against."""
    p = spec.params
    if spec.tag == "complete":
        return gamma_complete(p[0], k), "complete", True
    if spec.tag == "bipartite":
        return gamma_complete_bipartite(p[0], p[1], k), "bipartite", True
    if spec.tag == "multipartite":
        return upper_multipartite(p, k), "multipartite_upper", False
    if spec.tag == "harary":
        regular = p[0] % 2 == 0 or p[1] % 2 == 0
        return gamma_harary(p[0], p[1], k), ("harary" if regular else "harary_irregular"), regular
    if spec.tag == "cycle":
        return gamma_harary(2, p[0], k), "harary", True
    if k != 2:
        raise UnsupportedError("generalized Petersen closed form covers k = 2 only; use solve")
    return gamma_gpg_k2(p[0], p[1]), "gpg", True


# --------------------------------------------------------------------------
# constructive witnesses


def _alternate_matching(cycles, n):
    """Every other edge of each cycle; perfect when all cycles are even,
    near-perfect when n is odd and there is a single cycle."""
    M = set()
    for cyc in cycles:
        L = len(cyc)
        for t in range(0, L - 1, 2):
            M.add(_pair(cyc[t], cyc[t + 1]))
    covered = {x for e in M for x in e}
    if len(covered) == n or (n % 2 == 1 and len(covered) == n - 1):
        return frozenset(M)
    return None


def _circulant_certificate(G: Graph, offsets, diameter: bool, k: int) -> HLCertificate:
    """Certificate from circulant offset classes: r of them as 2-factors and,
    for odd k, one further class (or the diameter class) as the matching."""
    n = G.n
    r = k // 2
    odd_k = k % 2 == 1
    offsets = sorted(offsets)
    if not odd_k:
        if r > len(offsets):
            raise UnsupportedError("not enough offset classes")
        factors = tuple(circulant_factor(n, d) for d in offsets[:r])
        return HLCertificate(factors, None, "HLD", G)
    sources = []
    if diameter:
        sources.append(("diameter", frozenset(_pair(i, i + n // 2) for i in range(n // 2))))
    for d in reversed(offsets):
        M = _alternate_matching(circulant_factor(n, d).cycles, n)
        if M is not None:
            sources.append((d, M))
    for used, M in sources:
        rest = [d for d in offsets if d != used]
        if len(rest) >= r:
            factors = tuple(circulant_factor(n, d) for d in rest[:r])
            kind = "HLPM" if n % 2 == 0 else "HLMM"
            return HLCertificate(factors, M, kind, G)
    raise UnsupportedError("no offset class yields a compatible matching")


def _bipartite_witness(left, right, k: int) -> frozenset:
    """Witness for a complete bipartite host between ``left`` and ``right``
    (|left| <= |right|).  The core left x right[:p] uses k matchings of the
    1-factorization M_j = {(x_i, y_{i+j})}, each edge contributing both blue
    ends; every remaining right vertex takes k+1 contacts into ``left``."""
    p = len(left)
    S = set()
    for j in range(k):
        for i in range(p):
            x, y = left[i], right[(i + j) % p]
            S.update(((x, y), (y, x)))
    for y in right[p:]:
        S.update((y, x) for x in left[: k + 1])
    return frozenset(S)


def _gpg_witness(n: int, m: int, GI) -> frozenset:
    G = GI.base
    a = list(range(n))
    b = [n + i for i in range(n)]
    if 2 * m != n:
        outer = tuple(a)
        inner = [tuple(b[(s + t * m) % n] for t in range(n // math.gcd(n, m)))
                 for s in range(math.gcd(n, m))]
        cert = HLCertificate((TwoFactor((outer, *inner)),), None, "HLD", G)
        return ktds_from_certificate(GI, cert, 2)
    cycles = []
    for i in range(0, m - 1, 2):
        cycles.append((a[i], a[i + 1], b[i + 1], b[i + 1 + m], a[i + 1 + m], a[i + m],
                       b[i + m], b[i]))
    if m % 2 == 0:
        cert = HLCertificate((TwoFactor(tuple(cycles)),), None, "HLD", G)
        return ktds_from_certificate(GI, cert, 2)
    # odd m: 8-cycles cover all but the path a_{m-1} b_{m-1} b_{2m-1} a_{2m-1};
    # those four cliques are taken whole
    S = set()
    for cyc in cycles:
        for x, y in zip(cyc, cyc[1:] + cyc[:1]):
            S.update(((x, y), (y, x)))
    for v in (a[m - 1], b[m - 1], a[2 * m - 1], b[2 * m - 1]):
        S.update((v, w) for w in G.neighbors(v))
    return frozenset(S)


def construct_family_ktds(spec: FamilySpec, k: int) -> frozenset:
    """Explicit kTDS of the family's inflation with size equal to the closed
    form (or the multipartite upper bound); verified before returning."""
    value, _, _ = formula(spec, k)
    G = spec.graph()
    GI = inflate(G)
    p = spec.params
    if spec.tag == "complete":
        n = p[0]
        S = ktds_from_certificate(
            GI, _circulant_certificate(G, range(1, (n - 1) // 2 + 1), n % 2 == 0, k), k)
    elif spec.tag in ("harary", "cycle"):
        m, n = (2, p[0]) if spec.tag == "cycle" else p
        if m % 2 == 1 and n % 2 == 1:
            raise UnsupportedError(
                "odd-odd Harary graphs are not regular; use solve_inflated for them")
        S = ktds_from_certificate(
            GI, _circulant_certificate(G, range(1, m // 2 + 1), m % 2 == 1, k), k)
    elif spec.tag == "bipartite":
        left = list(range(p[0]))
        right = list(range(p[0], p[0] + p[1]))
        S = _bipartite_witness(left, right, k)
    elif spec.tag == "multipartite":
        S = _multipartite_witness(G, p, k)
    else:
        S = _gpg_witness(p[0], p[1], GI)
    if len(S) != value or not is_ktds(GI, S, k):
        raise AssertionError(f"family construction for {spec.shorthand()} failed (|S|={len(S)})")
    return S


def _multipartite_witness(G: Graph, sizes, k: int) -> frozenset:
    n = sum(sizes)
    target = _half_split(sizes)
    starts = list(itertools.accumulate([0] + list(sizes)))
    parts = [list(range(starts[i], starts[i + 1])) for i in range(len(sizes))]
    for r in range(1, len(sizes) + 1):
        for J in itertools.combinations(range(len(sizes)), r):
            if sum(sizes[i] for i in J) == target and 2 * target <= n:
                left = [v for i in J for v in parts[i]]
                right = [v for i in range(len(sizes)) if i not in J for v in parts[i]]
                return _bipartite_witness(left, right, k)
    raise AssertionError("no half split found")


# --------------------------------------------------------------------------
# composition bounds


@dataclass(frozen=True)
class CompositionBound:
    lower: int
    upper: int
    basis: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise InputError(f"lower {self.lower} exceeds upper {self.upper}")


def cutedge_bounds(gG: int, gH: int, k: int, strict: bool = False) -> CompositionBound:
    """Bounds for F with cut edge e, from the values of the components of F - e.
    ``strict`` means k < min degree of both components."""
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    if strict:
        return CompositionBound(gG + gH - 2, gG + gH, "T12")
    return CompositionBound(gG + gH - k, gG + gH, "T11")


def cutvertex_bounds(gammas, k: int) -> CompositionBound:
    gammas = list(gammas)
    if len(gammas) < 2:
        raise InputError("cut-vertex bounds need at least two v-components")
    if k < 2:
        raise InputError(f"k must be >= 2, got {k}")
    total = sum(gammas)
    return CompositionBound(total - len(gammas) * (k + 1) + k, total, "T15")
