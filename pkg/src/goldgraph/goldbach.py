"""Finite truncations of the Goldbach graph and the scans built on them.

``G_n`` has vertices ``0, 2, ..., 2n`` and an edge ``{a, b}`` (``a < b``)
iff ``(a+b)/2`` and ``(b-a)/2`` are both odd primes. Writing ``p`` for the
half-sum and ``q`` for the half-difference gives ``b = p + q`` and
``a = p - q``, so in-neighbours of ``v`` correspond to Goldbach partitions
of ``v`` and out-neighbours to ways of writing ``v`` as a difference.

The starred variant drops vertex 0 and adds 1 to the odd set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .primes import OddSet, PrimeSieve, is_prime_64, odd_primes_upto
from .unionfind import UnionFind

WITH_ZERO = "P"
STARRED = "P1"


@lru_cache(maxsize=8)
def _sieve(bound: int) -> PrimeSieve:
    return PrimeSieve(max(bound, 16))


def sieve_for(bound: int) -> PrimeSieve:
    # round up so that nearby requests share one sieve
    return _sieve(1 << max(4, (bound - 1).bit_length()))


@dataclass
class GoldbachGraph:
    n: int
    variant: str
    vertices: tuple
    odd_set: OddSet
    adj: dict = field(repr=False)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a in self.adj for b in self.adj[a] if a < b)

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj.get(a, ())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def in_degree(self, v: int) -> int:
        return sum(1 for b in self.adj[v] if b < v)

    def out_degree(self, v: int) -> int:
        return sum(1 for b in self.adj[v] if b > v)

    def is_connected(self) -> bool:
        uf = UnionFind(self.vertices)
        for a, b in self.edges:
            uf.union(a, b)
        return uf.components == 1

    def to_dot(self) -> str:
        lines = [f"graph G{self.n}{'star' if self.variant == STARRED else ''} {{"]
        lines += [f"  {v};" for v in self.vertices]
        lines += [f"  {a} -- {b};" for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_goldbach(n: int, variant: str = WITH_ZERO) -> GoldbachGraph:
    """``G_n`` on ``{0..2n}`` with odd primes, or the starred graph on ``{2..2n}`` with ``P u {1}``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant not in (WITH_ZERO, STARRED):
        raise ValueError(f"unknown variant {variant!r}")
    top = 2 * n
    sieve = sieve_for(max(top, 3))
    O = odd_primes_upto(max(top, 3), include_one=variant == STARRED, sieve=sieve)
    start = 0 if variant == WITH_ZERO else 2
    vertices = tuple(range(start, top + 1, 2))
    adj = {v: set() for v in vertices}
    odds = O.elements
    for i, s in enumerate(odds):
        if s > top:
            break
        for d in odds[: i + 1]:
            a, b = s - d, s + d
            if b > top:
                break
            if a >= start:
                adj[a].add(b)
                adj[b].add(a)
    return GoldbachGraph(n, variant, vertices, O, adj)


def goldbach_partitions(v: int, sieve: PrimeSieve | None = None) -> list[tuple[int, int]]:
    """Unordered odd-prime pairs ``(q, p)``, ``q <= p``, with ``q + p = v``."""
    if v % 2:
        raise ValueError(f"{v} is odd")
    if v < 6:
        return []
    if sieve is None or sieve.bound < v:
        sieve = sieve_for(v)
    pset = sieve.prime_set()
    return [(q, v - q) for q in sieve.primes(v // 2)[1:] if v - q in pset]


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    in_degree: dict
    out_degree: dict

    def total(self, v: int) -> int:
        return self.in_degree[v] + self.out_degree[v]


def degree_profile(n: int, graph: GoldbachGraph | None = None) -> DegreeProfile:
    G = graph if graph is not None else build_goldbach(n)
    ind = {v: G.in_degree(v) for v in G.vertices}
    outd = {v: G.out_degree(v) for v in G.vertices}
    if G.variant == WITH_ZERO:
        sieve = sieve_for(2 * n)
        for v in range(6, 2 * n + 1, 2):
            if ind[v] != len(goldbach_partitions(v, sieve)):
                raise AssertionError(f"in-degree of {v} disagrees with its partition count")
    return DegreeProfile(n, ind, outd)


def verify_goldbach_connectivity(n_max: int, n_min: int = 7) -> dict:
    """Check that ``G_n`` is connected for every ``n_min <= n <= n_max``.

    Vertices are added in increasing order; the edges whose larger end is
    ``2k`` are exactly those from the partitions of ``2k``, so after step
    ``k`` the union-find holds ``G_k`` itself.
    """
    if n_max < n_min:
        raise ValueError(f"n_max must be >= {n_min}")
    sieve = sieve_for(2 * n_max)
    uf = UnionFind()
    disconnected = []
    for k in range(0, n_max + 1):
        v = 2 * k
        uf.add(v)
        for q, p in goldbach_partitions(v, sieve):
            uf.union(v, p - q)
        if k >= n_min and uf.components != 1:
            disconnected.append(k)
    return {
        "n_min": n_min,
        "n_max": n_max,
        "first_disconnected": disconnected[0] if disconnected else None,
        "disconnected": disconnected,
        "all_connected": not disconnected,
    }


def small_n_connectivity(upto: int = 6) -> dict[int, bool]:
    """Connectivity of ``G_n`` below the range covered by the equivalence, reported as-is."""
    return {n: build_goldbach(n).is_connected() for n in range(1, upto + 1)}


def verify_positive_in_degree(v_max: int) -> dict:
    if v_max < 6:
        raise ValueError("v_max must be >= 6")
    sieve = sieve_for(v_max)
    violations = [v for v in range(6, v_max + 1, 2) if not goldbach_partitions(v, sieve)]
    return {"v_max": v_max, "violations": violations, "all_positive": not violations}


def maillet_witness(v: int, search_bound: int, sieve: PrimeSieve | None = None) -> tuple[int, int] | None:
    """Smallest odd-prime pair ``(q, q + v)`` with ``q + v <= search_bound``."""
    if sieve is None or sieve.bound < search_bound:
        sieve = sieve_for(search_bound)
    for q in range(3, search_bound - v + 1, 2):
        if sieve.is_prime(q) and sieve.is_prime(q + v):
            return q, q + v
    return None


def verify_maillet(v_max: int, search_bound: int) -> dict:
    if v_max < 2:
        raise ValueError("v_max must be >= 2")
    sieve = sieve_for(search_bound)
    witnesses, unwitnessed = {}, []
    for v in range(2, v_max + 1, 2):
        w = maillet_witness(v, search_bound, sieve)
        if w is None:
            unwitnessed.append(v)
        else:
            witnesses[v] = w
    return {"v_max": v_max, "search_bound": search_bound, "witnesses": witnesses, "unwitnessed": unwitnessed}


def count_kronecker_pairs(gap: int, n: int) -> tuple[int, list[tuple[int, int]]]:
    """Out-degree of vertex ``gap`` in ``G_n`` with the prime pairs behind each arc.

    An out-neighbour ``b`` gives the pair ``((b - gap)/2, (b + gap)/2)``;
    the constraint ``b <= 2n`` bounds the smaller prime by ``n - gap/2``.
    """
    if gap < 2 or gap % 2:
        raise ValueError("gap must be an even integer >= 2")
    top = 2 * n
    sieve = sieve_for(max(top, 3))
    lim = (top - gap) // 2
    if lim < 3:
        return 0, []
    P = sieve.prime_set()
    pairs = [(q, q + gap) for q in sieve.primes(lim)[1:] if q + gap in P]
    return len(pairs), pairs


def prime_count_via_degree(n: int) -> tuple[int, int]:
    """``(pi(n), d_n(0))`` with ``pi(n)`` read off the degree of 0."""
    if n < 2:
        raise ValueError("n must be >= 2")
    G = build_goldbach(n)
    d0 = G.degree(0)
    return d0 + 1, d0


def degree_inequality_sides(r: int, n: int, m: int, profile: DegreeProfile | None = None) -> tuple[int, int]:
    if r < 1 or m < 0 or n < 2 * r:
        raise ValueError("need r >= 1, m >= 0 and n >= 2r")
    P = profile if profile is not None else degree_profile(n)

    def outd(v):
        return P.out_degree.get(v, 0) if v >= 0 else 0

    def ind(v):
        return P.in_degree.get(v, 0) if v >= 0 else 0

    lhs = sum(outd(2 * i) for i in range(m + 1))
    rhs = sum(ind(2 * r - 2 * i) for i in range(m + 1))
    return lhs, rhs


def verify_degree_inequality(r: int, n: int, m: int, profile: DegreeProfile | None = None) -> bool:
    """Sum of out-degrees of ``0, 2, .., 2m`` versus in-degrees of ``2r, .., 2r - 2m`` in ``G_n``.

    Vertices below zero contribute nothing. The statement covers
    ``m <= 4``; larger ``m`` is evaluated but lies outside it.
    """
    lhs, rhs = degree_inequality_sides(r, n, m, profile)
    return lhs >= rhs


# --- complete bipartite subgraphs -------------------------------------------


def in_6N0(v: int) -> bool:
    return v % 6 == 0


def goldbach_edge(a: int, b: int) -> bool:
    """Direct edge test for the with-zero Goldbach graph, no sieve involved."""
    if a == b or a % 2 or b % 2 or a < 0 or b < 0:
        return False
    s, d = (a + b) // 2, abs(a - b) // 2
    if s % 2 == 0 or d % 2 == 0:
        return False
    return _is_prime(s) and _is_prime(d)


_SMALL = 1 << 16
_small_primes: frozenset = frozenset()


def _is_prime(v: int) -> bool:
    # table lookup for small values, Miller-Rabin above
    global _small_primes
    if v <= _SMALL:
        if not _small_primes:
            _small_primes = PrimeSieve(_SMALL).prime_set()
        return v in _small_primes
    return is_prime_64(v)


@dataclass(frozen=True)
class KmnWitness:
    Xside: tuple
    Yside: tuple

    def __post_init__(self):
        object.__setattr__(self, "Xside", tuple(sorted(self.Xside)))
        object.__setattr__(self, "Yside", tuple(sorted(self.Yside)))
        if set(self.Xside) & set(self.Yside):
            raise ValueError("sides overlap")

    def is_complete(self) -> bool:
        return all(goldbach_edge(x, y) for x in self.Xside for y in self.Yside)


def _side_sets(G: GoldbachGraph, s: int, t: int):
    """Yield ``(X, common)`` for increasing s-tuples X whose common neighbourhood has >= t vertices."""
    verts = [v for v in G.vertices if len(G.adj[v]) >= t]

    def extend(X, common, start):
        if len(X) == s:
            yield tuple(X), common
            return
        for i in range(start, len(verts)):
            v = verts[i]
            c = G.adj[v] if common is None else common & G.adj[v]
            if len(c) < t:
                continue
            X.append(v)
            yield from extend(X, c, i + 1)
            X.pop()

    yield from extend([], None, 0)


def find_complete_bipartite(
    n: int, s: int, t: int, limit: int | None = None, graph: GoldbachGraph | None = None
) -> list[KmnWitness]:
    """Enumerate ``K_{s,t}`` subgraphs of ``G_n`` (X of size s, Y of size t).

    Backtracks over X in increasing order while the common neighbourhood
    keeps at least ``t`` vertices. When ``s == t`` each unordered pair of
    sides is reported once, with the smaller minimum on X.
    """
    if s < 1 or t < 1:
        raise ValueError("side sizes must be positive")
    if limit is not None and limit <= 0:
        return []
    G = graph if graph is not None else build_goldbach(n)
    out: list[KmnWitness] = []
    for X, common in _side_sets(G, s, t):
        for Y in combinations(sorted(common), t):
            if s == t and Y[0] < X[0]:
                continue
            out.append(KmnWitness(X, Y))
            if limit is not None and len(out) >= limit:
                return out
    return out


def complete_bipartite_cores(n: int, s: int, min_t: int, graph: GoldbachGraph | None = None) -> list[KmnWitness]:
    """One witness per s-set X: X against its whole common neighbourhood (size >= min_t).

    Every ``K_{s,t}`` with ``t >= min_t`` sits inside one of these, and a
    mod-6 violation in a sub-witness shows up in its core.
    """
    G = graph if graph is not None else build_goldbach(n)
    return [KmnWitness(X, tuple(common)) for X, common in _side_sets(G, s, min_t)]


def check_kmn_structure(w: KmnWitness) -> dict:
    """Check the mod-6 shape of a complete bipartite witness and the two lemmas on its edges."""
    if not w.is_complete():
        raise ValueError("witness is not a complete bipartite subgraph of the Goldbach graph")
    X, Y = w.Xside, w.Yside

    def pure(side):
        return all(map(in_6N0, side))

    def free(side):
        return not any(map(in_6N0, side))

    lemma_n6 = []
    lemma_d6 = []
    for x in X:
        for y in Y:
            if not in_6N0(x) and not in_6N0(y) and abs(x - y) != 6:
                lemma_n6.append((x, y))
            if in_6N0(x) and in_6N0(y) and {x, y} != {0, 6}:
                lemma_d6.append((x, y))

    small, large = sorted((len(X), len(Y)))
    if small > 2:
        applies = "K_mn"
        ok = (pure(X) and free(Y)) or (pure(Y) and free(X))
        pattern = "one side inside 6N0, the other disjoint from it" if ok else "mixed sides"
    elif small == 2 and large > 3:
        applies = "K_2n"
        pair, rest = (X, Y) if len(X) == 2 else (Y, X)
        non6 = sum(1 for v in rest if not in_6N0(v))
        ok = (pure(pair) and free(rest)) or (free(pair) and non6 <= 1)
        pattern = (
            "pair inside 6N0, other side free of 6N0"
            if pure(pair) and free(rest)
            else f"pair free of 6N0, {non6} vertex outside 6N0 on the other side"
        )
    else:
        applies = "none"
        ok = True
        if pure(X) and free(Y):
            pattern = "X inside 6N0, Y free of 6N0"
        elif pure(Y) and free(X):
            pattern = "Y inside 6N0, X free of 6N0"
        else:
            pattern = "mixed (no structural claim at this size)"
    return {
        "sizes": (len(X), len(Y)),
        "theorem": applies,
        "mod6_pattern_ok": ok,
        "pattern": pattern,
        "lemma_n6_violations": lemma_n6,
        "lemma_d6_violations": lemma_d6,
        "ok": ok and not lemma_n6 and not lemma_d6,
    }


def extract_prime_witness(w: KmnWitness) -> dict:
    """Primes ``p_i = (x_i + y_1)/2`` and shifts ``r_j = (y_{j+1} - y_1)/2``; every ``p_i + r_j`` must be prime."""
    X, Y = w.Xside, w.Yside
    y1 = Y[0]
    primes = [(x + y1) // 2 for x in X]
    shifts = [(y - y1) // 2 for y in Y[1:]]
    sums = {(p, r): p + r for p in primes for r in shifts}
    return {
        "primes": primes,
        "shifts": shifts,
        "primes_ok": all(_is_prime(p) for p in primes),
        "sums_ok": all(_is_prime(v) for v in sums.values()),
        "checks": len(primes) + len(sums),
    }


def lemma_scan(n: int, graph: GoldbachGraph | None = None) -> dict:
    """Check both mod-6 lemmas on every edge of ``G_n``."""
    G = graph if graph is not None else build_goldbach(n)
    n6_edges = d6_edges = 0
    n6_bad, d6_found = [], []
    for a, b in G.edges:
        if not in_6N0(a) and not in_6N0(b):
            n6_edges += 1
            if abs(a - b) != 6:
                n6_bad.append((a, b))
        elif in_6N0(a) and in_6N0(b):
            d6_edges += 1
            d6_found.append((a, b))
    return {
        "n": n,
        "edges": len(G.edges),
        "n6_edges": n6_edges,
        "n6_violations": n6_bad,
        "d6_edges": d6_found,
        "d6_violations": [e for e in d6_found if set(e) != {0, 6}],
    }


# --- independent sets ---------------------------------------------------------


def factorial_independent_set(n: int) -> list[int]:
    """The set ``{(2n+2)! + 2, ..., (2n+2)! + 2(n+1)}``, which has ``n + 1`` elements."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = math.factorial(2 * n + 2)
    return [base + 2 * i for i in range(1, n + 2)]


def consecutive_independent_set(k: int) -> tuple[list[int], dict]:
    """``k`` consecutive even numbers, pairwise non-adjacent in the Goldbach graph.

    Uses base ``(2k+2)!`` and keeps the first ``k`` terms, so every half-sum
    lies in the composite run ``(2k+2)! + 2 .. (2k+2)! + 2k + 2``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    S = factorial_independent_set(k)[:k]
    return S, verify_independent(S)


def verify_independent(S: list[int]) -> dict:
    if max(S) > (1 << 64) - 1:
        raise ValueError("values exceed the exact 64-bit primality range")
    adjacent = []
    checks = 0
    for a, b in combinations(S, 2):
        s, d = (a + b) // 2, abs(b - a) // 2
        checks += 2
        s_odd_prime = s % 2 == 1 and is_prime_64(s)
        d_odd_prime = d % 2 == 1 and is_prime_64(d)
        if s_odd_prime and d_odd_prime:
            adjacent.append((a, b))
    return {"size": len(S), "pairs": len(S) * (len(S) - 1) // 2, "primality_checks": checks,
            "adjacent_pairs": adjacent, "independent": not adjacent}
