"""Oriented odd-even graphs on even vertex sets.

An arc ``a -> b`` exists iff ``(a+b)/2`` and ``(b-a)/2`` both lie in the odd
set. Arcs therefore always ascend, and every arc joins a multiple of 4 to
a vertex that is 2 mod 4.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .primes import OddSet, arithmetic_odd_set
from .unionfind import UnionFind


def _check_even_set(A: Iterable[int]) -> tuple[int, ...]:
    A = tuple(A)
    if len(set(A)) != len(A):
        raise ValueError("vertex set has duplicates")
    for a in A:
        if a < 0 or a % 2:
            raise ValueError(f"vertex {a} is not a non-negative even integer")
    return tuple(sorted(A))


def _arcs_by_pairs(A: tuple[int, ...], O: OddSet) -> list[tuple[int, int]]:
    return [(a, b) for a, b in combinations(A, 2) if (a + b) // 2 in O and (b - a) // 2 in O]


def _arcs_by_odds(A: tuple[int, ...], O: OddSet) -> list[tuple[int, int]]:
    # a = s - d, b = s + d for half-sum s >= half-difference d, both in O
    members = set(A)
    odds = O.elements
    arcs = []
    for i, s in enumerate(odds):
        for d in odds[: i + 1]:
            a, b = s - d, s + d
            if a in members and b in members:
                arcs.append((a, b))
    arcs.sort()
    return arcs


@dataclass(frozen=True)
class OrientedOddEvenGraph:
    A: tuple
    O: OddSet
    arcs: tuple = field(default=())

    @property
    def vertices(self) -> tuple:
        return self.A

    def edge_set(self) -> set[frozenset]:
        return {frozenset(a) for a in self.arcs}

    def neighbors(self) -> dict[int, set[int]]:
        nb = {v: set() for v in self.A}
        for a, b in self.arcs:
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def underlying(self):
        """Underlying undirected graph as a ``networkx.Graph``."""
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.A)
        g.add_edges_from(self.arcs)
        return g

    def to_dot(self, name: str = "G") -> str:
        V1, V2 = partite_split(self.A)
        lines = [f"digraph {name} {{", "  // V1: 0 mod 4, V2: 2 mod 4"]
        lines.append("  { rank=same; " + " ".join(f"{v};" for v in V1) + " }")
        lines.append("  { rank=same; " + " ".join(f"{v};" for v in V2) + " }")
        for a, b in self.arcs:
            lines.append(f"  {a} -> {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_oriented_odd_even(A: Iterable[int], O: OddSet | Iterable[int]) -> OrientedOddEvenGraph:
    A = _check_even_set(A)
    if not isinstance(O, OddSet):
        O = OddSet.of(O)
    cap = 2 * A[-1] if A else 0
    Ocut = O.upto(cap)
    if len(Ocut) ** 2 < len(A) ** 2:
        arcs = _arcs_by_odds(A, Ocut)
    else:
        arcs = _arcs_by_pairs(A, O)
    return OrientedOddEvenGraph(A, O, tuple(arcs))


def partite_split(A: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    A = sorted(A)
    return tuple(v for v in A if v % 4 == 0), tuple(v for v in A if v % 4 == 2)


def relevant_odd_set(A: Iterable[int], O: OddSet | Iterable[int]) -> OddSet:
    """Members of ``O`` that occur as a half-sum or half-difference of two vertices."""
    A = _check_even_set(A)
    if not isinstance(O, OddSet):
        O = OddSet.of(O)
    cand = set()
    for a, b in combinations(A, 2):
        cand.add((a + b) // 2)
        cand.add((b - a) // 2)
    return OddSet(tuple(x for x in O if x in cand))


def is_connected_underlying(G: OrientedOddEvenGraph) -> bool:
    if not G.A:
        raise ValueError("empty vertex set")
    uf = UnionFind(G.A)
    for a, b in G.arcs:
        uf.union(a, b)
    return uf.components == 1


def check_con1(A: Iterable[int], O: OddSet | Iterable[int]) -> dict:
    """Test 'connected implies |O_rel| > sqrt(2|A|)' on one instance."""
    A = _check_even_set(A)
    if len(A) < 2:
        raise ValueError("need |A| >= 2")
    G = build_oriented_odd_even(A, O)
    connected = is_connected_underlying(G)
    k = len(relevant_odd_set(A, G.O))
    # compare k**2 > 2|A| in integers to avoid sqrt rounding
    bound_holds = k * k > 2 * len(A)
    return {
        "A_size": len(A),
        "O_rel_size": k,
        "sqrt_2A": math.sqrt(2 * len(A)),
        "connected": connected,
        "bound_holds": bound_holds,
        "zero_in_A": 0 in A,
        "theorem_violated": connected and not bound_holds,
    }


def con2_vertex_set(m: int) -> tuple[int, ...]:
    return tuple(range(0, 2 * m, 2))


def con2_candidate_odds(m: int) -> tuple[int, ...]:
    A = con2_vertex_set(m)
    return relevant_odd_set(A, range(1, max(2, 2 * A[-1]), 2)).elements if m > 1 else ()


def check_con2(m: int, O: OddSet | Iterable[int]) -> dict:
    """Test '|O_rel| > 3|A|/4 implies connected' for ``A = {0, 2, ..., 2(m-1)}``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    A = con2_vertex_set(m)
    G = build_oriented_odd_even(A, O)
    k = len(relevant_odd_set(A, G.O))
    hypothesis = 4 * k > 3 * m
    connected = is_connected_underlying(G)
    return {
        "m": m,
        "O_rel_size": k,
        "hypothesis_holds": hypothesis,
        "connected": connected,
        "theorem_violated": hypothesis and not connected,
    }


def observed_unidirectional(G: OrientedOddEvenGraph) -> bool:
    up = sum(1 for a, _ in G.arcs if a % 4 == 0)
    return up == 0 or up == len(G.arcs)


def unidirectionality_scan(a: int, b: int, vertex_bound: int | None = None, k_start: int = 1) -> dict:
    """Compare observed unidirectionality of the truncated graph with ``4 | a``.

    The graph lives on ``{0, 2, ..., vertex_bound}``; the default bound
    ``10a + 4b`` leaves room for both witness arcs used when ``4`` does not
    divide ``a``. Half-sums never exceed ``vertex_bound`` so truncating the
    progression there loses no arcs.
    """
    if vertex_bound is None:
        vertex_bound = 10 * a + 4 * b
    if vertex_bound % 2:
        raise ValueError("vertex_bound must be even")
    O = arithmetic_odd_set(a, b, max(vertex_bound, b), k_start=k_start)
    G = build_oriented_odd_even(range(0, vertex_bound + 1, 2), O)
    observed = observed_unidirectional(G)
    predicted = a % 4 == 0
    return {
        "a": a,
        "b": b,
        "k_start": k_start,
        "vertex_bound": vertex_bound,
        "arcs": len(G.arcs),
        "arcs_V1_to_V2": sum(1 for u, _ in G.arcs if u % 4 == 0),
        "arcs_V2_to_V1": sum(1 for u, _ in G.arcs if u % 4 == 2),
        "observed_unidirectional": observed,
        "predicted": predicted,
        "agree": observed == predicted,
    }


def export_adjacency(G: OrientedOddEvenGraph, layout: str = "blocked") -> tuple[list[int], list[list[int]]]:
    """0-1 matrix with ascending order; ``blocked`` lists V1 before V2."""
    if layout == "blocked":
        V1, V2 = partite_split(G.A)
        order = list(V1) + list(V2)
    elif layout == "flat":
        order = list(G.A)
    else:
        raise ValueError(f"unknown layout {layout!r}")
    index = {v: i for i, v in enumerate(order)}
    M = [[0] * len(order) for _ in order]
    for a, b in G.arcs:
        M[index[a]][index[b]] = 1
    return order, M


def adjacency_csv(G: OrientedOddEvenGraph, layout: str = "blocked") -> str:
    order, M = export_adjacency(G, layout)
    buf = io.StringIO()
    buf.write("# rows: tail vertex, columns: head vertex, order: " + layout + "\n")
    buf.write("," + ",".join(map(str, order)) + "\n")
    for v, row in zip(order, M):
        buf.write(f"{v}," + ",".join(map(str, row)) + "\n")
    return buf.getvalue()
