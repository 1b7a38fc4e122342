"""Represent an oriented bipartite graph as an oriented odd-even graph.

Vertex ``b_i`` is sent to ``10**(i+2) + 1 + (-1)**(i+1)``, with X taking
the even indices and Y the odd ones. Every arc contributes its half-sum
and half-difference to the odd set. Python ints keep the values exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import Sdbg, is_oriented
from .oddeven import OrientedOddEvenGraph, build_oriented_odd_even
from .primes import OddSet


def f_value(i: int) -> int:
    return 10 ** (i + 2) + 1 + (-1) ** (i + 1)


@dataclass(frozen=True)
class EmbeddingResult:
    f: dict
    A: tuple
    O: OddSet
    orientation_preserved: bool

    def to_dict(self, B: Sdbg) -> dict:
        doc = B.to_dict()
        doc["map"] = {str(v): str(self.f[v]) for v in B.vertices}
        doc["A"] = [str(a) for a in self.A]
        doc["O"] = [str(o) for o in self.O]
        doc["orientation_preserved"] = self.orientation_preserved
        return doc


def default_indexing(B: Sdbg) -> dict:
    idx = {x: 2 * k for k, x in enumerate(B.X)}
    idx.update({y: 2 * k + 1 for k, y in enumerate(B.Y)})
    return idx


def embed_oriented_bipartite(B: Sdbg, indexing: Sequence | dict | None = None) -> EmbeddingResult:
    """Build ``f``, ``A = f(V)`` and the odd set generated by the arcs of ``B``.

    ``indexing`` is either a vertex -> index mapping (X even, Y odd) or an
    ordering of X and Y separately interleaved; by default X and Y are
    indexed in their stored order.
    """
    if not is_oriented(B):
        raise ValueError("embedding needs an oriented bipartite graph")
    if indexing is None:
        idx = default_indexing(B)
    elif isinstance(indexing, dict):
        idx = dict(indexing)
    else:
        order = list(indexing)
        xs = [v for v in order if v in set(B.X)]
        ys = [v for v in order if v in set(B.Y)]
        idx = {x: 2 * k for k, x in enumerate(xs)}
        idx.update({y: 2 * k + 1 for k, y in enumerate(ys)})
    if set(idx) != set(B.vertices):
        raise ValueError("indexing must cover every vertex")
    if len(set(idx.values())) != len(idx):
        raise ValueError("indexing must be injective")
    if any(idx[x] % 2 for x in B.X) or any(idx[y] % 2 == 0 for y in B.Y):
        raise ValueError("X vertices need even indices and Y vertices odd ones")

    f = {v: f_value(i) for v, i in idx.items()}
    odds = set()
    for u, v in B.arcs:
        odds.add((f[u] + f[v]) // 2)
        odds.add(abs(f[v] - f[u]) // 2)
    preserved = all(f[u] < f[v] for u, v in B.arcs)
    return EmbeddingResult(f, tuple(sorted(f.values())), OddSet(tuple(odds)), preserved)


def verify_embedding(B: Sdbg, R: EmbeddingResult) -> dict:
    G: OrientedOddEvenGraph = build_oriented_odd_even(R.A, R.O)
    inv = {val: v for v, val in R.f.items()}
    image_edges = {frozenset((R.f[u], R.f[v])) for u, v in B.arcs}
    graph_edges = G.edge_set()

    def named(edges):
        pairs = (tuple(sorted((inv[a], inv[b]), key=str)) for a, b in map(tuple, edges))
        return sorted(pairs, key=str)

    spurious = named(graph_edges - image_edges)
    missing = named(image_edges - graph_edges)
    underlying = not spurious and not missing
    image_arcs = {(R.f[u], R.f[v]) for u, v in B.arcs}
    oriented = underlying and image_arcs == set(G.arcs)
    return {
        "underlying_isomorphic": underlying,
        "oriented_isomorphic": oriented,
        "spurious_edges": spurious,
        "missing_edges": missing,
    }
