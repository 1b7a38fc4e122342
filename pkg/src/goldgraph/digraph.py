"""Simple directed bipartite graphs and bitournament predicates.

Vertex ids are opaque hashables (strings or ints). Partite membership is
stored explicitly; nothing is inferred from the ids.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

Vertex = Hashable


@dataclass(frozen=True)
class Sdbg:
    """Simple directed bipartite graph ``(X, Y, arcs)``."""

    X: tuple
    Y: tuple
    arcs: frozenset

    def __init__(self, X: Iterable, Y: Iterable, arcs: Iterable[Sequence] = ()):
        X, Y = tuple(X), tuple(Y)
        if not X or not Y:
            raise ValueError("both partite sets must be nonempty")
        if len(set(X)) != len(X) or len(set(Y)) != len(Y):
            raise ValueError("duplicate vertex in a partite set")
        xs, ys = set(X), set(Y)
        if xs & ys:
            raise ValueError(f"partite sets overlap: {sorted(map(str, xs & ys))}")
        arcset = set()
        for arc in arcs:
            u, v = arc
            if not ((u in xs and v in ys) or (u in ys and v in xs)):
                raise ValueError(f"arc {u!r}->{v!r} does not join X and Y")
            arcset.add((u, v))
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)
        object.__setattr__(self, "arcs", frozenset(arcset))

    @property
    def vertices(self) -> tuple:
        return self.X + self.Y

    def has_arc(self, u, v) -> bool:
        return (u, v) in self.arcs

    def successors(self) -> dict:
        out = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return out

    def predecessors(self) -> dict:
        inc = {v: set() for v in self.vertices}
        for u, v in self.arcs:
            inc[v].add(u)
        return inc

    def sorted_arcs(self) -> list:
        order = {v: i for i, v in enumerate(self.vertices)}
        return sorted(self.arcs, key=lambda a: (order[a[0]], order[a[1]]))

    def to_dict(self) -> dict:
        return {"X": list(self.X), "Y": list(self.Y), "arcs": [list(a) for a in self.sorted_arcs()]}

    @classmethod
    def from_dict(cls, doc: dict) -> "Sdbg":
        try:
            return cls(doc["X"], doc["Y"], [tuple(a) for a in doc["arcs"]])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Sdbg":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        lines.append('  subgraph cluster_X { label="X"; ' + " ".join(f'"{v}";' for v in self.X) + " }")
        lines.append('  subgraph cluster_Y { label="Y"; ' + " ".join(f'"{v}";' for v in self.Y) + " }")
        for u, v in self.sorted_arcs():
            lines.append(f'  "{u}" -> "{v}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AdjacencyBlocks:
    """The off-diagonal blocks of M(D): ``A`` is X by Y, ``B`` is Y by X."""

    X: tuple
    Y: tuple
    A: tuple
    B: tuple

    def b_is_transpose(self) -> bool:
        return all(self.B[j][i] == self.A[i][j] for i in range(len(self.X)) for j in range(len(self.Y)))


def adjacency_blocks(D: Sdbg) -> AdjacencyBlocks:
    A = tuple(tuple(int((x, y) in D.arcs) for y in D.Y) for x in D.X)
    B = tuple(tuple(int((y, x) in D.arcs) for x in D.X) for y in D.Y)
    return AdjacencyBlocks(D.X, D.Y, A, B)


def from_blocks(blocks: AdjacencyBlocks) -> Sdbg:
    arcs = []
    for i, x in enumerate(blocks.X):
        for j, y in enumerate(blocks.Y):
            if blocks.A[i][j]:
                arcs.append((x, y))
            if blocks.B[j][i]:
                arcs.append((y, x))
    return Sdbg(blocks.X, blocks.Y, arcs)


def is_oriented(D: Sdbg) -> bool:
    return not any((v, u) in D.arcs for u, v in D.arcs)


def is_bitournament(D: Sdbg) -> bool:
    for x in D.X:
        for y in D.Y:
            if ((x, y) in D.arcs) == ((y, x) in D.arcs):
                return False
    return True


def is_bitransitive(D: Sdbg) -> bool:
    """x1->y1->x2->y2 forces x1->y2, checked over every quadruple."""
    if not is_oriented(D):
        raise ValueError("bitransitivity is defined for oriented graphs only")
    E = D.arcs
    for x1 in D.X:
        for y1 in D.Y:
            if (x1, y1) not in E:
                continue
            for x2 in D.X:
                if (y1, x2) not in E:
                    continue
                for y2 in D.Y:
                    if (x2, y2) in E and (x1, y2) not in E:
                        return False
    return True


def has_directed_4cycle(D: Sdbg) -> bool:
    succ = D.successors()
    pred = D.predecessors()
    for x1 in D.X:
        for y1 in succ[x1]:
            for x2 in succ[y1]:
                if x2 == x1:
                    continue
                # need y2 with x2->y2->x1
                if succ[x2] & pred[x1]:
                    return True
    return False


def is_acyclic(D: Sdbg) -> bool:
    succ = D.successors()
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(succ, WHITE)
    for root in succ:
        if color[root] != WHITE:
            continue
        color[root] = GREY
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == GREY:
                    return False
                if color[w] == WHITE:
                    color[w] = GREY
                    stack.append((w, iter(succ[w])))
                    break
            else:
                color[v] = BLACK
                stack.pop()
    return True


def has_couple(M: Sequence[Sequence[int]]) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Return ``((r1, r2), (c1, c2))`` spanning a 2x2 permutation submatrix, or None.

    None means the rows are linearly ordered by inclusion of their 1-sets.
    """
    rows = [frozenset(j for j, v in enumerate(row) if v) for row in M]
    for r1, r2 in combinations(range(len(rows)), 2):
        only1 = rows[r1] - rows[r2]
        only2 = rows[r2] - rows[r1]
        if only1 and only2:
            c1, c2 = min(only1), min(only2)
            return (r1, r2), (min(c1, c2), max(c1, c2))
    return None


def bitournament_matrix_form(D: Sdbg) -> bool:
    """True iff block A is a Ferrers matrix and block B is the complement of A^T."""
    if not is_bitournament(D):
        raise ValueError("matrix form applies to bitournaments only")
    blocks = adjacency_blocks(D)
    for i in range(len(D.X)):
        for j in range(len(D.Y)):
            assert blocks.B[j][i] == 1 - blocks.A[i][j]
    return has_couple(blocks.A) is None


def is_unidirectional(D: Sdbg) -> bool:
    xs = set(D.X)
    forward = sum(1 for u, _ in D.arcs if u in xs)
    return forward == 0 or forward == len(D.arcs)


@dataclass(frozen=True)
class MonotoneLabeling:
    """Injective positive labels, increasing along every arc, parity split by side."""

    label: dict

    def image(self) -> list[int]:
        return sorted(self.label.values())

    def check(self, D: Sdbg) -> bool:
        L = self.label
        if set(L) != set(D.vertices) or len(set(L.values())) != len(L):
            return False
        if any(v < 1 for v in L.values()):
            return False
        if len({L[x] % 2 for x in D.X}) != 1 or len({L[y] % 2 for y in D.Y}) != 1:
            return False
        if L[D.X[0]] % 2 == L[D.Y[0]] % 2:
            return False
        return all(L[u] < L[v] for u, v in D.arcs)


def build_D_S(S: Iterable[int]) -> tuple[Sdbg, MonotoneLabeling]:
    """Parity digraph on ``S``: ``a -> b`` iff ``b > a`` and the parities differ."""
    S = sorted(set(S))
    if not S:
        raise ValueError("S must be nonempty")
    if any(s < 1 for s in S):
        raise ValueError("S must contain positive integers")
    X = [s for s in S if s % 2 == 0]
    Y = [s for s in S if s % 2 == 1]
    if not X or not Y:
        raise ValueError("S needs both an even and an odd element")
    arcs = [(a, b) for a in S for b in S if b > a and (a - b) % 2]
    D = Sdbg(X, Y, arcs)
    return D, MonotoneLabeling({s: s for s in S})


def _reach(succ: dict, start, allowed: set) -> set:
    seen = set()
    todo = [start]
    while todo:
        v = todo.pop()
        for w in succ[v]:
            if w in allowed and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def monotone_labeling(D: Sdbg, order: Sequence | None = None) -> MonotoneLabeling | None:
    """Label an acyclic bitournament so that ``D`` is isomorphic to ``D_S``.

    Vertices are inserted one at a time in ``order`` (default ``X`` then
    ``Y``). Before each insertion the side of the new vertex is made
    even-labelled (shifting every label by one if needed); the new vertex
    gets an even ``m`` above every current label, and every vertex it
    reaches is shifted up by ``m``. Returns None when a directed cycle
    blocks the construction.
    """
    if not is_bitournament(D):
        raise ValueError("monotone labeling requires a bitournament")
    order = list(order) if order is not None else list(D.vertices)
    if sorted(map(repr, order)) != sorted(map(repr, D.vertices)):
        raise ValueError("order must be a permutation of the vertices")
    xs = set(D.X)
    succ = D.successors()

    x0 = next(v for v in order if v in xs)
    y0 = next(v for v in order if v not in xs)
    label = {x0: 2, y0: 3 if (x0, y0) in D.arcs else 1}
    placed = {x0, y0}

    for v in order:
        if v in placed:
            continue
        side_parity = label[x0] % 2 if v in xs else label[y0] % 2
        if side_parity:
            for w in label:
                label[w] += 1
        m = max(label.values()) + 1
        m += m % 2
        placed.add(v)
        B = _reach(succ, v, placed)
        if v in B:
            return None
        label[v] = m
        for w in B:
            label[w] += m

    if label[x0] % 2:
        for w in label:
            label[w] += 1
    result = MonotoneLabeling(label)
    return result if result.check(D) else None


def isomorphic_under(D: Sdbg, L: MonotoneLabeling) -> bool:
    """Arc-by-arc check that ``L`` maps ``D`` onto ``D_S`` for ``S = image(L)``."""
    D_S, _ = build_D_S(L.image())
    if len(L.label) != len(set(L.label.values())):
        return False
    mapped = {(L.label[u], L.label[v]) for u, v in D.arcs}
    if mapped != set(D_S.arcs):
        return False
    x_labels = {L.label[x] for x in D.X}
    return x_labels == set(D_S.X) or x_labels == set(D_S.Y)


def _tree_adjacency(T: Sdbg) -> dict:
    adj = {v: [] for v in T.vertices}
    for u, v in T.arcs:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def tree_alternating_equivalence(T: Sdbg) -> tuple[bool, bool]:
    """(every vertex pair joined by an alternating path, every vertex a source or sink).

    The two values agree on every oriented tree.
    """
    if not is_oriented(T):
        raise ValueError("tree must be oriented")
    n = len(T.vertices)
    adj = _tree_adjacency(T)
    if len(T.arcs) != n - 1:
        raise ValueError("not a tree: wrong number of arcs")
    root = T.vertices[0]
    parent = {root: None}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if len(parent) != n:
        raise ValueError("not a tree: disconnected")

    def forward(u, v) -> bool:
        return (u, v) in T.arcs

    all_alt = True
    for src in T.vertices:
        # BFS from src carrying the direction of the last arc used on the tree path
        last = {src: None}
        queue = deque([src])
        while queue and all_alt:
            v = queue.popleft()
            for w in adj[v]:
                if w in last:
                    continue
                d = forward(v, w)
                if last[v] is not None and last[v] == d:
                    all_alt = False
                    break
                last[w] = d
                queue.append(w)
        if not all_alt:
            break

    succ, pred = T.successors(), T.predecessors()
    degree_ok = all(not succ[v] or not pred[v] for v in T.vertices)
    return all_alt, degree_ok
