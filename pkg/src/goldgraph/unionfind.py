from __future__ import annotations

from typing import Hashable, Iterable


class UnionFind:
    """Disjoint sets with path halving and union by size; tracks component count."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.size: dict = {}
        self.components = 0
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x in self.parent:
            return
        self.parent[x] = x
        self.size[x] = 1
        self.components += 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)
