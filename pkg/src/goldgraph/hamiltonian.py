"""Hamiltonian cycles and paths in the starred Goldbach graph.

The graph has vertices ``2, 4, ..., 2n`` and joins ``a < b`` when the
half-sum and half-difference both lie in the odd primes together with 1.
It is bipartite by residue mod 4, so cycles exist only for even ``n``.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass, field
from importlib import resources

from .goldbach import STARRED, build_goldbach


@dataclass
class HamiltonianResult:
    kind: str
    n: int
    sequence: list
    valid: bool
    search_stats: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return bool(self.sequence) and self.valid


def starred_graph(n: int) -> dict[int, set[int]]:
    return build_goldbach(n, STARRED).adj


def check_sequence(seq: list[int], n: int, closed: bool, adj: dict | None = None) -> tuple[bool, int | None, str]:
    """Validate a vertex sequence; returns ``(valid, first_bad_step, reason)``.

    ``first_bad_step`` is the index into ``seq`` where the problem is first
    seen. ``closed`` sequences may repeat the start vertex at the end.
    """
    adj = adj if adj is not None else starred_graph(n)
    body = list(seq)
    if closed and len(body) > 1 and body[0] == body[-1]:
        body = body[:-1]
    seen = set()
    for i, v in enumerate(body):
        if v not in adj:
            return False, i, f"vertex {v} not in the graph"
        if v in seen:
            return False, i, f"vertex {v} repeated"
        seen.add(v)
        if i and v not in adj[body[i - 1]]:
            return False, i, f"{body[i - 1]}-{v} is not an edge"
    if len(seen) != len(adj):
        missing = sorted(set(adj) - seen)
        return False, len(body), f"missing vertices {missing}"
    if closed and len(body) > 2 and body[0] not in adj[body[-1]]:
        return False, len(body), f"{body[-1]}-{body[0]} is not an edge"
    return True, None, "ok"


class _Search:
    """Depth-first extension of a path from a fixed start, bitmask based."""

    def __init__(self, adj: dict[int, set[int]], closed: bool, node_limit: int | None):
        self.verts = sorted(adj)
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.nbr = [0] * len(self.verts)
        for v, ws in adj.items():
            for w in ws:
                self.nbr[self.index[v]] |= 1 << self.index[w]
        self.N = len(self.verts)
        self.full = (1 << self.N) - 1
        self.closed = closed
        self.node_limit = node_limit
        self.nodes = 0

    def _connected(self, mask: int) -> bool:
        if not mask:
            return True
        low = mask & -mask
        seen = low
        frontier = low
        nbr = self.nbr
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= nbr[b.bit_length() - 1]
                f ^= b
            grow &= mask & ~seen
            seen |= grow
            frontier = grow
        return seen == mask

    def run(self, start: int) -> list[int] | None:
        self.start = start
        path = [start]
        if self._extend(path, self.full & ~(1 << start)):
            return [self.verts[i] for i in path]
        return None

    def _extend(self, path: list[int], free: int) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise TimeoutError
        end = path[-1]
        nbr = self.nbr
        if not free:
            return not self.closed or bool(nbr[end] >> self.start & 1)

        start_bit = (1 << self.start) if self.closed else 0
        live = free | (1 << end) | start_bit
        # every free vertex needs two usable neighbours (one if it may end an open path)
        need = 2 if self.closed else 1
        forced = []
        f = free
        while f:
            b = f & -f
            u = b.bit_length() - 1
            f ^= b
            d = (nbr[u] & live).bit_count()
            if d < need:
                return False
            if d == 2 and self.closed and nbr[u] >> end & 1:
                forced.append(u)
        # the end has one free side left (two when the path is just the start)
        if len(forced) > (2 if len(path) == 1 else 1):
            return False
        if not self._connected(free | (1 << end)):
            return False

        if forced:
            cands = forced
        else:
            cands = []
            f = nbr[end] & free
            while f:
                b = f & -f
                cands.append(b.bit_length() - 1)
                f ^= b
            cands.sort(key=lambda u: ((nbr[u] & free).bit_count(), u))
        for u in cands:
            path.append(u)
            if self._extend(path, free & ~(1 << u)):
                return True
            path.pop()
        return False


def _search(
    n: int, closed: bool, node_limit: int | None, seed: int = 0, restarts: int = 64, budget: int = 500
) -> tuple[list[int] | None, dict]:
    """Restarted depth-first search, then one complete run if restarts fail.

    The first attempt starts at a lowest-degree vertex; later attempts use
    seeded random starts with a node budget growing by half each time.
    Any single start is complete for cycles, so the final unbudgeted run
    (bounded only by ``node_limit``) settles existence.
    """
    adj = starred_graph(n)
    rng = random.Random(seed)
    t0 = time.perf_counter()
    nodes = 0
    attempts = 0
    probe = _Search(adj, closed, None)
    first = min(range(probe.N), key=lambda i: (probe.nbr[i].bit_count(), i))
    for attempt in range(restarts):
        start = first if attempt == 0 else rng.randrange(probe.N)
        cap = budget if node_limit is None else min(budget, max(node_limit - nodes, 0))
        if cap <= 0:
            break
        S = _Search(adj, closed, cap)
        attempts += 1
        try:
            seq = S.run(start)
        except TimeoutError:
            seq = None
        nodes += S.nodes
        if seq is not None:
            return seq, {"nodes": nodes, "attempts": attempts, "elapsed": time.perf_counter() - t0, "exhausted": False}
        if S.nodes <= cap and seq is None and closed:
            # this start was searched to completion without a cycle
            return None, {"nodes": nodes, "attempts": attempts, "elapsed": time.perf_counter() - t0, "exhausted": True}
        budget = budget * 3 // 2

    remaining = None if node_limit is None else node_limit - nodes
    exhausted = True
    seq = None
    if remaining is None or remaining > 0:
        S = _Search(adj, closed, remaining)
        attempts += 1
        try:
            seq = S.run(first)
        except TimeoutError:
            exhausted = False
        nodes += S.nodes
    else:
        exhausted = False
    stats = {"nodes": nodes, "attempts": attempts, "elapsed": time.perf_counter() - t0,
             "exhausted": seq is None and exhausted and closed}
    return seq, stats


def canonical_cycle(seq: list[int]) -> list[int]:
    """Rotate and orient a cycle to start at 4 and continue to its smaller neighbour."""
    if not seq:
        return []
    anchor = 4 if 4 in seq else min(seq)
    k = seq.index(anchor)
    rot = seq[k:] + seq[:k]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return rot


def hamiltonian_cycle(n: int, node_limit: int | None = None, seed: int = 0) -> HamiltonianResult:
    """Search for a Hamiltonian cycle of the starred graph on ``{2, ..., 2n}``.

    Pruning: every free vertex must keep two live neighbours, a neighbour
    of the path end with only two left is forced next, and the free part
    together with the end must stay connected. Neighbours are tried
    fewest-free-neighbours first.
    """
    if n % 2 or n < 4:
        raise ValueError("Hamiltonian cycles need an even n >= 4 (the graph is bipartite)")
    seq, stats = _search(n, True, node_limit, seed)
    seq = canonical_cycle(seq or [])
    valid = bool(seq) and check_sequence(seq, n, closed=True)[0]
    return HamiltonianResult("cycle", n, seq, valid, stats)


def hamiltonian_path(n: int, node_limit: int | None = None) -> HamiltonianResult:
    """Hamiltonian path on ``{2, ..., 2n}``.

    Odd ``n``: take a cycle for ``n + 1`` and delete ``2(n+1)``, starting
    the path right after the deleted vertex. Even ``n``: a cycle read as a
    path, falling back to a direct path search.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    if n % 2:
        cyc = hamiltonian_cycle(n + 1, node_limit)
        stats = dict(cyc.search_stats, via=f"cycle for n={n + 1}")
        if not cyc.found:
            return HamiltonianResult("path", n, [], False, stats)
        seq = cyc.sequence
        k = seq.index(2 * (n + 1))
        path = seq[k + 1 :] + seq[:k]
    else:
        cyc = hamiltonian_cycle(n, node_limit)
        stats = dict(cyc.search_stats, via="cycle")
        path = cyc.sequence
        if not cyc.found:
            path, stats = _search(n, False, node_limit)
            stats["via"] = "direct path search"
            path = path or []
    valid = bool(path) and check_sequence(path, n, closed=False)[0]
    return HamiltonianResult("path", n, path, valid, stats)


# --- bundled cycle table ---------------------------------------------------------

_ROW = re.compile(r"^n:\s*(\d+)\s*,\s*cycle:\s*([0-9,\s]+)$")


class AppendixParseError(ValueError):
    pass


def _data_text(name: str) -> str:
    return resources.files("goldgraph").joinpath("data", name).read_text()


def parse_appendix(text: str | None = None) -> list[tuple[int, list[int]]]:
    text = _data_text("appendix.txt") if text is None else text
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _ROW.match(line.strip())
        if not m:
            raise AppendixParseError(f"row {lineno}: cannot parse {line!r}")
        try:
            seq = [int(x) for x in m.group(2).split(",") if x.strip()]
        except ValueError as exc:
            raise AppendixParseError(f"row {lineno}: {exc}") from exc
        rows.append((int(m.group(1)), seq))
    return rows


def bundled_path_58() -> list[int]:
    return [int(x) for x in _data_text("path58.txt").strip().split(",")]


def validate_appendix(rows: list[tuple[int, list[int]]] | None = None) -> list[dict]:
    rows = parse_appendix() if rows is None else rows
    report = []
    for n, seq in rows:
        adj = starred_graph(n)
        closes = len(seq) > 1 and seq[0] == seq[-1]
        valid, bad, reason = check_sequence(seq, n, closed=True, adj=adj)
        if not closes:
            valid, reason = False, "sequence does not return to its start"
        body = seq[:-1] if closes else seq
        dupes = sorted({v for v in body if body.count(v) > 1})
        missing = sorted(set(adj) - set(body))
        report.append({
            "n": n,
            "valid": valid,
            "first_bad_step": bad,
            "reason": reason,
            "duplicates": dupes,
            "missing": missing,
        })
    return report
