import os
import random
import sys
from itertools import product

import hypothesis
import pytest
from hypothesis import strategies as st

from goldgraph.digraph import Sdbg, build_D_S

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def trial_division(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def make_bitournament(nx: int, ny: int, bits) -> Sdbg:
    X = [f"x{i}" for i in range(nx)]
    Y = [f"y{j}" for j in range(ny)]
    arcs = []
    for k, (x, y) in enumerate(product(X, Y)):
        arcs.append((x, y) if bits[k] else (y, x))
    return Sdbg(X, Y, arcs)


def random_bitournament(rng: random.Random, max_vertices: int = 12) -> Sdbg:
    total = rng.randint(2, max_vertices)
    nx = rng.randint(1, total - 1)
    ny = total - nx
    if rng.random() < 0.5:
        # relabelled parity digraph: always acyclic
        S = rng.sample(range(1, 4 * total), total)
        evens = [v for v in S if v % 2 == 0]
        odds = [v for v in S if v % 2 == 1]
        if evens and odds:
            D, _ = build_D_S(S)
            names = {v: f"v{v}" for v in S}
            X = [names[v] for v in D.X]
            Y = [names[v] for v in D.Y]
            rng.shuffle(X)
            rng.shuffle(Y)
            return Sdbg(X, Y, [(names[u], names[v]) for u, v in D.arcs])
    bits = [rng.random() < 0.5 for _ in range(nx * ny)]
    return make_bitournament(nx, ny, bits)


def random_oriented_bipartite(rng: random.Random, max_vertices: int = 10) -> Sdbg:
    total = rng.randint(2, max_vertices)
    nx = rng.randint(1, total - 1)
    X = [f"x{i}" for i in range(nx)]
    Y = [f"y{j}" for j in range(total - nx)]
    arcs = []
    for x in X:
        for y in Y:
            r = rng.random()
            if r < 1 / 3:
                arcs.append((x, y))
            elif r < 2 / 3:
                arcs.append((y, x))
    return Sdbg(X, Y, arcs)


@st.composite
def bitournaments(draw, max_side: int = 5):
    nx = draw(st.integers(1, max_side))
    ny = draw(st.integers(1, max_side))
    bits = draw(st.lists(st.booleans(), min_size=nx * ny, max_size=nx * ny))
    return make_bitournament(nx, ny, bits)


@st.composite
def oriented_trees(draw, max_vertices: int = 64):
    n = draw(st.integers(2, max_vertices))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    color = [0] * n
    for i, p in enumerate(parents, start=1):
        color[i] = 1 - color[p]
    mode = draw(st.sampled_from(["random", "source-sink"]))
    flip = [draw(st.booleans()) for _ in range(n)] if mode == "source-sink" else None
    arcs = []
    for i, p in enumerate(parents, start=1):
        if mode == "random":
            forward = draw(st.booleans())
        else:
            # each vertex of one colour class is a source or all are sinks, per flip of the root
            forward = (color[p] == 0) != flip[0]
        arcs.append((f"v{p}", f"v{i}") if forward else (f"v{i}", f"v{p}"))
    X = [f"v{i}" for i in range(n) if color[i] == 0]
    Y = [f"v{i}" for i in range(n) if color[i] == 1]
    return Sdbg(X, Y, arcs)


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
