from itertools import combinations, permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bitournaments, make_bitournament, oriented_trees
from goldgraph.digraph import (
    Sdbg,
    adjacency_blocks,
    bitournament_matrix_form,
    build_D_S,
    from_blocks,
    has_couple,
    has_directed_4cycle,
    is_acyclic,
    is_bitournament,
    is_bitransitive,
    is_oriented,
    is_unidirectional,
    isomorphic_under,
    monotone_labeling,
    tree_alternating_equivalence,
)

X2, Y2 = ["x1", "x2"], ["y1", "y2"]
FOUR_CYCLE = Sdbg(X2, Y2, [("x1", "y1"), ("y1", "x2"), ("x2", "y2"), ("y2", "x1")])


def brute_has_cycle(D: Sdbg) -> bool:
    """Any simple directed cycle, by trying every vertex sequence."""
    V = D.vertices
    for k in range(2, len(V) + 1):
        for seq in permutations(V, k):
            if seq[0] != min(seq, key=str):
                continue
            if all((seq[i], seq[(i + 1) % k]) in D.arcs for i in range(k)):
                return True
    return False


def ferrers_by_inclusion(M) -> bool:
    rows = [frozenset(j for j, v in enumerate(r) if v) for r in M]
    return all(a <= b or b <= a for a, b in combinations(rows, 2))


def test_sdbg_validation():
    with pytest.raises(ValueError):
        Sdbg([], ["y"], [])
    with pytest.raises(ValueError):
        Sdbg(["a"], ["a"], [])
    with pytest.raises(ValueError):
        Sdbg(["x1", "x2"], ["y"], [("x1", "x2")])


def test_is_oriented_examples():
    assert is_oriented(Sdbg(["x1"], ["y1"], [("x1", "y1")]))
    assert not is_oriented(Sdbg(["x1"], ["y1"], [("x1", "y1"), ("y1", "x1")]))
    assert is_oriented(Sdbg(X2, ["y1"], [("x1", "y1"), ("y1", "x2")]))


def test_two_way_pair_is_not_oriented():
    X, Y = ["x1", "x2", "x3"], ["y1", "y2", "y3"]
    E = [("x1", "y1"), ("y1", "x1"), ("x1", "y2"), ("y1", "x2"), ("x2", "y3"), ("y3", "x3")]
    D = Sdbg(X, Y, E)
    assert not is_oriented(D)
    assert not adjacency_blocks(D).b_is_transpose()


def test_is_bitournament_examples():
    assert is_bitournament(Sdbg(["x1"], ["y1"], [("x1", "y1")]))
    assert not is_bitournament(Sdbg(["x1"], ["y1", "y2"], [("x1", "y1")]))
    D, _ = build_D_S({1, 2, 3})
    assert is_bitournament(D)


def test_is_bitransitive_examples():
    arcs = [("x1", "y1"), ("y1", "x2"), ("x2", "y2")]
    assert is_bitransitive(Sdbg(X2, Y2, arcs + [("x1", "y2")]))
    assert not is_bitransitive(Sdbg(X2, Y2, arcs))
    assert is_bitransitive(Sdbg(X2, Y2, []))
    with pytest.raises(ValueError):
        is_bitransitive(Sdbg(["x1"], ["y1"], [("x1", "y1"), ("y1", "x1")]))


def test_four_cycle_examples():
    assert has_directed_4cycle(FOUR_CYCLE)
    D, _ = build_D_S({1, 2, 3, 4})
    assert not has_directed_4cycle(D)
    assert not has_directed_4cycle(Sdbg(["x1"], ["y1"], [("x1", "y1")]))


def test_acyclic_examples():
    assert not is_acyclic(FOUR_CYCLE)
    D, _ = build_D_S({1, 2, 3, 4})
    assert is_acyclic(D)
    assert is_acyclic(Sdbg(["x1"], Y2, [("x1", "y1"), ("x1", "y2")]))


def test_acyclic_long_path_no_recursion_limit():
    n = 5000
    X = [f"x{i}" for i in range(n)]
    Y = [f"y{i}" for i in range(n)]
    arcs = [(X[i], Y[i]) for i in range(n)] + [(Y[i], X[i + 1]) for i in range(n - 1)]
    assert is_acyclic(Sdbg(X, Y, arcs))
    assert not is_acyclic(Sdbg(X, Y, arcs + [(Y[-1], X[0])]))


def test_has_couple_examples():
    assert has_couple([[1, 0], [0, 1]]) == ((0, 1), (0, 1))
    assert has_couple([[0, 1], [1, 0]]) == ((0, 1), (0, 1))
    assert has_couple([[1, 1], [1, 0]]) is None
    assert has_couple([[0, 0, 0], [0, 0, 0]]) is None


@given(st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), min_size=1, max_size=5))
def test_couple_free_iff_rows_nested(M):
    w = has_couple(M)
    assert (w is None) == ferrers_by_inclusion(M)
    if w is not None:
        (r1, r2), (c1, c2) = w
        sub = [[M[r1][c1], M[r1][c2]], [M[r2][c1], M[r2][c2]]]
        assert sub in ([[1, 0], [0, 1]], [[0, 1], [1, 0]])


def test_matrix_form_examples():
    D, _ = build_D_S({1, 2, 3, 4})
    assert bitournament_matrix_form(D)
    assert not bitournament_matrix_form(FOUR_CYCLE)
    assert bitournament_matrix_form(Sdbg(["x"], ["y"], [("y", "x")]))
    with pytest.raises(ValueError):
        bitournament_matrix_form(Sdbg(["x1"], Y2, [("x1", "y1")]))


def test_build_D_S_examples():
    D, L = build_D_S({1, 2, 3})
    assert D.arcs == {(1, 2), (2, 3)}
    D, L = build_D_S({1, 2, 3, 4})
    assert D.arcs == {(1, 2), (1, 4), (2, 3), (3, 4)}
    assert D.X == (2, 4) and D.Y == (1, 3)
    D, _ = build_D_S({2, 3})
    assert D.arcs == {(2, 3)}
    with pytest.raises(ValueError):
        build_D_S({2, 4})


def test_monotone_labeling_examples():
    D = Sdbg(X2, Y2, [("x1", "y1"), ("x1", "y2"), ("x2", "y1"), ("y2", "x2")])
    L = monotone_labeling(D)
    assert L is not None and L.check(D) and isomorphic_under(D, L)
    assert monotone_labeling(FOUR_CYCLE) is None
    single = Sdbg(["u"], ["v"], [("u", "v")])
    L = monotone_labeling(single)
    assert L.label["u"] < L.label["v"] and (L.label["u"] - L.label["v"]) % 2


def test_monotone_labeling_on_D_S_reproduces_order():
    D, _ = build_D_S({1, 2, 3, 4, 7, 10})
    L = monotone_labeling(D)
    assert isomorphic_under(D, L)


@given(bitournaments(max_side=4), st.randoms(use_true_random=False))
def test_monotone_labeling_order_independent(D, r):
    order = list(D.vertices)
    results = []
    for _ in range(4):
        r.shuffle(order)
        L = monotone_labeling(D, order)
        results.append(L is not None)
        if L is not None:
            assert isomorphic_under(D, L)
    assert len(set(results)) == 1
    assert results[0] == (not brute_has_cycle(D))


def test_is_unidirectional_examples():
    assert is_unidirectional(Sdbg(X2, Y2, [("x1", "y1"), ("x2", "y2")]))
    assert not is_unidirectional(Sdbg(X2, Y2, [("x1", "y1"), ("y2", "x2")]))
    assert is_unidirectional(Sdbg(X2, Y2, []))


def test_adjacency_blocks_transpose_rule():
    sym = Sdbg(["x"], ["y"], [("x", "y"), ("y", "x")])
    assert adjacency_blocks(sym).b_is_transpose()
    assert not adjacency_blocks(Sdbg(["x"], ["y"], [("x", "y")])).b_is_transpose()


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_blocks_round_trip(nx, ny, data):
    X = [f"x{i}" for i in range(nx)]
    Y = [f"y{i}" for i in range(ny)]
    arcs = [a for a in list(product(X, Y)) + list(product(Y, X)) if data.draw(st.booleans())]
    D = Sdbg(X, Y, arcs)
    B = adjacency_blocks(D)
    assert adjacency_blocks(from_blocks(B)) == B
    assert from_blocks(B) == D


def test_interchange_round_trip():
    D = Sdbg(["a", "b"], ["c"], [("a", "c"), ("c", "b")])
    assert Sdbg.from_json(D.to_json()) == D
    assert '"a" -> "c"' in D.to_dot()
    with pytest.raises(ValueError):
        Sdbg.from_dict({"X": ["a"]})


def test_tree_examples():
    in_star = Sdbg(["c"], ["u1", "u2"], [("u1", "c"), ("u2", "c")])
    assert tree_alternating_equivalence(in_star) == (True, True)
    path = Sdbg(["a", "c"], ["b"], [("a", "b"), ("b", "c")])
    assert tree_alternating_equivalence(path) == (False, False)
    assert tree_alternating_equivalence(Sdbg(["x"], ["y"], [("x", "y")])) == (True, True)


def test_tree_rejects_non_trees():
    with pytest.raises(ValueError):
        tree_alternating_equivalence(Sdbg(X2, Y2, [("x1", "y1")]))
    with pytest.raises(ValueError):
        tree_alternating_equivalence(Sdbg(X2, Y2, [("x1", "y1"), ("x2", "y1"), ("x1", "y2"), ("x2", "y2")]))


@given(oriented_trees())
def test_tree_observation(T):
    alt, deg = tree_alternating_equivalence(T)
    assert alt == deg


def test_five_way_exhaustive_small():
    for nx in range(1, 4):
        for ny in range(1, 4):
            for bits in product([0, 1], repeat=nx * ny):
                D = make_bitournament(nx, ny, bits)
                acyclic = not brute_has_cycle(D)
                assert is_bitransitive(D) == acyclic
                assert (not has_directed_4cycle(D)) == acyclic
                assert is_acyclic(D) == acyclic
                assert bitournament_matrix_form(D) == acyclic
                assert (monotone_labeling(D) is not None) == acyclic
