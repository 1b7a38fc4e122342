import csv
import io
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from goldgraph.oddeven import (
    adjacency_csv,
    build_oriented_odd_even,
    check_con1,
    check_con2,
    con2_candidate_odds,
    export_adjacency,
    is_connected_underlying,
    partite_split,
    relevant_odd_set,
    unidirectionality_scan,
)
from goldgraph.primes import arithmetic_odd_set

even_sets = st.sets(st.integers(0, 200).map(lambda k: 2 * k), min_size=1, max_size=32)
odd_sets = st.sets(st.integers(0, 200).map(lambda k: 2 * k + 1), max_size=40)


def brute_arcs(A, O):
    O = set(O)
    return {(a, b) for a in A for b in A if b > a and (a + b) // 2 in O and (b - a) // 2 in O and (a + b) % 4 == 2}


def brute_connected(A, edges):
    A = list(A)
    seen = {A[0]}
    stack = [A[0]]
    while stack:
        v = stack.pop()
        for e in edges:
            if v in e:
                (w,) = set(e) - {v} or {v}
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(A)


def test_build_examples():
    assert build_oriented_odd_even([0, 6, 10], [3, 5]).arcs == ((0, 6), (0, 10))
    assert build_oriented_odd_even([0, 2], []).arcs == ()
    assert build_oriented_odd_even([4, 10], [7, 3]).arcs == ((4, 10),)


def test_build_rejects_odd_vertex():
    with pytest.raises(ValueError):
        build_oriented_odd_even([0, 3], [3])


@given(even_sets, odd_sets)
def test_build_matches_brute_force_and_invariants(A, O):
    G = build_oriented_odd_even(A, O)
    assert set(G.arcs) == brute_arcs(A, O)
    for a, b in G.arcs:
        assert b > a
        assert ((a + b) // 2) % 2 == 1 and ((b - a) // 2) % 2 == 1
        assert (a % 4 == 0) != (b % 4 == 0)


def test_partite_split_examples():
    assert partite_split([0, 2, 4, 6, 8]) == ((0, 4, 8), (2, 6))
    assert partite_split([12]) == ((12,), ())
    assert partite_split([2, 6, 10]) == ((), (2, 6, 10))


def test_relevant_odd_set_examples():
    assert relevant_odd_set([0, 2, 4], [1, 3, 5, 7]).elements == (1, 3)
    assert relevant_odd_set([0, 6], [3]).elements == (3,)
    assert relevant_odd_set([0, 6, 10], []).elements == ()


@given(even_sets, odd_sets)
def test_relevant_odd_set_preserves_edges(A, O):
    rel = relevant_odd_set(A, O)
    assert set(rel) <= set(O)
    assert build_oriented_odd_even(A, O).edge_set() == build_oriented_odd_even(A, rel).edge_set()


def test_connectivity_examples():
    assert is_connected_underlying(build_oriented_odd_even([0, 6], [3]))
    assert not is_connected_underlying(build_oriented_odd_even([0, 2], []))
    assert is_connected_underlying(build_oriented_odd_even([0], [5]))
    with pytest.raises(ValueError):
        is_connected_underlying(build_oriented_odd_even([], [3]))


@given(even_sets, odd_sets)
def test_connectivity_matches_networkx_and_brute(A, O):
    import networkx as nx

    G = build_oriented_odd_even(A, O)
    c = is_connected_underlying(G)
    assert c == nx.is_connected(G.underlying())
    assert c == brute_connected(sorted(A), G.edge_set())


def test_con1_zero_counterexample():
    r = check_con1([0, 6], [3])
    assert r["connected"] and r["O_rel_size"] == 1
    assert not r["bound_holds"] and r["zero_in_A"] and r["theorem_violated"]


def test_con1_two_vertex_boundary_without_zero():
    # frozen oracle outcome: k = 2 and 2 > sqrt(4) fails, so |A| = 2 breaks the bound even without 0
    r = check_con1([2, 8], [5, 3])
    assert r["connected"] and r["O_rel_size"] == 2
    assert not r["bound_holds"] and not r["zero_in_A"] and r["theorem_violated"]


def test_con1_zero_counterexample_with_three_vertices():
    # each edge at 0 spends a single odd value, so two odds connect three vertices
    r = check_con1([0, 14, 30], [7, 15])
    assert r["connected"] and r["O_rel_size"] == 2 and r["theorem_violated"]


def test_con1_disconnected_is_vacuous():
    r = check_con1([0, 2], [])
    assert not r["connected"] and not r["theorem_violated"]
    with pytest.raises(ValueError):
        check_con1([4], [3])


@given(
    st.sets(st.integers(1, 120).map(lambda k: 2 * k), min_size=3, max_size=64),
    st.sets(st.integers(0, 120).map(lambda k: 2 * k + 1), max_size=60),
)
def test_con1_holds_without_zero(A, O):
    assert not check_con1(A, O)["theorem_violated"]


def test_con2_examples():
    r = check_con2(8, range(1, 14, 2))
    assert r["O_rel_size"] == 7 and r["hypothesis_holds"] and r["connected"] and not r["theorem_violated"]
    r = check_con2(2, [])
    assert not r["hypothesis_holds"] and not r["theorem_violated"]
    r = check_con2(4, [1, 3, 5])
    assert r["O_rel_size"] == 3 and not r["hypothesis_holds"] and not r["theorem_violated"]


def test_con2_candidate_odds():
    assert con2_candidate_odds(4) == (1, 3, 5)
    assert con2_candidate_odds(1) == ()


def test_con2_exhaustive_small():
    for m in range(1, 8):
        cand = con2_candidate_odds(m)
        for r in range(len(cand) + 1):
            for O in combinations(cand, r):
                assert not check_con2(m, O)["theorem_violated"]


@pytest.mark.parametrize("a,b,expected", [(4, 1, True), (6, 1, False), (8, 3, True)])
def test_unidirectionality_examples(a, b, expected):
    r = unidirectionality_scan(a, b, 200)
    assert r["observed_unidirectional"] is expected
    assert r["predicted"] is expected and r["agree"]


def test_unidirectionality_witness_arc():
    O = arithmetic_odd_set(6, 1, 200)
    assert (6, 32) in build_oriented_odd_even(range(0, 201, 2), O).arcs


def test_unidirectionality_default_bound_reported():
    assert unidirectionality_scan(10, 3)["vertex_bound"] == 112


def test_unidirectionality_both_index_conventions_small():
    for a in range(2, 21, 2):
        for b in range(1, 12, 2):
            for k0 in (0, 1):
                assert unidirectionality_scan(a, b, k_start=k0)["agree"], (a, b, k0)


def test_finite_odd_set_breaks_unidirectionality_converse():
    # {3} alone is not a progression of period a with 4 | a, yet 0 -> 6 is its only arc
    G = build_oriented_odd_even(range(0, 41, 2), [3])
    assert G.arcs == ((0, 6),)


def test_export_examples():
    G = build_oriented_odd_even([0, 6, 10], [3, 5])
    order, M = export_adjacency(G, "blocked")
    assert order == [0, 6, 10]
    assert M[0] == [0, 1, 1] and M[1] == [0, 0, 0]
    _, Z = export_adjacency(build_oriented_odd_even([0, 2, 4], []), "flat")
    assert all(v == 0 for row in Z for v in row)
    with pytest.raises(ValueError):
        export_adjacency(G, "diagonal")


def test_export_blocks_for_progression_4_1():
    G = build_oriented_odd_even(range(0, 81, 2), arithmetic_odd_set(4, 1, 80))
    order, M = export_adjacency(G, "blocked")
    n1 = sum(1 for v in order if v % 4 == 0)
    assert any(M[i][j] for i in range(n1) for j in range(n1, len(order)))
    assert not any(M[i][j] for i in range(n1, len(order)) for j in range(len(order)))
    assert not any(M[i][j] for i in range(n1) for j in range(n1))


def test_adjacency_csv_parses():
    G = build_oriented_odd_even([0, 6, 10], [3, 5])
    lines = adjacency_csv(G, "flat").splitlines()
    assert lines[0].startswith("#")
    rows = list(csv.reader(io.StringIO("\n".join(lines[1:]))))
    assert rows[0] == ["", "0", "6", "10"]
    assert rows[1] == ["0", "0", "1", "1"]


def test_dot_export():
    dot = build_oriented_odd_even([0, 6], [3]).to_dot()
    assert "0 -> 6" in dot
