import json
from itertools import combinations

import numpy as np
import pytest

from aldous.graphs import (
    WeightedGraph,
    complete_graph,
    complete_on_first,
    cycle_graph,
    graph_family,
    matching_graph,
    quasi_complete_graph,
    quasi_complete_weights,
    random_graph,
    star_graph,
    weighted_star_graph,
)
from aldous.order import (
    LedgerConflict,
    RelationLedger,
    check_invariant_vector_bound,
    check_matching_bound,
    check_onestar_bound,
    check_pair,
    check_reducing,
    check_weightedstar_bound,
    export_dot,
    is_h_irreducible,
    max_matching_size,
    recheck_witness,
    scan,
    seed_known,
    star_decompose,
    witness_graph,
)
from aldous.partitions import Partition, content_sum, partitions_of


def test_graph_families():
    star = star_graph(4, 4)
    assert star.edges() == [(1, 4, 1.0), (2, 4, 1.0), (3, 4, 1.0)]
    m = matching_graph(8, 4)
    assert len(m.edges()) == 4
    assert max_matching_size(m) == 4
    qc = quasi_complete_graph(4, [2.0, 0.0, 1.0])
    expected = 2.0 * star_graph(4, 2).weights + 1.0 * star_graph(4, 4).weights
    assert np.array_equal(qc.weights, expected)
    assert cycle_graph(5).wt == 5.0
    assert complete_on_first(6, 3).wt == 3.0
    with pytest.raises(ValueError):
        star_graph(4, 1)
    with pytest.raises(ValueError):
        matching_graph(4, 3)
    with pytest.raises(ValueError):
        graph_family("nope", 4)


def test_graph_validation_and_json():
    with pytest.raises(ValueError):
        WeightedGraph(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        WeightedGraph(np.array([[1.0, 0.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        WeightedGraph.from_edges(3, [(1, 2, -1.0)])
    g = random_graph(5, 13)
    assert WeightedGraph.from_json(g.to_json()) == g


def test_quasi_complete_detection():
    assert quasi_complete_weights(star_graph(5, 3)) is not None
    assert quasi_complete_weights(complete_graph(4)) == [1, 1, 1]
    assert quasi_complete_weights(cycle_graph(5)) is None
    assert quasi_complete_weights(matching_graph(6, 2)) is None


def test_check_pair_star_counterexample():
    ref = check_pair(Partition([2, 2]), Partition([2, 1, 1]), star_graph(4, 4))
    assert ref is not None and ref.exact
    assert ref.margin == 1.0
    assert check_pair(Partition([2, 1, 1]), Partition([2, 2]), star_graph(4, 4)) is None


def test_check_pair_cycle_counterexample():
    ref = check_pair(Partition([4, 2]), Partition([3, 3]), cycle_graph(6))
    assert ref is not None and not ref.exact
    assert ref.margin > 1e-6


def test_check_pair_trivial_rep_never_refuted():
    for tau in partitions_of(4):
        if tau == Partition([4]):
            continue
        assert check_pair(Partition([4]), tau, star_graph(4, 4)) is None
        assert check_pair(Partition([4]), tau, random_graph(4, 3)) is None


def test_seed_known_n4_decides_everything():
    ledger = seed_known(4)
    assert not ledger.unknown_pairs()
    assert len(ledger.proved_pairs()) == 9
    assert len(ledger.refuted_pairs()) == 11
    two_two, one_col = Partition([2, 2]), Partition([2, 1, 1])
    assert ledger.status(two_two, one_col) == "refuted"
    assert ledger.status(one_col, two_two) == "refuted"
    assert ledger.entry(two_two, one_col).tag == "cor:asympval"
    assert ledger.entry(two_two, one_col).margin == 1.0


def test_seed_known_entries():
    ledger = seed_known(5)
    top, bottom = Partition([5]), Partition([1] * 5)
    assert ledger.entry(top, bottom).tag == "cor:n1n"
    assert ledger.status(Partition([4, 1]), Partition([3, 2])) == "proved"
    entry = ledger.entry(Partition([3, 1, 1]), Partition([3, 2]))
    # dominance-comparable: refuted through the complete graph; the content
    # sums are 0 and 2 so the margin is exactly 2
    assert entry.status == "refuted" and entry.tag == "ds81"
    assert entry.margin == 2.0
    assert content_sum(Partition([3, 2])) == 2
    assert content_sum(Partition([3, 1, 1])) == 0


def test_seed_known_main_theorem_rows():
    ledger = seed_known(8)
    # k=1 applies at n=8: row class {[8],[7,1]}, column class {[1^8],[2,1^6]}
    assert ledger.entry(Partition([7, 1]), Partition([2] + [1] * 6)).tag in (
        "main", "clr", "cor:n1n", "bacher", "transitive",
    )
    assert ledger.status(Partition([7, 1]), Partition([2] + [1] * 6)) == "proved"


def test_seeded_witnesses_recheck():
    ledger = seed_known(5)
    for pair in ledger.refuted_pairs():
        margin = recheck_witness(ledger.entry(*pair))
        assert margin > 0


def test_ledger_conflict_detection():
    ledger = seed_known(4)
    with pytest.raises(LedgerConflict):
        ledger.set_proved(Partition([2, 2]), Partition([2, 1, 1]), "clr")
    with pytest.raises(LedgerConflict):
        ledger.set_refuted(
            Partition([4]), Partition([3, 1]),
            {"kind": "family", "family": "complete", "n": 4}, 1.0, True,
        )


def test_ledger_json_round_trip():
    ledger, _ = scan(4, budget=5, seed=1)
    text = ledger.to_json()
    back = RelationLedger.from_json(text)
    assert back.to_json() == text
    data = json.loads(text)
    assert data["n"] == 4
    assert len(data["entries"]) == 20


def test_scan_consistency_small():
    for n in (4, 5):
        ledger, report = scan(n, budget=25, seed=42)
        assert report.consistent
        for pair in ledger.refuted_pairs():
            assert recheck_witness(ledger.entry(*pair)) > 0


def test_scan_deterministic():
    first, _ = scan(5, budget=10, seed=7)
    second, _ = scan(5, budget=10, seed=7)
    assert first.to_json() == second.to_json()


def test_scan_workers_merge_identically():
    serial, _ = scan(5, budget=10, seed=3, workers=1)
    parallel, _ = scan(5, budget=10, seed=3, workers=4)
    assert serial.to_json() == parallel.to_json()


def test_incomparable_two_column_chain():
    for n in (6, 8, 9):
        chain = [Partition([2] * i + [1] * (n - 2 * i)) for i in range(1, n // 2 + 1)]
        star = star_graph(n, n)
        for i, j in combinations(range(len(chain)), 2):
            taller = chain[j]  # more rows of two boxes
            shorter = chain[i]
            ref = check_pair(taller, shorter, star)
            assert ref is not None and ref.exact
            assert ref.margin == float(j - i)
            assert content_sum(taller) > content_sum(shorter)


def test_check_matching_bound():
    assert check_matching_bound(Partition([7, 1]), 1, trials=4, seed=2).ok
    assert check_matching_bound(Partition([8]), 1).ok
    report = check_matching_bound(Partition([10, 2]), 2, trials=2, seed=3)
    assert report.ok and report.bound == 4
    with pytest.raises(ValueError):
        check_matching_bound(Partition([5, 3]), 1)  # not in the k=1 row class
    with pytest.raises(ValueError):
        check_matching_bound(Partition([5, 1, 1]), 2)  # n=7 < 4k=8


def test_check_onestar_bound():
    # lambda_max([n-1,1], star with l edges) = l + 1, tight
    for n in (6, 9):
        for l in range(1, n):
            report = check_onestar_bound(Partition([n - 1, 1]), 1, l)
            assert report.ok and report.worst == l + 1
    assert check_onestar_bound(Partition([12]), 0, 5).worst == 0
    report = check_onestar_bound(Partition([10, 1, 1]), 2, 3)
    assert report.ok and report.worst <= 5


def test_check_weightedstar_bound():
    # unit weights, k=1: bound n, star eigenvalue n-1+1 = n, tight
    n = 6
    report = check_weightedstar_bound(Partition([5, 1]), 1, [1.0] * 5)
    assert report.ok and abs(report.bound - 6.0) < 1e-12
    assert abs(report.worst - 6.0) < 1e-9
    assert check_weightedstar_bound(Partition([6]), 1, [1.0] * 5).ok
    rng = np.random.default_rng(8)
    for _ in range(5):
        a = sorted(rng.random(11), reverse=True)
        sigma = Partition([10, 1, 1])
        assert check_weightedstar_bound(sigma, 2, a).ok
    with pytest.raises(ValueError):
        check_weightedstar_bound(Partition([5, 1]), 1, [1.0, 2.0, 1.0, 1.0, 1.0])


def test_check_invariant_vector_bound():
    zero = WeightedGraph(np.zeros((6, 6)))
    assert check_invariant_vector_bound(Partition([5, 1]), 1, zero, [1]).ok
    rng = np.random.default_rng(9)
    for _ in range(5):
        g = random_graph(7, int(rng.integers(0, 1000)))
        vertices = [int(v) + 1 for v in rng.choice(7, size=2, replace=False)]
        assert check_invariant_vector_bound(Partition([5, 2]), 2, g, vertices).ok
    # classical gap bound at the minimum-degree vertex
    g = random_graph(6, 5)
    v = int(np.argmin(g.weights.sum(axis=1))) + 1
    assert check_invariant_vector_bound(Partition([5, 1]), 1, g, [v]).ok


def test_check_reducing():
    # the matching graph reduces row-class against column-class shapes
    h = matching_graph(8, 2)
    assert check_reducing(h, Partition([7, 1]), Partition([2] + [1] * 6))
    assert check_reducing(h, Partition([8]), Partition([1] * 8))
    zero = WeightedGraph(np.zeros((4, 4)))
    assert check_reducing(zero, Partition([2, 2]), Partition([2, 1, 1]))
    # K_4 on the incomparable pair: evaluates without error either way
    check_reducing(complete_graph(4), Partition([2, 2]), Partition([2, 1, 1]))


def test_matching_and_irreducibility():
    assert max_matching_size(matching_graph(8, 4)) == 4
    assert max_matching_size(complete_graph(5)) == 2
    assert max_matching_size(star_graph(6, 4)) == 1
    assert is_h_irreducible(complete_graph(5), 2)
    assert not is_h_irreducible(matching_graph(8, 4), 2)


def test_star_decompose_triangle():
    stars = star_decompose(complete_graph(3), 1)
    assert len(stars) == 2
    total = sum(s.weights for s in stars)
    assert np.array_equal(total, complete_graph(3).weights)


def test_star_decompose_star_input():
    stars = star_decompose(star_graph(5, 3), 1)
    assert 1 <= len(stars) <= 2
    total = sum(s.weights for s in stars)
    assert np.array_equal(total, star_graph(5, 3).weights)


def test_star_decompose_k5():
    stars = star_decompose(complete_graph(5), 2)
    assert len(stars) <= 6
    total = sum(s.weights for s in stars)
    assert np.array_equal(total, complete_graph(5).weights)


def test_star_decompose_random_irreducible():
    rng = np.random.default_rng(10)
    for k in (1, 2):
        for trial in range(20):
            n = int(rng.integers(5, 10))
            w = np.zeros((n, n))
            centers = rng.choice(n, size=int(rng.integers(1, 2 * k)), replace=False)
            for c in centers:
                for j in range(n):
                    if j != c and rng.random() < 0.6:
                        w[c, j] = w[j, c] = float(rng.random())
            graph = WeightedGraph(w)
            if not is_h_irreducible(graph, k):
                continue
            stars = star_decompose(graph, k)
            assert len(stars) <= 4 * k - 2
            if stars:
                total = sum(s.weights for s in stars)
                assert np.array_equal(total, graph.weights)


def test_star_decompose_rejects_reducible():
    with pytest.raises(ValueError):
        star_decompose(matching_graph(8, 2), 1)


def test_export_dot_structure_and_determinism():
    ledger = seed_known(4)
    dot = export_dot(ledger)
    assert dot == export_dot(seed_known(4))
    assert '"4" -> "3,1";' in dot
    assert '"3,1" -> "2,2";' in dot
    assert '"3,1" -> "2,1,1";' in dot
    assert '"2,2" -> "1,1,1,1";' in dot
    assert '"2,1,1" -> "1,1,1,1";' in dot
    # transitive reduction drops the direct top-to-bottom arrow
    assert '"4" -> "1,1,1,1";' not in dot
    assert "incomparable" in dot


def test_export_dot_empty_ledger():
    dot = export_dot(RelationLedger(4))
    assert "digraph" in dot and "->" not in dot.replace("rankdir", "")


def test_witness_graph_round_trip():
    star = {"kind": "family", "family": "star", "n": 5, "params": {"k": 4}}
    assert witness_graph(star) == star_graph(5, 4)
    raw = {"kind": "graph", "n": 3, "edges": [[1, 2, 0.5]]}
    assert witness_graph(raw) == WeightedGraph.from_edges(3, [(1, 2, 0.5)])
    quasi = {"kind": "quasi", "n": 3, "weights": ["1/2", "1/4"]}
    assert witness_graph(quasi) == quasi_complete_graph(3, [0.5, 0.25])


def test_remark2_even_split_consistency():
    rng = np.random.default_rng(12)
    from aldous.spectral import quasi_complete_spectrum

    for m in (2, 3, 4, 5, 6):
        n = 2 * m
        for _ in range(20):
            a = [float(x) for x in rng.random(n - 1)]
            wide = quasi_complete_spectrum(Partition([m + 1, m - 1]), a).lambda1
            even = quasi_complete_spectrum(Partition([m, m]), a).lambda1
            assert wide <= even + 1e-9


def test_scan_consistency_n7_small_budget():
    ledger, rep = scan(7, budget=15, seed=5)
    assert rep.consistent
    for pair in ledger.refuted_pairs():
        assert recheck_witness(ledger.entry(*pair)) > 0


def test_scan_never_promotes_to_proved():
    seeded = seed_known(5)
    scanned, _ = scan(5, budget=40, seed=9)
    assert set(scanned.proved_pairs()) == set(seeded.proved_pairs())


def test_weighted_star_bound_is_not_quasi_complete():
    g = weighted_star_graph(5, [4.0, 3.0, 2.0, 1.0])
    assert quasi_complete_weights(g) is None
