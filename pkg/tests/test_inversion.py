import pytest

from homcount.canonical import canonical_key, enumerate_graphs
from homcount.errors import SizeLimitError
from homcount.graphs import (
    Graph,
    complete_graph,
    delete_nonloop_edge,
    disjoint_union,
    path_graph,
    reflexive_clique,
)
from homcount.inversion import (
    CoeffVector,
    dsub_count,
    dsub_downset,
    dsub_inverse_column,
    ind_count,
    verify_expansions,
    vesurj_via_inversion,
    vsurj_via_inversion,
)

from .oracles import (
    naive_classes,
    naive_deletion_pairs,
    naive_dsub,
    naive_ind,
    naive_inverse_column,
    naive_isomorphic,
)


def as_class_map(column):
    return {key: coeff for key, _, coeff in column.items()}


def test_coeffvector_aggregates_by_class():
    p3 = path_graph(3)
    p3_flipped = Graph(3, edges=frozenset({(0, 1), (0, 2)}))
    vec = CoeffVector.from_pairs([(p3, 2), (p3_flipped, 3), (Graph(1), -1)])
    assert len(vec) == 2
    assert vec.coeff(canonical_key(p3)) == 5
    assert vec.coeff(canonical_key(Graph(1))) == -1
    assert vec.coeff(canonical_key(Graph(0))) == 0


def test_coeffvector_drops_zeros_and_orders_items():
    vec = CoeffVector.from_pairs([(Graph(1), 1), (Graph(1), -1), (Graph(2), 7)])
    assert len(vec) == 1
    assert canonical_key(Graph(1)) not in vec
    items = CoeffVector.from_pairs([(complete_graph(2), 1), (Graph(0), 4)]).items()
    assert [coeff for _, _, coeff in items] == [4, 1]
    keys = [key for key, _, _ in items]
    assert keys == sorted(keys)


def test_ind_counts_known_values(named):
    assert ind_count(named["k1"], named["k3"]) == 3
    assert ind_count(named["k2"], named["k3"]) == 3
    assert ind_count(named["p3"], named["k3"]) == 0
    assert ind_count(named["k2"], named["p3"]) == 2
    assert ind_count(named["two_k1"], named["p3"]) == 1
    assert ind_count(named["empty"], named["p3"]) == 1
    assert ind_count(named["k3"], named["k2"]) == 0


def test_ind_matches_naive_on_class_pairs():
    classes = [rep for _, rep in enumerate_graphs(3)]
    for f in classes:
        for h in classes:
            assert ind_count(f, h) == naive_ind(f, h), (f, h)


def test_dsub_matches_naive_on_class_pairs():
    classes = [rep for _, rep in enumerate_graphs(3)]
    for f in classes:
        for h in classes:
            assert dsub_count(f, h) == naive_dsub(f, h), (f, h)


def test_dsub_downset_of_single_edge():
    got = {key: mult for key, _, mult in dsub_downset(complete_graph(2))}
    want = {
        canonical_key(Graph(0)): 1,
        canonical_key(Graph(1)): 2,
        canonical_key(Graph(2)): 1,
        canonical_key(complete_graph(2)): 1,
    }
    assert got == want


def test_dsub_downset_matches_naive_classes(named):
    for h in (named["p3"], named["r2"], named["k3"]):
        got = {key: mult for key, _, mult in dsub_downset(h)}
        want = {
            canonical_key(rep): count
            for rep, count in naive_classes(naive_deletion_pairs(h))
        }
        assert got == want


def test_dsub_keeps_loops_on_surviving_vertices():
    r2 = reflexive_clique(2)
    l1 = Graph(1, loops=frozenset({0}))
    assert dsub_count(l1, r2) == 2
    assert dsub_count(Graph(1), r2) == 0
    assert dsub_count(Graph(2, loops=frozenset({0, 1})), r2) == 1


def test_inverse_column_frozen_values(named):
    empty_key = canonical_key(Graph(0))
    col_k1 = as_class_map(dsub_inverse_column(named["k1"]))
    assert col_k1 == {canonical_key(named["k1"]): 1, empty_key: -1}

    col_l1 = as_class_map(dsub_inverse_column(named["l1"]))
    assert col_l1 == {canonical_key(named["l1"]): 1, empty_key: -1}

    col_k2 = as_class_map(dsub_inverse_column(named["k2"]))
    assert col_k2 == {
        canonical_key(named["k2"]): 1,
        canonical_key(named["two_k1"]): -1,
    }

    col_k3 = as_class_map(dsub_inverse_column(named["k3"]))
    assert col_k3 == {
        canonical_key(named["k3"]): 1,
        canonical_key(named["p3"]): -3,
        canonical_key(disjoint_union(named["k2"], named["k1"])): 3,
        canonical_key(Graph(3)): -1,
    }

    col_r3 = as_class_map(dsub_inverse_column(named["r3"]))
    ref_p3 = Graph(3, loops=frozenset({0, 1, 2}), edges=frozenset({(0, 1), (1, 2)}))
    assert col_r3 == {
        canonical_key(named["r3"]): 1,
        canonical_key(ref_p3): -3,
        canonical_key(disjoint_union(named["r2"], named["l1"])): 3,
        canonical_key(Graph(3, loops=frozenset({0, 1, 2}))): -1,
    }


def test_inverse_column_matches_naive_solver(named):
    for h in (named["k1"], named["l1"], named["k2"], named["r2"], named["p3"],
              named["star3"]):
        got = dsub_inverse_column(h)
        want = naive_inverse_column(h)
        assert len(got) == len(want)
        for rep, coeff in want:
            assert coeff.denominator == 1
            assert got.coeff(canonical_key(rep)) == coeff


def test_inverse_column_inverts_dsub():
    for _, h in enumerate_graphs(3):
        column = dsub_inverse_column(h)
        for f_key, f_rep, _ in dsub_downset(h):
            total = sum(
                coeff * dsub_count(f_rep, rep) for _, rep, coeff in column.items()
            )
            assert total == (1 if f_key == canonical_key(h) else 0), (f_rep, h)


def test_inverse_column_is_unit_upper_triangular():
    for _, h in enumerate_graphs(3):
        column = dsub_inverse_column(h)
        h_key = canonical_key(h)
        assert column.coeff(h_key) == 1
        for key, _, _ in column.items():
            assert key <= h_key
            assert key.size <= h_key.size


def test_edge_deletion_coefficient_is_negated_count():
    for _, h in enumerate_graphs(3):
        column = dsub_inverse_column(h)
        for e in sorted(h.edges):
            reduced = delete_nonloop_edge(h, e)
            assert column.coeff(canonical_key(reduced)) == -dsub_count(reduced, h), (
                h,
                e,
            )


def test_downset_guardrail():
    with pytest.raises(SizeLimitError):
        dsub_downset(complete_graph(7))


def test_via_inversion_matches_direct(named):
    from homcount.counting import vesurj_count, vsurj_count

    pairs = [
        (named["p3"], named["k2"]),
        (named["p4"], named["star3"]),
        (named["k3"], named["k3"]),
        (named["c5"], named["k3"]),
        (named["k2"], named["r2"]),
        (named["empty"], named["empty"]),
    ]
    for g, h in pairs:
        assert vsurj_via_inversion(g, h) == vsurj_count(g, h), (g, h)
        assert vesurj_via_inversion(g, h) == vesurj_count(g, h), (g, h)


def test_verify_expansions_small_sweep():
    report = verify_expansions(2)
    assert report["violations"] == []
    assert report["classes"] == 9
    assert report["pairs"] == 81
    assert report["checks"] == 4 * 81
