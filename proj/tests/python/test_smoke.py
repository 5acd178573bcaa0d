"""Smoke tests for the python bindings."""

import pytest

import powerhg


def test_graph6_round_trip():
    g = powerhg.parse_graph6("C~")
    assert g.order == 4
    assert g.size == 6
    assert powerhg.write_graph6(g) == "C~"
    with pytest.raises(ValueError):
        powerhg.parse_graph6("A_garbage")


def test_invariants_with_certificates():
    w = powerhg.wedge_cycles(4, 3)
    gamma = powerhg.domination_number_graph(w)
    nu = powerhg.matching_number_graph(w)
    tau = powerhg.transversal_number_graph(w)
    assert (nu.value, tau.value) == (3, 3)
    assert len(gamma.witness) == gamma.value
    assert powerhg.oracle_transversal(w) == 3


def test_blow_up_shape():
    b = powerhg.blow_up(powerhg.wedge_cycles(3, 3), 3, 1)
    assert b.hypergraph.order == 11
    assert b.hypergraph.size == 6
    assert all(len(block) == 1 for block in b.vertex_blocks)
    text = powerhg.write_hypergraph_text(b.hypergraph, 3)
    parsed, k = powerhg.parse_hypergraph_text(text)
    assert k == 3
    assert parsed.order == 11


def test_enumeration_counts():
    assert len(powerhg.enumerate_connected_graphs(5)) == 21
    bip = powerhg.enumerate_connected_graphs(5, lambda g: powerhg.is_bipartite(g) is not None)
    assert 0 < len(bip) < 21


def test_catalog_and_families():
    catalog = powerhg.load_default_catalog()
    assert len(catalog) == 9
    assert [e.label for e in catalog] == list("abcdefghi")
    assert powerhg.is_in_g_ge2(powerhg.cycle(5), catalog)
    assert not powerhg.is_in_g1(powerhg.complete_bipartite(2, 3), catalog).member
    assert powerhg.satisfies_lemma6(powerhg.complete_bipartite(2, 3))


def test_audit_thm3_refutation():
    catalog = powerhg.load_default_catalog()
    record = powerhg.audit_graph(powerhg.complete_bipartite(2, 3), 4, 2, catalog=catalog)
    assert record.hyper_gamma.value == 2
    assert record.hyper_nu.value == 2
    assert record.thm3 == "REFUTED_EQUALITY_WITHOUT_MEMBERSHIP"
    assert record.prop2.passed()
    assert record.corrected_ok
    assert '"schema":"powerhg-audit/1"' in record.to_jsonl()


def test_hunt_and_verify():
    catalog = powerhg.load_default_catalog()
    corpus = [g for n in (2, 3, 4) for g in powerhg.enumerate_connected_graphs(n)]
    summary = powerhg.verify_proposition2(corpus, [(3, 1), (4, 2)], catalog=catalog)
    assert summary["ok"]
    assert summary["instances"] == 2 * len(corpus)
    hits = powerhg.hunt_counterexamples(corpus, [(3, 1)], catalog=catalog)
    assert any(r.thm2 == "REFUTED_EQUALITY_WITHOUT_MEMBERSHIP" for r in hits)
