import pytest

from c5t.blocks import (
    Crown,
    Invalid,
    K4Block,
    check_claim1,
    check_claim2,
    check_decomposition,
    classify_block,
    decompose_blocks,
    is_stripped,
    strip_nontriangle_edges,
)
from c5t.construct import bg_projective, named_graph
from c5t.detect import enumerate_triangles, find_c5, is_cycle_in
from c5t.errors import ContractViolation
from c5t.graph import Graph, Triangle, from_edge_list

from corpus import planted_corpus, random_corpus


def k4_plus_ear():
    return from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])


def test_strip_examples():
    assert strip_nontriangle_edges(named_graph("cycle", 4)).m == 0
    k3_pendant = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert strip_nontriangle_edges(k3_pendant).edges() == [(0, 1), (0, 2), (1, 2)]
    k4 = named_graph("complete", 4)
    assert strip_nontriangle_edges(k4) == k4


def test_strip_preserves_triangles():
    for _, g in random_corpus()[:60]:
        s = strip_nontriangle_edges(g)
        assert enumerate_triangles(s) == enumerate_triangles(g)
        assert is_stripped(s)


def test_two_disjoint_triangles():
    g = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    dec = decompose_blocks(g)
    assert [b.kind for b in dec.blocks] == [Crown((0, 1), (2,)), Crown((3, 4), (5,))]


def test_k4_is_one_k4_block():
    dec = decompose_blocks(named_graph("complete", 4))
    assert len(dec.blocks) == 1
    assert dec.blocks[0].kind == K4Block((0, 1, 2, 3))
    assert len(dec.blocks[0].triangles) == 4


def test_bg_fano_has_seven_crowns():
    g = bg_projective(2)
    dec = decompose_blocks(g)
    assert len(dec.blocks) == 7
    assert sum(len(b.triangles) for b in dec.blocks) == 21
    # lines are vertices 7..13, their copies 14..20
    for b in dec.blocks:
        assert isinstance(b.kind, Crown)
        line, copy = b.kind.base
        assert 7 <= line <= 13 and copy == line + 7
        assert len(b.kind.apexes) == 3


def test_classify_single_triangle_and_book():
    g = named_graph("complete", 3)
    assert classify_block([Triangle(0, 1, 2)], g) == Crown((0, 1), (2,))
    book = named_graph("book", 3)
    assert classify_block(enumerate_triangles(book), book) == Crown((0, 1), (2, 3, 4))


def test_classify_invalid_block_carries_local_witness():
    g = k4_plus_ear()
    tris = enumerate_triangles(g)
    kind = classify_block(tris, g)
    assert isinstance(kind, Invalid)
    assert kind.c5_witness == (0, 2, 3, 1, 4)
    assert kind.witness_in_block


def test_classify_invalid_on_c5_free_graph_is_contract_violation():
    # two triangles sharing only a vertex, presented as one block
    g = named_graph("friendship", 2)
    with pytest.raises(ContractViolation):
        classify_block(enumerate_triangles(g), g)


def test_k4_checked_before_crown():
    # a 2-triangle list on K4 has common edge 01 -> crown, the full 4 -> K4
    k4 = named_graph("complete", 4)
    assert classify_block([Triangle(0, 1, 2), Triangle(0, 1, 3)], k4) == Crown((0, 1), (2, 3))
    assert classify_block(enumerate_triangles(k4), k4) == K4Block((0, 1, 2, 3))


def test_claim1_examples():
    rep = check_claim1(named_graph("friendship", 2))
    assert rep.passed and rep.details["blocks"]["crown"] == 2
    rep = check_claim1(named_graph("complete", 4))
    assert rep.passed and rep.details["blocks"]["k4"] == 1
    rep = check_claim1(k4_plus_ear())
    assert not rep.passed and rep.precondition_failed
    assert is_cycle_in(k4_plus_ear(), rep.witness)


def test_claim2_examples():
    rep = check_claim2(named_graph("complete", 4))
    assert rep.passed and rep.details["c4_count"] == 3
    rep = check_claim2(strip_nontriangle_edges(named_graph("cycle", 4)))
    assert rep.passed and rep.details["c4_count"] == 0
    g = bg_projective(2)
    rep = check_claim2(g)
    assert rep.passed
    # every C4 is a_i - b - a_j - b' inside one crown, 3 per line
    assert rep.details["c4_count"] == 7 * 3


def test_claim2_rejects_unstripped_input():
    rep = check_claim2(named_graph("cycle", 4))
    assert rep.precondition_failed and not rep.passed


@pytest.mark.parametrize("which", ["random", "planted"])
def test_claims_on_corpus(which):
    corpus = random_corpus() if which == "random" else planted_corpus()
    for params, g in corpus:
        dec = decompose_blocks(g)
        assert all(check_decomposition(g, dec).values()), params
        assert dec.counts()["invalid"] == 0, params
        assert check_claim2(strip_nontriangle_edges(g)).passed, params


def test_planted_corpus_has_k4_blocks():
    assert sum(decompose_blocks(g).counts()["k4"] for _, g in planted_corpus()) > 20
