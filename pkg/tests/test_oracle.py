import random

import pytest

from braidforge import (DomainError, Verdict, decide, format_braid_word,
                        normal_form, parse_braid_word, parse_fusing_word,
                        recompose, relation_neighbors, validate_chain,
                        verify_relation)
from braidforge.oracle import _rev_inv
from braidforge.relations import standard_moves, standard_relation_instances


def w(text, n=3):
    return parse_braid_word(text, n)


def check_witness(result, u, v):
    """Replay the witness against the bare move table; this is the
    external half of the oracle contract."""
    assert result.witness is not None
    table = standard_moves(result.strands)
    inv = table.inverse_table
    assert result.witness.start == u.codes + _rev_inv(v.codes, inv)
    assert validate_chain(result.witness, table) == b""


def test_identical_words_are_equal():
    res = decide(w("s1 v2 t1"), w("s1 v2 t1"))
    assert res.verdict is Verdict.EQUAL
    check_witness(res, w("s1 v2 t1"), w("s1 v2 t1"))


def test_free_reduction_equalities():
    res = decide(w("s1 S1", 2), w("", 2))
    assert res.verdict is Verdict.EQUAL
    assert res.reason == "free reduction closes"
    check_witness(res, w("s1 S1", 2), w("", 2))


def test_braid_relation_is_equal_with_checkable_witness():
    res = decide(w("s1 s2 s1"), w("s2 s1 s2"))
    assert res.verdict is Verdict.EQUAL
    check_witness(res, w("s1 s2 s1"), w("s2 s1 s2"))


def test_every_defining_relation_passes():
    for rel in standard_relation_instances(3):
        res = decide(rel.lhs, rel.rhs)
        assert res.verdict is Verdict.EQUAL, rel.name
        check_witness(res, rel.lhs, rel.rhs)


def test_permutation_mismatch_is_unequal():
    res = decide(w("s1", 2), w("", 2))
    assert res.verdict is Verdict.UNEQUAL
    assert res.reason == "strand permutations differ"
    assert res.witness is None


def test_exponent_mismatch_is_unequal():
    res = decide(w("s1 s1", 2), w("", 2))
    assert res.verdict is Verdict.UNEQUAL
    assert res.reason == "signed exponent sums differ"


def test_pair_count_mismatch_is_unequal():
    res = decide(w("s1 s1 S2 S2"), w(""))
    assert res.verdict is Verdict.UNEQUAL
    assert res.reason == "signed pair counts differ"


def test_sigma_and_tau_crossings_differ():
    res = decide(w("s1", 2), w("t1", 2))
    assert res.verdict is Verdict.UNEQUAL


def test_strand_count_mismatch_raises():
    with pytest.raises(DomainError):
        decide(w("s1", 2), w("s1", 3))


def test_fusing_words_are_accepted():
    res = decide(parse_fusing_word("m[1,2] m[1,3] m[2,3]", 3),
                 parse_fusing_word("m[2,3] m[1,3] m[1,2]", 3))
    assert res.verdict is Verdict.EQUAL


def test_tiny_bounds_give_unknown_not_unequal():
    res = decide(w("s1 s2 S1"), w("S2 s1 s2"),
                 max_nodes=1, budget=1)
    assert res.verdict is Verdict.UNKNOWN
    assert res.witness is None
    full = decide(w("s1 s2 S1"), w("S2 s1 s2"))
    assert full.verdict is Verdict.EQUAL
    check_witness(full, w("s1 s2 S1"), w("S2 s1 s2"))


def test_normal_form_round_trip_decides_equal():
    rng = random.Random(11)
    for _ in range(15):
        text = " ".join(rng.choice("sStTv") + str(rng.randint(1, 2))
                        for _ in range(rng.randint(0, 8)))
        word = w(text)
        back = recompose(normal_form(word))
        res = decide(back, word)
        assert res.verdict is Verdict.EQUAL, text
        check_witness(res, back, word)


def test_to_json_shape():
    res = decide(w("s1 s2 s1"), w("s2 s1 s2"))
    data = res.to_json()
    assert data["schema"] == 1
    assert data["status"] == "Equal"
    assert data["strands"] == 3
    assert data["witness_steps"] == len(res.witness.steps)
    assert data["witness"]["start"].split()[0] == "s1"
    step = data["witness"]["steps"][0]
    assert set(step) == {"pos", "lhs", "rhs"}
    hidden = res.to_json(include_witness=False)
    assert hidden["witness"] is None
    assert hidden["witness_steps"] == data["witness_steps"]


def test_unequal_to_json_has_no_witness():
    data = decide(w("s1", 2), w("t1", 2)).to_json()
    assert data["status"] == "Unequal"
    assert data["witness"] is None
    assert data["witness_steps"] == 0


def test_verify_relation_reports():
    report = verify_relation(w("s1 s2 s1"), w("s2 s1 s2"))
    assert report.holds
    assert report.pi_equal
    assert report.invariants_equal
    data = report.to_json()
    assert data["holds"] is True
    assert data["verdict"]["status"] == "Equal"

    bad = verify_relation(w("s1", 2), w("t1", 2))
    assert not bad.holds
    assert bad.pi_equal
    assert not bad.invariants_equal


def test_relation_neighbors_contains_the_braid_move():
    out = relation_neighbors(w("s1 s2 s1"))
    texts = {format_braid_word(word) for word in out}
    assert "s2 s1 s2" in texts
    assert all(word.strands == 3 for word in out)
    assert "s1 s2 s1" not in texts


def test_relation_neighbors_respects_the_length_cap():
    for word in relation_neighbors(w("s1 s2 s1"), max_len=3):
        assert len(word.codes) <= 3
