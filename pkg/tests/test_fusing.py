import pytest
from hypothesis import given, settings, strategies as st

from braidforge import (Family, FusingLetter, FusingWord, IndexRangeError,
                        act_permutation, expand_fusing, expand_letter,
                        format_braid_word, format_fusing_word, free_reduce,
                        fusing_free_reduce, gamma, invert_fusing, invert_word,
                        mu, parse_braid_word, parse_fusing_word,
                        permutation_of, to_pure_times_coset, transposition)


def test_letter_validation():
    with pytest.raises(IndexRangeError):
        mu(2, 2)
    with pytest.raises(IndexRangeError):
        FusingLetter(Family.MU, 1, 2, 3)
    with pytest.raises(IndexRangeError):
        FusingWord(2, (mu(1, 3),))  # needs 3 strands


def test_parse_format_round_trip():
    text = "m[1,2] G[3,1] g[2,3] M[2,1]"
    assert format_fusing_word(parse_fusing_word(text, 3)) == text


def test_parse_rejects_garbage():
    from braidforge import BraidSyntaxError

    with pytest.raises(BraidSyntaxError):
        parse_fusing_word("m[1 2]", 3)
    with pytest.raises(BraidSyntaxError):
        parse_fusing_word("x[1,2]", 3)


def test_expansions_adjacent():
    assert format_braid_word(expand_letter(mu(1, 2), 2)) == "s1 v1"
    assert format_braid_word(expand_letter(mu(2, 1), 2)) == "v1 s1"
    assert format_braid_word(expand_letter(gamma(1, 2), 2)) == "t1 v1"
    assert format_braid_word(expand_letter(gamma(2, 1), 2)) == "v1 t1"
    assert format_braid_word(expand_letter(mu(2, 1, -1), 2)) == "S1 v1"


def test_expansions_wing_distant_pairs():
    # non-adjacent strands get a conjugating run of v letters on each side
    assert format_braid_word(expand_letter(mu(1, 3), 3)) == "v2 s1 v1 v2"
    assert format_braid_word(expand_letter(mu(3, 1), 3)) == "v2 v1 s1 v2"
    assert format_braid_word(expand_letter(gamma(1, 4), 4)) == "v3 v2 t1 v1 v2 v3"


def test_expansion_of_inverse_is_reverse_inverse():
    for letter in (mu(1, 3), gamma(3, 1), mu(2, 4, -1), gamma(1, 2)):
        fwd = expand_letter(letter, 4)
        bwd = expand_letter(letter.inverse(), 4)
        assert bwd == invert_word(fwd)


def test_expansions_are_pure_and_reduced():
    for i in range(1, 5):
        for j in range(1, 5):
            if i == j:
                continue
            for letter in (mu(i, j), gamma(i, j), mu(i, j, -1)):
                w = expand_letter(letter, 4)
                assert permutation_of(w).is_identity()
                assert free_reduce(w) == w


def test_act_permutation_relabels():
    t = transposition(3, 1, 2)
    assert act_permutation(t, mu(1, 3)) == mu(2, 3)
    assert act_permutation(t, gamma(2, 1, -1)) == gamma(1, 2, -1)
    word = parse_fusing_word("m[1,2] g[1,3]", 3)
    assert format_fusing_word(act_permutation(t, word)) == "m[2,1] g[2,3]"


def test_fusing_free_reduce():
    w = parse_fusing_word("m[1,2] m[1,3] M[1,3] g[2,1]", 3)
    assert format_fusing_word(fusing_free_reduce(w)) == "m[1,2] g[2,1]"
    # uppercase marks the inverse, order of indices does not
    w2 = parse_fusing_word("m[1,2] M[2,1]", 2)
    assert format_fusing_word(fusing_free_reduce(w2)) == "m[1,2] M[2,1]"


def test_invert_fusing():
    w = parse_fusing_word("m[1,2] g[3,1]", 3)
    assert format_fusing_word(invert_fusing(w)) == "G[3,1] M[1,2]"


def test_to_pure_times_coset_splits():
    w = parse_braid_word("s1 v2 t1", 3)
    dec = to_pure_times_coset(w)
    assert format_fusing_word(dec.pure) == "m[1,2] g[2,3]"
    assert format_braid_word(dec.coset.braid_word) == "v1 v2 v1"
    # the product really is the original group element: same permutation
    assert permutation_of(dec.coset.braid_word) == permutation_of(w)


def test_to_pure_on_pure_word_has_empty_coset():
    dec = to_pure_times_coset(parse_braid_word("s1 t1", 2))
    assert format_fusing_word(dec.pure) == "m[1,2] g[2,1]"
    assert len(dec.coset.braid_word.codes) == 0


def fusing_letters(n):
    pairs = st.tuples(st.integers(1, n), st.integers(1, n)).filter(
        lambda p: p[0] != p[1])
    return st.builds(
        lambda pair, fam, exp: FusingLetter(fam, pair[0], pair[1], exp),
        pairs, st.sampled_from([Family.MU, Family.GAMMA]),
        st.sampled_from([1, -1]))


def fusing_words(n, max_size=6):
    return st.lists(fusing_letters(n), max_size=max_size).map(
        lambda ls: FusingWord(n, tuple(ls)))


@settings(max_examples=60)
@given(fusing_words(4))
def test_sweep_of_expansion_restores_letters(fw):
    """Splitting the expansion of a fusing word returns its letters,
    unreduced sweep output aside."""
    dec = to_pure_times_coset(expand_fusing(fw))
    assert dec.pure == fusing_free_reduce(fw)
    assert len(dec.coset.braid_word.codes) == 0


@settings(max_examples=60)
@given(fusing_words(4))
def test_expansion_inverts_letterwise(fw):
    assert free_reduce(expand_fusing(invert_fusing(fw))) == free_reduce(
        invert_word(expand_fusing(fw)))


def test_str_markers():
    assert str(mu(1, 2)) == "m[1,2]"
    assert str(mu(1, 2, -1)) == "M[1,2]"
    assert str(gamma(3, 1)) == "g[3,1]"
    assert str(gamma(3, 1, -1)) == "G[3,1]"
