import pytest

from alglen.errors import ParseError, ResourceLimit
from alglen.words import (catalan, count_full, enumerate_full, enumerate_restricted,
                          evaluate, format_word, generator_set, is_restricted,
                          parse_word, word_length, word_letters)


def test_catalan():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_full_counts():
    assert len(list(enumerate_full(2, 2))) == 4
    assert len(list(enumerate_full(1, 4))) == 5  # Catalan(3) shapes, one letter
    assert len(list(enumerate_full(2, 3))) == 16  # Catalan(2) * 2^3
    assert count_full(3, 5) == catalan(4) * 3**5


def test_restricted_counts_and_dedup():
    # one-letter chains of length 3: only the two bracketings exist as trees
    assert list(enumerate_restricted(1, 3)) == [(1, (1, 1)), ((1, 1), 1)]
    assert len(list(enumerate_restricted(2, 1))) == 2
    # at length 2 both enumerations coincide
    assert set(enumerate_restricted(2, 2)) == set(enumerate_full(2, 2))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_restricted_subset_of_full(m):
    full = set(enumerate_full(2, m))
    restricted = set(enumerate_restricted(2, m))
    assert restricted <= full
    if m <= 3:
        assert restricted == full
    for w in restricted:
        assert word_length(w) == m
        assert is_restricted(w)


def test_restriction_predicate():
    assert is_restricted(((1, 2), 3))
    assert not is_restricted(((1, 2), (3, 4)))


def test_resource_limits():
    with pytest.raises(ResourceLimit):
        list(enumerate_full(10, 12, cap=1000))
    with pytest.raises(ResourceLimit):
        list(enumerate_restricted(10, 12, cap=1000))


def test_evaluate(aflex, z2n2):
    gens = generator_set([aflex.basis_element(1), aflex.basis_element(2)])
    # e1 (e1 e2) = e1 e3 = e4
    assert evaluate(aflex, gens, (1, (1, 2))) == aflex.basis_element(4)
    assert evaluate(aflex, gens, 1) == aflex.basis_element(1)
    letters = generator_set([z2n2.basis_element(2), z2n2.basis_element(3)])
    # (e_f1 e_f2) e_f1 = e_f2
    assert evaluate(z2n2, letters, ((1, 2), 1)) == z2n2.basis_element(3)


def test_parse_format_roundtrip():
    for text in ["1", "(1 2)", "((1 2) 3)", "(2 ((1 2) 3))"]:
        assert format_word(parse_word(text)) == text
    with pytest.raises(ParseError):
        parse_word("((1 2)")
    with pytest.raises(ParseError):
        parse_word("(0 1)")
    with pytest.raises(ParseError):
        parse_word("(1 2) 3")


def test_word_letters():
    assert word_letters(((1, 2), (3, 1))) == [1, 2, 3, 1]


def test_duplicate_flag(aflex):
    g = generator_set([aflex.basis_element(1), aflex.basis_element(1)])
    assert g.has_duplicates
    g = generator_set([aflex.basis_element(1), aflex.basis_element(2)])
    assert not g.has_duplicates
