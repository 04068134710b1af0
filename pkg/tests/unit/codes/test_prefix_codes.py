"""
Unit tests for words and prefix codes.

Tests classification, right-ideal intersection and the maximality oracle.
"""

from fractions import Fraction

import pytest
from hypothesis import given

from tests.fixtures.strategies import maximal_codes, prefix_codes, words
from thompx.codes.prefix_codes import (
    PrefixCode,
    classify_code,
    ideal_intersection,
    is_essential_bruteforce,
    kraft_sum,
    minimal_elements,
    uniform_code,
)
from thompx.codes.words import (
    all_words,
    alphabet,
    format_word,
    int_to_word,
    is_proper_prefix,
    parse_word,
    word_to_int,
)
from thompx.core.errors import CodeError, ErrorCode


class TestWords:
    """Test word helpers."""

    def test_alphabet(self):
        """Test digit alphabets and the arity range."""
        assert alphabet(2) == "01"
        assert alphabet(10) == "0123456789"

        with pytest.raises(CodeError) as excinfo:
            alphabet(1)
        assert excinfo.value.code is ErrorCode.BAD_ARITY

    def test_epsilon_text(self):
        """Test eps is the text form of the empty word."""
        assert parse_word("eps") == ""
        assert format_word("") == "eps"
        assert parse_word("0110") == "0110"

    def test_bad_letter(self):
        """Test letters outside the alphabet are malformed."""
        with pytest.raises(CodeError) as excinfo:
            parse_word("012")
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_all_words_lex_order(self):
        """Test enumeration order and count."""
        assert list(all_words(2, 2)) == ["00", "01", "10", "11"]
        assert len(list(all_words(3, 3))) == 27

    def test_int_conversion(self):
        """Test the bit-vector encoding used by truth tables."""
        assert word_to_int("101") == 5
        assert int_to_word(5, 4) == "0101"

    def test_proper_prefix(self):
        assert is_proper_prefix("", "0")
        assert not is_proper_prefix("01", "01")


class TestClassifyCode:
    """Test classify_code on the reference examples."""

    def test_maximal(self):
        """Test {0, 10, 11} is a maximal code."""
        result = classify_code(["0", "10", "11"])

        assert result.is_code and result.maximal
        assert str(result) == "code(maximal=true)"

    def test_not_a_code(self):
        """Test {0, 01} fails the prefix condition."""
        assert str(classify_code(["0", "01"])) == "not_a_code"

    def test_non_maximal(self):
        """Test {00, 01, 10} misses the cone of 11."""
        result = classify_code(["00", "01", "10"])

        assert result.is_code and not result.maximal
        assert kraft_sum(["00", "01", "10"]) == Fraction(3, 4)

    def test_epsilon_alone_is_maximal(self):
        assert classify_code([""]).maximal

    def test_empty_set(self):
        """Test the empty set is a code that is not maximal."""
        assert str(classify_code([])) == "code(maximal=false)"

    def test_ternary(self):
        """Test Kraft equality with k=3."""
        assert classify_code(["0", "1", "20", "21", "22"], k=3).maximal


class TestPrefixCode:
    """Test the PrefixCode value type."""

    def test_rejects_prefix_pair(self):
        """Test construction validates the antichain property."""
        with pytest.raises(CodeError) as excinfo:
            PrefixCode.of(["1", "10"])
        assert excinfo.value.code is ErrorCode.NOT_A_CODE

    def test_prefix_of(self):
        """Test member lookup for words in the ideal."""
        code = PrefixCode.of(["0", "10", "11"])

        assert code.prefix_of("1011") == "10"
        assert code.prefix_of("1") is None
        assert code.generates("0")

    def test_text_round_trip(self):
        """Test the one-word-per-line format with eps."""
        code = PrefixCode.of([""])

        assert code.to_text() == "eps\n"
        assert PrefixCode.from_text("# comment\neps\n") == code

    def test_minimal_elements(self):
        """Test words with a proper prefix in the set are dropped."""
        assert minimal_elements(["01", "0", "011", "1"]).words == ("0", "1")

    def test_uniform_code(self):
        assert uniform_code(2, 3).is_maximal
        assert len(uniform_code(3, 2)) == 9


class TestIdealIntersection:
    """Test right-ideal intersection."""

    def test_reference_example(self):
        """Test {0, 10} with {1, 01} gives {01, 10}."""
        p = PrefixCode.of(["0", "10"])
        q = PrefixCode.of(["1", "01"])

        assert ideal_intersection(p, q).words == ("01", "10")

    def test_arity_mismatch(self):
        """Test codes over different alphabets are rejected."""
        with pytest.raises(CodeError) as excinfo:
            ideal_intersection(PrefixCode.of(["0"]), PrefixCode.of(["2"], k=3))
        assert excinfo.value.code is ErrorCode.ARITY_MISMATCH

    @given(prefix_codes(), prefix_codes())
    def test_within_union(self, p, q):
        """Test the result is a subset of P ∪ Q."""
        assert ideal_intersection(p, q).members <= p.members | q.members

    @given(prefix_codes(), prefix_codes(), words(7))
    def test_generates_intersection(self, p, q, w):
        """Test membership matches the intersection of ideals."""
        s = ideal_intersection(p, q)

        assert s.generates(w) == (p.generates(w) and q.generates(w))

    @given(prefix_codes(), prefix_codes())
    def test_commutes(self, p, q):
        assert ideal_intersection(p, q) == ideal_intersection(q, p)


class TestMaximality:
    """Test the brute-force oracle against Kraft equality."""

    @given(maximal_codes())
    def test_split_codes_are_maximal(self, code):
        assert code.is_maximal
        assert is_essential_bruteforce(code)

    @given(prefix_codes())
    def test_oracle_matches_kraft(self, code):
        """Test enumeration and Kraft sum agree."""
        assert is_essential_bruteforce(code) == code.is_maximal

    def test_empty_code(self):
        assert not is_essential_bruteforce(PrefixCode.of([]))
