"""
Unit tests for the generator catalog and generator words.

Tests registered tables, token parsing, word evaluation and the
transposition rewrites.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thompx.core.errors import ErrorCode, GeneratorError
from thompx.generators.catalog import (
    G21_GENERATORS,
    LEP_GENERATORS,
    LP_GENERATORS,
    GeneratorRegistry,
    Token,
    adjacent_taus,
    gen,
    gen_table,
    inverse_token,
    is_self_inverse,
    tau,
    with_taus,
)
from thompx.generators.words import (
    GeneratorWord,
    apply_word,
    eval_word,
    move_letter,
    parse_token,
    parse_word,
    permutation_word,
    tau0_expand,
    tau_adjacent_factorization,
    word_inverse,
)
from thompx.thompson.element import identity_element
from thompx.thompson.embeddings import embed0


class TestCatalogTables:
    """Test the registered generator tables."""

    def test_registered_names(self):
        """Test every catalog name is registered."""
        names = GeneratorRegistry.list_generators()

        for name in ("gamma_and", "gamma_or", "gamma_not", "gamma_fork", "phi_or",
                     "phi_and", "phi_not", "sigma", "N", "C", "T", "tau12_0"):
            assert name in names

    def test_c_is_reduced(self):
        """Test CNOT is stored in reduced form."""
        assert gen_table("C").mapping == {"0": "0", "10": "11", "11": "10"}

    def test_gamma_fork(self):
        assert gen_table("gamma_fork").mapping == {"0": "00", "1": "11"}

    @pytest.mark.parametrize("name", ["phi_or", "phi_and", "phi_not", "N", "C", "T"])
    def test_involutions(self, name):
        """Test the self-inverse generators square to the identity."""
        assert is_self_inverse(Token(name))

    def test_sigma_is_not_involution(self):
        assert not is_self_inverse(Token("sigma"))
        assert inverse_token(Token("sigma")) == Token("sigma", inverted=True)

    def test_lp_generators_are_lp(self):
        assert all(gen_table(t).is_lp for t in LP_GENERATORS)

    def test_lep_generators_are_lep(self):
        assert all(gen_table(t).is_lep for t in LEP_GENERATORS)

    def test_g21_generators_in_group(self):
        assert all(gen_table(t).in_g for t in G21_GENERATORS)

    def test_unknown_generator(self):
        """Test unknown names raise UNKNOWN_GENERATOR."""
        with pytest.raises(GeneratorError) as excinfo:
            gen("xor_gate")
        assert excinfo.value.code is ErrorCode.UNKNOWN_GENERATOR

    def test_monoid_generator_has_no_inverse(self):
        with pytest.raises(GeneratorError) as excinfo:
            inverse_token(Token("gamma_and"))
        assert excinfo.value.code is ErrorCode.NOT_INVERTIBLE_TOKEN


class TestTokens:
    """Test token text and transposition tokens."""

    def test_tau_bounds(self):
        """Test tau needs 1 <= i < j."""
        with pytest.raises(GeneratorError) as excinfo:
            tau(0, 2)
        assert excinfo.value.code is ErrorCode.BAD_TAU_INDEX

    def test_degenerate_tau_parses_to_none(self):
        assert parse_token("tau(2,2)") is None

    def test_token_text(self):
        assert str(tau(1, 3)) == "tau(1,3)"
        assert str(parse_token("inv(sigma)")) == "inv(sigma)"
        assert parse_token("inv(phi_not)") == Token("phi_not")

    def test_adjacent_taus(self):
        assert [str(t) for t in adjacent_taus(3)] == ["tau(1,2)", "tau(2,3)"]
        assert len(with_taus(G21_GENERATORS, 4)) == len(G21_GENERATORS) + 3

    def test_word_text(self):
        """Test spaces inside parentheses and comment lines."""
        word = parse_word("# sample\nsigma tau(1, 3)\ninv(sigma)\n")

        assert word.to_text() == "sigma tau(1,3) inv(sigma)\n"
        assert len(word) == 3
        assert word.max_tau == 3


class TestEvaluation:
    """Test eval_word and apply_word."""

    def test_empty_word_is_identity(self):
        assert eval_word(GeneratorWord()) == identity_element()

    def test_application_order(self):
        """Test the first token acts first."""
        assert apply_word("gamma_fork gamma_not", "1") == "01"
        assert apply_word("gamma_not gamma_fork", "1") == "00"

    def test_and_after_fork(self):
        assert eval_word("gamma_fork gamma_and") == identity_element()

    def test_word_inverse(self):
        """Test w followed by its inverse is the identity."""
        word = parse_word("sigma phi_or tau(1,3) tau12_0")

        assert eval_word(word + word_inverse(word)) == identity_element()
        assert str(word_inverse(word)) == "tau12_0 tau(1,3) phi_or inv(sigma)"

    @given(st.lists(st.sampled_from(list(G21_GENERATORS) + [tau(1, 2), tau(2, 4)]), max_size=6),
           st.text(alphabet="01", min_size=12, max_size=14))
    def test_apply_matches_eval(self, tokens, x):
        """Test token-by-token application agrees with the evaluated table."""
        word = GeneratorWord(tuple(tokens))

        assert apply_word(word, x) == eval_word(word).apply(x)


class TestTranspositionRewrites:
    """Test factorizations of transpositions."""

    @pytest.mark.parametrize("i,j", [(1, 2), (1, 4), (2, 5), (3, 4)])
    def test_adjacent_factorization(self, i, j):
        """Test tau(i,j) equals its adjacent factorization."""
        assert eval_word(tau_adjacent_factorization(i, j)) == gen_table(tau(i, j))

    @pytest.mark.parametrize("i,j", [(1, 2), (1, 3), (2, 3), (2, 4)])
    def test_tau0_expansion(self, i, j):
        """Test the expansion evaluates to (tau(i,j))_0."""
        assert eval_word(tau0_expand(i, j)) == embed0(gen_table(tau(i, j)))

    def test_move_letter(self):
        """Test the letter at 1 moves to 3 and the rest shift left."""
        assert apply_word(move_letter(1, 3), "100") == "001"
        assert apply_word(move_letter(3, 1), "001") == "100"

    def test_permutation_word(self):
        """Test the block is rearranged as requested."""
        word = permutation_word([2, 0, 1])

        assert apply_word(word, "110") == "011"

    def test_tau12_0_is_embedded_tau(self):
        assert gen_table("tau12_0") == embed0(gen_table(tau(1, 2)))
