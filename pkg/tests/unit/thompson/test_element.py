"""
Unit tests for ThompsonElement.

Tests reduction, composition, inversion, application, classification
flags, the self-embeddings and direct composable chains.
"""

import pytest
from hypothesis import given

from tests.fixtures.strategies import group_elements, tables, words
from thompx.core.errors import ErrorCode, TableError
from thompx.generators.catalog import gen_table
from thompx.thompson.chains import direct_composable_chain
from thompx.thompson.element import (
    TauAction,
    apply,
    classify,
    compose,
    empty_element,
    identity_element,
    invert,
    reduce,
)
from thompx.thompson.embeddings import embed0, embed1, embed_pair
from thompx.thompson.table import MorphismTable


class TestReduce:
    """Test canonical forms."""

    def test_identity(self):
        """Test {0->0, 1->1} reduces to the identity."""
        assert reduce({"0": "0", "1": "1"}) == identity_element()

    def test_equal_elements_share_hash(self):
        """Test restrictions of one map compare equal after reduce."""
        a = reduce({"00": "10", "01": "11", "1": "0"})
        b = reduce({"0": "1", "1": "0"})

        assert a == b
        assert len({a, b}) == 1

    @given(tables())
    def test_idempotent(self, table):
        once = reduce(table)

        assert reduce(once.table) == once

    @given(tables(), words(7))
    def test_preserves_action(self, table, w):
        """Test reduction never changes where the element is defined."""
        assert reduce(table).apply(w) == table.apply(w)


class TestCompose:
    """Test composition order and algebraic laws."""

    def test_and_after_fork_is_identity(self):
        """Test gamma_and undoes gamma_fork."""
        result = compose(gen_table("gamma_and"), gen_table("gamma_fork"))

        assert result == identity_element()

    def test_first_acts_first(self, sigma, phi_not):
        """Test compose(second, first) applies first to the input."""
        composite = compose(phi_not, sigma)

        assert composite.apply("0") == phi_not.apply(sigma.apply("0"))

    def test_empty_composite(self):
        """Test disjoint image and domain give the empty element."""
        first = reduce({"": "0"})
        second = reduce({"1": "1"})

        assert compose(second, first) == empty_element()
        assert compose(second, first).is_empty

    def test_arity_mismatch(self):
        with pytest.raises(TableError) as excinfo:
            compose(reduce({"": ""}, k=3), identity_element())
        assert excinfo.value.code is ErrorCode.ARITY_MISMATCH

    @given(tables(max_splits=3), tables(max_splits=3), tables(max_splits=3))
    def test_associative(self, a, b, c):
        """Test (a b) c == a (b c) on reduced tables."""
        f, g, h = reduce(a), reduce(b), reduce(c)

        assert compose(h, compose(g, f)) == compose(compose(h, g), f)

    @given(tables(), words(6))
    def test_matches_sequential_application(self, table, w):
        """Test composition agrees with applying twice."""
        f = reduce(table)
        first = f.apply(w)
        composite = compose(f, f).apply(w)

        if first is not None and f.apply(first) is not None:
            assert composite == f.apply(first)

    def test_lazy_transposition(self):
        """Test tau acts without a table and agrees with its table."""
        action = TauAction(1, 3)

        assert action.apply("1000") == "0010"
        assert compose(action, identity_element()) == reduce(action.table())


class TestInvert:
    """Test inversion."""

    def test_sigma(self, sigma):
        """Test sigma^-1 = {00->0, 01->10, 1->11}."""
        assert invert(sigma).mapping == {"00": "0", "01": "10", "1": "11"}

    def test_not_invertible(self):
        """Test repeated images have no inverse."""
        with pytest.raises(TableError) as excinfo:
            invert(gen_table("gamma_and"))
        assert excinfo.value.code is ErrorCode.NOT_INVERTIBLE

    @given(group_elements())
    def test_group_laws(self, g):
        """Test g g^-1 = g^-1 g = 1."""
        assert compose(invert(g), g) == identity_element()
        assert compose(g, invert(g)) == identity_element()


class TestApply:
    """Test application on reference inputs."""

    def test_sigma(self, sigma):
        assert apply(sigma, "1101") == "101"

    def test_phi_or(self):
        """Test phi_or writes the OR of bits 2 and 3 into bit 1."""
        assert apply(gen_table("phi_or"), "011") == "111"

    def test_undefined_on_short_word(self, phi_not):
        """Test eps has no key prefix under phi_not."""
        assert apply(phi_not, "") is None


class TestClassify:
    """Test classification flags."""

    def test_gamma_fork(self):
        """Test gamma_fork is lep and monotone but not lp."""
        flags = classify(gen_table("gamma_fork"))

        assert flags.is_lep
        assert not flags.is_lp
        assert flags.is_monotone
        assert not flags.in_g

    def test_not_is_not_monotone(self):
        assert not gen_table("gamma_not").is_monotone

    def test_identity_flags(self, identity):
        """Test the identity satisfies every membership flag."""
        assert all(classify(identity).as_dict().values())

    def test_as_dict_keys(self, sigma):
        flags = sigma.flags().as_dict()

        assert set(flags) == {
            "inG", "isLp", "isLep", "isMonotone", "inFix0", "inFix1", "inStab01"
        }
        assert flags["inG"] and not flags["isLep"]

    def test_fix_and_stab(self):
        """Test tau12_0 fixes the cone of 1 and keeps first letters."""
        element = gen_table("tau12_0")

        assert element.in_fix1
        assert not element.in_fix0
        assert element.in_stab01

    def test_text_round_trip(self, sigma):
        assert type(sigma).from_text(sigma.to_text()) == sigma


class TestEmbeddings:
    """Test the self-embeddings (g)_0 and (g)_1."""

    def test_embed0_phi_not(self, phi_not):
        """Test (phi_not)_0 = {00->01, 01->00, 1->1}."""
        assert embed0(phi_not).mapping == {"00": "01", "01": "00", "1": "1"}

    def test_embed1_fixes_zero_cone(self, sigma):
        assert embed1(sigma).in_fix0

    def test_not_group_element(self):
        with pytest.raises(TableError) as excinfo:
            embed0(gen_table("gamma_fork"))
        assert excinfo.value.code is ErrorCode.NOT_GROUP_ELEMENT

    @given(group_elements(), group_elements())
    def test_factors_commute(self, f, g):
        """Test (f)_0 and (g)_1 commute and multiply to embed_pair."""
        assert compose(embed0(f), embed1(g)) == compose(embed1(g), embed0(f))
        assert embed_pair(f, g) == compose(embed0(f), embed1(g))

    @given(group_elements(), group_elements())
    def test_homomorphism(self, f, g):
        assert embed0(compose(g, f)) == compose(embed0(g), embed0(f))


class TestDirectComposableChain:
    """Test direct composable chains."""

    def test_images_match_next_domain(self, sigma, phi_not):
        """Test imC of each factor equals domC of the next."""
        chain = direct_composable_chain([sigma.table, phi_not.table, sigma.table])

        for left, right in zip(chain, chain[1:]):
            assert set(left.images) == set(right.keys)

    @given(group_elements(), group_elements(), group_elements())
    def test_same_composite(self, f, g, h):
        """Test the chain composes to the original composite."""
        chain = direct_composable_chain([f.table, g.table, h.table])
        expected = compose(h, compose(g, f))
        result = identity_element()
        for table in chain:
            result = compose(reduce(table), result)

        assert result == expected

    @given(group_elements(), group_elements())
    def test_length_bound(self, f, g):
        chain = direct_composable_chain([f.table, g.table])

        assert max(t.length() for t in chain) <= f.length() + g.length()

    def test_empty_composite(self):
        """Test disjoint factors raise EMPTY_COMPOSITE."""
        with pytest.raises(TableError) as excinfo:
            direct_composable_chain(
                [MorphismTable.of({"": "0"}), MorphismTable.of({"1": "1"})]
            )
        assert excinfo.value.code is ErrorCode.EMPTY_COMPOSITE
