"""
Unit tests for MorphismTable.

Tests the text format, restriction, reduction of mappings and the
preimage/image codes of right ideals.
"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tests.fixtures.strategies import maximal_codes, tables, words
from thompx.codes.prefix_codes import PrefixCode
from thompx.core.errors import ErrorCode, TableError
from thompx.thompson.table import (
    MorphismTable,
    essential_image_restriction,
    image_code_of,
    preimage_code,
    reduce_mapping,
    restrict_to,
    restrict_to_cone,
)


class TestMorphismTableBasic:
    """Test construction and lookup."""

    def test_entries_sorted(self):
        """Test equal maps give equal tables regardless of insertion order."""
        a = MorphismTable.of({"1": "0", "0": "1"})
        b = MorphismTable.of({"0": "1", "1": "0"})

        assert a == b
        assert hash(a) == hash(b)
        assert a.keys == ("0", "1")

    def test_keys_must_be_code(self):
        """Test keys with a prefix pair are rejected."""
        with pytest.raises(TableError) as excinfo:
            MorphismTable.of({"0": "0", "01": "1"})
        assert excinfo.value.code is ErrorCode.NOT_A_CODE

    def test_apply(self):
        """Test key p maps pz to image(p)z."""
        table = MorphismTable.of({"0": "00", "10": "01", "11": "1"})

        assert table.apply("1101") == "101"
        assert table.apply("1") is None

    def test_length(self):
        """Test length is the longest key or image."""
        assert MorphismTable.of({"0": "000", "1": "1"}).length() == 3
        assert MorphismTable((), 2).length() == 0


class TestTableText:
    """Test the line-based table format."""

    def test_format(self):
        """Test the header and arrow lines."""
        table = MorphismTable.of({"": "0"})

        assert table.to_text() == "thompson k=2\neps -> 0\n"

    def test_parse(self):
        """Test comments and blank lines are skipped."""
        text = "# sigma\nthompson k=2\n\n0 -> 00\n10 -> 01\n11 -> 1\n"

        assert MorphismTable.from_text(text).mapping == {"0": "00", "10": "01", "11": "1"}

    def test_missing_header(self):
        with pytest.raises(TableError) as excinfo:
            MorphismTable.from_text("0 -> 1\n")
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_duplicate_key(self):
        """Test a repeated key is malformed input."""
        with pytest.raises(TableError) as excinfo:
            MorphismTable.from_text("thompson k=2\n0 -> 1\n0 -> 0\n")
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_ternary_header(self):
        table = MorphismTable.from_text("thompson k=3\n2 -> 0\n")

        assert table.arity == 3


class TestRestriction:
    """Test restriction to refinements."""

    def test_reference_example(self):
        """Test {0->1, 1->0} restricted to {00, 01, 1}."""
        table = MorphismTable.of({"0": "1", "1": "0"})

        restricted = restrict_to(table, ["00", "01", "1"])

        assert restricted.mapping == {"00": "10", "01": "11", "1": "0"}

    def test_outside_domain(self):
        """Test refinement words need a key prefix."""
        table = MorphismTable.of({"0": "1"})

        with pytest.raises(TableError) as excinfo:
            restrict_to(table, ["00", "1"])
        assert excinfo.value.code is ErrorCode.REFINEMENT_OUTSIDE_DOMAIN

    def test_cone(self):
        """Test restriction to the cone 1A* splits an eps key."""
        table = MorphismTable.of({"": "0"})

        assert restrict_to_cone(table, "1").mapping == {"1": "01"}

    @given(tables(), words(6))
    def test_restriction_keeps_semantics(self, table, w):
        """Test restricting to a uniform refinement does not change the action."""
        depth = table.max_key_length + 1
        code = PrefixCode.of(
            [p + format(n, f"0{depth - len(p)}b") for p in table.keys
             for n in range(2 ** (depth - len(p)))]
        )

        assert restrict_to(table, code).apply(w + "0" * depth) == table.apply(w + "0" * depth)


class TestReduceMapping:
    """Test sibling merging."""

    def test_identity_collapses(self):
        """Test {0->0, 1->1} reduces to {eps->eps}."""
        assert reduce_mapping({"0": "0", "1": "1"}) == {"": ""}

    def test_cascading_merge(self):
        """Test merges propagate up several levels."""
        mapping = {"00": "100", "01": "101", "10": "110", "11": "111"}

        assert reduce_mapping(mapping) == {"": "1"}

    def test_no_merge_on_mismatched_images(self):
        assert reduce_mapping({"0": "1", "1": "0"}) == {"0": "1", "1": "0"}

    @given(maximal_codes())
    def test_restriction_then_reduce(self, code):
        """Test reduce undoes any restriction of the identity."""
        table = restrict_to(MorphismTable.of({"": ""}), code)

        assert reduce_mapping(table.mapping) == {"": ""}

    @given(tables(), st.integers(0, 2**32 - 1))
    def test_merge_order_irrelevant(self, table, seed):
        """Test shuffled merge orders reach the same canonical table."""
        shuffled = reduce_mapping(table.mapping, order=np.random.default_rng(seed))

        assert shuffled == reduce_mapping(table.mapping)


class TestIdealCodes:
    """Test essential image restriction and preimage/image codes."""

    def test_essential_image_restriction(self):
        """Test an image prefixing another image is split."""
        table = MorphismTable.of({"0": "1", "1": "10"})

        result = essential_image_restriction(table)

        assert result.mapping == {"00": "10", "01": "11", "1": "10"}

    def test_preimage_code(self):
        """Test the preimage of 0A* under the bit flip is 1A*."""
        table = MorphismTable.of({"0": "1", "1": "0"})

        assert preimage_code(table, PrefixCode.of(["0"])).words == ("1",)

    def test_image_code(self):
        """Test the image of {1} under sigma's last entry."""
        table = MorphismTable.of({"0": "00", "10": "01", "11": "1"})

        assert image_code_of(table, PrefixCode.of(["1"])).words == ("01", "1")

    @given(tables(), words(7))
    def test_preimage_membership(self, table, w):
        """Test w lies in the preimage ideal iff its image lies in the code's ideal."""
        code = PrefixCode.of(["01", "1"])
        image = table.apply(w)

        if image is not None:
            assert preimage_code(table, code).generates(w) == code.generates(image)
