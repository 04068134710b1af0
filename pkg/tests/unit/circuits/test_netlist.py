"""
Unit tests for the circuit IR and truth tables.

Tests the netlist format, evaluation, sizes, the dependency graph and
truth-table helpers.
"""

import pytest
from hypothesis import given

from tests.fixtures.strategies import logic_circuits
from thompx.circuits.netlist import (
    Circuit,
    CircuitBuilder,
    GateKind,
    circuit_size,
    eval_circuit,
    format_netlist,
    identity_circuit,
    parse_netlist,
    single_gate,
)
from thompx.circuits.truth_table import (
    TruthTable,
    pad_permutation,
    parse_truth_table,
    same_function,
    truth_table_of,
)
from thompx.core.errors import CircuitError, ErrorCode

HALF_ADDER = """\
# sum and carry
circuit inputs=2 outputs=2
w1,w2 = FORK in1
w3,w4 = FORK in2
w5 = XOR w1 w3
w6 = AND w2 w4
outputs w5 w6
"""


class TestNetlistFormat:
    """Test parsing and formatting netlists."""

    def test_parse(self):
        """Test multi-output gates and comments."""
        circuit = parse_netlist(HALF_ADDER)

        assert circuit.input_count == 2
        assert circuit.output_count == 2
        assert len(circuit.gates) == 4
        assert circuit.gates[0].outputs == ("w1", "w2")

    def test_format_round_trip(self):
        """Test formatting then parsing yields the same circuit."""
        circuit = parse_netlist(HALF_ADDER)

        assert parse_netlist(format_netlist(circuit)) == circuit
        assert format_netlist(circuit).splitlines()[1] == "w1,w2 = FORK in1"

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "circuit inputs=1\noutputs in1\n",
            "circuit inputs=1 outputs=1\nw1 = MAJ in1\noutputs w1\n",
            "circuit inputs=1 outputs=1\nw1 = NOT in2\noutputs w1\n",
            "circuit inputs=1 outputs=1\nw1 = AND in1\noutputs w1\n",
            "circuit inputs=1 outputs=2\noutputs in1\n",
            "circuit inputs=1 outputs=1\nw1 = NOT in1\n",
        ],
    )
    def test_malformed(self, text):
        """Test syntax and reference errors are MALFORMED_INPUT."""
        with pytest.raises(CircuitError) as excinfo:
            parse_netlist(text)
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_redefined_wire(self):
        with pytest.raises(CircuitError):
            parse_netlist("circuit inputs=1 outputs=1\nw1 = NOT in1\nw1 = NOT in1\noutputs w1\n")


class TestCircuitEvaluation:
    """Test evaluation and sizes."""

    def test_half_adder(self, half_adder):
        assert [half_adder.evaluate(x) for x in ("00", "01", "10", "11")] == [
            "00", "10", "10", "01"
        ]

    def test_length_mismatch(self, and_circuit):
        """Test inputs of the wrong length are rejected."""
        with pytest.raises(CircuitError) as excinfo:
            eval_circuit(and_circuit, "1")
        assert excinfo.value.code is ErrorCode.LENGTH_MISMATCH

    def test_size_counts_ports(self, and_circuit):
        """Test size = gates + inputs + outputs."""
        assert circuit_size(and_circuit) == 4
        assert identity_circuit(1).size == 2

    def test_single_gate(self):
        circuit = single_gate(GateKind.CCNOT)

        assert circuit.evaluate("111") == "110"
        assert circuit.output_count == 3

    def test_implicit_fanout(self):
        """Test one wire may feed several gates."""
        builder = CircuitBuilder(1)
        (a,) = builder.inputs
        out = builder.add1(GateKind.AND, a, builder.add1(GateKind.NOT, a))

        assert builder.build([out, a]).evaluate("1") == "01"

    def test_dependency_graph(self, half_adder):
        """Test the graph is acyclic with ports and gates as nodes."""
        import networkx as nx

        graph = half_adder.to_graph()

        assert nx.is_directed_acyclic_graph(graph)
        assert graph.nodes["in1"]["type"] == "input"
        assert graph.in_degree("out1") == 1
        assert graph.number_of_nodes() == 2 + len(half_adder.gates) + 2


class TestTruthTable:
    """Test truth tables."""

    def test_text_round_trip(self):
        """Test the truthtable format."""
        table = TruthTable(1, 1, ("1", "0"))

        assert table.to_text() == "truthtable m=1 n=1\n0 -> 1\n1 -> 0\n"
        assert parse_truth_table(table.to_text()) == table

    def test_rows_out_of_order(self):
        with pytest.raises(CircuitError) as excinfo:
            parse_truth_table("truthtable m=1 n=1\n1 -> 0\n0 -> 1\n")
        assert excinfo.value.code is ErrorCode.MALFORMED_INPUT

    def test_wrong_row_count(self):
        with pytest.raises(CircuitError):
            TruthTable(2, 1, ("0", "1"))

    def test_of_circuit(self, and_circuit):
        assert truth_table_of(and_circuit).outputs == ("0", "0", "0", "1")

    def test_inverse(self):
        """Test the inverse permutation undoes the table."""
        table = TruthTable.from_ints(2, 2, [2, 0, 3, 1])

        assert table.then(table.inverse()) == TruthTable.identity(2)

    def test_inverse_not_bijective(self):
        with pytest.raises(CircuitError) as excinfo:
            TruthTable(2, 1, ("0", "0", "0", "1")).inverse()
        assert excinfo.value.code is ErrorCode.NOT_BIJECTIVE

    def test_columns(self, half_adder):
        table = truth_table_of(half_adder)

        assert list(table.column(1)) == [0, 0, 0, 1]
        assert table.columns.shape == (4, 2)

    def test_pad_permutation(self):
        """Test padding fixes trailing bits."""
        table = TruthTable(1, 1, ("1", "0"))

        padded = pad_permutation(table, 3)

        assert padded("011") == "111"
        assert padded.is_bijective

    def test_pad_permutation_errors(self):
        with pytest.raises(CircuitError) as excinfo:
            pad_permutation(TruthTable.identity(2), 1)
        assert excinfo.value.code is ErrorCode.BAD_SIZE

    @given(logic_circuits())
    def test_same_function_reflexive(self, circuit):
        assert same_function(circuit, Circuit.from_text(circuit.to_text()))

    def test_parallel_matches_serial(self):
        """Test joblib chunking keeps input order."""
        builder = CircuitBuilder(9)
        wires = list(builder.inputs)
        acc = wires[0]
        for w in wires[1:]:
            acc = builder.add1(GateKind.XOR, acc, w)
        circuit = builder.build([acc])

        assert truth_table_of(circuit, jobs=2) == truth_table_of(circuit, jobs=1)
